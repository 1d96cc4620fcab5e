// Fixture-backed fetch for tests: recorded responses of the live engine
// service, keyed by method + path prefix.

import { readFileSync } from "node:fs";
import { join } from "node:path";

export function fixture<T = unknown>(name: string): T {
  const path = join(__dirname, "fixtures", name);
  return JSON.parse(readFileSync(path, "utf-8")) as T;
}

export interface Route {
  method: string;
  match: string | RegExp;
  status?: number;
  body: unknown;
}

export function fakeFetch(routes: Route[]) {
  const calls: string[] = [];
  const impl = async (url: string, init?: RequestInit): Promise<Response> => {
    const method = (init?.method ?? "GET").toUpperCase();
    calls.push(`${method} ${url}`);
    for (const route of routes) {
      if (route.method !== method) continue;
      const hit =
        typeof route.match === "string" ? url.includes(route.match) : route.match.test(url);
      if (hit) {
        return new Response(JSON.stringify(route.body), {
          status: route.status ?? 200,
          headers: { "content-type": "application/json" },
        });
      }
    }
    return new Response(JSON.stringify({ error: "NotFound", message: url }), { status: 400 });
  };
  return { impl, calls };
}
