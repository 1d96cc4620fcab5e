import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { ExplorerStore, clampToIntervals, distanceVector } from "../src/state.js";
import type { AnalysisResponse, RealizationData } from "../src/types.js";
import { fakeFetch, fixture } from "./helpers.js";

describe("clampToIntervals", () => {
  const intervals: [number, number][] = [[4, 7.5]];

  it("passes through interior values", () => {
    expect(clampToIntervals(5, intervals)).toBe(5);
  });

  it("clamps below and above", () => {
    expect(clampToIntervals(1, intervals)).toBe(4);
    expect(clampToIntervals(9, intervals)).toBe(7.5);
  });

  it("picks the nearest of several intervals", () => {
    const two: [number, number][] = [[2, 3], [8, 9]];
    expect(clampToIntervals(4, two)).toBe(3);
    expect(clampToIntervals(7, two)).toBe(8);
    expect(clampToIntervals(8.5, two)).toBe(8.5);
  });
});

describe("distanceVector", () => {
  it("measures served points and entry 0 equals the base length", () => {
    const realization = fixture<RealizationData>("f1_realization.json");
    const analysis = fixture<AnalysisResponse>("f1_analysis.json");
    const values = distanceVector(realization, analysis.completeCayleyVector!);
    expect(values[0]).toBeCloseTo(realization.baseLength, 12);
    expect(values[1]).toBeCloseTo(2.22131110004641, 9);
  });
});

describe("store loading", () => {
  function f1Store() {
    const analysis = fixture<AnalysisResponse>("f1_analysis.json");
    const { impl, calls } = fakeFetch([
      { method: "POST", match: "/linkages", body: analysis },
      { method: "GET", match: "/ccs", body: fixture("f1_ccs.json") },
      { method: "GET", match: "/samples", body: fixture("f1_samples.json") },
      { method: "GET", match: "/components", body: fixture("f1_components.json") },
    ]);
    return { store: new ExplorerStore(new ApiClient("", impl)), calls };
  }

  it("loads analysis, ccs, components, and the first component's samples", async () => {
    const { store } = f1Store();
    await store.loadLinkage(fixture("f1_linkage.json"));
    const state = store.current;
    expect(state.linkageId).toBeTruthy();
    expect(state.ccs?.nonOriented).toHaveLength(1);
    expect(state.components).toHaveLength(1);
    expect(state.samples.length).toBe(126);
    expect(state.realization).not.toBeNull();
    expect(state.banner).toBeNull();
  });

  it("tracer steps move the shared realization and wrap around", async () => {
    const { store } = f1Store();
    await store.loadLinkage(fixture("f1_linkage.json"));
    const first = store.current.realization;
    store.traceStep(1);
    expect(store.current.traceIndex).toBe(1);
    expect(store.current.realization).not.toEqual(first);
    store.traceStep(-1);
    expect(store.current.traceIndex).toBe(0);
    expect(store.current.realization).toEqual(first);
    store.traceStep(-1);
    expect(store.current.traceIndex).toBe(store.current.samples.length - 1);
  });

  it("drops responses that arrive after the state moved on", async () => {
    const analysis = fixture<AnalysisResponse>("f1_analysis.json");
    let release: (() => void) | null = null;
    const gate = new Promise<void>((resolve) => (release = resolve));
    const { impl } = fakeFetch([
      { method: "POST", match: "/linkages", body: analysis },
      { method: "GET", match: "/ccs", body: fixture("f1_ccs.json") },
      { method: "GET", match: "/samples", body: fixture("f1_samples.json") },
      { method: "GET", match: "/components", body: fixture("f1_components.json") },
    ]);
    const gated: typeof impl = async (url, init) => {
      if (url.includes("/ccs")) await gate;
      return impl(url, init);
    };
    const store = new ExplorerStore(new ApiClient("", gated));
    const slow = store.loadLinkage(fixture("f1_linkage.json"));
    store.dismissBanner(); // bump the version while the load is in flight
    release!();
    await slow;
    expect(store.current.ccs).toBeNull(); // stale load discarded
  });

  it("surfaces a banner for a linkage that is not low complexity", async () => {
    const notLow = { ...fixture<AnalysisResponse>("f1_analysis.json"), tdLow: false };
    const { impl } = fakeFetch([{ method: "POST", match: "/linkages", body: notLow }]);
    const store = new ExplorerStore(new ApiClient("", impl));
    await store.loadLinkage(fixture("f1_linkage.json"));
    expect(store.current.banner).toBeTruthy();
    expect(store.current.ccs).toBeNull();
  });
});

describe("setLength clamping", () => {
  it("clamps the spinner to the CCS before asking the service", async () => {
    const analysis = fixture<AnalysisResponse>("f1_analysis.json");
    const realization = fixture<RealizationData>("f1_realization.json");
    const requested: number[] = [];
    const { impl } = fakeFetch([
      { method: "POST", match: "/linkages", body: analysis },
      { method: "GET", match: "/ccs", body: fixture("f1_ccs.json") },
      { method: "GET", match: "/samples", body: fixture("f1_samples.json") },
      { method: "GET", match: "/components", body: fixture("f1_components.json") },
      { method: "GET", match: "/realization", body: realization },
    ]);
    const spy: typeof impl = async (url, init) => {
      const match = /length=([0-9.eE+-]+)/.exec(url);
      if (match) requested.push(parseFloat(match[1]));
      return impl(url, init);
    };
    const store = new ExplorerStore(new ApiClient("", spy));
    await store.loadLinkage(fixture("f1_linkage.json"));
    await store.setLength(100.0);
    await store.setLength(0.5);
    const [lo, hi] = fixture<{ nonOriented: [number, number][] }>("f1_ccs.json").nonOriented[0];
    expect(requested).toHaveLength(2);
    expect(requested[0]).toBeCloseTo(hi, 9);
    expect(requested[1]).toBeCloseTo(lo, 9);
  });
});
