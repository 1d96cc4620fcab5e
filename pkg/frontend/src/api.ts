// Thin fetch wrapper over the engine service routes.
//
// The fetch implementation is injectable so tests can serve recorded
// fixtures; errors carry the service's machine readable payload.

import type {
  AnalysisResponse,
  CcsResponse,
  ComponentSummary,
  Curve3dResponse,
  LinkageDocument,
  MotionData,
  NearestPayload,
  RealizationData,
  ServiceError,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    public status: number,
    public payload: ServiceError,
  ) {
    super(payload.message ?? payload.error);
  }
}

export class ApiClient {
  constructor(
    private baseUrl: string = "",
    private fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const resp = await this.fetchImpl(this.baseUrl + path, init);
    const body = await resp.json();
    if (!resp.ok) {
      throw new ApiError(resp.status, body as ServiceError);
    }
    return body as T;
  }

  uploadLinkage(doc: LinkageDocument): Promise<AnalysisResponse> {
    return this.request("/linkages", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(doc),
    });
  }

  ccs(id: string): Promise<CcsResponse> {
    return this.request(`/linkages/${id}/ccs`);
  }

  components(id: string): Promise<{ components: ComponentSummary[] }> {
    return this.request(`/linkages/${id}/components`);
  }

  samples(id: string, component: number, n: number): Promise<{ realizations: RealizationData[] }> {
    return this.request(`/linkages/${id}/components/${component}/samples?n=${n}`);
  }

  realization(id: string, length: number, type: string): Promise<RealizationData> {
    const query = `length=${encodeURIComponent(length)}&type=${encodeURIComponent(type)}`;
    return this.request(`/linkages/${id}/realization?${query}`);
  }

  curve3d(
    id: string,
    component: number,
    f1: string,
    f2: string,
    f3: string,
    n: number,
  ): Promise<Curve3dResponse> {
    const query =
      `f1=${encodeURIComponent(f1)}&f2=${encodeURIComponent(f2)}` +
      `&f3=${encodeURIComponent(f3)}&n=${n}`;
    return this.request(`/linkages/${id}/components/${component}/curve3d?${query}`);
  }

  trace(
    id: string,
    component: number,
    vertices: string[],
    n: number,
  ): Promise<Record<string, [number, number][]>> {
    const query = `vertices=${encodeURIComponent(vertices.join(","))}&n=${n}`;
    return this.request(`/linkages/${id}/components/${component}/trace?${query}`);
  }

  path(
    id: string,
    from: { length: number; type: string },
    to: { length: number; type: string },
  ): Promise<{ paths: MotionData[] }> {
    return this.request(`/linkages/${id}/path`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ from, to }),
    });
  }

  closest(id: string, c1: number, c2: number): Promise<NearestPayload> {
    return this.request(`/linkages/${id}/closest`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ c1, c2 }),
    });
  }
}
