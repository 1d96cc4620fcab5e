// Single-store explorer state.
//
// Every view renders from one immutable snapshot: the tracer position,
// the CCS dot, the 3D curve dot, and the distance vector panel all derive
// from the same currentRealization, so they can never diverge.  Async
// responses carry the version current at request time and are dropped if
// the store moved on (rapid stepping, superseded loads).

import { ApiClient, ApiError } from "./api.js";
import type {
  AnalysisResponse,
  CcsResponse,
  ComponentSummary,
  Curve3dResponse,
  Interval,
  LinkageDocument,
  NearestPayload,
  RealizationData,
} from "./types.js";

export interface ExplorerState {
  linkageId: string | null;
  analysis: AnalysisResponse | null;
  ccs: CcsResponse | null;
  components: ComponentSummary[];
  componentIndex: number;
  samples: RealizationData[];
  traceIndex: number;
  realization: RealizationData | null;
  curve: Curve3dResponse | null;
  projection: [string, string, string] | null;
  traceVertex: string | null;
  traceCurve: [number, number][] | null;
  playing: boolean;
  nearest: NearestPayload | null;
  banner: string | null;
  version: number;
}

const INITIAL: ExplorerState = {
  linkageId: null,
  analysis: null,
  ccs: null,
  components: [],
  componentIndex: 0,
  samples: [],
  traceIndex: 0,
  realization: null,
  curve: null,
  projection: null,
  traceVertex: null,
  traceCurve: null,
  playing: false,
  nearest: null,
  banner: null,
  version: 0,
};

export type Listener = (state: ExplorerState) => void;

/** Nearest point of the non-oriented union to the requested value. */
export function clampToIntervals(value: number, intervals: Interval[]): number {
  if (!intervals.length) return value;
  let best = intervals[0][0];
  let bestDist = Infinity;
  for (const [lo, hi] of intervals) {
    const candidate = value < lo ? lo : value > hi ? hi : value;
    const dist = Math.abs(candidate - value);
    if (dist < bestDist) {
      best = candidate;
      bestDist = dist;
    }
  }
  return best;
}

/** Display-only measurement of served coordinates (no solving happens
 * client side: the points are always exactly what the engine returned). */
export function distanceVector(
  realization: RealizationData,
  vector: [string, string][],
): number[] {
  return vector.map(([u, v]) => {
    const [ux, uy] = realization.points[u];
    const [vx, vy] = realization.points[v];
    return Math.hypot(vx - ux, vy - uy);
  });
}

export class ExplorerStore {
  private state: ExplorerState = INITIAL;
  private listeners: Listener[] = [];

  constructor(
    private api: ApiClient,
    private samplesPerLeg = 64,
  ) {}

  get current(): ExplorerState {
    return this.state;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    listener(this.state);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private commit(patch: Partial<ExplorerState>) {
    this.state = { ...this.state, ...patch, version: this.state.version + 1 };
    for (const listener of this.listeners) listener(this.state);
  }

  /** True when an async response started at `version` is still current. */
  private fresh(version: number): boolean {
    return this.state.version === version;
  }

  async loadLinkage(doc: LinkageDocument): Promise<void> {
    const version = this.state.version;
    try {
      const analysis = await this.api.uploadLinkage(doc);
      if (!this.fresh(version)) return;
      if (!analysis.tdLow) {
        this.commit({
          analysis,
          linkageId: analysis.id,
          ccs: null,
          components: [],
          samples: [],
          realization: null,
          nearest: null,
          banner: analysis.diagnostic ?? "linkage is not of low Cayley complexity",
        });
        return;
      }
      const ccs = await this.api.ccs(analysis.id);
      const components = (await this.api.components(analysis.id)).components;
      this.commit({
        analysis,
        linkageId: analysis.id,
        ccs,
        components,
        componentIndex: 0,
        samples: [],
        traceIndex: 0,
        realization: null,
        curve: null,
        projection: null,
        nearest: null,
        banner: null,
      });
      if (components.length) await this.selectComponent(0);
    } catch (err) {
      this.fail(err);
    }
  }

  async selectComponent(index: number): Promise<void> {
    const { linkageId, components } = this.state;
    if (!linkageId || !components.length) return;
    const bounded = ((index % components.length) + components.length) % components.length;
    const version = this.state.version;
    try {
      const { realizations } = await this.api.samples(linkageId, bounded, this.samplesPerLeg);
      if (!this.fresh(version)) return;
      this.commit({
        componentIndex: bounded,
        samples: realizations,
        traceIndex: 0,
        realization: realizations[0] ?? null,
        curve: null,
        traceCurve: null,
      });
      const projection = this.state.projection ?? this.defaultProjection();
      if (projection) await this.setProjection(projection);
      if (this.state.traceVertex) await this.setTraceVertex(this.state.traceVertex);
    } catch (err) {
      this.fail(err);
    }
  }

  defaultProjection(): [string, string, string] | null {
    const vector = this.state.analysis?.completeCayleyVector;
    if (!vector || vector.length < 3) return null;
    return [vector[0].join(","), vector[1].join(","), vector[2].join(",")];
  }

  async setProjection(projection: [string, string, string]): Promise<void> {
    const { linkageId, componentIndex } = this.state;
    if (!linkageId) return;
    const version = this.state.version;
    try {
      const curve = await this.api.curve3d(
        linkageId, componentIndex, projection[0], projection[1], projection[2],
        this.samplesPerLeg,
      );
      if (!this.fresh(version)) return;
      this.commit({ projection, curve });
    } catch (err) {
      this.fail(err);
    }
  }

  /** Move the tracer along the component's sample loop. */
  traceStep(delta: number): void {
    const { samples } = this.state;
    if (!samples.length) return;
    const n = samples.length;
    const index = (((this.state.traceIndex + delta) % n) + n) % n;
    this.commit({ traceIndex: index, realization: samples[index] });
  }

  /** Clamp a requested base length into the CCS and fetch that realization. */
  async setLength(length: number): Promise<void> {
    const { linkageId, ccs, realization } = this.state;
    if (!linkageId || !ccs) return;
    const clamped = clampToIntervals(length, ccs.nonOriented);
    const type = realization?.type ?? this.state.samples[0]?.type;
    if (type === undefined) return;
    const version = this.state.version;
    try {
      const fetched = await this.api.realization(linkageId, clamped, type.replace(/0/g, "+"));
      if (!this.fresh(version)) return;
      this.commit({ realization: fetched, nearest: null });
    } catch (err) {
      this.fail(err);
    }
  }

  /** Toggle one construction step's orientation sign at the current base
   * length (0 signs resolve to +); unrealizable flips surface a banner. */
  async toggleSign(stepIndex: number): Promise<void> {
    const { linkageId, realization } = this.state;
    if (!linkageId || !realization) return;
    const signs = realization.type.split("");
    const flipped = signs[stepIndex] === "-" ? "+" : "-";
    signs[stepIndex] = flipped;
    const version = this.state.version;
    try {
      const fetched = await this.api.realization(
        linkageId, realization.baseLength, signs.join("").replace(/0/g, "+"),
      );
      if (!this.fresh(version)) return;
      this.commit({ realization: fetched });
    } catch (err) {
      this.fail(err);
    }
  }

  /** Fetch (or clear) the overlay curve traced by one vertex over the
   * selected component. */
  async setTraceVertex(vertex: string | null): Promise<void> {
    const { linkageId, componentIndex } = this.state;
    if (!linkageId) return;
    if (!vertex) {
      this.commit({ traceVertex: null, traceCurve: null });
      return;
    }
    const version = this.state.version;
    try {
      const curves = await this.api.trace(linkageId, componentIndex, [vertex], this.samplesPerLeg);
      if (!this.fresh(version)) return;
      this.commit({ traceVertex: vertex, traceCurve: curves[vertex] ?? null });
    } catch (err) {
      this.fail(err);
    }
  }

  async requestPath(
    from: { length: number; type: string },
    to: { length: number; type: string },
  ): Promise<void> {
    const { linkageId } = this.state;
    if (!linkageId) return;
    try {
      const { paths } = await this.api.path(linkageId, from, to);
      this.commit({ nearest: null, banner: `${paths.length} path(s) found` });
    } catch (err) {
      if (err instanceof ApiError && err.payload.error === "NotConnected" && err.payload.nearest) {
        this.commit({
          nearest: err.payload.nearest,
          banner: "not connected: showing the nearest realizations of the two components",
        });
        return;
      }
      this.fail(err);
    }
  }

  setPlaying(playing: boolean): void {
    this.commit({ playing });
  }

  dismissBanner(): void {
    this.commit({ banner: null });
  }

  private fail(err: unknown): void {
    const message =
      err instanceof ApiError
        ? `${err.payload.error}: ${err.payload.message}`
        : String(err);
    this.commit({ banner: message });
  }
}
