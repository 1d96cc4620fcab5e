// Wire types of the engine service (all payloads are plain JSON).

export interface LinkageDocument {
  vertices: string[];
  bars: { u: string; v: string; length: number }[];
  clusters?: { coords: Record<string, [number, number]>; anchors: [string, string] }[];
  baseNonedge?: [string, string];
}

export interface AnalysisResponse {
  id: string;
  tdLow: boolean;
  steps: number;
  completeCayleyVector: [string, string][] | null;
  warnings: string[];
  baseNonedges: [string, string][];
  baseNonedge: [string, string];
  diagnostic?: string;
}

export type Interval = [number, number];

export interface CcsResponse {
  nonOriented: Interval[];
  oriented: { type: string; intervals: Interval[] }[];
}

export interface ComponentSummary {
  index: number;
  kind: string;
  legCount: number;
  intervals: { type: string; lower: number; upper: number }[];
}

export interface RealizationData {
  baseLength: number;
  type: string;
  points: Record<string, [number, number]>;
}

export interface MotionLegData {
  type: string;
  lower: number;
  upper: number;
  enterAt: "lower" | "upper";
  exitAt: "lower" | "upper";
  clipStart?: number;
  clipEnd?: number;
}

export interface MotionData {
  kind: "component" | "path";
  legs: MotionLegData[];
}

export interface Curve3dResponse {
  points: [number, number, number][];
  typeLabels: string[];
  sampleParams: [number, number][];
}

export interface NearestPayload {
  r1: RealizationData;
  r2: RealizationData;
  distance: number;
}

export interface ServiceError {
  error: string;
  message: string;
  nearest?: NearestPayload;
}
