// Canvas rendering of the current realization: solid bars, dashed
// complete-Cayley-vector non-edges, labeled joints.  Pure drawing from
// served coordinates.

import type { AnalysisResponse, LinkageDocument, RealizationData } from "../types.js";

export interface FitTransform {
  scale: number;
  ox: number;
  oy: number;
}

export function fitTransform(
  points: Record<string, [number, number]>,
  width: number,
  height: number,
  pad = 30,
): FitTransform {
  const xs = Object.values(points).map((p) => p[0]);
  const ys = Object.values(points).map((p) => p[1]);
  const minX = Math.min(...xs), maxX = Math.max(...xs);
  const minY = Math.min(...ys), maxY = Math.max(...ys);
  const spanX = Math.max(maxX - minX, 1e-9);
  const spanY = Math.max(maxY - minY, 1e-9);
  const scale = Math.min((width - 2 * pad) / spanX, (height - 2 * pad) / spanY);
  return {
    scale,
    ox: pad - minX * scale + (width - 2 * pad - spanX * scale) / 2,
    // canvas y grows downward; flip so the mathematical frame reads naturally
    oy: height - pad + minY * scale - (height - 2 * pad - spanY * scale) / 2,
  };
}

export function toCanvas(p: [number, number], t: FitTransform): [number, number] {
  return [p[0] * t.scale + t.ox, t.oy - p[1] * t.scale];
}

export function drawRealization(
  canvas: HTMLCanvasElement,
  doc: LinkageDocument,
  analysis: AnalysisResponse,
  realization: RealizationData,
  trace?: [number, number][],
): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const t = fitTransform(realization.points, canvas.width, canvas.height);

  if (trace && trace.length > 1) {
    ctx.strokeStyle = "#c8e6ff";
    ctx.lineWidth = 1;
    ctx.beginPath();
    trace.forEach((p, i) => {
      const [x, y] = toCanvas(p, t);
      if (i === 0) ctx.moveTo(x, y);
      else ctx.lineTo(x, y);
    });
    ctx.stroke();
  }

  // dashed non-edges of the complete Cayley vector
  ctx.setLineDash([6, 5]);
  ctx.strokeStyle = "#c0392b";
  ctx.lineWidth = 1.2;
  for (const [u, v] of analysis.completeCayleyVector ?? []) {
    if (!(u in realization.points) || !(v in realization.points)) continue;
    const [x1, y1] = toCanvas(realization.points[u], t);
    const [x2, y2] = toCanvas(realization.points[v], t);
    ctx.beginPath();
    ctx.moveTo(x1, y1);
    ctx.lineTo(x2, y2);
    ctx.stroke();
  }
  ctx.setLineDash([]);

  // bars
  ctx.strokeStyle = "#2c3e50";
  ctx.lineWidth = 2.5;
  for (const bar of doc.bars) {
    if (!(bar.u in realization.points) || !(bar.v in realization.points)) continue;
    const [x1, y1] = toCanvas(realization.points[bar.u], t);
    const [x2, y2] = toCanvas(realization.points[bar.v], t);
    ctx.beginPath();
    ctx.moveTo(x1, y1);
    ctx.lineTo(x2, y2);
    ctx.stroke();
  }

  // joints and labels
  ctx.font = "12px sans-serif";
  for (const [name, p] of Object.entries(realization.points)) {
    const [x, y] = toCanvas(p, t);
    ctx.fillStyle = "#2980b9";
    ctx.beginPath();
    ctx.arc(x, y, 4, 0, 2 * Math.PI);
    ctx.fill();
    ctx.fillStyle = "#333";
    ctx.fillText(name, x + 6, y - 6);
  }
}
