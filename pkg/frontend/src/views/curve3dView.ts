// 3D projection of the canonical Cayley curve: an orthographic camera
// with drag-to-orbit, the polyline color-coded by realization type, and
// a dot synchronized with the tracer.

import type { Curve3dResponse } from "../types.js";

export interface Orbit {
  yaw: number;
  pitch: number;
}

const PALETTE = ["#2980b9", "#c0392b", "#27ae60", "#8e44ad", "#f39c12", "#16a085", "#d35400", "#2c3e50"];

export function typeColors(labels: string[]): Map<string, string> {
  const colors = new Map<string, string>();
  for (const label of labels) {
    if (!colors.has(label)) colors.set(label, PALETTE[colors.size % PALETTE.length]);
  }
  return colors;
}

export function project(
  point: [number, number, number],
  center: [number, number, number],
  orbit: Orbit,
): [number, number] {
  const [x, y, z] = [point[0] - center[0], point[1] - center[1], point[2] - center[2]];
  const cy = Math.cos(orbit.yaw), sy = Math.sin(orbit.yaw);
  const cp = Math.cos(orbit.pitch), sp = Math.sin(orbit.pitch);
  const x1 = cy * x + sy * z;
  const z1 = -sy * x + cy * z;
  const y2 = cp * y - sp * z1;
  return [x1, y2];
}

export function drawCurve3d(
  canvas: HTMLCanvasElement,
  curve: Curve3dResponse,
  orbit: Orbit,
  currentIndex: number | null,
  axisLabels: [string, string, string] | null = null,
): void {
  const ctx = canvas.getContext("2d");
  if (!ctx || !curve.points.length) return;
  ctx.clearRect(0, 0, canvas.width, canvas.height);

  const center: [number, number, number] = [0, 1, 2].map(
    (axis) => curve.points.reduce((acc, p) => acc + p[axis], 0) / curve.points.length,
  ) as [number, number, number];

  const projected = curve.points.map((p) => project(p, center, orbit));
  const xs = projected.map((p) => p[0]);
  const ys = projected.map((p) => p[1]);
  const span = Math.max(
    Math.max(...xs) - Math.min(...xs),
    Math.max(...ys) - Math.min(...ys),
    1e-9,
  );
  const scale = (Math.min(canvas.width, canvas.height) - 50) / span;
  const toCanvas = (p: [number, number]): [number, number] => [
    canvas.width / 2 + p[0] * scale,
    canvas.height / 2 - p[1] * scale,
  ];

  // axes triad in the corner
  if (axisLabels) {
    const origin: [number, number] = [44, canvas.height - 44];
    const unit = 26;
    const axes: [number, number, number][] = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    ctx.font = "10px sans-serif";
    axes.forEach((axis, i) => {
      const tip = project(axis, [0, 0, 0], orbit);
      ctx.strokeStyle = "#999";
      ctx.beginPath();
      ctx.moveTo(origin[0], origin[1]);
      ctx.lineTo(origin[0] + tip[0] * unit, origin[1] - tip[1] * unit);
      ctx.stroke();
      ctx.fillStyle = "#666";
      ctx.fillText(axisLabels[i], origin[0] + tip[0] * (unit + 8), origin[1] - tip[1] * (unit + 8));
    });
  }

  const colors = typeColors(curve.typeLabels);
  ctx.lineWidth = 2;
  for (let i = 1; i < projected.length; i++) {
    ctx.strokeStyle = colors.get(curve.typeLabels[i]) ?? "#333";
    ctx.beginPath();
    const [x0, y0] = toCanvas(projected[i - 1]);
    const [x1, y1] = toCanvas(projected[i]);
    ctx.moveTo(x0, y0);
    ctx.lineTo(x1, y1);
    ctx.stroke();
  }
  // close the loop for components
  ctx.strokeStyle = colors.get(curve.typeLabels[0]) ?? "#333";
  ctx.beginPath();
  const [xl, yl] = toCanvas(projected[projected.length - 1]);
  const [xf, yf] = toCanvas(projected[0]);
  ctx.moveTo(xl, yl);
  ctx.lineTo(xf, yf);
  ctx.stroke();

  if (currentIndex !== null && currentIndex >= 0 && currentIndex < projected.length) {
    const [x, y] = toCanvas(projected[currentIndex]);
    ctx.fillStyle = "#111";
    ctx.beginPath();
    ctx.arc(x, y, 5, 0, 2 * Math.PI);
    ctx.fill();
  }
}
