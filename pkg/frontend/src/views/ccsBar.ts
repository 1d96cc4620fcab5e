// Horizontal bar of the non-oriented Cayley configuration space with a
// dot at the current configuration.

import type { CcsResponse } from "../types.js";

export function drawCcsBar(
  canvas: HTMLCanvasElement,
  ccs: CcsResponse,
  currentLength: number | null,
): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  if (!ccs.nonOriented.length) return;

  const lo = Math.min(...ccs.nonOriented.map(([a]) => a));
  const hi = Math.max(...ccs.nonOriented.map(([, b]) => b));
  const pad = 18;
  const span = Math.max(hi - lo, 1e-9);
  const toX = (value: number) => pad + ((value - lo) / span) * (canvas.width - 2 * pad);
  const midY = canvas.height / 2;

  ctx.strokeStyle = "#ddd";
  ctx.lineWidth = 2;
  ctx.beginPath();
  ctx.moveTo(pad, midY);
  ctx.lineTo(canvas.width - pad, midY);
  ctx.stroke();

  ctx.strokeStyle = "#27ae60";
  ctx.lineWidth = 6;
  for (const [a, b] of ccs.nonOriented) {
    ctx.beginPath();
    ctx.moveTo(toX(a), midY);
    ctx.lineTo(toX(b), midY);
    ctx.stroke();
  }

  ctx.fillStyle = "#555";
  ctx.font = "10px sans-serif";
  for (const [a, b] of ccs.nonOriented) {
    ctx.fillText(a.toFixed(3), toX(a) - 10, midY + 16);
    ctx.fillText(b.toFixed(3), toX(b) - 10, midY + 16);
  }

  if (currentLength !== null) {
    ctx.fillStyle = "#111";
    ctx.beginPath();
    ctx.arc(toX(currentLength), midY, 5, 0, 2 * Math.PI);
    ctx.fill();
  }
}
