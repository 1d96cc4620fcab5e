// Text panels: complete Cayley distance vector, nearest-pair display.

import { distanceVector } from "../state.js";
import { drawRealization } from "./linkageView.js";
import type {
  AnalysisResponse,
  LinkageDocument,
  NearestPayload,
  RealizationData,
} from "../types.js";

export function renderDistancePanel(
  el: HTMLElement,
  analysis: AnalysisResponse | null,
  realization: RealizationData | null,
): void {
  if (!analysis?.completeCayleyVector || !realization) {
    el.innerHTML = "<em>no realization</em>";
    return;
  }
  const values = distanceVector(realization, analysis.completeCayleyVector);
  const rows = analysis.completeCayleyVector
    .map(
      ([u, v], i) =>
        `<tr><td>|${u}${v}|</td><td>${values[i].toFixed(6)}</td></tr>`,
    )
    .join("");
  el.innerHTML =
    `<div>type <b>${realization.type}</b>, base length ` +
    `<b>${realization.baseLength.toFixed(6)}</b></div>` +
    `<table>${rows}</table>`;
}

export function renderNearestPanel(
  el: HTMLElement,
  doc: LinkageDocument | null,
  analysis: AnalysisResponse | null,
  nearest: NearestPayload | null,
): void {
  if (!nearest || !doc || !analysis) {
    el.classList.add("hidden");
    el.innerHTML = "";
    return;
  }
  el.classList.remove("hidden");
  el.innerHTML =
    `<h3>nearest realizations (Cayley distance ${nearest.distance.toFixed(6)})</h3>` +
    `<div class="pair">` +
    `<div><canvas id="nearest-a" width="260" height="200"></canvas>` +
    `<div class="caption">|f| = ${nearest.r1.baseLength.toFixed(4)}, type ${nearest.r1.type}</div></div>` +
    `<div><canvas id="nearest-b" width="260" height="200"></canvas>` +
    `<div class="caption">|f| = ${nearest.r2.baseLength.toFixed(4)}, type ${nearest.r2.type}</div></div>` +
    `</div>`;
  const a = el.querySelector<HTMLCanvasElement>("#nearest-a");
  const b = el.querySelector<HTMLCanvasElement>("#nearest-b");
  if (a) drawRealization(a, doc, analysis, nearest.r1);
  if (b) drawRealization(b, doc, analysis, nearest.r2);
}
