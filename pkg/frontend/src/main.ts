// DOM wiring: one store, every widget re-renders from its snapshots.

import { ApiClient } from "./api.js";
import { ExplorerStore } from "./state.js";
import { drawCcsBar } from "./views/ccsBar.js";
import { drawCurve3d, Orbit } from "./views/curve3dView.js";
import { drawRealization } from "./views/linkageView.js";
import { renderDistancePanel, renderNearestPanel } from "./views/panels.js";
import type { LinkageDocument } from "./types.js";

const SAMPLE_LINKAGE: LinkageDocument = {
  vertices: ["a", "b", "c", "d"],
  bars: [
    { u: "a", v: "b", length: 2 },
    { u: "b", v: "c", length: 6 },
    { u: "a", v: "d", length: 3 },
    { u: "d", v: "c", length: 4.5 },
  ],
  baseNonedge: ["a", "c"],
};

const byId = <T extends HTMLElement>(id: string): T => {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
};

const store = new ExplorerStore(new ApiClient(""));
let currentDoc: LinkageDocument = SAMPLE_LINKAGE;
const orbit: Orbit = { yaw: 0.7, pitch: 0.5 };
let playTimer: number | null = null;

const linkageCanvas = byId<HTMLCanvasElement>("linkage-canvas");
const ccsCanvas = byId<HTMLCanvasElement>("ccs-canvas");
const curveCanvas = byId<HTMLCanvasElement>("curve-canvas");

function render() {
  const state = store.current;
  const banner = byId<HTMLDivElement>("banner");
  banner.textContent = state.banner ?? "";
  banner.classList.toggle("hidden", !state.banner);

  byId<HTMLSpanElement>("component-label").textContent = state.components.length
    ? `${state.componentIndex + 1} / ${state.components.length}`
    : "-";
  byId<HTMLSpanElement>("type-label").textContent = state.realization?.type ?? "-";
  const lengthInput = byId<HTMLInputElement>("length-input");
  if (state.realization && document.activeElement !== lengthInput) {
    lengthInput.value = state.realization.baseLength.toFixed(6);
  }

  if (state.analysis && state.realization) {
    drawRealization(linkageCanvas, currentDoc, state.analysis, state.realization);
  }
  if (state.ccs) {
    drawCcsBar(ccsCanvas, state.ccs, state.realization?.baseLength ?? null);
  }
  if (state.curve) {
    const labels = state.projection
      ? (state.projection.map((f) => `|${f.replace(",", "")}|`) as [string, string, string])
      : null;
    drawCurve3d(curveCanvas, state.curve, orbit, state.traceIndex, labels);
  } else {
    curveCanvas.getContext("2d")?.clearRect(0, 0, curveCanvas.width, curveCanvas.height);
  }
  renderDistancePanel(byId("distance-panel"), state.analysis, state.realization);
  renderNearestPanel(byId("nearest-panel"), currentDoc, state.analysis, state.nearest);
}

store.subscribe(render);

byId<HTMLButtonElement>("load-sample").addEventListener("click", () => {
  currentDoc = SAMPLE_LINKAGE;
  byId<HTMLTextAreaElement>("linkage-input").value = JSON.stringify(SAMPLE_LINKAGE, null, 2);
  void store.loadLinkage(currentDoc);
});

byId<HTMLButtonElement>("load-custom").addEventListener("click", () => {
  try {
    currentDoc = JSON.parse(byId<HTMLTextAreaElement>("linkage-input").value);
  } catch (err) {
    byId<HTMLDivElement>("banner").textContent = `invalid JSON: ${err}`;
    byId<HTMLDivElement>("banner").classList.remove("hidden");
    return;
  }
  void store.loadLinkage(currentDoc);
});

byId<HTMLButtonElement>("trace-back").addEventListener("click", () => store.traceStep(-1));
byId<HTMLButtonElement>("trace-forward").addEventListener("click", () => store.traceStep(1));
byId<HTMLButtonElement>("component-prev").addEventListener("click", () => {
  void store.selectComponent(store.current.componentIndex - 1);
});
byId<HTMLButtonElement>("component-next").addEventListener("click", () => {
  void store.selectComponent(store.current.componentIndex + 1);
});

byId<HTMLInputElement>("length-input").addEventListener("change", (event) => {
  const value = parseFloat((event.target as HTMLInputElement).value);
  if (Number.isFinite(value)) void store.setLength(value);
});

byId<HTMLButtonElement>("play-toggle").addEventListener("click", () => {
  const playing = !store.current.playing;
  store.setPlaying(playing);
  byId<HTMLButtonElement>("play-toggle").textContent = playing ? "pause" : "play";
  if (playing && playTimer === null) {
    playTimer = window.setInterval(() => {
      if (store.current.playing) store.traceStep(1);
    }, 50);
  } else if (!playing && playTimer !== null) {
    window.clearInterval(playTimer);
    playTimer = null;
  }
});

byId<HTMLButtonElement>("path-request").addEventListener("click", () => {
  const from = byId<HTMLInputElement>("path-from").value;
  const to = byId<HTMLInputElement>("path-to").value;
  const parse = (text: string) => {
    const [length, type] = text.split(":");
    return { length: parseFloat(length), type };
  };
  void store.requestPath(parse(from), parse(to));
});

// drag to orbit the 3D view
let dragging = false;
let last: [number, number] = [0, 0];
curveCanvas.addEventListener("mousedown", (e) => {
  dragging = true;
  last = [e.clientX, e.clientY];
});
window.addEventListener("mouseup", () => (dragging = false));
window.addEventListener("mousemove", (e) => {
  if (!dragging) return;
  orbit.yaw += (e.clientX - last[0]) * 0.01;
  orbit.pitch += (e.clientY - last[1]) * 0.01;
  last = [e.clientX, e.clientY];
  render();
});

byId<HTMLTextAreaElement>("linkage-input").value = JSON.stringify(SAMPLE_LINKAGE, null, 2);
void store.loadLinkage(currentDoc);
