// Pure view math: canvas fitting and the 3D projection.

import { describe, expect, it } from "vitest";

import { project, typeColors } from "../src/views/curve3dView.js";
import { fitTransform, toCanvas } from "../src/views/linkageView.js";

describe("fitTransform", () => {
  it("maps the bounding box inside the canvas with padding", () => {
    const points = { a: [0, 0] as [number, number], b: [10, 5] as [number, number] };
    const t = fitTransform(points, 400, 300, 30);
    for (const p of Object.values(points)) {
      const [x, y] = toCanvas(p, t);
      expect(x).toBeGreaterThanOrEqual(29);
      expect(x).toBeLessThanOrEqual(371);
      expect(y).toBeGreaterThanOrEqual(29);
      expect(y).toBeLessThanOrEqual(271);
    }
  });

  it("flips the y axis so larger y draws higher", () => {
    const points = { low: [0, 0] as [number, number], high: [0, 2] as [number, number] };
    const t = fitTransform(points, 200, 200);
    expect(toCanvas(points.high, t)[1]).toBeLessThan(toCanvas(points.low, t)[1]);
  });
});

describe("project", () => {
  it("is the identity projection at zero orbit", () => {
    const [x, y] = project([1, 2, 3], [0, 0, 0], { yaw: 0, pitch: 0 });
    expect(x).toBeCloseTo(1, 12);
    expect(y).toBeCloseTo(2, 12);
  });

  it("yaw rotates x toward z", () => {
    const [x] = project([0, 0, 1], [0, 0, 0], { yaw: Math.PI / 2, pitch: 0 });
    expect(x).toBeCloseTo(1, 12);
  });

  it("pitch rotates y toward the depth axis", () => {
    const [, y] = project([0, 1, 0], [0, 0, 0], { yaw: 0, pitch: Math.PI / 2 });
    expect(y).toBeCloseTo(0, 12);
  });
});

describe("typeColors", () => {
  it("assigns one stable color per label", () => {
    const colors = typeColors(["++", "+-", "++", "+-"]);
    expect(colors.size).toBe(2);
    expect(colors.get("++")).not.toBe(colors.get("+-"));
  });
});
