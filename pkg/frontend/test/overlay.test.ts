import { describe, expect, it } from "vitest";

import { composeOverlay, maskArea } from "../src/overlay.js";

function rgba(pixels: number[][]): Uint8ClampedArray {
  const out = new Uint8ClampedArray(pixels.length * 4);
  pixels.forEach((p, i) => out.set(p, i * 4));
  return out;
}

describe("overlay compositing", () => {
  it("tints only mask pixels and leaves others untouched", () => {
    const base = rgba([
      [100, 100, 100, 255],
      [200, 50, 10, 255],
    ]);
    const mask = rgba([
      [255, 255, 255, 255],
      [0, 0, 0, 255],
    ]);
    const out = composeOverlay(base, mask, { r: 255, g: 0, b: 0, alpha: 0.5 });
    expect(Array.from(out.slice(0, 4))).toEqual([178, 50, 50, 255]);
    expect(Array.from(out.slice(4, 8))).toEqual([200, 50, 10, 255]);
    // input untouched
    expect(base[0]).toBe(100);
  });

  it("alpha 0 is a no-op; alpha 1 replaces with the tint", () => {
    const base = rgba([[10, 20, 30, 255]]);
    const mask = rgba([[255, 0, 0, 255]]);
    const none = composeOverlay(base, mask, { r: 0, g: 255, b: 0, alpha: 0 });
    expect(Array.from(none)).toEqual(Array.from(base));
    const full = composeOverlay(base, mask, { r: 0, g: 255, b: 0, alpha: 1 });
    expect(Array.from(full.slice(0, 3))).toEqual([0, 255, 0]);
  });

  it("mask area counts thresholded pixels", () => {
    const mask = rgba([
      [255, 0, 0, 255],
      [128, 0, 0, 255],
      [127, 0, 0, 255],
      [0, 0, 0, 255],
    ]);
    expect(maskArea(mask)).toBe(2);
  });

  it("size mismatch throws", () => {
    expect(() =>
      composeOverlay(new Uint8ClampedArray(8), new Uint8ClampedArray(4)),
    ).toThrow(/differ/);
  });
});
