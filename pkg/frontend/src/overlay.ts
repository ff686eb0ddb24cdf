/** Mask overlay compositing: pure pixel math, testable without a DOM.
 *
 * The mask arrives as a grayscale PNG decoded into RGBA; a pixel belongs to
 * the mask when its red channel is above 127. Overlay rendering tints those
 * pixels toward a highlight color while untouched pixels pass through, so
 * the human can judge placement against the real content.
 */

export interface Tint {
  r: number;
  g: number;
  b: number;
  alpha: number; // 0..1 tint strength inside the mask
}

export const DEFAULT_TINT: Tint = { r: 255, g: 64, b: 160, alpha: 0.45 };

/** Blend tint into base RGBA wherever maskRGBA is set; returns a new buffer. */
export function composeOverlay(
  base: Uint8ClampedArray,
  mask: Uint8ClampedArray,
  tint: Tint = DEFAULT_TINT,
): Uint8ClampedArray {
  if (base.length !== mask.length) {
    throw new Error(`buffer sizes differ: ${base.length} vs ${mask.length}`);
  }
  const out = new Uint8ClampedArray(base);
  const a = tint.alpha;
  for (let i = 0; i < base.length; i += 4) {
    if (mask[i] > 127) {
      out[i] = Math.round(base[i] * (1 - a) + tint.r * a);
      out[i + 1] = Math.round(base[i + 1] * (1 - a) + tint.g * a);
      out[i + 2] = Math.round(base[i + 2] * (1 - a) + tint.b * a);
    }
  }
  return out;
}

/** Count of mask pixels (for the "object covers N px" readout). */
export function maskArea(mask: Uint8ClampedArray): number {
  let n = 0;
  for (let i = 0; i < mask.length; i += 4) {
    if (mask[i] > 127) n++;
  }
  return n;
}
