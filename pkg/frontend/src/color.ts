/** Diverging color scale for positive-ratio values. */

export interface Rgb {
  r: number;
  g: number;
  b: number;
}

const NEGATIVE: Rgb = { r: 192, g: 57, b: 43 };
const NEUTRAL: Rgb = { r: 189, g: 195, b: 199 };
const POSITIVE: Rgb = { r: 39, g: 174, b: 96 };

function mix(a: Rgb, b: Rgb, t: number): Rgb {
  return {
    r: Math.round(a.r + (b.r - a.r) * t),
    g: Math.round(a.g + (b.g - a.g) * t),
    b: Math.round(a.b + (b.b - a.b) * t),
  };
}

/**
 * Map a ratio in [0, 1] onto red (0) through neutral grey (0.5) to green (1).
 * Values outside the range clamp to the endpoints.
 */
export function pprColor(ppr: number): Rgb {
  const t = Math.min(1, Math.max(0, ppr));
  return t <= 0.5 ? mix(NEGATIVE, NEUTRAL, t / 0.5) : mix(NEUTRAL, POSITIVE, (t - 0.5) / 0.5);
}

export function cssColor(c: Rgb): string {
  return `rgb(${c.r}, ${c.g}, ${c.b})`;
}

/** Greenness score used by tests to check the scale is monotone in ppr. */
export function greenness(c: Rgb): number {
  return c.g - c.r;
}
