/** Pure layout of skew-curves on the strip fundamental domain.
 *
 * World coordinates: x along the strip (one unit per marked point), y in
 * [0, 1] with y = 0 the lower boundary.  The fundamental domain shows
 * `liftCopies` copies of width n starting at `offset`; glyphs are produced
 * for every lift whose points land inside.
 */

import type { WireArc, WireTri } from "./types.js";

export interface Segment {
  kind: "segment";
  arc: WireArc;
  x1: number;
  y1: number;
  x2: number;
  y2: number;
}

export interface Arch {
  kind: "arch";
  arc: WireArc;
  /** endpoints on the boundary `top` (y=1) or bottom (y=0) */
  x1: number;
  x2: number;
  top: boolean;
}

export interface Semi {
  kind: "semi";
  arc: WireArc;
  /** which semicircle (0: through the first cross, 1: through the second) */
  half: 0 | 1;
  x1: number;
  x2: number;
  label: string;
}

export type Glyph = Segment | Arch | Semi;

interface Span {
  lo: number;
  hi: number;
}

function lifts(points: number[], n: number, view: Span): number[] {
  // translation multiples t*n for which all shifted points are visible
  const out: number[] = [];
  const lo = Math.floor((view.lo - Math.max(...points)) / n) - 1;
  const hi = Math.ceil((view.hi - Math.min(...points)) / n) + 1;
  for (let t = lo; t <= hi; t++) {
    if (points.every((p) => p + t * n >= view.lo && p + t * n <= view.hi)) {
      out.push(t * n);
    }
  }
  return out;
}

/** The two (bot, top) bridge lifts or boundary arc spans of an arc. */
function curveData(arc: WireArc, n: number):
  | { bridges: Array<[number, number]> }
  | { arches: Array<{ a: number; b: number; top: boolean }> }
  | { star: true } {
  switch (arc.type) {
    case "half":
      return {
        bridges: [
          arc.cross === 1
            ? [-arc.index, arc.index]
            : [-arc.index, n + arc.index],
        ],
      };
    case "pair":
      return {
        bridges: [
          [arc.i, arc.k - arc.i],
          [arc.i - arc.k, -arc.i],
        ],
      };
    case "tors":
      return {
        arches: [
          { a: arc.res - arc.len - 1, b: arc.res, top: true },
          { a: -arc.res, b: arc.len + 1 - arc.res, top: false },
        ],
      };
    default:
      return { star: true };
  }
}

export function layoutArcs(tri: WireTri, view: Span): Glyph[] {
  const glyphs: Glyph[] = [];
  for (const arc of tri.arcs) {
    const data = curveData(arc, tri.n);
    if ("bridges" in data) {
      for (const [bot, top] of data.bridges) {
        for (const s of lifts([bot, top], tri.n, view)) {
          glyphs.push({
            kind: "segment",
            arc,
            x1: bot + s,
            y1: 0,
            x2: top + s,
            y2: 1,
          });
        }
      }
    } else if ("arches" in data) {
      for (const { a, b, top } of data.arches) {
        for (const s of lifts([a, b], tri.n, view)) {
          glyphs.push({ kind: "arch", arc, x1: a + s, x2: b + s, top });
        }
      }
    } else {
      const label =
        arc.type === "star" ? `(${arc.e1},${arc.e2})` : `(${(arc as { lam: number }).lam},L^${(arc as { j: number }).j})`;
      for (const s of lifts([0, tri.n], tri.n, view)) {
        glyphs.push({ kind: "semi", arc, half: 0, x1: s, x2: s + tri.n / 2, label });
        glyphs.push({ kind: "semi", arc, half: 1, x1: s + tri.n / 2, x2: s + tri.n, label });
      }
    }
  }
  return glyphs;
}

/** Fixed-point markers visible in the view. */
export function crossMarkers(n: number, view: Span): Array<{ x: number; cross: 1 | 2 }> {
  const out: Array<{ x: number; cross: 1 | 2 }> = [];
  for (let t = Math.floor(view.lo / n) - 1; t <= Math.ceil(view.hi / n) + 1; t++) {
    const x1 = t * n;
    const x2 = t * n + n / 2;
    if (x1 >= view.lo && x1 <= view.hi) out.push({ x: x1, cross: 1 });
    if (x2 >= view.lo && x2 <= view.hi) out.push({ x: x2, cross: 2 });
  }
  return out;
}

function segmentDistance(g: Segment, x: number, y: number): number {
  const dx = g.x2 - g.x1;
  const dy = g.y2 - g.y1;
  const len2 = dx * dx + dy * dy;
  const t = len2 === 0 ? 0 : Math.max(0, Math.min(1, ((x - g.x1) * dx + (y - g.y1) * dy) / len2));
  const px = g.x1 + t * dx;
  const py = g.y1 + t * dy;
  return Math.hypot(x - px, y - py);
}

export function archPoint(g: Arch, t: number): { x: number; y: number } {
  // quadratic bezier arch with control point dipping into the strip
  const mid = (g.x1 + g.x2) / 2;
  const base = g.top ? 1 : 0;
  const control = base + (g.top ? -0.7 : 0.7);
  const x = (1 - t) * (1 - t) * g.x1 + 2 * (1 - t) * t * mid + t * t * g.x2;
  const y = (1 - t) * (1 - t) * base + 2 * (1 - t) * t * control + t * t * base;
  return { x, y };
}

function archDistance(g: Arch, x: number, y: number): number {
  let best = Infinity;
  for (let i = 0; i <= 16; i++) {
    const p = archPoint(g, i / 16);
    best = Math.min(best, Math.hypot(x - p.x, y - p.y));
  }
  return best;
}

export function semiPoint(g: Semi, t: number): { x: number; y: number } {
  const bulge = g.half === 0 ? -0.12 : 0.12;
  const x = g.x1 + (g.x2 - g.x1) * t;
  const y = 0.5 + Math.sin(Math.PI * t) * bulge;
  return { x, y };
}

function semiDistance(g: Semi, x: number, y: number): number {
  let best = Infinity;
  for (let i = 0; i <= 12; i++) {
    const p = semiPoint(g, i / 12);
    best = Math.min(best, Math.hypot(x - p.x, y - p.y));
  }
  return best;
}

export function glyphDistance(g: Glyph, x: number, y: number): number {
  if (g.kind === "segment") return segmentDistance(g, x, y);
  if (g.kind === "arch") return archDistance(g, x, y);
  return semiDistance(g, x, y);
}

/** Nearest arc to a world point, within a pick radius. */
export function hitTest(
  glyphs: Glyph[],
  x: number,
  y: number,
  radius = 0.35,
): WireArc | null {
  let best: WireArc | null = null;
  let bestDist = radius;
  for (const g of glyphs) {
    const d = glyphDistance(g, x, y);
    if (d < bestDist) {
      bestDist = d;
      best = g.arc;
    }
  }
  return best;
}
