/** Canvas rendering of the strip fundamental domain. */

import { archPoint, crossMarkers, layoutArcs, semiPoint } from "./geometry.js";
import type { Glyph } from "./geometry.js";
import { arcKey, sameArc } from "./types.js";
import type { WireArc, WireTri } from "./types.js";

const PALETTE = [
  "#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1",
  "#76b7b2", "#edc948", "#9c755f", "#bab0ac", "#d37295",
];

function colorFor(arc: WireArc): string {
  const key = arcKey(arc);
  let h = 0;
  for (let i = 0; i < key.length; i++) {
    h = (h * 31 + key.charCodeAt(i)) >>> 0;
  }
  return PALETTE[h % PALETTE.length];
}

export interface Viewport {
  width: number;
  height: number;
  lo: number;
  hi: number;
}

export function worldToCanvas(vp: Viewport, x: number, y: number): [number, number] {
  const margin = 30;
  const px = margin + ((x - vp.lo) / (vp.hi - vp.lo)) * (vp.width - 2 * margin);
  const py = vp.height - margin - y * (vp.height - 2 * margin);
  return [px, py];
}

export function canvasToWorld(vp: Viewport, px: number, py: number): [number, number] {
  const margin = 30;
  const x = vp.lo + ((px - margin) / (vp.width - 2 * margin)) * (vp.hi - vp.lo);
  const y = (vp.height - margin - py) / (vp.height - 2 * margin);
  return [x, y];
}

export function viewportFor(tri: WireTri, liftCopies: number, offset: number,
                            width: number, height: number): Viewport {
  const lo = offset - (liftCopies * tri.n) / 2;
  const hi = offset + (liftCopies * tri.n) / 2;
  return { width, height, lo, hi };
}

export function renderScene(
  ctx: CanvasRenderingContext2D,
  vp: Viewport,
  tri: WireTri,
  selected: WireArc | null,
): Glyph[] {
  ctx.clearRect(0, 0, vp.width, vp.height);
  drawBoundaries(ctx, vp, tri.n);
  const glyphs = layoutArcs(tri, { lo: vp.lo, hi: vp.hi });
  for (const g of glyphs) {
    const active = selected !== null && sameArc(g.arc, selected);
    ctx.strokeStyle = colorFor(g.arc);
    ctx.lineWidth = active ? 4 : 2;
    if (g.kind === "segment") {
      ctx.beginPath();
      ctx.moveTo(...worldToCanvas(vp, g.x1, g.y1));
      ctx.lineTo(...worldToCanvas(vp, g.x2, g.y2));
      ctx.stroke();
      if (g.arc.type === "half") {
        const [bx, by] = worldToCanvas(vp, (g.x1 + g.x2) / 2, 0.5);
        badge(ctx, bx + 10, by - 10, g.arc.sign);
      }
    } else if (g.kind === "arch") {
      ctx.beginPath();
      for (let i = 0; i <= 24; i++) {
        const p = archPoint(g, i / 24);
        const [px, py] = worldToCanvas(vp, p.x, p.y);
        if (i === 0) ctx.moveTo(px, py);
        else ctx.lineTo(px, py);
      }
      ctx.stroke();
    } else {
      ctx.beginPath();
      for (let i = 0; i <= 24; i++) {
        const p = semiPoint(g, i / 24);
        const [px, py] = worldToCanvas(vp, p.x, p.y);
        if (i === 0) ctx.moveTo(px, py);
        else ctx.lineTo(px, py);
      }
      ctx.stroke();
      if (g.half === 0) {
        const p = semiPoint(g, 0.5);
        const [px, py] = worldToCanvas(vp, p.x, p.y);
        ctx.fillStyle = colorFor(g.arc);
        ctx.font = "12px sans-serif";
        ctx.fillText(g.label, px - 14, py - 8);
      }
    }
  }
  drawMarkers(ctx, vp, tri.n);
  return glyphs;
}

function drawBoundaries(ctx: CanvasRenderingContext2D, vp: Viewport, n: number) {
  ctx.strokeStyle = "#222";
  ctx.lineWidth = 2;
  for (const y of [0, 1]) {
    ctx.beginPath();
    ctx.moveTo(...worldToCanvas(vp, vp.lo, y));
    ctx.lineTo(...worldToCanvas(vp, vp.hi, y));
    ctx.stroke();
  }
  ctx.fillStyle = "#222";
  for (let m = Math.ceil(vp.lo); m <= Math.floor(vp.hi); m++) {
    for (const y of [0, 1]) {
      const [px, py] = worldToCanvas(vp, m, y);
      ctx.beginPath();
      ctx.arc(px, py, 3, 0, 2 * Math.PI);
      ctx.fill();
      if (y === 0 && m % n === 0) {
        ctx.font = "10px sans-serif";
        ctx.fillText(String(m), px - 4, py + 14);
      }
    }
  }
}

function drawMarkers(ctx: CanvasRenderingContext2D, vp: Viewport, n: number) {
  for (const mark of crossMarkers(n, { lo: vp.lo, hi: vp.hi })) {
    const [px, py] = worldToCanvas(vp, mark.x, 0.5);
    ctx.strokeStyle = mark.cross === 1 ? "#d62728" : "#2ca02c";
    ctx.lineWidth = 2;
    ctx.beginPath();
    ctx.moveTo(px - 5, py - 5);
    ctx.lineTo(px + 5, py + 5);
    ctx.moveTo(px - 5, py + 5);
    ctx.lineTo(px + 5, py - 5);
    ctx.stroke();
    ctx.fillStyle = ctx.strokeStyle;
    ctx.font = "11px sans-serif";
    ctx.fillText(mark.cross === 1 ? "x1" : "x2", px + 7, py + 4);
  }
}

function badge(ctx: CanvasRenderingContext2D, x: number, y: number, sign: string) {
  ctx.fillStyle = "#fff";
  ctx.beginPath();
  ctx.arc(x, y, 7, 0, 2 * Math.PI);
  ctx.fill();
  ctx.strokeStyle = "#555";
  ctx.lineWidth = 1;
  ctx.stroke();
  ctx.fillStyle = "#111";
  ctx.font = "11px sans-serif";
  ctx.fillText(sign, x - 3, y + 4);
}
