/** Shared geometry: reduce every render-list primitive to filled polygons.
 * Both the live canvas renderer and the test rasterizer consume this, so
 * what the tests measure is what the canvas paints. */

import { RenderItem } from "./protocol.js";

export interface FilledPoly {
  points: [number, number][];
  color: string;
}

const TWO_PI = Math.PI * 2;

export function fontSizePx(font: string | undefined): number {
  const match = /(\d+(?:\.\d+)?)px/.exec(font ?? "");
  return match ? parseFloat(match[1]) : 12;
}

/** Deterministic block box standing in for glyph rendering. */
export function textBlock(item: RenderItem): [number, number][] {
  const [x, y] = item.position ?? [0, 0];
  const size = fontSizePx(item.font);
  const width = Math.max(0.55 * size * (item.text ?? "").length, 2);
  const height = 0.8 * size;
  return [
    [x, y - height],
    [x + width, y - height],
    [x + width, y],
    [x, y],
  ];
}

function strokeQuads(points: [number, number][], width: number, closed: boolean): [number, number][][] {
  const half = Math.max(width, 1) / 2;
  const quads: [number, number][][] = [];
  const n = points.length;
  const last = closed ? n : n - 1;
  for (let i = 0; i < last; i++) {
    const [x0, y0] = points[i];
    const [x1, y1] = points[(i + 1) % n];
    const dx = x1 - x0;
    const dy = y1 - y0;
    const len = Math.hypot(dx, dy);
    if (len === 0) continue;
    const nx = (-dy / len) * half;
    const ny = (dx / len) * half;
    quads.push([
      [x0 + nx, y0 + ny],
      [x1 + nx, y1 + ny],
      [x1 - nx, y1 - ny],
      [x0 - nx, y0 - ny],
    ]);
  }
  return quads;
}

function arcSamples(cx: number, cy: number, r: number, a0: number, sweep: number, steps: number): [number, number][] {
  const out: [number, number][] = [];
  for (let i = 0; i <= steps; i++) {
    const a = a0 + (sweep * i) / steps;
    out.push([cx + r * Math.cos(a), cy + r * Math.sin(a)]);
  }
  return out;
}

function arcOutline(item: RenderItem): [number, number][] {
  const [cx, cy] = item.center ?? [0, 0];
  const r = item.radius ?? 0;
  const a0 = item.startAngle ?? 0;
  const sweep = item.sweep ?? TWO_PI;
  const full = Math.abs(sweep) >= TWO_PI - 1e-9;
  const steps = Math.max(12, Math.ceil((48 * Math.abs(sweep)) / TWO_PI));
  const outer = arcSamples(cx, cy, r, a0, sweep, steps);
  if (item.innerRadius) {
    const inner = arcSamples(cx, cy, item.innerRadius, a0 + sweep, -sweep, steps);
    return outer.concat(full ? inner : inner);
  }
  if (full) return outer;
  return [[cx, cy] as [number, number]].concat(outer);
}

/** Filled polygons for one primitive, in paint order. Unknown kinds yield
 * nothing (callers may warn). */
export function tessellate(item: RenderItem): FilledPoly[] {
  const out: FilledPoly[] = [];
  if (item.kind === "polygon") {
    const points = item.points ?? [];
    if (item.fill && points.length >= 3) out.push({ points, color: item.fill });
    if (item.stroke) {
      for (const quad of strokeQuads(points, item.strokeWidth ?? 1, true)) {
        out.push({ points: quad, color: item.stroke });
      }
    }
  } else if (item.kind === "polyline") {
    const points = item.points ?? [];
    if (item.stroke) {
      for (const quad of strokeQuads(points, item.strokeWidth ?? 1, false)) {
        out.push({ points: quad, color: item.stroke });
      }
    }
  } else if (item.kind === "circleArc") {
    const outline = arcOutline(item);
    if (item.fill && outline.length >= 3) out.push({ points: outline, color: item.fill });
    if (item.stroke) {
      for (const quad of strokeQuads(outline, item.strokeWidth ?? 1, true)) {
        out.push({ points: quad, color: item.stroke });
      }
    }
  } else if (item.kind === "text") {
    out.push({ points: textBlock(item), color: item.color ?? "#000000" });
  }
  return out;
}

export function itemBounds(item: RenderItem): [number, number, number, number] | null {
  let pts: [number, number][] | undefined;
  if (item.kind === "polygon" || item.kind === "polyline") {
    pts = item.points;
  } else if (item.kind === "circleArc") {
    const [cx, cy] = item.center ?? [0, 0];
    const r = item.radius ?? 0;
    pts = [
      [cx - r, cy - r],
      [cx + r, cy + r],
    ];
  } else if (item.kind === "text") {
    pts = textBlock(item);
  }
  if (!pts || pts.length === 0) return null;
  let [minX, minY] = pts[0];
  let [maxX, maxY] = pts[0];
  for (const [x, y] of pts) {
    minX = Math.min(minX, x);
    minY = Math.min(minY, y);
    maxX = Math.max(maxX, x);
    maxY = Math.max(maxY, y);
  }
  return [minX, minY, maxX, maxY];
}
