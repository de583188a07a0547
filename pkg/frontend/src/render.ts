/** Canvas renderer: paints a render list in list order. Unknown primitive
 * kinds are skipped with a console warning. */

import { RenderItem, RenderList } from "./protocol.js";
import { tessellate } from "./tessellate.js";

export interface Canvas2DLike {
  clearRect(x: number, y: number, w: number, h: number): void;
  beginPath(): void;
  moveTo(x: number, y: number): void;
  lineTo(x: number, y: number): void;
  closePath(): void;
  fill(): void;
  fillStyle: string | CanvasGradient | CanvasPattern;
}

const KNOWN_KINDS = new Set(["polygon", "polyline", "circleArc", "text"]);

export function renderFrame(
  ctx: Canvas2DLike,
  list: RenderList,
  width: number,
  height: number,
  warn: (message: string) => void = (m) => console.warn(m),
): void {
  ctx.clearRect(0, 0, width, height);
  for (const item of list.items) {
    drawItem(ctx, item, warn);
  }
}

export function drawItem(ctx: Canvas2DLike, item: RenderItem, warn: (message: string) => void): void {
  if (!KNOWN_KINDS.has(item.kind)) {
    warn(`skipping unknown primitive kind ${item.kind}`);
    return;
  }
  for (const poly of tessellate(item)) {
    ctx.fillStyle = poly.color;
    ctx.beginPath();
    poly.points.forEach(([x, y], i) => (i === 0 ? ctx.moveTo(x, y) : ctx.lineTo(x, y)));
    ctx.closePath();
    ctx.fill();
  }
}
