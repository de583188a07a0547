/** Deterministic software rasterizer over the shared tessellation: scanline
 * even-odd polygon fill, no anti-aliasing. The fidelity tests rasterize the
 * client's render list and the server's SVG export through this same code
 * and compare pixels. */

import { RenderItem } from "./protocol.js";
import { tessellate } from "./tessellate.js";

export class Raster {
  readonly width: number;
  readonly height: number;
  readonly data: Uint8ClampedArray;

  constructor(width: number, height: number, background = "#ffffff") {
    this.width = width;
    this.height = height;
    this.data = new Uint8ClampedArray(width * height * 4);
    const [r, g, b] = parseColor(background);
    for (let i = 0; i < width * height; i++) {
      this.data[i * 4] = r;
      this.data[i * 4 + 1] = g;
      this.data[i * 4 + 2] = b;
      this.data[i * 4 + 3] = 255;
    }
  }

  fillPolygon(points: [number, number][], color: string): void {
    if (points.length < 3) return;
    const [r, g, b] = parseColor(color);
    let minY = Infinity;
    let maxY = -Infinity;
    for (const [, y] of points) {
      minY = Math.min(minY, y);
      maxY = Math.max(maxY, y);
    }
    const y0 = Math.max(0, Math.floor(minY));
    const y1 = Math.min(this.height - 1, Math.ceil(maxY));
    const n = points.length;
    for (let py = y0; py <= y1; py++) {
      const sy = py + 0.5;
      const crossings: number[] = [];
      for (let i = 0; i < n; i++) {
        const [ax, ay] = points[i];
        const [bx, by] = points[(i + 1) % n];
        if (ay > sy !== by > sy) {
          crossings.push(ax + ((sy - ay) * (bx - ax)) / (by - ay));
        }
      }
      crossings.sort((p, q) => p - q);
      for (let k = 0; k + 1 < crossings.length; k += 2) {
        const xStart = Math.max(0, Math.round(crossings[k]));
        const xEnd = Math.min(this.width - 1, Math.round(crossings[k + 1]) - 1);
        for (let px = xStart; px <= xEnd; px++) {
          const at = (py * this.width + px) * 4;
          this.data[at] = r;
          this.data[at + 1] = g;
          this.data[at + 2] = b;
          this.data[at + 3] = 255;
        }
      }
    }
  }
}

export function parseColor(color: string): [number, number, number] {
  const hex = /^#([0-9a-fA-F]{6})$/.exec(color.trim());
  if (hex) {
    const v = parseInt(hex[1], 16);
    return [(v >> 16) & 0xff, (v >> 8) & 0xff, v & 0xff];
  }
  if (color === "none") return [255, 255, 255];
  // a handful of names keeps hand-written scenes renderable
  const named: Record<string, [number, number, number]> = {
    black: [0, 0, 0],
    white: [255, 255, 255],
    red: [255, 0, 0],
    green: [0, 128, 0],
    blue: [0, 0, 255],
    gray: [128, 128, 128],
  };
  return named[color.toLowerCase()] ?? [0, 0, 0];
}

export function rasterizeItems(items: RenderItem[], width: number, height: number): Raster {
  const raster = new Raster(width, height);
  for (const item of items) {
    for (const poly of tessellate(item)) {
      raster.fillPolygon(poly.points, poly.color);
    }
  }
  return raster;
}

/** Fraction of pixels that differ beyond a small per-channel tolerance. */
export function pixelDiffRatio(a: Raster, b: Raster, channelTolerance = 8): number {
  if (a.width !== b.width || a.height !== b.height) return 1;
  let different = 0;
  const total = a.width * a.height;
  for (let i = 0; i < total; i++) {
    const at = i * 4;
    if (
      Math.abs(a.data[at] - b.data[at]) > channelTolerance ||
      Math.abs(a.data[at + 1] - b.data[at + 1]) > channelTolerance ||
      Math.abs(a.data[at + 2] - b.data[at + 2]) > channelTolerance
    ) {
      different++;
    }
  }
  return different / total;
}
