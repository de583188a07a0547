/** Parse the engine's SVG exports back into render items so the fidelity
 * tests can rasterize both sides through the same tessellation. Only the
 * exact element forms the exporter emits are recognized. */

import { RenderItem } from "./protocol.js";

function attr(tag: string, name: string): string | null {
  const match = new RegExp(`${name}="([^"]*)"`).exec(tag);
  return match ? match[1] : null;
}

function parsePoints(text: string): [number, number][] {
  return text
    .trim()
    .split(/\s+/)
    .map((pair) => {
      const [x, y] = pair.split(",").map(parseFloat);
      return [x, y] as [number, number];
    });
}

function color(value: string | null): string | null {
  return value === null || value === "none" ? null : value;
}

export function parseSvg(svg: string): RenderItem[] {
  const items: RenderItem[] = [];
  const tags = svg.match(/<(polygon|polyline|text|path)[^>]*(?:\/>|>[^<]*<\/text>)/g) ?? [];
  for (const tag of tags) {
    if (tag.startsWith("<polygon")) {
      items.push({
        kind: "polygon",
        points: parsePoints(attr(tag, "points") ?? ""),
        fill: color(attr(tag, "fill")),
        stroke: color(attr(tag, "stroke")),
        strokeWidth: parseFloat(attr(tag, "stroke-width") ?? "1"),
      });
    } else if (tag.startsWith("<polyline")) {
      items.push({
        kind: "polyline",
        points: parsePoints(attr(tag, "points") ?? ""),
        stroke: color(attr(tag, "stroke")),
        strokeWidth: parseFloat(attr(tag, "stroke-width") ?? "1"),
      });
    } else if (tag.startsWith("<text")) {
      const body = />([^<]*)</.exec(tag);
      const font = /font:([^"]*)/.exec(attr(tag, "style") ?? "");
      items.push({
        kind: "text",
        position: [parseFloat(attr(tag, "x") ?? "0"), parseFloat(attr(tag, "y") ?? "0")],
        text: (body ? body[1] : "")
          .replace(/&lt;/g, "<")
          .replace(/&gt;/g, ">")
          .replace(/&amp;/g, "&"),
        font: font ? font[1] : "12px sans-serif",
        color: color(attr(tag, "fill")),
      });
    } else {
      throw new Error(`fidelity parser does not handle: ${tag.slice(0, 60)}`);
    }
  }
  return items;
}
