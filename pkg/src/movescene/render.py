"""Render lists: the ordered drawing primitives derived from a scene.

A render list is a plain JSON-ready structure so any client (canvas, SVG,
test harness) can consume it. Item order equals the scene's paint order.
"""

from __future__ import annotations

import math

from .geometry import Point

# -- primitive constructors (plain dicts, JSON-ready) ------------------------


def polygon_prim(points: list[Point], fill=None, stroke=None, stroke_width: float = 1.0) -> dict:
    return {
        "kind": "polygon",
        "points": [[p.x, p.y] for p in points],
        "fill": fill,
        "stroke": stroke,
        "strokeWidth": stroke_width,
    }


def polyline_prim(points: list[Point], stroke, stroke_width: float = 1.0) -> dict:
    return {
        "kind": "polyline",
        "points": [[p.x, p.y] for p in points],
        "stroke": stroke,
        "strokeWidth": stroke_width,
    }


def arc_prim(
    center: Point,
    radius: float,
    start_angle: float = 0.0,
    sweep: float = 2.0 * math.pi,
    inner_radius: float | None = None,
    fill=None,
    stroke=None,
    stroke_width: float = 1.0,
) -> dict:
    return {
        "kind": "circleArc",
        "center": [center.x, center.y],
        "radius": radius,
        "startAngle": start_angle,
        "sweep": sweep,
        "innerRadius": inner_radius,
        "fill": fill,
        "stroke": stroke,
        "strokeWidth": stroke_width,
    }


def text_prim(position: Point, text: str, font: str, color) -> dict:
    return {
        "kind": "text",
        "position": [position.x, position.y],
        "text": text,
        "font": font,
        "color": color,
    }


PRIMITIVE_KINDS = ("polygon", "polyline", "circleArc", "text")


# -- render list --------------------------------------------------------------


def build_render_list(scene, pointer: Point | None = None) -> dict:
    """Drawing primitives for every visible element, in paint order.

    Pure function of the scene snapshot plus the pointer position (which
    only affects the cursor hint).
    """
    items: list[dict] = []
    for element_id in scene.mover.registry:
        element = scene.element_of(element_id)
        if not element.visible:
            continue
        for prim in element.draw_primitives():
            prim["elementId"] = element_id
            items.append(prim)
    cursor = scene.mover.cursor_hint(pointer) if pointer is not None else "default"
    return {"cursor": cursor, "items": items}


# -- SVG export (test/debug artifact, not a product feature) ------------------


def _svg_color(c) -> str:
    return "none" if c is None else str(c)


def _arc_path(center, radius, start_angle, sweep, inner_radius) -> str:
    cx, cy = center
    full = abs(sweep) >= 2.0 * math.pi - 1e-9

    def pt(r: float, a: float) -> tuple[float, float]:
        return (cx + r * math.cos(a), cy + r * math.sin(a))

    if full and not inner_radius:
        x0, y0 = pt(radius, 0.0)
        x1, y1 = pt(radius, math.pi)
        return (
            f"M {x0:.3f} {y0:.3f} "
            f"A {radius:.3f} {radius:.3f} 0 1 1 {x1:.3f} {y1:.3f} "
            f"A {radius:.3f} {radius:.3f} 0 1 1 {x0:.3f} {y0:.3f} Z"
        )
    a0 = start_angle
    a1 = start_angle + sweep
    large = 1 if abs(sweep) > math.pi else 0
    cw = 1 if sweep >= 0 else 0
    x0, y0 = pt(radius, a0)
    x1, y1 = pt(radius, a1)
    if inner_radius:
        xi1, yi1 = pt(inner_radius, a1)
        xi0, yi0 = pt(inner_radius, a0)
        return (
            f"M {x0:.3f} {y0:.3f} "
            f"A {radius:.3f} {radius:.3f} 0 {large} {cw} {x1:.3f} {y1:.3f} "
            f"L {xi1:.3f} {yi1:.3f} "
            f"A {inner_radius:.3f} {inner_radius:.3f} 0 {large} {1 - cw} {xi0:.3f} {yi0:.3f} Z"
        )
    return (
        f"M {cx:.3f} {cy:.3f} L {x0:.3f} {y0:.3f} "
        f"A {radius:.3f} {radius:.3f} 0 {large} {cw} {x1:.3f} {y1:.3f} Z"
    )


def render_list_to_svg(render_list: dict, width: int = 1024, height: int = 768) -> str:
    """Static SVG snapshot of a render list, for visual diffing."""
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    ]
    for item in render_list["items"]:
        kind = item["kind"]
        if kind == "polygon":
            pts = " ".join(f"{x:.3f},{y:.3f}" for x, y in item["points"])
            out.append(
                f'<polygon points="{pts}" fill="{_svg_color(item["fill"])}" '
                f'stroke="{_svg_color(item["stroke"])}" stroke-width="{item["strokeWidth"]}"/>'
            )
        elif kind == "polyline":
            pts = " ".join(f"{x:.3f},{y:.3f}" for x, y in item["points"])
            out.append(
                f'<polyline points="{pts}" fill="none" '
                f'stroke="{_svg_color(item["stroke"])}" stroke-width="{item["strokeWidth"]}"/>'
            )
        elif kind == "circleArc":
            d = _arc_path(
                item["center"], item["radius"], item["startAngle"], item["sweep"], item.get("innerRadius")
            )
            out.append(
                f'<path d="{d}" fill="{_svg_color(item["fill"])}" '
                f'stroke="{_svg_color(item["stroke"])}" stroke-width="{item["strokeWidth"]}"/>'
            )
        elif kind == "text":
            x, y = item["position"]
            safe = (
                str(item["text"])
                .replace("&", "&amp;")
                .replace("<", "&lt;")
                .replace(">", "&gt;")
            )
            out.append(
                f'<text x="{x:.3f}" y="{y:.3f}" fill="{_svg_color(item["color"])}" '
                f'style="font:{item["font"]}">{safe}</text>'
            )
    out.append("</svg>")
    return "\n".join(out)
