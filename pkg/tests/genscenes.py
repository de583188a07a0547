"""Deterministic random scenes and event scripts for property tests.

All generated coordinates land on a quarter-pixel grid (exactly
representable at the persistence rounding of 1e-6), so a save/load cycle
reproduces a freshly generated scene bit-exactly. Angles come from a
0.125-radian grid for the same reason.
"""

from __future__ import annotations

import math
import random

from movescene.elements import (
    CircleEl,
    CrescentEl,
    LineEl,
    PieEl,
    PieSlice,
    PolygonEl,
    PolylineEl,
    RectangleEl,
    RingEl,
    Sector,
    StripEl,
)
from movescene.geometry import Point, Rect
from movescene.groups import ControlEl, DominantGroup, ElasticGroup, GroupTitle
from movescene.plotting import CommentEl
from movescene.scene import Scene

COLORS = ("#c03030", "#3040c0", "#108050", "#c08020", "#6040a0", "#404040")


def q(v: float) -> float:
    return round(v * 4.0) / 4.0


def qpoint(rng: random.Random, x0=60.0, x1=700.0, y0=60.0, y1=500.0) -> Point:
    return Point(q(rng.uniform(x0, x1)), q(rng.uniform(y0, y1)))


def _convex_vertices(rng: random.Random, center: Point, radius: float, n: int) -> list[Point]:
    # well-separated angles on a circle stay convex after quarter-pixel snapping
    angles = sorted(rng.uniform(0, 2 * math.pi) for _ in range(n))
    while min(
        [(b - a) for a, b in zip(angles, angles[1:])] + [2 * math.pi - (angles[-1] - angles[0])]
    ) < 0.5:
        angles = sorted(rng.uniform(0, 2 * math.pi) for _ in range(n))
    return [
        Point(q(center.x + radius * math.cos(a)), q(center.y + radius * math.sin(a)))
        for a in angles
    ]


def random_element(rng: random.Random, element_id: str, kinds: tuple[str, ...] | None = None):
    kind = rng.choice(
        kinds
        or (
            "line",
            "polyline",
            "rect",
            "polygon",
            "convex_polygon",
            "circle",
            "sector_circle",
            "ring",
            "strip",
            "crescent",
            "pie",
            "control",
            "comment",
        )
    )
    color = rng.choice(COLORS)
    c = qpoint(rng)
    if kind == "line":
        return LineEl(element_id, c, qpoint(rng), stroke_color=color)
    if kind == "polyline":
        joints = [c]
        for _ in range(rng.randint(1, 4)):
            last = joints[-1]
            joints.append(Point(q(last.x + rng.uniform(20, 80)), q(last.y + rng.uniform(-60, 60))))
        return PolylineEl(element_id, joints, stroke_color=color)
    if kind == "rect":
        mode = rng.choice(("free", "symmetric", "fixedRatio"))
        w = q(rng.uniform(50, 160))
        if mode == "fixedRatio":
            # binary-exact ratios keep width/ratio on a byte-exact grid
            ratio = rng.choice((0.5, 1.0, 2.0, 4.0))
            h = w / ratio
        else:
            ratio = None
            h = q(rng.uniform(40, 120))
        partitions = sorted({q(rng.uniform(0.2, 0.8)) for _ in range(rng.randint(0, 2))})
        partitions = [p for p in partitions if 0.0 < p < 1.0]
        return RectangleEl(
            element_id,
            Rect(c.x, c.y, w, h),
            resize_mode=mode,
            ratio=ratio,
            partitions=partitions,
            min_size=16.0,
            fill_color=color,
        )
    if kind == "polygon":
        vs = [c]
        vs.append(Point(q(c.x + rng.uniform(50, 110)), q(c.y + rng.uniform(-20, 20))))
        vs.append(Point(q(c.x + rng.uniform(40, 90)), q(c.y + rng.uniform(45, 95))))
        if rng.random() < 0.5:
            vs.append(Point(q(c.x - rng.uniform(5, 30)), q(c.y + rng.uniform(40, 80))))
        return PolygonEl(element_id, vs, min_span=14.0, delete_on_collapse=rng.random() < 0.2, fill_color=color)
    if kind == "convex_polygon":
        vs = _convex_vertices(rng, c, q(rng.uniform(40, 75)), rng.randint(4, 6))
        return PolygonEl(element_id, vs, convex_only=True, min_span=14.0, regular=rng.random() < 0.25, fill_color=color)
    if kind == "circle":
        return CircleEl(element_id, c, q(rng.uniform(25, 60)), fill_color=color)
    if kind == "sector_circle":
        base = rng.randrange(0, 40) * 0.125
        count = rng.choice((2, 4, 5))  # 6.25/count keeps <= 6 exact decimals
        step = 6.25 / count
        sectors = [Sector((base + i * step) % 6.25, rng.choice(COLORS)) for i in range(count)]
        return CircleEl(element_id, c, q(rng.uniform(30, 60)), sectors=sectors)
    if kind == "ring":
        inner = q(rng.uniform(12, 25))
        outer = q(inner + rng.uniform(15, 35))
        return RingEl(element_id, c, inner, outer, fill_color=color)
    if kind == "strip":
        b = Point(q(c.x + rng.uniform(50, 140)), q(c.y + rng.uniform(-40, 40)))
        return StripEl(element_id, c, b, q(rng.uniform(8, 18)), fill_color=color)
    if kind == "crescent":
        outer_r = q(rng.uniform(35, 60))
        gap = q(rng.uniform(10, outer_r * 0.5))
        inner_c = Point(q(c.x + gap), c.y)
        inner_r = q(outer_r - gap / 2.0)
        return CrescentEl(element_id, c, outer_r, inner_c, inner_r, fill_color=color)
    if kind == "pie":
        count = rng.randint(2, 4)
        sweep = 0.125 * rng.randint(8, int(6.25 / 0.125) // count)
        start = 0.125 * rng.randrange(0, 8)
        slices = [
            PieSlice(
                start_angle=(start + i * sweep) % 6.25,
                sweep=sweep,
                radius=q(rng.uniform(30, 60)),
                color=rng.choice(COLORS),
                apart_offset=rng.choice((0.0, 0.0, 6.0, 10.0)),
            )
            for i in range(count)
        ]
        return PieEl(element_id, c, slices)
    if kind == "control":
        return ControlEl(element_id, Rect(c.x, c.y, q(rng.uniform(60, 140)), q(rng.uniform(22, 60))), caption="ctl")
    return CommentEl(element_id, c, "note", stroke_color=color)


def random_scene(
    rng: random.Random,
    n_elements: int = 5,
    with_groups: bool = True,
    kinds: tuple[str, ...] | None = None,
) -> Scene:
    scene = Scene()
    ids = []
    for i in range(n_elements):
        element = random_element(rng, f"g-el-{i}", kinds)
        scene.add_element(element)
        ids.append(element.element_id)
    if with_groups and n_elements >= 3 and rng.random() < 0.7:
        members = ids[: rng.randint(2, min(3, n_elements))]
        group = ElasticGroup("g-group-0", members, title=GroupTitle("Group"))
        scene.add_element(group)
        indices = [scene.mover.registry.index(cid) for cid in members]
        scene.set_z_order("g-group-0", min(indices))
    if with_groups and n_elements >= 5 and rng.random() < 0.5:
        dominant = scene.element_of(ids[-2])
        sub = scene.element_of(ids[-1])
        scene.add_constraint(DominantGroup.capture_offsets("g-dom-0", dominant, [sub]))
    return scene


def random_press_point(rng: random.Random, scene: Scene) -> Point:
    """Mostly aimed at elements, sometimes wild."""
    if scene.mover.registry and rng.random() < 0.75:
        eid = rng.choice(scene.mover.registry)
        b = scene.element_of(eid).bounds()
        pad = 8.0
        return Point(
            float(rng.randint(int(b.left - pad), int(b.right + pad))),
            float(rng.randint(int(b.top - pad), int(b.bottom + pad))),
        )
    return Point(float(rng.randint(0, 800)), float(rng.randint(0, 560)))


def random_script(rng: random.Random, scene: Scene, n_events: int, commands: bool = True) -> str:
    """A well-nested script of integer-coordinate pointer events plus an
    occasional visibility/z-order/color command."""
    lines: list[str] = []
    grabbed = False
    ids = list(scene.mover.registry)
    elastic_ids = [e for e in ids if isinstance(scene.elements.get(e), ElasticGroup)]
    while len(lines) < n_events:
        if grabbed:
            roll = rng.random()
            if roll < 0.75:
                dx = rng.randint(-25, 25)
                dy = rng.randint(-25, 25)
                lines.append(f"move {last[0] + dx} {last[1] + dy}")
                last = (last[0] + dx, last[1] + dy)
            else:
                lines.append("up")
                grabbed = False
        else:
            roll = rng.random()
            if commands and roll < 0.12 and ids:
                eid = rng.choice(ids)
                cmd = rng.choice(("hide", "show", "zorder", "setColor", "moveTitle"))
                if cmd == "hide":
                    lines.append(f"command hide {eid}")
                elif cmd == "show":
                    lines.append(f"command show {eid}")
                elif cmd == "zorder":
                    lines.append(f"command zorder {eid} {rng.choice(('top', 'bottom'))}")
                elif cmd == "setColor":
                    lines.append(f"command setColor {eid} {rng.choice(COLORS)}")
                elif elastic_ids:
                    lines.append(f"command moveTitle {rng.choice(elastic_ids)} {rng.random():.2f}")
                else:
                    continue
            else:
                p = random_press_point(rng, scene)
                button = "right" if rng.random() < 0.2 else "left"
                lines.append(f"down {int(p.x)} {int(p.y)} {button}")
                last = (int(p.x), int(p.y))
                grabbed = True
    if grabbed:
        lines.append("up")
    return "\n".join(lines) + "\n"
