"""The shape bestiary. Every shape implements the movable-element contract:

    define_cover(settings) -> Cover     sensitive areas for the mover
    move_whole(dx, dy) -> bool          translate all defining points exactly
    move_node(node_id, dx, dy, p, b)    node-specific reshape / rotation
    rotate_whole(center, delta)         isometric rotation (where supported)
    bounds() / draw_primitives()        derived views of current geometry

Constraint violations reject the delta (move_node returns False and leaves
geometry untouched); the one exception is rectangle minimum size, which
clamps. Rotation is driven by the right button through move_node.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cover import (
    Cover,
    CoverBuilder,
    CURSOR_HAND,
    CURSOR_MOVE,
    CURSOR_SIZE_H,
    CURSOR_SIZE_NESW,
    CURSOR_SIZE_NWSE,
    CURSOR_SIZE_V,
    MOVE_WHOLE,
    RECONFIGURE,
    RESIZE,
)
from .geometry import (
    Point,
    Rect,
    TWO_PI,
    distance,
    distance_point_to_segment,
    is_convex,
    max_pairwise_distance,
    normalize_angle,
    point_in_polygon,
    points_bounds,
    polygon_centroid,
    rotate_about,
)
from .mover import RIGHT, angular_delta
from .render import arc_prim, polygon_prim, polyline_prim

# Minimum angular gap between neighbouring sector partitions.
MIN_SECTOR_GAP = 1e-4
# Partitions inside rectangles keep at least this fraction of width apart.
MIN_PARTITION_GAP = 1e-3


@dataclass(frozen=True)
class CoverSettings:
    """Per-scene grab tolerances."""

    handle_radius: float = 5.0
    strip_half_width: float = 3.0


def _dir(angle: float) -> tuple[float, float]:
    return (math.cos(angle), math.sin(angle))


def _arc_points(center: Point, radius: float, a0: float, sweep: float, n: int) -> list[Point]:
    pts = []
    for i in range(n + 1):
        a = a0 + sweep * i / n
        pts.append(Point(center.x + radius * math.cos(a), center.y + radius * math.sin(a)))
    return pts


class MovableElement:
    """Base contract shared by all shapes, controls and groups."""

    type_tag = ""
    supports_rotation = False
    raises_on_catch = True

    def __init__(
        self,
        element_id: str,
        fill_color: str | None = None,
        stroke_color: str = "#202020",
        stroke_width: float = 1.0,
        visible: bool = True,
    ):
        self.element_id = element_id
        self.fill_color = fill_color
        self.stroke_color = stroke_color
        self.stroke_width = float(stroke_width)
        self.visible = visible
        self.collapsed = False  # set when a squeeze-to-delete shape collapses
        self.resolver = None  # injected by the scene for cross-element lookups

    # -- contract ------------------------------------------------------------

    def define_cover(self, settings: CoverSettings) -> Cover:
        raise NotImplementedError

    def bounds(self) -> Rect:
        raise NotImplementedError

    def draw_primitives(self) -> list[dict]:
        raise NotImplementedError

    def move_whole(self, dx: float, dy: float) -> bool:
        raise NotImplementedError

    def rotation_center(self) -> Point:
        return self.bounds().center

    def rotate_whole(self, about: Point, delta: float) -> None:
        raise NotImplementedError(f"{self.type_tag} does not rotate")

    def move_node(self, node_id: int, dx: float, dy: float, p: Point, button: str) -> bool:
        if button == RIGHT:
            if not self.supports_rotation:
                return False
            c = self.rotation_center()
            delta = angular_delta(c, Point(p.x - dx, p.y - dy), p)
            if delta == 0.0:
                return False
            self.rotate_whole(c, delta)
            return True
        return self._reshape(node_id, dx, dy, p)

    def _reshape(self, node_id: int, dx: float, dy: float, p: Point) -> bool:
        raise NotImplementedError

    def apply_style(self, color: str | None = None, font: str | None = None) -> None:
        if color is not None:
            self.stroke_color = color
        if font is not None and hasattr(self, "font"):
            self.font = font

    # -- persistence ----------------------------------------------------------

    def visual_record(self) -> dict:
        return {
            "fillColor": self.fill_color,
            "strokeColor": self.stroke_color,
            "strokeWidth": self.stroke_width,
        }

    def base_record(self) -> dict:
        return {
            "id": self.element_id,
            "type": self.type_tag,
            "visible": self.visible,
            "visual": self.visual_record(),
        }

    def _load_visual(self, record: dict) -> None:
        visual = record["visual"]
        self.fill_color = visual["fillColor"]
        self.stroke_color = visual["strokeColor"]
        self.stroke_width = visual["strokeWidth"]
        self.visible = record["visible"]


# -- line ---------------------------------------------------------------------


class LineEl(MovableElement):
    """A segment: endpoints reconfigure, any inner point moves, right rotates
    about the midpoint."""

    type_tag = "line"
    supports_rotation = True

    def __init__(self, element_id: str, a: Point, b: Point, **visual):
        super().__init__(element_id, **visual)
        self.a = a
        self.b = b

    def define_cover(self, settings: CoverSettings) -> Cover:
        cb = CoverBuilder()
        cb.circle(self.a, settings.handle_radius, RECONFIGURE, CURSOR_HAND)
        cb.circle(self.b, settings.handle_radius, RECONFIGURE, CURSOR_HAND)
        cb.strip(self.a, self.b, settings.strip_half_width, MOVE_WHOLE, CURSOR_MOVE)
        return cb.build()

    def bounds(self) -> Rect:
        return points_bounds([self.a, self.b])

    def rotation_center(self) -> Point:
        return Point((self.a.x + self.b.x) / 2.0, (self.a.y + self.b.y) / 2.0)

    def move_whole(self, dx: float, dy: float) -> bool:
        if dx == 0.0 and dy == 0.0:
            return False
        self.a = self.a.moved(dx, dy)
        self.b = self.b.moved(dx, dy)
        return True

    def rotate_whole(self, about: Point, delta: float) -> None:
        self.a = rotate_about(self.a, about, delta)
        self.b = rotate_about(self.b, about, delta)

    def _reshape(self, node_id: int, dx: float, dy: float, p: Point) -> bool:
        if node_id == 0:
            self.a = self.a.moved(dx, dy)
        elif node_id == 1:
            self.b = self.b.moved(dx, dy)
        else:
            return False
        return dx != 0.0 or dy != 0.0

    def body_contains(self, p: Point) -> bool:
        return distance_point_to_segment(p, self.a, self.b) <= max(self.stroke_width / 2.0, 0.5)

    def draw_primitives(self) -> list[dict]:
        return [polyline_prim([self.a, self.b], self.stroke_color, self.stroke_width)]

    def to_record(self) -> dict:
        rec = self.base_record()
        rec["a"] = [self.a.x, self.a.y]
        rec["b"] = [self.b.x, self.b.y]
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> LineEl:
        el = cls(rec["id"], Point(*rec["a"]), Point(*rec["b"]))
        el._load_visual(rec)
        return el


# -- polyline -------------------------------------------------------------------


class PolylineEl(MovableElement):
    """Open chain of joints, each movable independently; the rotation center
    is itself a movable point."""

    type_tag = "polyline"
    supports_rotation = True

    def __init__(self, element_id: str, joints: list[Point], center: Point | None = None, **visual):
        super().__init__(element_id, **visual)
        if len(joints) < 2:
            raise ValueError("polyline needs >= 2 joints")
        self.joints = list(joints)
        if center is None:
            n = float(len(joints))
            center = Point(sum(j.x for j in joints) / n, sum(j.y for j in joints) / n)
        self.center = center

    def define_cover(self, settings: CoverSettings) -> Cover:
        cb = CoverBuilder()
        for j in self.joints:
            cb.circle(j, settings.handle_radius, RECONFIGURE, CURSOR_HAND)
        cb.circle(self.center, settings.handle_radius, RECONFIGURE, CURSOR_HAND)
        for a, b in zip(self.joints, self.joints[1:]):
            cb.strip(a, b, settings.strip_half_width, MOVE_WHOLE, CURSOR_MOVE)
        return cb.build()

    def bounds(self) -> Rect:
        return points_bounds(self.joints)

    def rotation_center(self) -> Point:
        return self.center

    def move_whole(self, dx: float, dy: float) -> bool:
        if dx == 0.0 and dy == 0.0:
            return False
        self.joints = [j.moved(dx, dy) for j in self.joints]
        self.center = self.center.moved(dx, dy)
        return True

    def rotate_whole(self, about: Point, delta: float) -> None:
        self.joints = [rotate_about(j, about, delta) for j in self.joints]
        if about != self.center:
            self.center = rotate_about(self.center, about, delta)

    def _reshape(self, node_id: int, dx: float, dy: float, p: Point) -> bool:
        if node_id < len(self.joints):
            self.joints[node_id] = self.joints[node_id].moved(dx, dy)
        elif node_id == len(self.joints):
            self.center = self.center.moved(dx, dy)
        else:
            return False
        return dx != 0.0 or dy != 0.0

    def insert_joint(self, segment_index: int, p: Point) -> None:
        if not 0 <= segment_index < len(self.joints) - 1:
            raise IndexError(f"segment {segment_index} out of range")
        self.joints.insert(segment_index + 1, p)

    def delete_joint(self, joint_index: int) -> None:
        if not 0 <= joint_index < len(self.joints):
            raise IndexError(f"joint {joint_index} out of range")
        if len(self.joints) <= 2:
            raise ValueError("polyline keeps at least 2 joints")
        del self.joints[joint_index]

    def body_contains(self, p: Point) -> bool:
        tol = max(self.stroke_width / 2.0, 0.5)
        return any(
            distance_point_to_segment(p, a, b) <= tol
            for a, b in zip(self.joints, self.joints[1:])
        )

    def draw_primitives(self) -> list[dict]:
        prims = [polyline_prim(self.joints, self.stroke_color, self.stroke_width)]
        for j in self.joints:
            prims.append(arc_prim(j, 2.5, fill=self.stroke_color))
        prims.append(arc_prim(self.center, 2.5, stroke=self.stroke_color))
        return prims

    def to_record(self) -> dict:
        rec = self.base_record()
        rec["joints"] = [[j.x, j.y] for j in self.joints]
        rec["rotationCenter"] = [self.center.x, self.center.y]
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> PolylineEl:
        el = cls(rec["id"], [Point(*j) for j in rec["joints"]], Point(*rec["rotationCenter"]))
        el._load_visual(rec)
        return el


# -- rectangle -------------------------------------------------------------------


RESIZE_FREE = "free"
RESIZE_FIXED_RATIO = "fixedRatio"
RESIZE_SYMMETRIC = "symmetric"
RESIZE_MODES = (RESIZE_FREE, RESIZE_FIXED_RATIO, RESIZE_SYMMETRIC)


class RectangleEl(MovableElement):
    """Axis-aligned rectangle: moved by any inner point, resized by border.

    resize_mode picks the side effect of a border drag: independent sides,
    fixed width/height ratio, or symmetric opposite sides. Vertical inner
    partitions (fractions of the width) are draggable. Minimum size clamps
    rather than rejects.
    """

    type_tag = "rect"

    def __init__(
        self,
        element_id: str,
        rect: Rect,
        resize_mode: str = RESIZE_FREE,
        ratio: float | None = None,
        partitions: list[float] | None = None,
        min_size: float = 8.0,
        **visual,
    ):
        super().__init__(element_id, **visual)
        if resize_mode not in RESIZE_MODES:
            raise ValueError(f"unknown resize mode {resize_mode!r}")
        self.rect = rect
        self.resize_mode = resize_mode
        if resize_mode == RESIZE_FIXED_RATIO:
            self.ratio = float(ratio) if ratio is not None else rect.width / rect.height
        else:
            self.ratio = None
        parts = list(partitions or [])
        if any(not 0.0 < f < 1.0 for f in parts) or any(
            b - a < MIN_PARTITION_GAP for a, b in zip(parts, parts[1:])
        ):
            raise ValueError("partitions must be strictly increasing fractions in (0,1)")
        self.partitions = [float(f) for f in parts]
        self.min_size = float(min_size)

    # node ids: 0..3 corners NW NE SE SW, 4..7 edges N S W E,
    # 8..8+P-1 partitions, then the body.
    def define_cover(self, settings: CoverSettings) -> Cover:
        cb = CoverBuilder()
        r = self.rect
        nw, ne, se, sw = r.corners()
        cb.circle(nw, settings.handle_radius, RESIZE, CURSOR_SIZE_NWSE)
        cb.circle(ne, settings.handle_radius, RESIZE, CURSOR_SIZE_NESW)
        cb.circle(se, settings.handle_radius, RESIZE, CURSOR_SIZE_NWSE)
        cb.circle(sw, settings.handle_radius, RESIZE, CURSOR_SIZE_NESW)
        cb.strip(nw, ne, settings.strip_half_width, RESIZE, CURSOR_SIZE_V)
        cb.strip(sw, se, settings.strip_half_width, RESIZE, CURSOR_SIZE_V)
        cb.strip(nw, sw, settings.strip_half_width, RESIZE, CURSOR_SIZE_H)
        cb.strip(ne, se, settings.strip_half_width, RESIZE, CURSOR_SIZE_H)
        for f in self.partitions:
            x = r.left + f * r.width
            cb.strip(Point(x, r.top), Point(x, r.bottom), settings.strip_half_width, RECONFIGURE, CURSOR_SIZE_H)
        cb.polygon(r.corners(), MOVE_WHOLE, CURSOR_MOVE)
        return cb.build()

    def bounds(self) -> Rect:
        return self.rect

    def move_whole(self, dx: float, dy: float) -> bool:
        if dx == 0.0 and dy == 0.0:
            return False
        self.rect = self.rect.moved(dx, dy)
        return True

    def _min_w(self) -> float:
        if self.resize_mode == RESIZE_FIXED_RATIO:
            return max(self.min_size, self.min_size * self.ratio)
        return self.min_size

    def _apply_edges(self, left: float, top: float, right: float, bottom: float) -> bool:
        if self.resize_mode == RESIZE_FIXED_RATIO:
            # width drives; height follows to hold the declared ratio
            bottom = top + (right - left) / self.ratio
        new = Rect(left, top, right - left, bottom - top)
        if new == self.rect:
            return False
        self.rect = new
        return True

    def _reshape(self, node_id: int, dx: float, dy: float, p: Point) -> bool:
        r = self.rect
        left, top, right, bottom = r.left, r.top, r.right, r.bottom
        min_w = self._min_w()
        min_h = self.min_size
        part_base = 8
        if part_base <= node_id < part_base + len(self.partitions):
            return self._drag_partition(node_id - part_base, dx)
        if node_id > part_base + len(self.partitions):
            return False

        sym = self.resize_mode == RESIZE_SYMMETRIC
        moves = {
            0: ("W", "N"),
            1: ("E", "N"),
            2: ("E", "S"),
            3: ("W", "S"),
            4: (None, "N"),
            5: (None, "S"),
            6: ("W", None),
            7: ("E", None),
        }[node_id]
        h_side, v_side = moves
        if h_side == "W":
            left = left + dx
            if sym:
                right = right - dx
        elif h_side == "E":
            right = right + dx
            if sym:
                left = left - dx
        if v_side == "N":
            top = top + dy
            if sym:
                bottom = bottom - dy
        elif v_side == "S":
            bottom = bottom + dy
            if sym:
                top = top - dy

        # clamp to minimum size, anchored on the untouched side (or center)
        if right - left < min_w:
            if sym:
                cx = (left + right) / 2.0
                left, right = cx - min_w / 2.0, cx + min_w / 2.0
            elif h_side == "W":
                left = right - min_w
            else:
                right = left + min_w
        if bottom - top < min_h:
            if sym:
                cy = (top + bottom) / 2.0
                top, bottom = cy - min_h / 2.0, cy + min_h / 2.0
            elif v_side == "N":
                top = bottom - min_h
            else:
                bottom = top + min_h
        return self._apply_edges(left, top, right, bottom)

    def _drag_partition(self, index: int, dx: float) -> bool:
        r = self.rect
        if r.width <= 0:
            return False
        f = self.partitions[index]
        candidate = f + dx / r.width
        low = (self.partitions[index - 1] if index > 0 else 0.0) + MIN_PARTITION_GAP
        high = (self.partitions[index + 1] if index + 1 < len(self.partitions) else 1.0) - MIN_PARTITION_GAP
        candidate = min(max(candidate, low), high)
        if candidate == f:
            return False
        self.partitions[index] = candidate
        return True

    def body_contains(self, p: Point) -> bool:
        return self.rect.contains(p)

    def draw_primitives(self) -> list[dict]:
        prims = [polygon_prim(self.rect.corners(), self.fill_color, self.stroke_color, self.stroke_width)]
        for f in self.partitions:
            x = self.rect.left + f * self.rect.width
            prims.append(
                polyline_prim(
                    [Point(x, self.rect.top), Point(x, self.rect.bottom)],
                    self.stroke_color,
                    self.stroke_width,
                )
            )
        return prims

    def to_record(self) -> dict:
        rec = self.base_record()
        r = self.rect
        rec["rect"] = [r.left, r.top, r.width, r.height]
        rec["resizeMode"] = self.resize_mode
        rec["ratio"] = self.ratio
        rec["partitions"] = list(self.partitions)
        rec["minSize"] = self.min_size
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> RectangleEl:
        el = cls(
            rec["id"],
            Rect(*rec["rect"]),
            resize_mode=rec["resizeMode"],
            ratio=rec["ratio"],
            partitions=rec["partitions"],
            min_size=rec["minSize"],
        )
        el._load_visual(rec)
        return el


# -- polygon ---------------------------------------------------------------------


class PolygonEl(MovableElement):
    """Solid or holed polygon. Can be locked convex, given a minimum span to
    prevent accidental disappearance, or marked to delete itself when squeezed
    below that span. Regular polygons resize uniformly from their centroid."""

    type_tag = "polygon"
    supports_rotation = True

    def __init__(
        self,
        element_id: str,
        vertices: list[Point],
        hole: list[Point] | None = None,
        convex_only: bool = False,
        min_span: float = 12.0,
        delete_on_collapse: bool = False,
        regular: bool = False,
        validate: bool = True,
        **visual,
    ):
        super().__init__(element_id, **visual)
        if len(vertices) < 3:
            raise ValueError("polygon needs >= 3 vertices")
        if validate and convex_only and not is_convex(vertices):
            raise ValueError("convex-locked polygon constructed non-convex")
        self.vertices = list(vertices)
        self.hole = list(hole) if hole else None
        if validate and self.hole is not None and not self._hole_ok(self.vertices, self.hole):
            raise ValueError("hole must lie strictly inside the outer boundary")
        self.convex_only = convex_only
        self.min_span = float(min_span)
        self.delete_on_collapse = delete_on_collapse
        self.regular = regular

    @staticmethod
    def _hole_ok(outer: list[Point], hole: list[Point]) -> bool:
        if len(hole) < 3:
            return False
        n = len(outer)
        for hv in hole:
            if not point_in_polygon(hv, outer):
                return False
            for i in range(n):
                if distance_point_to_segment(hv, outer[i], outer[(i + 1) % n]) <= 1e-6:
                    return False
        return True

    # node ids: 0..V-1 outer vertices, V..V+H-1 hole vertices, then the body.
    def define_cover(self, settings: CoverSettings) -> Cover:
        cb = CoverBuilder()
        for v in self.vertices:
            cb.circle(v, settings.handle_radius, RECONFIGURE, CURSOR_HAND)
        for hv in self.hole or []:
            cb.circle(hv, settings.handle_radius, RECONFIGURE, CURSOR_HAND)
        cb.polygon(self.vertices, MOVE_WHOLE, CURSOR_MOVE)
        return cb.build()

    def bounds(self) -> Rect:
        return points_bounds(self.vertices)

    def rotation_center(self) -> Point:
        return polygon_centroid(self.vertices)

    def move_whole(self, dx: float, dy: float) -> bool:
        if dx == 0.0 and dy == 0.0:
            return False
        self.vertices = [v.moved(dx, dy) for v in self.vertices]
        if self.hole is not None:
            self.hole = [v.moved(dx, dy) for v in self.hole]
        return True

    def rotate_whole(self, about: Point, delta: float) -> None:
        self.vertices = [rotate_about(v, about, delta) for v in self.vertices]
        if self.hole is not None:
            self.hole = [rotate_about(v, about, delta) for v in self.hole]

    def _accept_outer(self, candidate: list[Point]) -> bool:
        if self.convex_only and not is_convex(candidate):
            return False
        span = max_pairwise_distance(candidate)
        if span < self.min_span:
            if not self.delete_on_collapse:
                return False
            self.vertices = candidate
            self.collapsed = True
            return True
        if self.hole is not None and not self._hole_ok(candidate, self.hole):
            return False
        self.vertices = candidate
        return True

    def _reshape(self, node_id: int, dx: float, dy: float, p: Point) -> bool:
        nv = len(self.vertices)
        if node_id < nv:
            if dx == 0.0 and dy == 0.0:
                return False
            if self.regular:
                # uniform resize about the centroid via any vertex handle
                c = polygon_centroid(self.vertices)
                ref = distance(Point(p.x - dx, p.y - dy), c)
                if ref < 1e-9:
                    return False
                factor = distance(p, c) / ref
                if factor <= 0.0 or factor == 1.0:
                    return False
                candidate = [
                    Point(c.x + (v.x - c.x) * factor, c.y + (v.y - c.y) * factor)
                    for v in self.vertices
                ]
            else:
                candidate = list(self.vertices)
                candidate[node_id] = candidate[node_id].moved(dx, dy)
            return self._accept_outer(candidate)
        hole = self.hole or []
        if node_id < nv + len(hole):
            candidate_hole = list(hole)
            candidate_hole[node_id - nv] = candidate_hole[node_id - nv].moved(dx, dy)
            if not self._hole_ok(self.vertices, candidate_hole):
                return False
            self.hole = candidate_hole
            return dx != 0.0 or dy != 0.0
        return False

    def body_contains(self, p: Point) -> bool:
        if not point_in_polygon(p, self.vertices):
            return False
        if self.hole is not None and point_in_polygon(p, self.hole):
            # being exactly on the hole edge still counts as body
            n = len(self.hole)
            on_edge = any(
                distance_point_to_segment(p, self.hole[i], self.hole[(i + 1) % n]) <= 1e-9
                for i in range(n)
            )
            return on_edge
        return True

    def draw_primitives(self) -> list[dict]:
        prims = [polygon_prim(self.vertices, self.fill_color, self.stroke_color, self.stroke_width)]
        if self.hole is not None:
            prims.append(polygon_prim(self.hole, "#ffffff", self.stroke_color, self.stroke_width))
        return prims

    def to_record(self) -> dict:
        rec = self.base_record()
        rec["vertices"] = [[v.x, v.y] for v in self.vertices]
        rec["hole"] = [[v.x, v.y] for v in self.hole] if self.hole is not None else None
        rec["convexOnly"] = self.convex_only
        rec["minSpanPixels"] = self.min_span
        rec["deleteOnCollapse"] = self.delete_on_collapse
        rec["regular"] = self.regular
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> PolygonEl:
        # validation is skipped: 1e-6 rounding of a persisted near-degenerate
        # state must never make a saved scene unloadable
        el = cls(
            rec["id"],
            [Point(*v) for v in rec["vertices"]],
            hole=[Point(*v) for v in rec["hole"]] if rec["hole"] else None,
            convex_only=rec["convexOnly"],
            min_span=rec["minSpanPixels"],
            delete_on_collapse=rec["deleteOnCollapse"],
            regular=rec["regular"],
            validate=False,
        )
        el._load_visual(rec)
        return el


# -- circle / semicircle -----------------------------------------------------------


@dataclass
class Sector:
    start_angle: float
    color: str

    def __post_init__(self) -> None:
        self.start_angle = normalize_angle(float(self.start_angle))


def _sector_angles_valid(angles: list[float]) -> bool:
    """Partition boundaries must stay strictly ordered once around the circle."""
    n = len(angles)
    if n <= 1:
        return True
    total = 0.0
    for i in range(n):
        gap = normalize_angle(angles[(i + 1) % n] - angles[i])
        if gap < MIN_SECTOR_GAP:
            return False
        total += gap
    return abs(total - TWO_PI) < 1e-9


def _drag_sector_partition(angles: list[float], index: int, delta: float) -> float | None:
    """New angle for one dragged partition, or None when the sweep would pass
    over (or land on) another partition. Checks the swept arc itself, since
    with two partitions positions alone cannot reveal a crossing."""
    if abs(delta) >= TWO_PI:
        return None
    old = angles[index]
    candidate = normalize_angle(old + delta)
    for i, other in enumerate(angles):
        if i == index:
            continue
        if delta > 0:
            swept = normalize_angle(other - old)
        else:
            swept = normalize_angle(old - other)
        if swept <= abs(delta) + MIN_SECTOR_GAP:
            return None
    trial = list(angles)
    trial[index] = candidate
    if not _sector_angles_valid(trial):
        return None
    return candidate


class CircleEl(MovableElement):
    """Disk, optionally split into colored sectors with draggable partitions,
    or clipped to a semicircle (half=True, dome facing half_dir)."""

    type_tag = "circle"
    supports_rotation = True

    def __init__(
        self,
        element_id: str,
        center: Point,
        radius: float,
        sectors: list[Sector] | None = None,
        half: bool = False,
        half_dir: float = 1.5 * math.pi,
        **visual,
    ):
        super().__init__(element_id, **visual)
        if radius <= 0:
            raise ValueError("circle radius must be > 0")
        self.center = center
        self.radius = float(radius)
        self.sectors = list(sectors or [])
        if self.sectors and half:
            raise ValueError("semicircles do not support sectors")
        if self.sectors and not _sector_angles_valid([s.start_angle for s in self.sectors]):
            raise ValueError("sector angles must be strictly increasing around the circle")
        self.half = half
        self.half_dir = normalize_angle(half_dir)

    def _chord(self) -> tuple[Point, Point]:
        ux, uy = _dir(self.half_dir)
        px, py = -uy, ux
        return (
            Point(self.center.x - px * self.radius, self.center.y - py * self.radius),
            Point(self.center.x + px * self.radius, self.center.y + py * self.radius),
        )

    def _half_polygon(self, radius: float, n: int = 24) -> list[Point]:
        return _arc_points(self.center, radius, self.half_dir - math.pi / 2.0, math.pi, n)

    # full circle node ids: partitions, body disk, border disk.
    # semicircle: chord strip, body polygon, border polygon.
    def define_cover(self, settings: CoverSettings) -> Cover:
        cb = CoverBuilder()
        sw = settings.strip_half_width
        if self.half:
            a, b = self._chord()
            cb.strip(a, b, sw, MOVE_WHOLE, CURSOR_MOVE)
            cb.polygon(self._half_polygon(max(self.radius - sw, 0.25)), MOVE_WHOLE, CURSOR_MOVE)
            outer = self._half_polygon(self.radius + sw)
            ux, uy = _dir(self.half_dir)
            outer = outer + [
                Point(outer[-1].x - ux * sw, outer[-1].y - uy * sw),
                Point(outer[0].x - ux * sw, outer[0].y - uy * sw),
            ]
            cb.polygon(outer, RESIZE, CURSOR_HAND)
            return cb.build()
        for s in self.sectors:
            ux, uy = _dir(s.start_angle)
            rim = Point(self.center.x + ux * self.radius, self.center.y + uy * self.radius)
            cb.strip(self.center, rim, sw, RECONFIGURE, CURSOR_HAND)
        cb.circle(self.center, max(self.radius - sw, 0.25), MOVE_WHOLE, CURSOR_MOVE)
        cb.circle(self.center, self.radius + sw, RESIZE, CURSOR_HAND)
        return cb.build()

    def bounds(self) -> Rect:
        if self.half:
            return points_bounds(self._half_polygon(self.radius))
        return Rect(self.center.x - self.radius, self.center.y - self.radius, 2 * self.radius, 2 * self.radius)

    def rotation_center(self) -> Point:
        return self.center

    def move_whole(self, dx: float, dy: float) -> bool:
        if dx == 0.0 and dy == 0.0:
            return False
        self.center = self.center.moved(dx, dy)
        return True

    def rotate_whole(self, about: Point, delta: float) -> None:
        if about != self.center:
            self.center = rotate_about(self.center, about, delta)
        for s in self.sectors:
            s.start_angle = normalize_angle(s.start_angle + delta)
        if self.half:
            self.half_dir = normalize_angle(self.half_dir + delta)

    def _reshape(self, node_id: int, dx: float, dy: float, p: Point) -> bool:
        if self.half:
            if node_id == 2:  # roof drag: any point of the arc sets the radius
                r = distance(p, self.center)
                if r < 1.0 or r == self.radius:
                    return False
                self.radius = r
                return True
            return False
        ns = len(self.sectors)
        if node_id < ns:
            before = Point(p.x - dx, p.y - dy)
            delta = angular_delta(self.center, before, p)
            if delta == 0.0:
                return False
            angles = [s.start_angle for s in self.sectors]
            candidate = _drag_sector_partition(angles, node_id, delta)
            if candidate is None:
                return False
            self.sectors[node_id].start_angle = candidate
            return True
        if node_id == ns + 1:  # border drag
            r = distance(p, self.center)
            if r < 1.0 or r == self.radius:
                return False
            self.radius = r
            return True
        return False

    def body_contains(self, p: Point) -> bool:
        if distance(p, self.center) > self.radius:
            return False
        if self.half:
            ux, uy = _dir(self.half_dir)
            return (p.x - self.center.x) * ux + (p.y - self.center.y) * uy >= -1e-9
        return True

    def draw_primitives(self) -> list[dict]:
        if self.half:
            return [polygon_prim(self._half_polygon(self.radius), self.fill_color, self.stroke_color, self.stroke_width)]
        if not self.sectors:
            return [arc_prim(self.center, self.radius, fill=self.fill_color, stroke=self.stroke_color, stroke_width=self.stroke_width)]
        prims = []
        n = len(self.sectors)
        for i, s in enumerate(self.sectors):
            sweep = normalize_angle(self.sectors[(i + 1) % n].start_angle - s.start_angle)
            if n == 1:
                sweep = TWO_PI
            prims.append(
                arc_prim(self.center, self.radius, s.start_angle, sweep, fill=s.color, stroke=self.stroke_color, stroke_width=self.stroke_width)
            )
        return prims

    def to_record(self) -> dict:
        rec = self.base_record()
        rec["center"] = [self.center.x, self.center.y]
        rec["radius"] = self.radius
        rec["sectors"] = [{"startAngle": s.start_angle, "color": s.color} for s in self.sectors] or None
        rec["half"] = self.half
        rec["halfDir"] = self.half_dir
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> CircleEl:
        sectors = [Sector(s["startAngle"], s["color"]) for s in rec["sectors"]] if rec["sectors"] else None
        el = cls(rec["id"], Point(*rec["center"]), rec["radius"], sectors, half=rec["half"], half_dir=rec["halfDir"])
        el._load_visual(rec)
        return el


# -- ring -----------------------------------------------------------------------


class RingEl(MovableElement):
    """Annulus with independent inner/outer border resizing and optional
    movable sector partitions."""

    type_tag = "ring"
    supports_rotation = True

    def __init__(
        self,
        element_id: str,
        center: Point,
        inner_radius: float,
        outer_radius: float,
        sectors: list[Sector] | None = None,
        **visual,
    ):
        super().__init__(element_id, **visual)
        if not 0 < inner_radius < outer_radius:
            raise ValueError("ring needs 0 < inner radius < outer radius")
        self.center = center
        self.inner_radius = float(inner_radius)
        self.outer_radius = float(outer_radius)
        self.sectors = list(sectors or [])
        if self.sectors and not _sector_angles_valid([s.start_angle for s in self.sectors]):
            raise ValueError("sector angles must be strictly increasing around the circle")

    # node ids: partitions, hole disk, inner border, body disk, outer border.
    def define_cover(self, settings: CoverSettings) -> Cover:
        cb = CoverBuilder()
        sw = settings.strip_half_width
        for s in self.sectors:
            ux, uy = _dir(s.start_angle)
            a = Point(self.center.x + ux * self.inner_radius, self.center.y + uy * self.inner_radius)
            b = Point(self.center.x + ux * self.outer_radius, self.center.y + uy * self.outer_radius)
            cb.strip(a, b, sw, RECONFIGURE, CURSOR_HAND)
        cb.circle(self.center, max(self.inner_radius - sw, 0.25), MOVE_WHOLE, CURSOR_MOVE)
        cb.circle(self.center, self.inner_radius + sw, RESIZE, CURSOR_HAND)
        cb.circle(self.center, max(self.outer_radius - sw, 0.25), MOVE_WHOLE, CURSOR_MOVE)
        cb.circle(self.center, self.outer_radius + sw, RESIZE, CURSOR_HAND)
        return cb.build()

    def bounds(self) -> Rect:
        r = self.outer_radius
        return Rect(self.center.x - r, self.center.y - r, 2 * r, 2 * r)

    def rotation_center(self) -> Point:
        return self.center

    def move_whole(self, dx: float, dy: float) -> bool:
        if dx == 0.0 and dy == 0.0:
            return False
        self.center = self.center.moved(dx, dy)
        return True

    def rotate_whole(self, about: Point, delta: float) -> None:
        if about != self.center:
            self.center = rotate_about(self.center, about, delta)
        for s in self.sectors:
            s.start_angle = normalize_angle(s.start_angle + delta)

    def _reshape(self, node_id: int, dx: float, dy: float, p: Point) -> bool:
        ns = len(self.sectors)
        if node_id < ns:
            before = Point(p.x - dx, p.y - dy)
            delta = angular_delta(self.center, before, p)
            if delta == 0.0:
                return False
            angles = [s.start_angle for s in self.sectors]
            candidate = _drag_sector_partition(angles, node_id, delta)
            if candidate is None:
                return False
            self.sectors[node_id].start_angle = candidate
            return True
        r = distance(p, self.center)
        if node_id == ns + 1:  # inner border
            if not 0.5 <= r <= self.outer_radius - 0.5 or r == self.inner_radius:
                return False
            self.inner_radius = r
            return True
        if node_id == ns + 3:  # outer border
            if r < self.inner_radius + 0.5 or r == self.outer_radius:
                return False
            self.outer_radius = r
            return True
        return False

    def body_contains(self, p: Point) -> bool:
        d = distance(p, self.center)
        return self.inner_radius <= d <= self.outer_radius

    def draw_primitives(self) -> list[dict]:
        if not self.sectors:
            return [
                arc_prim(
                    self.center,
                    self.outer_radius,
                    inner_radius=self.inner_radius,
                    fill=self.fill_color,
                    stroke=self.stroke_color,
                    stroke_width=self.stroke_width,
                )
            ]
        prims = []
        n = len(self.sectors)
        for i, s in enumerate(self.sectors):
            sweep = TWO_PI if n == 1 else normalize_angle(self.sectors[(i + 1) % n].start_angle - s.start_angle)
            prims.append(
                arc_prim(
                    self.center,
                    self.outer_radius,
                    s.start_angle,
                    sweep,
                    inner_radius=self.inner_radius,
                    fill=s.color,
                    stroke=self.stroke_color,
                    stroke_width=self.stroke_width,
                )
            )
        return prims

    def to_record(self) -> dict:
        rec = self.base_record()
        rec["center"] = [self.center.x, self.center.y]
        rec["innerRadius"] = self.inner_radius
        rec["outerRadius"] = self.outer_radius
        rec["sectors"] = [{"startAngle": s.start_angle, "color": s.color} for s in self.sectors] or None
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> RingEl:
        sectors = [Sector(s["startAngle"], s["color"]) for s in rec["sectors"]] if rec["sectors"] else None
        el = cls(rec["id"], Point(*rec["center"]), rec["innerRadius"], rec["outerRadius"], sectors)
        el._load_visual(rec)
        return el


# -- strip ------------------------------------------------------------------------


class StripEl(MovableElement):
    """Thick segment with rounded ends; endpoints reconfigure, the curved
    border resizes the half-width."""

    type_tag = "strip"
    supports_rotation = True

    def __init__(self, element_id: str, a: Point, b: Point, half_width: float, **visual):
        super().__init__(element_id, **visual)
        if half_width <= 0:
            raise ValueError("strip half width must be > 0")
        self.a = a
        self.b = b
        self.half_width = float(half_width)

    # node ids: 0,1 endpoints; 2 body; 3 border band.
    def define_cover(self, settings: CoverSettings) -> Cover:
        cb = CoverBuilder()
        sw = settings.strip_half_width
        cb.circle(self.a, settings.handle_radius, RECONFIGURE, CURSOR_HAND)
        cb.circle(self.b, settings.handle_radius, RECONFIGURE, CURSOR_HAND)
        cb.strip(self.a, self.b, max(self.half_width - sw, 0.25), MOVE_WHOLE, CURSOR_MOVE)
        cb.strip(self.a, self.b, self.half_width + sw, RESIZE, CURSOR_HAND)
        return cb.build()

    def bounds(self) -> Rect:
        return points_bounds([self.a, self.b]).inflated(self.half_width)

    def rotation_center(self) -> Point:
        return Point((self.a.x + self.b.x) / 2.0, (self.a.y + self.b.y) / 2.0)

    def move_whole(self, dx: float, dy: float) -> bool:
        if dx == 0.0 and dy == 0.0:
            return False
        self.a = self.a.moved(dx, dy)
        self.b = self.b.moved(dx, dy)
        return True

    def rotate_whole(self, about: Point, delta: float) -> None:
        self.a = rotate_about(self.a, about, delta)
        self.b = rotate_about(self.b, about, delta)

    def _reshape(self, node_id: int, dx: float, dy: float, p: Point) -> bool:
        if node_id == 0:
            self.a = self.a.moved(dx, dy)
            return dx != 0.0 or dy != 0.0
        if node_id == 1:
            self.b = self.b.moved(dx, dy)
            return dx != 0.0 or dy != 0.0
        if node_id == 3:
            w = distance_point_to_segment(p, self.a, self.b)
            if w < 1.0 or w == self.half_width:
                return False
            self.half_width = w
            return True
        return False

    def body_contains(self, p: Point) -> bool:
        return distance_point_to_segment(p, self.a, self.b) <= self.half_width

    def _outline(self) -> list[Point]:
        ax, ay, bx, by = self.a.x, self.a.y, self.b.x, self.b.y
        length = math.hypot(bx - ax, by - ay)
        if length < 1e-9:
            return _arc_points(self.a, self.half_width, 0.0, TWO_PI, 24)[:-1]
        axis = math.atan2(by - ay, bx - ax)
        cap_b = _arc_points(self.b, self.half_width, axis - math.pi / 2.0, math.pi, 12)
        cap_a = _arc_points(self.a, self.half_width, axis + math.pi / 2.0, math.pi, 12)
        return cap_b + cap_a

    def draw_primitives(self) -> list[dict]:
        return [polygon_prim(self._outline(), self.fill_color, self.stroke_color, self.stroke_width)]

    def to_record(self) -> dict:
        rec = self.base_record()
        rec["a"] = [self.a.x, self.a.y]
        rec["b"] = [self.b.x, self.b.y]
        rec["halfWidth"] = self.half_width
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> StripEl:
        el = cls(rec["id"], Point(*rec["a"]), Point(*rec["b"]), rec["halfWidth"])
        el._load_visual(rec)
        return el


# -- crescent -----------------------------------------------------------------------


def circle_intersections(oc: Point, r_outer: float, ic: Point, r_inner: float) -> tuple[Point, Point] | None:
    """The two intersection points of two circles, or None when they do not
    cross in exactly two points."""
    d = distance(oc, ic)
    if d < 1e-9:
        return None
    if not (abs(r_outer - r_inner) + 1e-9 < d < r_outer + r_inner - 1e-9):
        return None
    a = (d * d + r_outer * r_outer - r_inner * r_inner) / (2.0 * d)
    h_sq = r_outer * r_outer - a * a
    if h_sq <= 0:
        return None
    h = math.sqrt(h_sq)
    ex, ey = (ic.x - oc.x) / d, (ic.y - oc.y) / d
    mx, my = oc.x + ex * a, oc.y + ey * a
    return (Point(mx - ey * h, my + ex * h), Point(mx + ey * h, my - ex * h))


def _arc_between(center: Point, radius: float, a_from: float, a_to: float, a_via: float, n: int) -> list[Point]:
    """Arc samples from a_from to a_to passing through a_via."""
    ccw = normalize_angle(a_to - a_from)
    via = normalize_angle(a_via - a_from)
    sweep = ccw if via <= ccw + 1e-12 else ccw - TWO_PI
    return _arc_points(center, radius, a_from, sweep, n)


class CrescentEl(MovableElement):
    """Region of the outer circle outside the inner circle. Resized by the
    two horns (which follow the pointer, adjusting both radii) and by the two
    opposite points of its widest part (one radius each)."""

    type_tag = "crescent"
    supports_rotation = True

    def __init__(
        self,
        element_id: str,
        outer_center: Point,
        outer_radius: float,
        inner_center: Point,
        inner_radius: float,
        validate: bool = True,
        **visual,
    ):
        super().__init__(element_id, **visual)
        if validate and circle_intersections(outer_center, outer_radius, inner_center, inner_radius) is None:
            raise ValueError("crescent circles must intersect in exactly two points")
        self.outer_center = outer_center
        self.outer_radius = float(outer_radius)
        self.inner_center = inner_center
        self.inner_radius = float(inner_radius)

    def horns(self) -> tuple[Point, Point]:
        # clamped intersection formula: stays finite even if a reloaded
        # boundary-case crescent is a hair away from tangency
        oc, ic = self.outer_center, self.inner_center
        d = max(distance(oc, ic), 1e-9)
        a = (d * d + self.outer_radius**2 - self.inner_radius**2) / (2.0 * d)
        a = min(max(a, -self.outer_radius), self.outer_radius)
        h = math.sqrt(max(self.outer_radius**2 - a * a, 0.0))
        ex, ey = (ic.x - oc.x) / d, (ic.y - oc.y) / d
        mx, my = oc.x + ex * a, oc.y + ey * a
        return (Point(mx - ey * h, my + ex * h), Point(mx + ey * h, my - ex * h))

    def _away(self) -> tuple[float, float]:
        dx = self.outer_center.x - self.inner_center.x
        dy = self.outer_center.y - self.inner_center.y
        d = math.hypot(dx, dy)
        return (dx / d, dy / d)

    def widest_points(self) -> tuple[Point, Point]:
        ux, uy = self._away()
        on_outer = Point(self.outer_center.x + ux * self.outer_radius, self.outer_center.y + uy * self.outer_radius)
        on_inner = Point(self.inner_center.x + ux * self.inner_radius, self.inner_center.y + uy * self.inner_radius)
        return (on_outer, on_inner)

    def outline(self) -> list[Point]:
        h1, h2 = self.horns()
        ux, uy = self._away()
        away = math.atan2(uy, ux)
        a1 = math.atan2(h1.y - self.outer_center.y, h1.x - self.outer_center.x)
        a2 = math.atan2(h2.y - self.outer_center.y, h2.x - self.outer_center.x)
        outer_arc = _arc_between(self.outer_center, self.outer_radius, a1, a2, away, 32)
        b2 = math.atan2(h2.y - self.inner_center.y, h2.x - self.inner_center.x)
        b1 = math.atan2(h1.y - self.inner_center.y, h1.x - self.inner_center.x)
        inner_arc = _arc_between(self.inner_center, self.inner_radius, b2, b1, away, 24)
        return outer_arc + inner_arc[1:-1]

    # node ids: 0,1 horns; 2 widest outer; 3 widest inner; 4 body.
    def define_cover(self, settings: CoverSettings) -> Cover:
        cb = CoverBuilder()
        h1, h2 = self.horns()
        w_out, w_in = self.widest_points()
        cb.circle(h1, settings.handle_radius, RECONFIGURE, CURSOR_HAND)
        cb.circle(h2, settings.handle_radius, RECONFIGURE, CURSOR_HAND)
        cb.circle(w_out, settings.handle_radius, RESIZE, CURSOR_HAND)
        cb.circle(w_in, settings.handle_radius, RESIZE, CURSOR_HAND)
        cb.polygon(self.outline(), MOVE_WHOLE, CURSOR_MOVE)
        return cb.build()

    def bounds(self) -> Rect:
        r = self.outer_radius
        return Rect(self.outer_center.x - r, self.outer_center.y - r, 2 * r, 2 * r)

    def rotation_center(self) -> Point:
        h1, h2 = self.horns()
        return Point((h1.x + h2.x) / 2.0, (h1.y + h2.y) / 2.0)

    def move_whole(self, dx: float, dy: float) -> bool:
        if dx == 0.0 and dy == 0.0:
            return False
        self.outer_center = self.outer_center.moved(dx, dy)
        self.inner_center = self.inner_center.moved(dx, dy)
        return True

    def rotate_whole(self, about: Point, delta: float) -> None:
        self.outer_center = rotate_about(self.outer_center, about, delta)
        self.inner_center = rotate_about(self.inner_center, about, delta)

    def _try_radii(self, r_outer: float, r_inner: float) -> bool:
        if r_outer < 1.0 or r_inner < 1.0:
            return False
        if circle_intersections(self.outer_center, r_outer, self.inner_center, r_inner) is None:
            return False
        changed = r_outer != self.outer_radius or r_inner != self.inner_radius
        self.outer_radius = r_outer
        self.inner_radius = r_inner
        return changed

    def _reshape(self, node_id: int, dx: float, dy: float, p: Point) -> bool:
        if node_id in (0, 1):  # horn follows the pointer: both radii adjust
            return self._try_radii(distance(p, self.outer_center), distance(p, self.inner_center))
        if node_id == 2:
            return self._try_radii(distance(p, self.outer_center), self.inner_radius)
        if node_id == 3:
            return self._try_radii(self.outer_radius, distance(p, self.inner_center))
        return False

    def body_contains(self, p: Point) -> bool:
        if distance(p, self.outer_center) > self.outer_radius:
            return False
        return distance(p, self.inner_center) >= self.inner_radius - 1e-9

    def draw_primitives(self) -> list[dict]:
        return [polygon_prim(self.outline(), self.fill_color, self.stroke_color, self.stroke_width)]

    def to_record(self) -> dict:
        rec = self.base_record()
        rec["outerCenter"] = [self.outer_center.x, self.outer_center.y]
        rec["outerRadius"] = self.outer_radius
        rec["innerCenter"] = [self.inner_center.x, self.inner_center.y]
        rec["innerRadius"] = self.inner_radius
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> CrescentEl:
        el = cls(
            rec["id"],
            Point(*rec["outerCenter"]),
            rec["outerRadius"],
            Point(*rec["innerCenter"]),
            rec["innerRadius"],
            validate=False,
        )
        el._load_visual(rec)
        return el


# -- pie --------------------------------------------------------------------------


@dataclass
class PieSlice:
    start_angle: float
    sweep: float
    radius: float
    color: str
    apart_offset: float = 0.0

    def __post_init__(self) -> None:
        self.start_angle = normalize_angle(float(self.start_angle))
        self.sweep = float(self.sweep)
        self.radius = float(self.radius)
        self.apart_offset = float(self.apart_offset)


class PieEl(MovableElement):
    """Sliced pie. The whole pie moves and rotates regardless of slices
    staying apart; each slice zooms individually by its arc border and slides
    apart along its bisector by its straight edges."""

    type_tag = "pie"
    supports_rotation = True

    def __init__(self, element_id: str, center: Point, slices: list[PieSlice], **visual):
        super().__init__(element_id, **visual)
        if not slices:
            raise ValueError("pie needs at least one slice")
        if any(s.radius <= 0 for s in slices):
            raise ValueError("pie slice radius must be > 0")
        if any(s.sweep <= 0 for s in slices):
            raise ValueError("pie slice sweep must be > 0")
        if sum(s.sweep for s in slices) > TWO_PI + 1e-5:  # loose: reloaded angles are rounded
            raise ValueError("pie sweeps must sum to at most a full turn")
        self.center = center
        self.slices = list(slices)

    def _apex(self, s: PieSlice) -> Point:
        bx, by = _dir(s.start_angle + s.sweep / 2.0)
        return Point(self.center.x + bx * s.apart_offset, self.center.y + by * s.apart_offset)

    def _slice_outline(self, s: PieSlice, radius: float | None = None, n: int = 16) -> list[Point]:
        apex = self._apex(s)
        r = s.radius if radius is None else radius
        return [apex] + _arc_points(apex, r, s.start_angle, s.sweep, n)

    # node ids per slice i: 3i arc band, 3i+1 / 3i+2 radial edges;
    # then one body node per slice.
    def define_cover(self, settings: CoverSettings) -> Cover:
        cb = CoverBuilder()
        sw = settings.strip_half_width
        for s in self.slices:
            apex = self._apex(s)
            band = _arc_points(apex, s.radius + sw, s.start_angle, s.sweep, 12) + list(
                reversed(_arc_points(apex, max(s.radius - sw, 0.25), s.start_angle, s.sweep, 12))
            )
            cb.polygon(band, RESIZE, CURSOR_HAND)
            for edge_angle in (s.start_angle, s.start_angle + s.sweep):
                ux, uy = _dir(edge_angle)
                rim = Point(apex.x + ux * s.radius, apex.y + uy * s.radius)
                cb.strip(apex, rim, sw, RECONFIGURE, CURSOR_HAND)
        for s in self.slices:
            cb.polygon(self._slice_outline(s), MOVE_WHOLE, CURSOR_MOVE)
        return cb.build()

    def bounds(self) -> Rect:
        pts: list[Point] = []
        for s in self.slices:
            pts.extend(self._slice_outline(s))
        return points_bounds(pts)

    def rotation_center(self) -> Point:
        return self.center

    def move_whole(self, dx: float, dy: float) -> bool:
        if dx == 0.0 and dy == 0.0:
            return False
        self.center = self.center.moved(dx, dy)
        return True

    def rotate_whole(self, about: Point, delta: float) -> None:
        if about != self.center:
            self.center = rotate_about(self.center, about, delta)
        for s in self.slices:
            s.start_angle = normalize_angle(s.start_angle + delta)

    def zoom_slice(self, index: int, factor: float) -> None:
        if factor <= 0:
            raise ValueError("zoom factor must be > 0")
        self.slices[index].radius *= factor

    def resize_whole(self, factor: float) -> None:
        """Scale the whole pie; relative slice radii and spreads are kept."""
        if factor <= 0:
            raise ValueError("resize factor must be > 0")
        for s in self.slices:
            s.radius *= factor
            s.apart_offset *= factor

    def _reshape(self, node_id: int, dx: float, dy: float, p: Point) -> bool:
        n = len(self.slices)
        if node_id < 3 * n:
            index, part = divmod(node_id, 3)
            s = self.slices[index]
            if part == 0:  # arc border: zoom this slice
                r = distance(p, self._apex(s))
                if r < 1.0 or r == s.radius:
                    return False
                s.radius = r
                return True
            # radial edge: slide the slice along its bisector
            bx, by = _dir(s.start_angle + s.sweep / 2.0)
            offset = max(0.0, s.apart_offset + dx * bx + dy * by)
            if offset == s.apart_offset:
                return False
            s.apart_offset = offset
            return True
        return False

    def body_contains(self, p: Point) -> bool:
        for s in self.slices:
            apex = self._apex(s)
            if distance(p, apex) > s.radius:
                continue
            if distance(p, apex) < 1e-9:
                return True
            a = normalize_angle(math.atan2(p.y - apex.y, p.x - apex.x) - s.start_angle)
            if a <= s.sweep:
                return True
        return False

    def draw_primitives(self) -> list[dict]:
        return [
            polygon_prim(self._slice_outline(s), s.color, self.stroke_color, self.stroke_width)
            for s in self.slices
        ]

    def to_record(self) -> dict:
        rec = self.base_record()
        rec["center"] = [self.center.x, self.center.y]
        rec["slices"] = [
            {
                "startAngle": s.start_angle,
                "sweep": s.sweep,
                "radius": s.radius,
                "color": s.color,
                "apartOffset": s.apart_offset,
            }
            for s in self.slices
        ]
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> PieEl:
        slices = [
            PieSlice(s["startAngle"], s["sweep"], s["radius"], s["color"], s["apartOffset"])
            for s in rec["slices"]
        ]
        el = cls(rec["id"], Point(*rec["center"]), slices)
        el._load_visual(rec)
        return el
