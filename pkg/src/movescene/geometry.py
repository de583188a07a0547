"""2D primitives shared by the whole engine.

Screen coordinates throughout: x grows right, y grows down, angles are in
radians and positive rotation is clockwise on screen (the plain rotation
matrix applied in y-down coordinates). Boundary points count as inside
polygons and circles so hit-testing stays forgiving at edges.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

TWO_PI = 2.0 * math.pi

# Tolerance for "on the boundary" checks; well below a pixel.
BOUNDARY_EPS = 1e-9


class DegeneratePolygonError(ValueError):
    """A polygon operation received fewer than 3 vertices."""


class EmptyUnionError(ValueError):
    """A bounding union was requested for an empty rectangle sequence."""


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self) -> None:
        # geometry is always real-valued; int inputs would leak into the
        # canonical document as a different token
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))

    def moved(self, dx: float, dy: float) -> Point:
        return Point(self.x + dx, self.y + dy)

    def as_pair(self) -> tuple[float, float]:
        return (self.x, self.y)


@dataclass(frozen=True)
class Rect:
    left: float
    top: float
    width: float
    height: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "left", float(self.left))
        object.__setattr__(self, "top", float(self.top))
        object.__setattr__(self, "width", float(self.width))
        object.__setattr__(self, "height", float(self.height))
        if self.width < 0 or self.height < 0:
            raise ValueError(f"negative rect size: {self.width}x{self.height}")

    @property
    def right(self) -> float:
        return self.left + self.width

    @property
    def bottom(self) -> float:
        return self.top + self.height

    @property
    def center(self) -> Point:
        return Point(self.left + self.width / 2.0, self.top + self.height / 2.0)

    def top_left(self) -> Point:
        return Point(self.left, self.top)

    def corners(self) -> list[Point]:
        """NW, NE, SE, SW."""
        return [
            Point(self.left, self.top),
            Point(self.right, self.top),
            Point(self.right, self.bottom),
            Point(self.left, self.bottom),
        ]

    def contains(self, p: Point) -> bool:
        return self.left <= p.x <= self.right and self.top <= p.y <= self.bottom

    def moved(self, dx: float, dy: float) -> Rect:
        return Rect(self.left + dx, self.top + dy, self.width, self.height)

    def inflated(self, margin: float) -> Rect:
        return Rect(
            self.left - margin,
            self.top - margin,
            self.width + 2.0 * margin,
            self.height + 2.0 * margin,
        )


def normalize_angle(a: float) -> float:
    """Map any angle into [0, 2*pi)."""
    a = math.fmod(a, TWO_PI)
    if a < 0.0:
        a += TWO_PI
    if a >= TWO_PI:  # fmod can land exactly on 2*pi after the correction
        a -= TWO_PI
    return a


def distance(p: Point, q: Point) -> float:
    return math.hypot(p.x - q.x, p.y - q.y)


def distance_point_to_segment(p: Point, a: Point, b: Point) -> float:
    """Euclidean distance from p to the closest point of segment ab.

    A degenerate segment (a == b) is treated as a point, not an error:
    shapes may transiently degenerate mid-drag.
    """
    abx, aby = b.x - a.x, b.y - a.y
    seg_len_sq = abx * abx + aby * aby
    if seg_len_sq == 0.0:
        return distance(p, a)
    t = ((p.x - a.x) * abx + (p.y - a.y) * aby) / seg_len_sq
    t = min(1.0, max(0.0, t))
    return math.hypot(p.x - (a.x + t * abx), p.y - (a.y + t * aby))


def point_in_polygon(p: Point, vs: list[Point]) -> bool:
    """True iff p is strictly inside or on the boundary of the polygon.

    Raises DegeneratePolygonError for fewer than 3 vertices.
    """
    n = len(vs)
    if n < 3:
        raise DegeneratePolygonError(f"polygon needs >= 3 vertices, got {n}")
    for i in range(n):
        if distance_point_to_segment(p, vs[i], vs[(i + 1) % n]) <= BOUNDARY_EPS:
            return True
    inside = False
    for i in range(n):
        a = vs[i]
        b = vs[(i + 1) % n]
        if (a.y > p.y) != (b.y > p.y):
            x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y)
            if p.x < x_cross:
                inside = not inside
    return inside


def rotate_about(p: Point, c: Point, angle: float) -> Point:
    """Rotate p around c; positive angle turns clockwise on screen."""
    s = math.sin(angle)
    co = math.cos(angle)
    dx = p.x - c.x
    dy = p.y - c.y
    return Point(c.x + dx * co - dy * s, c.y + dx * s + dy * co)


def polygon_centroid(vs: list[Point]) -> Point:
    if len(vs) < 3:
        raise DegeneratePolygonError(f"polygon needs >= 3 vertices, got {len(vs)}")
    n = float(len(vs))
    return Point(sum(v.x for v in vs) / n, sum(v.y for v in vs) / n)


def is_convex(vs: list[Point]) -> bool:
    """True iff all consecutive-edge cross products share a sign.

    Exactly-zero cross products (collinear vertices) are tolerated.
    """
    n = len(vs)
    if n < 3:
        raise DegeneratePolygonError(f"polygon needs >= 3 vertices, got {n}")
    saw_pos = False
    saw_neg = False
    for i in range(n):
        o = vs[i]
        a = vs[(i + 1) % n]
        b = vs[(i + 2) % n]
        cross = (a.x - o.x) * (b.y - a.y) - (a.y - o.y) * (b.x - a.x)
        if cross > 0.0:
            saw_pos = True
        elif cross < 0.0:
            saw_neg = True
        if saw_pos and saw_neg:
            return False
    return True


def max_pairwise_distance(vs: list[Point]) -> float:
    """Largest distance between any two points of the set (the span)."""
    best = 0.0
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            d = distance(vs[i], vs[j])
            if d > best:
                best = d
    return best


def points_bounds(vs: list[Point]) -> Rect:
    if not vs:
        raise EmptyUnionError("no points to bound")
    min_x = min(v.x for v in vs)
    max_x = max(v.x for v in vs)
    min_y = min(v.y for v in vs)
    max_y = max(v.y for v in vs)
    return Rect(min_x, min_y, max_x - min_x, max_y - min_y)


def union2(a: Rect, b: Rect) -> Rect:
    left = min(a.left, b.left)
    top = min(a.top, b.top)
    right = max(a.right, b.right)
    bottom = max(a.bottom, b.bottom)
    return Rect(left, top, right - left, bottom - top)


def bounding_union(rs: list[Rect]) -> Rect:
    """Smallest Rect containing every input rect."""
    if not rs:
        raise EmptyUnionError("bounding union of zero rects")
    acc = rs[0]
    for r in rs[1:]:
        acc = union2(acc, r)
    return acc
