"""Sensitive-area covers: where an element can be grabbed and what a grab means.

A cover is an ordered list of nodes. Order is priority order: the first node
containing the pressed point wins, so small handles are listed before large
body nodes (or a body is listed first to carve a hole out of a later, larger
node). Covers are derived state, rebuilt after any mutation, never persisted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import Point, distance, distance_point_to_segment, point_in_polygon

# Node actions.
MOVE_WHOLE = "moveWhole"
RESIZE = "resize"
RECONFIGURE = "reconfigure"
ROTATE_ONLY = "rotateOnly"

ACTIONS = frozenset({MOVE_WHOLE, RESIZE, RECONFIGURE, ROTATE_ONLY})

# Cursor hints the client may map to native cursors.
CURSOR_MOVE = "move"
CURSOR_SIZE_H = "sizeH"
CURSOR_SIZE_V = "sizeV"
CURSOR_SIZE_NWSE = "sizeNWSE"
CURSOR_SIZE_NESW = "sizeNESW"
CURSOR_HAND = "hand"
CURSOR_DEFAULT = "default"

CURSORS = frozenset(
    {
        CURSOR_MOVE,
        CURSOR_SIZE_H,
        CURSOR_SIZE_V,
        CURSOR_SIZE_NWSE,
        CURSOR_SIZE_NESW,
        CURSOR_HAND,
        CURSOR_DEFAULT,
    }
)


@dataclass(frozen=True)
class CircleShape:
    center: Point
    radius: float


@dataclass(frozen=True)
class StripShape:
    a: Point
    b: Point
    half_width: float


@dataclass(frozen=True)
class PolygonShape:
    vertices: tuple[Point, ...]


Shape = CircleShape | StripShape | PolygonShape


@dataclass(frozen=True)
class CoverNode:
    node_id: int
    shape: Shape
    action: str
    cursor: str = CURSOR_DEFAULT

    def __post_init__(self) -> None:
        if self.action not in ACTIONS:
            raise ValueError(f"unknown node action {self.action!r}")
        if self.cursor not in CURSORS:
            raise ValueError(f"unknown cursor hint {self.cursor!r}")
        if isinstance(self.shape, CircleShape) and self.shape.radius <= 0:
            raise ValueError("circle node needs radius > 0")
        if isinstance(self.shape, StripShape) and self.shape.half_width <= 0:
            raise ValueError("strip node needs half_width > 0")
        if isinstance(self.shape, PolygonShape) and len(self.shape.vertices) < 3:
            raise ValueError("polygon node needs >= 3 vertices")


class Cover:
    """Ordered, immutable sequence of CoverNodes with ids 0..n-1."""

    def __init__(self, nodes: list[CoverNode]):
        for i, node in enumerate(nodes):
            if node.node_id != i:
                raise ValueError(f"node ids must be 0..n-1 in order, got {node.node_id} at {i}")
        self.nodes: tuple[CoverNode, ...] = tuple(nodes)

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)


class CoverBuilder:
    """Assigns node ids sequentially while an element describes its cover."""

    def __init__(self) -> None:
        self._nodes: list[CoverNode] = []

    def circle(self, center: Point, radius: float, action: str, cursor: str = CURSOR_DEFAULT) -> int:
        return self._add(CircleShape(center, radius), action, cursor)

    def strip(self, a: Point, b: Point, half_width: float, action: str, cursor: str = CURSOR_DEFAULT) -> int:
        return self._add(StripShape(a, b, half_width), action, cursor)

    def polygon(self, vertices: list[Point], action: str, cursor: str = CURSOR_DEFAULT) -> int:
        return self._add(PolygonShape(tuple(vertices)), action, cursor)

    def add(self, shape: Shape, action: str, cursor: str = CURSOR_DEFAULT) -> int:
        return self._add(shape, action, cursor)

    def _add(self, shape: Shape, action: str, cursor: str) -> int:
        node_id = len(self._nodes)
        self._nodes.append(CoverNode(node_id, shape, action, cursor))
        return node_id

    def build(self) -> Cover:
        return Cover(self._nodes)


def node_contains(node: CoverNode, p: Point) -> bool:
    """Containment per shape; boundaries count as inside."""
    shape = node.shape
    if isinstance(shape, CircleShape):
        return distance(p, shape.center) <= shape.radius
    if isinstance(shape, StripShape):
        return distance_point_to_segment(p, shape.a, shape.b) <= shape.half_width
    return point_in_polygon(p, list(shape.vertices))


def hit_test(cover: Cover, p: Point) -> int | None:
    """Id of the first node (in priority order) containing p, or None."""
    for node in cover.nodes:
        if node_contains(node, p):
            return node.node_id
    return None
