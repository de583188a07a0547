"""The single supervisor of interaction: a z-ordered registration queue of
elements plus the catch/move/release state machine.

The mover owns no element geometry. It resolves ids through a provider (the
scene) and dispatches grabs to the grabbed element only; it never mutates an
element it is not holding. Pointer deltas are applied incrementally per move
event, never recomputed from the grab origin, so element-level clamping
composes predictably.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Protocol

from .cover import Cover, MOVE_WHOLE, ROTATE_ONLY, hit_test
from .geometry import Point

LEFT = "left"
RIGHT = "right"
BUTTONS = frozenset({LEFT, RIGHT})


class DuplicateRegistrationError(ValueError):
    """An element id was added to the mover twice."""


class UnknownElementError(KeyError):
    """An element id is not present in the mover registry."""


class GrabProtocolError(RuntimeError):
    """catch() was called while a grab was already active."""


class ElementProvider(Protocol):
    def cover_of(self, element_id: str) -> Cover: ...
    def element_of(self, element_id: str): ...


@dataclass
class Grab:
    element_id: str
    node_id: int
    button: str
    grab_offset: tuple[float, float]
    last_point: Point


@dataclass(frozen=True)
class ReleaseInfo:
    element_id: str
    node_id: int
    button: str


def node_accepts_button(node, button: str, element) -> bool:
    """Left drives move/resize/reconfigure; right drives rotation only."""
    if button == LEFT:
        return node.action != ROTATE_ONLY
    return getattr(element, "supports_rotation", False) and node.action in (MOVE_WHOLE, ROTATE_ONLY)


class Mover:
    def __init__(self, provider: ElementProvider, raise_on_catch: bool = True):
        self._provider = provider
        self.raise_on_catch = raise_on_catch
        self.registry: list[str] = []  # z-order; last entry paints on top
        self.grab: Grab | None = None

    # -- registration ------------------------------------------------------

    def add(self, element_id: str) -> None:
        if element_id in self.registry:
            raise DuplicateRegistrationError(f"element {element_id!r} already registered")
        self.registry.append(element_id)

    def remove(self, element_id: str) -> None:
        if element_id not in self.registry:
            raise UnknownElementError(element_id)
        if self.grab is not None and self.grab.element_id == element_id:
            self.grab = None
        self.registry.remove(element_id)

    def clear(self) -> None:
        self.registry.clear()
        self.grab = None

    def set_z_order(self, element_id: str, position: int | str) -> None:
        """Move an element within the paint order.

        position is an index (0 = bottom) or one of "top" / "bottom".
        """
        if element_id not in self.registry:
            raise UnknownElementError(element_id)
        self.registry.remove(element_id)
        if position == "top":
            self.registry.append(element_id)
        elif position == "bottom":
            self.registry.insert(0, element_id)
        else:
            index = int(position)
            index = max(0, min(index, len(self.registry)))
            self.registry.insert(index, element_id)

    # -- press / move / release --------------------------------------------

    def catch(self, p: Point, button: str) -> bool:
        """Grab the topmost element whose cover accepts the press.

        Scans from topmost to bottommost; the first element whose hit node
        accepts the button is grabbed. A left-button catch raises the element
        to the top of the z-order unless raising is disabled for the scene or
        the element. Returns whether anything was caught.
        """
        if button not in BUTTONS:
            raise ValueError(f"unknown button {button!r}")
        if self.grab is not None:
            raise GrabProtocolError("catch during an active grab")
        for element_id in reversed(self.registry):
            element = self._provider.element_of(element_id)
            if not getattr(element, "visible", True):
                continue
            cover = self._provider.cover_of(element_id)
            node_id = hit_test(cover, p)
            if node_id is None:
                continue
            node = cover.nodes[node_id]
            if not node_accepts_button(node, button, element):
                continue
            anchor = element.bounds().top_left()
            self.grab = Grab(
                element_id=element_id,
                node_id=node_id,
                button=button,
                grab_offset=(p.x - anchor.x, p.y - anchor.y),
                last_point=p,
            )
            if button == LEFT and self.raise_on_catch and getattr(element, "raises_on_catch", True):
                self.set_z_order(element_id, "top")
            return True
        return False

    def move(self, p: Point) -> bool:
        """Dispatch a pointer move to the grabbed element.

        Returns True iff the element reports a visual change. No grab: False.
        """
        grab = self.grab
        if grab is None:
            return False
        dx = p.x - grab.last_point.x
        dy = p.y - grab.last_point.y
        element = self._provider.element_of(grab.element_id)
        cover = self._provider.cover_of(grab.element_id)
        if grab.node_id >= len(cover.nodes):
            # the element changed structurally under the grab; drop it
            self.grab = None
            return False
        node = cover.nodes[grab.node_id]
        if grab.button == LEFT and node.action == MOVE_WHOLE:
            changed = element.move_whole(dx, dy)
        else:
            changed = element.move_node(grab.node_id, dx, dy, p, grab.button)
        grab.last_point = p
        return changed

    def release(self) -> ReleaseInfo | None:
        """Clear the grab; returns what was held, or None."""
        grab = self.grab
        self.grab = None
        if grab is None:
            return None
        return ReleaseInfo(grab.element_id, grab.node_id, grab.button)

    # -- helpers -------------------------------------------------------------

    def cursor_hint(self, p: Point) -> str:
        """Cursor for the topmost hit node at p ("default" when nothing hits)."""
        for element_id in reversed(self.registry):
            element = self._provider.element_of(element_id)
            if not getattr(element, "visible", True):
                continue
            node_id = hit_test(self._provider.cover_of(element_id), p)
            if node_id is not None:
                return self._provider.cover_of(element_id).nodes[node_id].cursor
        return "default"


def angular_delta(center: Point, before: Point, after: Point) -> float:
    """Signed rotation of the pointer about center between two positions.

    Returns 0 when either position sits (numerically) on the center.
    """
    bx, by = before.x - center.x, before.y - center.y
    ax, ay = after.x - center.x, after.y - center.y
    if math.hypot(bx, by) < 1e-9 or math.hypot(ax, ay) < 1e-9:
        return 0.0
    return math.atan2(ay, ax) - math.atan2(by, bx)
