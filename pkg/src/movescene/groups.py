"""Controls and the group flavors.

Controls are moved and resized only by parts of their frame; presses on the
interior fall through to whatever lies behind. Groups come in four kinds:

  * GroupDyn     frame-driven layout predetermined at construction (shipped
                 for comparison, excluded from the demo scenes)
  * FixedGroup   rigid cluster moved by any inner point, never resized
  * DominantGroup  a relation, not an element: subordinates follow the
                 dominant element, each keeping its stored offset
  * ElasticGroup frame continuously recomputed as the union of the visible
                 children plus a margin; title slides along the top edge
"""

from __future__ import annotations

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
from .elements import CoverSettings, MovableElement
from .geometry import Point, Rect, bounding_union, distance, distance_point_to_segment
from .render import polygon_prim, text_prim

DEFAULT_FONT = "12px sans-serif"
CONTROL_MIN_SIZE = 10.0
FRAME_MARGIN_DEFAULT = 6.0
TITLE_BAND_HEIGHT = 14.0


class UnknownChildError(KeyError):
    """The referenced element is not a child of this group."""


def _edge_resize(rect: Rect, node_id: int, dx: float, dy: float, min_size: float) -> Rect:
    """Free-mode border resize for frame-like rectangles; node ids are
    0..3 corners NW NE SE SW, 4..7 edges N S W E."""
    left, top, right, bottom = rect.left, rect.top, rect.right, rect.bottom
    h_side, v_side = {
        0: ("W", "N"),
        1: ("E", "N"),
        2: ("E", "S"),
        3: ("W", "S"),
        4: (None, "N"),
        5: (None, "S"),
        6: ("W", None),
        7: ("E", None),
    }[node_id]
    if h_side == "W":
        left = min(left + dx, right - min_size)
    elif h_side == "E":
        right = max(right + dx, left + min_size)
    if v_side == "N":
        top = min(top + dy, bottom - min_size)
    elif v_side == "S":
        bottom = max(bottom + dy, top + min_size)
    return Rect(left, top, right - left, bottom - top)


class ControlEl(MovableElement):
    """A placeholder for a native control: a captioned rectangle that is
    moved and resized only by its frame. kind is a free-form render tag
    (button, textbox, listview, label, ...)."""

    type_tag = "control"

    def __init__(
        self,
        element_id: str,
        rect: Rect,
        kind: str = "button",
        caption: str = "",
        font: str = DEFAULT_FONT,
        **visual,
    ):
        visual.setdefault("fill_color", "#f4f4f4")
        visual.setdefault("stroke_color", "#404040")
        super().__init__(element_id, **visual)
        self.rect = rect
        self.kind = kind
        self.caption = caption
        self.font = font

    # node ids: 0..3 corner grips, 4..7 mid-side grips, 8..11 frame band.
    def define_cover(self, settings: CoverSettings) -> Cover:
        cb = CoverBuilder()
        r = self.rect
        nw, ne, se, sw = r.corners()
        cb.circle(nw, settings.handle_radius, RESIZE, CURSOR_SIZE_NWSE)
        cb.circle(ne, settings.handle_radius, RESIZE, CURSOR_SIZE_NESW)
        cb.circle(se, settings.handle_radius, RESIZE, CURSOR_SIZE_NWSE)
        cb.circle(sw, settings.handle_radius, RESIZE, CURSOR_SIZE_NESW)
        mid_n = Point(r.left + r.width / 2.0, r.top)
        mid_s = Point(r.left + r.width / 2.0, r.bottom)
        mid_w = Point(r.left, r.top + r.height / 2.0)
        mid_e = Point(r.right, r.top + r.height / 2.0)
        cb.circle(mid_n, settings.handle_radius, RESIZE, CURSOR_SIZE_V)
        cb.circle(mid_s, settings.handle_radius, RESIZE, CURSOR_SIZE_V)
        cb.circle(mid_w, settings.handle_radius, RESIZE, CURSOR_SIZE_H)
        cb.circle(mid_e, settings.handle_radius, RESIZE, CURSOR_SIZE_H)
        cb.strip(nw, ne, settings.strip_half_width, MOVE_WHOLE, CURSOR_MOVE)
        cb.strip(sw, se, settings.strip_half_width, MOVE_WHOLE, CURSOR_MOVE)
        cb.strip(nw, sw, settings.strip_half_width, MOVE_WHOLE, CURSOR_MOVE)
        cb.strip(ne, se, settings.strip_half_width, MOVE_WHOLE, CURSOR_MOVE)
        return cb.build()

    def bounds(self) -> Rect:
        return self.rect

    def move_whole(self, dx: float, dy: float) -> bool:
        if dx == 0.0 and dy == 0.0:
            return False
        self.rect = self.rect.moved(dx, dy)
        return True

    def _reshape(self, node_id: int, dx: float, dy: float, p: Point) -> bool:
        if node_id > 7:
            return False
        # mid-side grips resize a single axis, like the matching edge
        edge_node = {4: 4, 5: 5, 6: 6, 7: 7}.get(node_id, node_id)
        new = _edge_resize(self.rect, edge_node, dx, dy, CONTROL_MIN_SIZE)
        if new == self.rect:
            return False
        self.rect = new
        return True

    def draw_primitives(self) -> list[dict]:
        prims = [polygon_prim(self.rect.corners(), self.fill_color, self.stroke_color, self.stroke_width)]
        if self.caption:
            pos = Point(self.rect.left + 4.0, self.rect.top + self.rect.height / 2.0 + 4.0)
            prims.append(text_prim(pos, self.caption, self.font, self.stroke_color))
        return prims

    def to_record(self) -> dict:
        rec = self.base_record()
        r = self.rect
        rec["rect"] = [r.left, r.top, r.width, r.height]
        rec["kind"] = self.kind
        rec["caption"] = self.caption
        rec["font"] = self.font
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> ControlEl:
        el = cls(rec["id"], Rect(*rec["rect"]), kind=rec["kind"], caption=rec["caption"], font=rec["font"])
        el._load_visual(rec)
        return el


FRAME_ZONES = (
    "cornerNW",
    "cornerNE",
    "cornerSW",
    "cornerSE",
    "midN",
    "midS",
    "midE",
    "midW",
    "frameBody",
    "none",
)


def frame_zone(ctrl: ControlEl, p: Point, settings: CoverSettings | None = None) -> str:
    """Which part of a control's frame a point lands on.

    Corners and mid-side zones resize, the remaining frame band moves, and
    the interior is transparent to presses.
    """
    settings = settings or CoverSettings()
    r = ctrl.rect
    hr = settings.handle_radius
    sw = settings.strip_half_width
    nw, ne, se, sw_c = r.corners()
    for corner, name in ((nw, "cornerNW"), (ne, "cornerNE"), (sw_c, "cornerSW"), (se, "cornerSE")):
        if distance(p, corner) <= hr:
            return name
    mids = (
        (Point(r.left + r.width / 2.0, r.top), "midN"),
        (Point(r.left + r.width / 2.0, r.bottom), "midS"),
        (Point(r.right, r.top + r.height / 2.0), "midE"),
        (Point(r.left, r.top + r.height / 2.0), "midW"),
    )
    for mid, name in mids:
        if distance(p, mid) <= hr:
            return name
    for a, b in ((nw, ne), (sw_c, se), (nw, sw_c), (ne, se)):
        if distance_point_to_segment(p, a, b) <= sw:
            return "frameBody"
    return "none"


# -- dynamic-layout group (demonstration only) ---------------------------------


class GroupDyn(MovableElement):
    """Frame with children repositioned by designer-chosen anchor fractions
    whenever the frame resizes. Kept for comparison; the demo scenes never
    use it."""

    type_tag = "dyn_group"

    def __init__(
        self,
        element_id: str,
        frame: Rect,
        children: list[tuple[str, float, float]] | None = None,
        **visual,
    ):
        super().__init__(element_id, **visual)
        self.frame = frame
        self.children = [(cid, float(fx), float(fy)) for cid, fx, fy in (children or [])]
        self.raises_on_catch = False

    def child_ids(self) -> list[str]:
        return [cid for cid, _, _ in self.children]

    def define_cover(self, settings: CoverSettings) -> Cover:
        cb = CoverBuilder()
        r = self.frame
        nw, ne, se, sw = r.corners()
        cb.circle(nw, settings.handle_radius, RESIZE, CURSOR_SIZE_NWSE)
        cb.circle(ne, settings.handle_radius, RESIZE, CURSOR_SIZE_NESW)
        cb.circle(se, settings.handle_radius, RESIZE, CURSOR_SIZE_NWSE)
        cb.circle(sw, settings.handle_radius, RESIZE, CURSOR_SIZE_NESW)
        cb.polygon(r.corners(), MOVE_WHOLE, CURSOR_MOVE)
        return cb.build()

    def bounds(self) -> Rect:
        return self.frame

    def move_whole(self, dx: float, dy: float) -> bool:
        if dx == 0.0 and dy == 0.0:
            return False
        self.frame = self.frame.moved(dx, dy)
        for cid, _, _ in self.children:
            self.resolver(cid).move_whole(dx, dy)
        return True

    def _layout_children(self) -> None:
        for cid, fx, fy in self.children:
            child = self.resolver(cid)
            target = Point(self.frame.left + fx * self.frame.width, self.frame.top + fy * self.frame.height)
            anchor = child.bounds().top_left()
            child.move_whole(target.x - anchor.x, target.y - anchor.y)

    def _reshape(self, node_id: int, dx: float, dy: float, p: Point) -> bool:
        if node_id > 3:
            return False
        new = _edge_resize(self.frame, node_id, dx, dy, 20.0)
        if new == self.frame:
            return False
        self.frame = new
        self._layout_children()
        return True

    def draw_primitives(self) -> list[dict]:
        prims = [polygon_prim(self.frame.corners(), None, self.stroke_color, self.stroke_width)]
        for cid, _, _ in self.children:
            child = self.resolver(cid)
            if child.visible:
                prims.extend(child.draw_primitives())
        return prims

    def to_record(self) -> dict:
        rec = self.base_record()
        r = self.frame
        rec["frame"] = [r.left, r.top, r.width, r.height]
        rec["children"] = [{"elementId": cid, "fx": fx, "fy": fy} for cid, fx, fy in self.children]
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> GroupDyn:
        el = cls(
            rec["id"],
            Rect(*rec["frame"]),
            [(c["elementId"], c["fx"], c["fy"]) for c in rec["children"]],
        )
        el._load_visual(rec)
        return el


# -- fixed group -----------------------------------------------------------------


class FixedGroup(MovableElement):
    """Rigid cluster: the whole group moves by any inner point of any child;
    no resizing, so pairwise child offsets are preserved exactly."""

    type_tag = "fixed_group"

    def __init__(self, element_id: str, children: list[str], frame: Rect | None = None, **visual):
        super().__init__(element_id, **visual)
        self.children = list(children)
        self.frame = frame
        self.raises_on_catch = False

    def child_ids(self) -> list[str]:
        return list(self.children)

    def define_cover(self, settings: CoverSettings) -> Cover:
        cb = CoverBuilder()
        if self.frame is not None:
            nw, ne, se, sw = self.frame.corners()
            for a, b in ((nw, ne), (sw, se), (nw, sw), (ne, se)):
                cb.strip(a, b, settings.strip_half_width, MOVE_WHOLE, CURSOR_MOVE)
        for cid in self.children:
            child = self.resolver(cid)
            if not child.visible:
                continue
            for node in child.define_cover(settings):
                cb.add(node.shape, MOVE_WHOLE, CURSOR_MOVE)
        return cb.build()

    def bounds(self) -> Rect:
        rects = [self.resolver(cid).bounds() for cid in self.children]
        if self.frame is not None:
            rects.append(self.frame)
        return bounding_union(rects)

    def move_whole(self, dx: float, dy: float) -> bool:
        if dx == 0.0 and dy == 0.0:
            return False
        for cid in self.children:
            self.resolver(cid).move_whole(dx, dy)
        if self.frame is not None:
            self.frame = self.frame.moved(dx, dy)
        return True

    def _reshape(self, node_id: int, dx: float, dy: float, p: Point) -> bool:
        return False  # fixed groups never resize

    def draw_primitives(self) -> list[dict]:
        prims = []
        if self.frame is not None:
            prims.append(polygon_prim(self.frame.corners(), None, self.stroke_color, self.stroke_width))
        for cid in self.children:
            child = self.resolver(cid)
            if child.visible:
                prims.extend(child.draw_primitives())
        if not prims:
            prims.append(polygon_prim(self.bounds().corners(), None, None, 0.0))
        return prims

    def to_record(self) -> dict:
        rec = self.base_record()
        rec["children"] = list(self.children)
        rec["frame"] = (
            [self.frame.left, self.frame.top, self.frame.width, self.frame.height]
            if self.frame is not None
            else None
        )
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> FixedGroup:
        frame = Rect(*rec["frame"]) if rec["frame"] else None
        el = cls(rec["id"], rec["children"], frame)
        el._load_visual(rec)
        return el


# -- elastic group -----------------------------------------------------------------


@dataclass
class GroupTitle:
    text: str
    t: float = 0.05  # fraction along the top edge
    visible: bool = True

    def __post_init__(self) -> None:
        self.t = float(self.t)


class ElasticGroup(MovableElement):
    """Group whose frame always equals the union of its visible children's
    bounds inflated by the margin. Children remain independently movable;
    the group element itself grabs the frame band, the title and any empty
    interior to move everything together."""

    type_tag = "elastic"

    def __init__(
        self,
        element_id: str,
        children: list[str],
        frame_margin: float = FRAME_MARGIN_DEFAULT,
        frame_visible: bool = True,
        title: GroupTitle | None = None,
        font: str = DEFAULT_FONT,
        spread_to_nested: bool = False,
        **visual,
    ):
        super().__init__(element_id, **visual)
        self.children = list(children)
        self.frame_margin = float(frame_margin)
        self.frame_visible = frame_visible
        self.title = title or GroupTitle("")
        self.font = font
        self.spread_to_nested = spread_to_nested
        self.frame = Rect(0.0, 0.0, 0.0, 0.0)
        self.raises_on_catch = False

    def child_ids(self) -> list[str]:
        return list(self.children)

    # -- frame ------------------------------------------------------------

    def recompute_frame(self) -> Rect:
        """Union of visible children bounds plus the margin; with no visible
        children the frame collapses to a zero-height band at its last
        position so the group stays grabbable."""
        visible = [self.resolver(cid) for cid in self.children]
        visible = [c for c in visible if c.visible]
        if not visible:
            self.frame = Rect(self.frame.left, self.frame.top, self.frame.width, 0.0)
        else:
            self.frame = bounding_union([c.bounds() for c in visible]).inflated(self.frame_margin)
        return self.frame

    def _title_anchor(self) -> Point:
        return Point(self.frame.left + self.title.t * self.frame.width, self.frame.top)

    def _title_box(self) -> Rect:
        anchor = self._title_anchor()
        width = max(7.0 * len(self.title.text), 10.0)
        return Rect(anchor.x, anchor.y - TITLE_BAND_HEIGHT / 2.0, width, TITLE_BAND_HEIGHT)

    # node ids: 0 title (always present), 1..4 frame band N S W E, 5 interior.
    def define_cover(self, settings: CoverSettings) -> Cover:
        cb = CoverBuilder()
        cb.polygon(self._title_box().corners(), RECONFIGURE, CURSOR_HAND)
        nw, ne, se, sw = self.frame.corners()
        for a, b in ((nw, ne), (sw, se), (nw, sw), (ne, se)):
            cb.strip(a, b, settings.strip_half_width, MOVE_WHOLE, CURSOR_MOVE)
        cb.polygon(self.frame.corners(), MOVE_WHOLE, CURSOR_MOVE)
        return cb.build()

    def bounds(self) -> Rect:
        return self.frame

    def move_whole(self, dx: float, dy: float) -> bool:
        if dx == 0.0 and dy == 0.0:
            return False
        for cid in self.children:
            self.resolver(cid).move_whole(dx, dy)
        self.frame = self.frame.moved(dx, dy)
        return True

    def _reshape(self, node_id: int, dx: float, dy: float, p: Point) -> bool:
        if node_id == 0:
            if self.frame.width <= 0:
                return False
            return self.move_title(self.title.t + dx / self.frame.width)
        return False

    def move_title(self, t: float) -> bool:
        """Slide the title along the top edge; t clamps into [0, 1].
        Works regardless of frame visibility."""
        t = min(1.0, max(0.0, t))
        if t == self.title.t:
            return False
        self.title.t = t
        return True

    def set_child_visible(self, child_id: str, visible: bool) -> bool:
        if child_id not in self.children:
            raise UnknownChildError(child_id)
        child = self.resolver(child_id)
        if child.visible == visible:
            return False
        child.visible = visible
        self.recompute_frame()
        return True

    def apply_group_style(self, font: str | None = None, color: str | None = None, spread_to_nested: bool = False) -> None:
        """Restyle the group and its children; nested groups are restyled
        only when spreading is requested."""
        self.spread_to_nested = spread_to_nested
        self._restyle(font, color, spread_to_nested)

    def _restyle(self, font: str | None, color: str | None, spread: bool) -> None:
        if font is not None:
            self.font = font
        if color is not None:
            self.stroke_color = color
        for cid in self.children:
            child = self.resolver(cid)
            if isinstance(child, ElasticGroup):
                if spread:
                    child._restyle(font, color, True)
            else:
                child.apply_style(color=color, font=font)

    def draw_primitives(self) -> list[dict]:
        stroke = self.stroke_color if self.frame_visible else None
        prims = [polygon_prim(self.frame.corners(), None, stroke, self.stroke_width)]
        if self.title.visible and self.title.text:
            anchor = self._title_anchor()
            prims.append(text_prim(Point(anchor.x, anchor.y + 4.0), self.title.text, self.font, self.stroke_color))
        return prims

    def to_record(self) -> dict:
        rec = self.base_record()
        rec["children"] = list(self.children)
        rec["frameMargin"] = self.frame_margin
        rec["frameVisible"] = self.frame_visible
        rec["title"] = {"text": self.title.text, "t": self.title.t, "visible": self.title.visible}
        rec["font"] = self.font
        rec["spreadToNested"] = self.spread_to_nested
        f = self.frame
        rec["frame"] = [f.left, f.top, f.width, f.height]
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> ElasticGroup:
        title = GroupTitle(rec["title"]["text"], rec["title"]["t"], rec["title"]["visible"])
        el = cls(
            rec["id"],
            rec["children"],
            frame_margin=rec["frameMargin"],
            frame_visible=rec["frameVisible"],
            title=title,
            font=rec["font"],
            spread_to_nested=rec["spreadToNested"],
        )
        el.frame = Rect(*rec["frame"])
        el._load_visual(rec)
        return el


# -- dominant / subordinate relation -------------------------------------------


@dataclass
class Subordinate:
    element_id: str
    offset: tuple[float, float]


class DominantGroup:
    """Relation record: when the dominant element moves or resizes, every
    subordinate is translated by the dominant's anchor delta, so stored
    offsets are preserved exactly. Moving a subordinate only rewrites that
    subordinate's stored offset."""

    kind = "dominant"

    def __init__(self, group_id: str, dominant_id: str, subordinates: list[Subordinate]):
        self.group_id = group_id
        self.dominant_id = dominant_id
        self.subordinates = list(subordinates)

    @staticmethod
    def capture_offsets(group_id: str, dominant, subordinates) -> DominantGroup:
        anchor = dominant.bounds().top_left()
        subs = []
        for sub in subordinates:
            sub_anchor = sub.bounds().top_left()
            subs.append(Subordinate(sub.element_id, (sub_anchor.x - anchor.x, sub_anchor.y - anchor.y)))
        return DominantGroup(group_id, dominant.element_id, subs)

    def element_ids(self) -> list[str]:
        return [self.dominant_id] + [s.element_id for s in self.subordinates]

    def react(self, changed_id: str, anchor_delta: tuple[float, float], resolve) -> list[str]:
        """Propagate one element's change; returns ids this relation moved."""
        dx, dy = anchor_delta
        if changed_id == self.dominant_id:
            if dx == 0.0 and dy == 0.0:
                return []
            moved = []
            for sub in self.subordinates:
                resolve(sub.element_id).move_whole(dx, dy)
                moved.append(sub.element_id)
            return moved
        for sub in self.subordinates:
            if sub.element_id == changed_id:
                dom_anchor = resolve(self.dominant_id).bounds().top_left()
                sub_anchor = resolve(changed_id).bounds().top_left()
                sub.offset = (sub_anchor.x - dom_anchor.x, sub_anchor.y - dom_anchor.y)
                break
        return []

    def to_record(self) -> dict:
        return {
            "id": self.group_id,
            "kind": self.kind,
            "dominantId": self.dominant_id,
            "subordinates": [
                {"elementId": s.element_id, "offset": [s.offset[0], s.offset[1]]}
                for s in self.subordinates
            ],
        }

    @classmethod
    def from_record(cls, rec: dict) -> DominantGroup:
        subs = [Subordinate(s["elementId"], (s["offset"][0], s["offset"][1])) for s in rec["subordinates"]]
        return cls(rec["id"], rec["dominantId"], subs)


class RoofWeld:
    """Relation keeping a roof polygon welded to its base rectangle: the
    first two roof vertices sit on the rectangle's top edge and the remaining
    vertices are laid out from stored (fraction-along-base, height-above-base)
    pairs. Whole-moves of the roof drag the rectangle along."""

    kind = "weld"

    def __init__(self, group_id: str, rect_id: str, roof_id: str, shape: list[tuple[float, float]]):
        self.group_id = group_id
        self.rect_id = rect_id
        self.roof_id = roof_id
        self.shape = [(float(fx), float(h)) for fx, h in shape]

    @staticmethod
    def capture(group_id: str, rect_el, roof_el) -> RoofWeld:
        base = rect_el.rect
        shape = []
        for v in roof_el.vertices[2:]:
            fx = (v.x - base.left) / base.width if base.width else 0.0
            shape.append((fx, base.top - v.y))
        return RoofWeld(group_id, rect_el.element_id, roof_el.element_id, shape)

    def element_ids(self) -> list[str]:
        return [self.rect_id, self.roof_id]

    def reapply(self, resolve) -> None:
        rect_el = resolve(self.rect_id)
        roof = resolve(self.roof_id)
        base = rect_el.rect
        vertices = [Point(base.left, base.top), Point(base.right, base.top)]
        for fx, h in self.shape:
            vertices.append(Point(base.left + fx * base.width, base.top - h))
        roof.vertices = vertices

    def react(self, changed_id: str, anchor_delta: tuple[float, float], resolve) -> list[str]:
        if changed_id == self.rect_id:
            self.reapply(resolve)
            return [self.roof_id]
        if changed_id == self.roof_id:
            # re-capture apex layout from the current roof, then snap the base
            roof = resolve(self.roof_id)
            base = resolve(self.rect_id).rect
            self.shape = [
                ((v.x - base.left) / base.width if base.width else 0.0, base.top - v.y)
                for v in roof.vertices[2:]
            ]
            self.reapply(resolve)
            return [self.roof_id]
        return []

    def on_whole_move(self, changed_id: str, dx: float, dy: float, resolve) -> list[str]:
        """A whole-move of the roof carries the rectangle along."""
        if changed_id != self.roof_id or (dx == 0.0 and dy == 0.0):
            return []
        resolve(self.rect_id).move_whole(dx, dy)
        return [self.rect_id]

    def to_record(self) -> dict:
        return {
            "id": self.group_id,
            "kind": self.kind,
            "rectId": self.rect_id,
            "roofId": self.roof_id,
            "shape": [[fx, h] for fx, h in self.shape],
        }

    @classmethod
    def from_record(cls, rec: dict) -> RoofWeld:
        return cls(rec["id"], rec["rectId"], rec["roofId"], [(s[0], s[1]) for s in rec["shape"]])
