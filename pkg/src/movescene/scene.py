"""Scene runtime: owns the elements, the mover, the relation records, and
the bookkeeping that keeps derived state (covers, elastic frames, welds,
dominant offsets) consistent after every mutation.

All mutations of one scene happen on a single thread; distinct scenes are
independent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cover import Cover, MOVE_WHOLE
from .elements import CoverSettings, MovableElement
from .groups import ElasticGroup
from .mover import LEFT, Mover, UnknownElementError


@dataclass
class SceneSettings:
    handle_radius: float = 5.0
    strip_half_width: float = 3.0
    raise_on_catch: bool = True

    def cover_settings(self) -> CoverSettings:
        return CoverSettings(self.handle_radius, self.strip_half_width)


class Scene:
    def __init__(self, settings: SceneSettings | None = None):
        self.settings = settings or SceneSettings()
        self.elements: dict[str, MovableElement] = {}
        self.constraints: list = []  # dominant / weld relation records
        self.mover = Mover(self, raise_on_catch=self.settings.raise_on_catch)
        self._covers: dict[str, Cover] = {}

    # -- element access (the mover's provider interface) ----------------------

    def element_of(self, element_id: str) -> MovableElement:
        try:
            return self.elements[element_id]
        except KeyError:
            raise UnknownElementError(element_id) from None

    def cover_of(self, element_id: str) -> Cover:
        cover = self._covers.get(element_id)
        if cover is None:
            cover = self.element_of(element_id).define_cover(self.settings.cover_settings())
            self._covers[element_id] = cover
        return cover

    def invalidate_covers(self) -> None:
        self._covers.clear()

    # -- composition ------------------------------------------------------------

    def add_element(self, element: MovableElement, register: bool = True) -> MovableElement:
        if element.element_id in self.elements:
            raise ValueError(f"duplicate element id {element.element_id!r}")
        element.resolver = self.element_of
        self.elements[element.element_id] = element
        if register:
            self.mover.add(element.element_id)
        self._recompute_elastic()
        self.invalidate_covers()
        return element

    def add_constraint(self, constraint) -> None:
        self.constraints.append(constraint)

    def remove_element(self, element_id: str) -> None:
        self.element_of(element_id)  # raises for unknown ids
        if element_id in self.mover.registry:
            self.mover.remove(element_id)
        del self.elements[element_id]
        for el in self.elements.values():
            children = getattr(el, "children", None)
            if isinstance(children, list) and element_id in children:
                children.remove(element_id)
        self.constraints = [c for c in self.constraints if element_id not in c.element_ids()]
        self._recompute_elastic()
        self.invalidate_covers()

    def constraint_partners(self, element_id: str) -> list[str]:
        """Ids tied to the given element through any relation record."""
        partners: list[str] = []
        for c in self.constraints:
            ids = c.element_ids()
            if element_id in ids:
                partners.extend(i for i in ids if i != element_id and i not in partners)
        return partners

    def next_id(self, prefix: str) -> str:
        """Deterministic fresh id: smallest unused numeric suffix."""
        highest = 0
        marker = prefix + "-"
        for element_id in self.elements:
            if element_id.startswith(marker):
                suffix = element_id[len(marker):]
                if suffix.isdigit():
                    highest = max(highest, int(suffix))
        return f"{prefix}-{highest + 1}"

    # -- pointer events ------------------------------------------------------------

    def pointer_down(self, p, button: str) -> bool:
        """Returns whether the paint order changed (a raise re-renders)."""
        before = tuple(self.mover.registry)
        self.mover.catch(p, button)
        return tuple(self.mover.registry) != before

    def pointer_move(self, p) -> bool:
        grab = self.mover.grab
        if grab is None:
            return False
        element = self.element_of(grab.element_id)
        anchor_before = element.bounds().top_left()
        node = self.cover_of(grab.element_id).nodes[grab.node_id]
        whole = grab.button == LEFT and node.action == MOVE_WHOLE
        dx = p.x - grab.last_point.x
        dy = p.y - grab.last_point.y
        changed = self.mover.move(p)
        if changed:
            self.after_mutation(grab.element_id, anchor_before, (dx, dy) if whole else None)
        return changed

    def pointer_up(self):
        return self.mover.release()

    # -- mutation bookkeeping ---------------------------------------------------------

    def mutate(self, element_id: str, fn) -> bool:
        """Run a mutation against one element with full constraint refresh."""
        element = self.element_of(element_id)
        anchor_before = element.bounds().top_left()
        changed = bool(fn(element))
        if changed:
            self.after_mutation(element_id, anchor_before, None)
        return changed

    def after_mutation(self, element_id: str, anchor_before, whole_delta: tuple[float, float] | None) -> None:
        self.invalidate_covers()
        element = self.elements.get(element_id)
        if element is not None:
            anchor_after = element.bounds().top_left()
            delta = (anchor_after.x - anchor_before.x, anchor_after.y - anchor_before.y)
            for constraint in self.constraints:
                if whole_delta is not None and hasattr(constraint, "on_whole_move"):
                    constraint.on_whole_move(element_id, whole_delta[0], whole_delta[1], self.element_of)
                constraint.react(element_id, delta, self.element_of)
        self._recompute_elastic()
        self._drop_collapsed()
        self.invalidate_covers()

    def _recompute_elastic(self) -> None:
        done: set[str] = set()

        def depth_first(group: ElasticGroup) -> None:
            if group.element_id in done:
                return
            done.add(group.element_id)
            for cid in group.children:
                child = self.elements.get(cid)
                if isinstance(child, ElasticGroup):
                    depth_first(child)
            group.recompute_frame()

        for el in list(self.elements.values()):
            if isinstance(el, ElasticGroup):
                depth_first(el)

    def _drop_collapsed(self) -> None:
        collapsed = [eid for eid, el in self.elements.items() if el.collapsed]
        for eid in collapsed:
            if self.mover.grab is not None and self.mover.grab.element_id == eid:
                self.mover.release()
            self.remove_element(eid)

    # -- common commands ---------------------------------------------------------------

    def set_visible(self, element_id: str, visible: bool) -> bool:
        element = self.element_of(element_id)
        if element.visible == visible:
            return False
        element.visible = visible
        self._recompute_elastic()
        self.invalidate_covers()
        return True

    def set_color(self, element_id: str, color: str) -> bool:
        element = self.element_of(element_id)
        if element.fill_color is not None:
            element.fill_color = color
        element.stroke_color = color
        self.invalidate_covers()
        return True

    def set_font(self, element_id: str, font: str) -> bool:
        element = self.element_of(element_id)
        if not hasattr(element, "font"):
            return False
        element.font = font
        return True

    def set_z_order(self, element_id: str, position) -> bool:
        before = tuple(self.mover.registry)
        self.mover.set_z_order(element_id, position)
        return tuple(self.mover.registry) != before
