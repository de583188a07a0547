import pytest

from movescene.elements import RectangleEl
from movescene.geometry import Point, Rect
from movescene.mover import DuplicateRegistrationError, GrabProtocolError, UnknownElementError
from movescene.persistence import save_scene
from movescene.scene import Scene


def rect_scene(*rects, raise_on_catch=True):
    scene = Scene()
    scene.settings.raise_on_catch = raise_on_catch
    scene.mover.raise_on_catch = raise_on_catch
    for i, r in enumerate(rects):
        scene.add_element(RectangleEl(f"r{i}", r, fill_color="#808080"))
    return scene


class TestRegistration:
    def test_add_appends_on_top(self):
        scene = rect_scene(Rect(0, 0, 10, 10), Rect(20, 0, 10, 10))
        assert scene.mover.registry == ["r0", "r1"]

    def test_duplicate_add(self):
        scene = rect_scene(Rect(0, 0, 10, 10))
        with pytest.raises(DuplicateRegistrationError):
            scene.mover.add("r0")

    def test_clear_empties(self):
        scene = rect_scene(Rect(0, 0, 10, 10))
        scene.mover.clear()
        assert scene.mover.registry == []
        scene.mover.clear()  # no-op on empty
        assert scene.mover.registry == []

    def test_clear_during_grab_leaves_element_in_place(self):
        scene = rect_scene(Rect(10, 10, 100, 60))
        assert scene.mover.catch(Point(50, 40), "left")
        scene.mover.move(Point(60, 45))
        scene.mover.clear()
        assert scene.mover.grab is None
        el = scene.element_of("r0")
        assert (el.rect.left, el.rect.top) == (20, 15)


class TestCatch:
    def test_empty_registry(self):
        scene = Scene()
        assert scene.mover.catch(Point(5, 5), "left") is False

    def test_catch_rect_body(self):
        scene = rect_scene(Rect(10, 10, 100, 60))
        assert scene.mover.catch(Point(50, 40), "left")
        grab = scene.mover.grab
        assert grab.element_id == "r0"
        node = scene.cover_of("r0").nodes[grab.node_id]
        assert node.action == "moveWhole"

    def test_topmost_wins_in_overlap(self):
        scene = rect_scene(Rect(10, 10, 100, 60), Rect(50, 30, 100, 60))
        assert scene.mover.catch(Point(70, 40), "left")  # inside both interiors
        assert scene.mover.grab.element_id == "r1"

    def test_catch_during_grab_is_protocol_error(self):
        scene = rect_scene(Rect(10, 10, 100, 60))
        scene.mover.catch(Point(50, 40), "left")
        with pytest.raises(GrabProtocolError):
            scene.mover.catch(Point(50, 40), "left")

    def test_left_catch_raises_to_top(self):
        scene = rect_scene(Rect(10, 10, 100, 60), Rect(200, 10, 100, 60))
        scene.mover.catch(Point(50, 40), "left")
        assert scene.mover.registry == ["r1", "r0"]

    def test_raise_disabled_by_scene_flag(self):
        scene = rect_scene(Rect(10, 10, 100, 60), Rect(200, 10, 100, 60), raise_on_catch=False)
        scene.mover.catch(Point(50, 40), "left")
        assert scene.mover.registry == ["r0", "r1"]

    def test_rect_ignores_right_button(self):
        # axis-aligned rectangles do not rotate, so a right press falls through
        scene = rect_scene(Rect(10, 10, 100, 60))
        assert scene.mover.catch(Point(50, 40), "right") is False

    def test_hidden_element_not_caught(self):
        scene = rect_scene(Rect(10, 10, 100, 60))
        scene.element_of("r0").visible = False
        assert scene.mover.catch(Point(50, 40), "left") is False


class TestMove:
    def test_no_grab(self):
        scene = rect_scene(Rect(10, 10, 100, 60))
        assert scene.mover.move(Point(50, 40)) is False

    def test_body_drag_translates_exactly(self):
        scene = rect_scene(Rect(10, 10, 100, 60))
        scene.mover.catch(Point(50, 40), "left")
        assert scene.mover.move(Point(57, 37)) is True
        el = scene.element_of("r0")
        assert (el.rect.left, el.rect.top) == (17, 7)
        assert (el.rect.width, el.rect.height) == (100, 60)

    def test_deltas_are_incremental(self):
        scene = rect_scene(Rect(10, 10, 100, 60))
        scene.mover.catch(Point(50, 40), "left")
        scene.mover.move(Point(55, 40))
        scene.mover.move(Point(55, 48))
        el = scene.element_of("r0")
        assert (el.rect.left, el.rect.top) == (15, 18)


class TestRelease:
    def test_returns_what_was_held(self):
        scene = rect_scene(Rect(10, 10, 100, 60))
        scene.mover.catch(Point(50, 40), "left")
        info = scene.mover.release()
        assert (info.element_id, info.button) == ("r0", "left")

    def test_release_without_grab(self):
        scene = rect_scene(Rect(10, 10, 100, 60))
        assert scene.mover.release() is None

    def test_pure_click_leaves_scene_unchanged(self):
        scene = rect_scene(Rect(10, 10, 100, 60))
        before = save_scene(scene)
        scene.mover.catch(Point(50, 40), "left")
        scene.mover.release()
        assert save_scene(scene) == before


class TestZOrder:
    def test_move_to_top(self):
        scene = rect_scene(Rect(0, 0, 10, 10), Rect(20, 0, 10, 10), Rect(40, 0, 10, 10))
        scene.mover.set_z_order("r0", "top")
        assert scene.mover.registry == ["r1", "r2", "r0"]

    def test_unknown_id(self):
        scene = rect_scene(Rect(0, 0, 10, 10))
        with pytest.raises(UnknownElementError):
            scene.mover.set_z_order("nope", "top")

    def test_round_trip_preserves_neighbor_order(self):
        scene = rect_scene(*[Rect(i * 20, 0, 10, 10) for i in range(5)])
        original = list(scene.mover.registry)
        scene.mover.set_z_order("r2", "top")
        scene.mover.set_z_order("r2", "bottom")
        scene.mover.set_z_order("r2", 2)
        assert scene.mover.registry == original

    def test_index_positions(self):
        scene = rect_scene(Rect(0, 0, 10, 10), Rect(20, 0, 10, 10), Rect(40, 0, 10, 10))
        scene.mover.set_z_order("r2", 0)
        assert scene.mover.registry == ["r2", "r0", "r1"]
