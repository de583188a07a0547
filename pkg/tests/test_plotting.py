import math
import random

import pytest

from movescene.geometry import Point, Rect
from movescene.groups import DominantGroup
from movescene.plotting import (
    AreaUnderCurveEl,
    CommentEl,
    IntegrationDomainError,
    PlottingArea,
    ScaleEl,
    curve_parametric,
    curve_y_of_x,
    integrate,
    integrate_polyline,
)
from movescene.scene import Scene


def make_area(**kwargs):
    defaults = dict(rect=Rect(100, 100, 100, 100), x_range=(0.0, 10.0), y_range=(0.0, 10.0))
    defaults.update(kwargs)
    return PlottingArea("plot", **defaults)


class TestMapping:
    def test_midpoint(self):
        area = make_area()
        p = area.value_to_pixel(5.0, 0.0)
        assert p.x == 150.0  # halfway across the 100 px width

    def test_inverse_round_trip(self):
        area = make_area(rect=Rect(37, 59, 311, 203), x_range=(-4.0, 9.0), y_range=(-2.5, 7.25))
        rng = random.Random(53)
        for _ in range(1000):
            vx = rng.uniform(-4, 9)
            vy = rng.uniform(-2.5, 7.25)
            px = area.value_to_pixel(vx, vy)
            rx, ry = area.pixel_to_value(px)
            assert abs(rx - vx) < 1e-9
            assert abs(ry - vy) < 1e-9

    def test_y_axis_points_up_in_value_space(self):
        area = make_area()
        low = area.value_to_pixel(0.0, 0.0)
        high = area.value_to_pixel(0.0, 10.0)
        assert high.y < low.y

    def test_resize_rescales_mapping_not_values(self):
        area = make_area(curves=[curve_y_of_x("sin(x)", sample_count=50)])
        before = area.sample_curve(area.curves[0])
        area.rect = Rect(100, 100, 250, 80)
        after = area.sample_curve(area.curves[0])
        assert before == after  # value-space samples are untouched by resize


class TestSampling:
    def test_three_uniform_samples(self):
        area = make_area(x_range=(0.0, 1.0), curves=[curve_y_of_x("x", sample_count=3)])
        samples = area.sample_curve(area.curves[0])
        assert samples == [(0.0, 0.0), (0.5, 0.5), (1.0, 1.0)]

    def test_log_gap_outside_domain(self):
        area = make_area(x_range=(-1.0, 1.0), curves=[curve_y_of_x("ln(x)", sample_count=9)])
        samples = area.sample_curve(area.curves[0])
        for v in samples[:5]:  # x in [-1, 0]
            assert v is None
        assert samples[-1] == (1.0, 0.0)

    def test_parametric_circle_unit_norm(self):
        curve = curve_parametric("cos(r)", "sin(r)", (0.0, 2 * math.pi), sample_count=257)
        area = make_area(x_range=(-1.5, 1.5), y_range=(-1.5, 1.5), curves=[curve])
        for v in area.sample_curve(curve):
            assert v is not None
            assert abs(math.hypot(v[0], v[1]) - 1.0) < 1e-12

    def test_default_sample_count_tracks_width(self):
        area = make_area(rect=Rect(0, 0, 200, 100), curves=[curve_y_of_x("x")])
        assert area._samples(area.curves[0]) == 400
        area.rect = Rect(0, 0, 20, 100)
        assert area._samples(area.curves[0]) == 64  # floor

    def test_bad_expression_rejected_at_construction(self):
        with pytest.raises(Exception):
            curve_y_of_x("foo(x)")
        with pytest.raises(ValueError):
            curve_y_of_x("cos(r)")  # y(x) curves use x


class TestIntegrate:
    def test_linear(self):
        assert integrate(lambda x: x, 0.0, 1.0) == pytest.approx(0.5, abs=1e-8)

    def test_sine_half_period(self):
        # antiderivative oracle: F = -cos, F(pi) - F(0) = 2
        assert integrate(math.sin, 0.0, math.pi) == pytest.approx(2.0, abs=1e-8)

    def test_needs_increasing_bounds(self):
        with pytest.raises(ValueError):
            integrate(lambda x: x, 1.0, 0.0)

    def test_undefined_stretch_raises(self):
        with pytest.raises(IntegrationDomainError):
            integrate(lambda x: None, -2.0, -1.0)

    def test_polyline_triangle_exact(self):
        assert integrate_polyline([(0.0, 0.0), (1.0, 1.0), (2.0, 0.0)], 0.0, 2.0) == 1.0

    def test_polyline_partial_interval(self):
        # flat segment of height 1 over [0, 4], integrated over [1, 3]
        assert integrate_polyline([(0.0, 1.0), (4.0, 1.0)], 1.0, 3.0) == 2.0


class TestAreaUnderCurve:
    def make(self, **kwargs):
        defaults = dict(
            rect=Rect(50, 50, 200, 100),
            x_range=(0.0, 4.0),
            y_range=(-2.0, 2.0),
            a=0.0,
            b=1.0,
            fn_text="x",
        )
        defaults.update(kwargs)
        return AreaUnderCurveEl("area", **defaults)

    def test_move_border_changes_integral(self):
        area = self.make()
        assert area.integral() == pytest.approx(0.5, abs=1e-8)
        assert area.move_border("b", 2.0)
        assert area.integral() == pytest.approx(2.0, abs=1e-8)

    def test_border_cannot_cross(self):
        area = self.make()
        area.move_border("a", 5.0)  # dragged past b
        assert area.a < area.b
        assert area.b - area.a == pytest.approx(0.0, abs=1e-8)

    def test_scripted_drags_match_fresh_recompute(self):
        area = self.make(fn_text="sin(x)")
        rng = random.Random(59)
        for _ in range(40):
            which = rng.choice(("a", "b"))
            area.move_border(which, rng.uniform(0.0, 4.0))
        expected = integrate(lambda x: math.sin(x), area.a, area.b)
        assert area.integral() == pytest.approx(expected, abs=1e-9)

    def test_polyline_variant(self):
        area = self.make(fn_text=None, fn_joints=[(0.0, 0.0), (1.0, 1.0), (2.0, 0.0)], a=0.0, b=2.0)
        assert area.integral() == 1.0

    def test_joint_drag_in_value_space(self):
        area = self.make(fn_text=None, fn_joints=[(0.0, 0.0), (1.0, 1.0), (2.0, 0.0)], a=0.0, b=2.0)
        scale_x = area.rect.width / 4.0  # pixels per value unit
        joint_px = area.value_to_pixel(1.0, 1.0)
        assert area.move_node(2 + 1, scale_x, 0.0, Point(joint_px.x + scale_x, joint_px.y), "left")
        assert area.fn_joints[1][0] == pytest.approx(2.0)

    def test_insert_delete_joint(self):
        area = self.make(fn_text=None, fn_joints=[(0.0, 0.0), (2.0, 1.0)], a=0.0, b=2.0)
        area.insert_joint(0, (1.0, 0.5))
        assert len(area.fn_joints) == 3
        area.delete_joint(1)
        assert area.fn_joints == [(0.0, 0.0), (2.0, 1.0)]
        with pytest.raises(ValueError):
            area.delete_joint(0)  # two joints is the floor

    def test_domain_error_becomes_badge_not_crash(self):
        area = self.make(fn_text="ln(x)", x_range=(-2.0, 2.0), a=-1.5, b=-0.5)
        labels = [i for i in area.draw_primitives() if i["kind"] == "text"]
        assert any("domain error" in i["text"] for i in labels)


class TestSubordinates:
    def test_scales_and_comments_follow_area(self):
        scene = Scene()
        area = make_area()
        scene.add_element(area)
        scale = ScaleEl("sx", "plot", Point(100, 205), axis="x", length=100.0)
        note = CommentEl("cm", Point(100, 90), "hello", owner_id="plot")
        scene.add_element(scale)
        scene.add_element(note)
        scene.add_constraint(DominantGroup.capture_offsets("dma", area, [scale, note]))
        scene.mutate("plot", lambda el: el.move_whole(25, -10))
        assert scale.anchor == Point(125, 195)
        assert note.position == Point(125, 80)

    def test_scale_labels_derive_from_owner_range(self):
        scene = Scene()
        area = make_area(x_range=(0.0, 8.0))
        scene.add_element(area)
        scale = ScaleEl("sx", "plot", Point(100, 205), axis="x", length=100.0, ticks=3)
        scene.add_element(scale)
        labels = [i["text"] for i in scale.draw_primitives() if i["kind"] == "text"]
        assert labels == ["0", "4", "8"]


class TestOverlapPaintOrder:
    def test_zorder_change_requires_no_geometry_change(self):
        from movescene.persistence import scene_to_doc
        from movescene.render import build_render_list

        scene = Scene()
        a = make_area()
        a.element_id = "plot-a"
        b = PlottingArea("plot-b", Rect(150, 150, 100, 100), (0.0, 1.0), (0.0, 1.0))
        scene.add_element(a)
        scene.add_element(b)
        geometry_before = scene_to_doc(scene)["elements"]
        order_before = [i["elementId"] for i in build_render_list(scene)["items"]]
        scene.set_z_order("plot-a", "top")
        order_after = [i["elementId"] for i in build_render_list(scene)["items"]]
        assert order_before != order_after
        assert order_after[-1] == "plot-a"
        assert scene_to_doc(scene)["elements"] == geometry_before


def test_integrate_depth_cap_raises():
    import math

    with pytest.raises(IntegrationDomainError):
        integrate(math.sin, 0.0, 3.0, tol=1e-15, max_depth=2)
