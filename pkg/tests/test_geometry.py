import math
import random

import pytest

from movescene.geometry import (
    DegeneratePolygonError,
    EmptyUnionError,
    Point,
    Rect,
    bounding_union,
    distance,
    distance_point_to_segment,
    is_convex,
    normalize_angle,
    point_in_polygon,
    rotate_about,
)

UNIT_SQUARE = [Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)]


def crossing_inside(p, vs, eps=1e-9):
    """Independent even-odd containment oracle: boundary distance check plus
    crossing count along a vertical ray (the engine casts horizontally)."""
    n = len(vs)
    for i in range(n):
        if distance_point_to_segment(p, vs[i], vs[(i + 1) % n]) <= eps:
            return True
    crossings = 0
    for i in range(n):
        a, b = vs[i], vs[(i + 1) % n]
        if (a.x > p.x) != (b.x > p.x):
            y_cross = a.y + (p.x - a.x) * (b.y - a.y) / (b.x - a.x)
            if p.y < y_cross:
                crossings += 1
    return crossings % 2 == 1


class TestDistancePointToSegment:
    def test_perpendicular_foot_inside(self):
        assert distance_point_to_segment(Point(0, 1), Point(0, 0), Point(2, 0)) == 1.0

    def test_nearest_is_endpoint(self):
        assert distance_point_to_segment(Point(3, 0), Point(0, 0), Point(2, 0)) == 1.0

    def test_point_on_segment(self):
        assert distance_point_to_segment(Point(1, 1), Point(0, 0), Point(2, 2)) == pytest.approx(0.0, abs=1e-12)

    def test_degenerate_segment_is_point_distance(self):
        assert distance_point_to_segment(Point(3, 4), Point(0, 0), Point(0, 0)) == 5.0


class TestPointInPolygon:
    def test_inside_unit_square(self):
        assert point_in_polygon(Point(0.5, 0.5), UNIT_SQUARE)

    def test_outside_unit_square(self):
        assert not point_in_polygon(Point(2, 2), UNIT_SQUARE)

    def test_boundary_counts_as_inside(self):
        assert point_in_polygon(Point(1, 0.5), UNIT_SQUARE)

    def test_fewer_than_three_vertices(self):
        with pytest.raises(DegeneratePolygonError):
            point_in_polygon(Point(0, 0), [Point(0, 0), Point(1, 1)])

    def test_agrees_with_crossing_oracle(self):
        rng = random.Random(7)
        for _ in range(1000):
            n = rng.randint(3, 8)
            vs = [Point(rng.uniform(0, 100), rng.uniform(0, 100)) for _ in range(n)]
            p = Point(rng.uniform(-20, 120), rng.uniform(-20, 120))
            # keep clear of the boundary: oracle and engine may disagree only
            # inside the epsilon band
            if any(
                distance_point_to_segment(p, vs[i], vs[(i + 1) % n]) < 1e-7
                for i in range(n)
            ):
                continue
            assert point_in_polygon(p, vs) == crossing_inside(p, vs)


class TestRotateAbout:
    def test_quarter_turn_screen_convention(self):
        r = rotate_about(Point(1, 0), Point(0, 0), math.pi / 2)
        assert r.x == pytest.approx(0.0, abs=1e-12)
        assert r.y == pytest.approx(1.0, abs=1e-12)

    def test_zero_angle_is_identity(self):
        p = Point(12.25, -3.5)
        assert rotate_about(p, Point(4, 4), 0.0) == p

    def test_composition_equals_sum(self):
        rng = random.Random(11)
        c = Point(5, 7)
        for _ in range(100):
            p = Point(rng.uniform(-50, 50), rng.uniform(-50, 50))
            a = rng.uniform(-6, 6)
            b = rng.uniform(-6, 6)
            two_step = rotate_about(rotate_about(p, c, a), c, b)
            one_step = rotate_about(p, c, a + b)
            assert distance(two_step, one_step) < 1e-9

    def test_preserves_radius(self):
        rng = random.Random(13)
        for _ in range(200):
            p = Point(rng.uniform(-50, 50), rng.uniform(-50, 50))
            c = Point(rng.uniform(-50, 50), rng.uniform(-50, 50))
            a = rng.uniform(-7, 7)
            assert abs(distance(rotate_about(p, c, a), c) - distance(p, c)) < 1e-9

    def test_isometry_on_point_sets(self):
        rng = random.Random(17)
        pts = [Point(rng.uniform(0, 200), rng.uniform(0, 200)) for _ in range(12)]
        c = Point(100, 100)
        a = rng.uniform(0, 6.28)
        rotated = [rotate_about(p, c, a) for p in pts]
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                assert abs(distance(pts[i], pts[j]) - distance(rotated[i], rotated[j])) < 1e-9


class TestBoundingUnion:
    def test_singleton(self):
        r = Rect(0, 0, 10, 10)
        assert bounding_union([r]) == r

    def test_pair(self):
        assert bounding_union([Rect(0, 0, 10, 10), Rect(5, 5, 10, 10)]) == Rect(0, 0, 15, 15)

    def test_empty_input(self):
        with pytest.raises(EmptyUnionError):
            bounding_union([])

    def test_order_insensitive(self):
        rng = random.Random(19)
        rects = [
            Rect(rng.uniform(0, 100), rng.uniform(0, 100), rng.uniform(1, 50), rng.uniform(1, 50))
            for _ in range(50)
        ]
        expected = bounding_union(rects)
        for _ in range(10):
            shuffled = rects[:]
            rng.shuffle(shuffled)
            assert bounding_union(shuffled) == expected

    def test_idempotent(self):
        u = bounding_union([Rect(0, 0, 10, 10), Rect(5, 5, 10, 10)])
        assert bounding_union([u, u]) == u


class TestIsConvex:
    def test_square(self):
        assert is_convex(UNIT_SQUARE)

    def test_arrowhead_quad(self):
        # sign-scan confirms mixed cross products
        quad = [Point(0, 0), Point(4, 0), Point(1, 1), Point(0, 4)]
        assert not is_convex(quad)

    def test_triangles_always_convex(self):
        rng = random.Random(23)
        for _ in range(50):
            tri = [Point(rng.uniform(0, 100), rng.uniform(0, 100)) for _ in range(3)]
            assert is_convex(tri)

    def test_collinear_tolerated(self):
        assert is_convex([Point(0, 0), Point(1, 0), Point(2, 0), Point(2, 2), Point(0, 2)])

    def test_degenerate(self):
        with pytest.raises(DegeneratePolygonError):
            is_convex([Point(0, 0), Point(1, 1)])


def test_normalize_angle_range():
    rng = random.Random(29)
    for _ in range(200):
        a = normalize_angle(rng.uniform(-50, 50))
        assert 0.0 <= a < 2 * math.pi


def test_rect_rejects_negative_size():
    with pytest.raises(ValueError):
        Rect(0, 0, -1, 5)
