"""Plotting areas with subordinate scales and comments, curve sampling, and
the area-under-a-curve demo with movable integration borders.

Everything is expressed in two spaces: value space (math coordinates, y up)
and pixel space (screen, y down), linked by an invertible affine map derived
from the area's rect and ranges. Curve expression texts are stored verbatim;
sampled points are derived and never persisted.
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
from .elements import CoverSettings, MovableElement
from .expressions import Expr, evaluate, parse, variables
from .geometry import Point, Rect, points_bounds
from .groups import DEFAULT_FONT, _edge_resize
from .render import polygon_prim, polyline_prim, text_prim

PLOT_MIN_SIZE = 40.0
BORDER_MIN_GAP = 1e-9  # integration borders may never cross


class IntegrationDomainError(ValueError):
    """The integrand is undefined or not resolvable over the interval."""


# -- curve specs -----------------------------------------------------------------


@dataclass
class CurveSpec:
    """One curve of a plotting area: y(x) or a parametric pair {x(r), y(r)}.

    Texts are kept exactly as typed; the parsed trees are derived state.
    """

    kind: str  # "yOfX" | "parametric"
    text: str | None = None
    x_text: str | None = None
    y_text: str | None = None
    r_range: tuple[float, float] | None = None
    color: str = "#2040c0"
    sample_count: int | None = None

    def __post_init__(self) -> None:
        if self.kind == "yOfX":
            self._y_ast: Expr = parse(self.text)
            if not variables(self._y_ast) <= {"x"}:
                raise ValueError("y(x) curves use the variable x")
            self._x_ast = None
        elif self.kind == "parametric":
            self._x_ast = parse(self.x_text)
            self._y_ast = parse(self.y_text)
            if not (variables(self._x_ast) | variables(self._y_ast)) <= {"r"}:
                raise ValueError("parametric curves use the variable r")
            if self.r_range is None:
                raise ValueError("parametric curves need an r range")
        else:
            raise ValueError(f"unknown curve kind {self.kind!r}")

    def to_record(self) -> dict:
        return {
            "kind": self.kind,
            "text": self.text,
            "xText": self.x_text,
            "yText": self.y_text,
            "rRange": list(self.r_range) if self.r_range else None,
            "color": self.color,
            "sampleCount": self.sample_count,
        }

    @classmethod
    def from_record(cls, rec: dict) -> CurveSpec:
        return cls(
            kind=rec["kind"],
            text=rec["text"],
            x_text=rec["xText"],
            y_text=rec["yText"],
            r_range=tuple(rec["rRange"]) if rec["rRange"] else None,
            color=rec["color"],
            sample_count=rec["sampleCount"],
        )


def curve_y_of_x(text: str, color: str = "#2040c0", sample_count: int | None = None) -> CurveSpec:
    return CurveSpec(kind="yOfX", text=text, color=color, sample_count=sample_count)


def curve_parametric(
    x_text: str,
    y_text: str,
    r_range: tuple[float, float],
    color: str = "#2040c0",
    sample_count: int | None = None,
) -> CurveSpec:
    return CurveSpec(kind="parametric", x_text=x_text, y_text=y_text, r_range=r_range, color=color, sample_count=sample_count)


# -- plotting area ------------------------------------------------------------------


def _clip_segment(rect: Rect, p0: Point, p1: Point) -> tuple[Point, Point] | None:
    """Liang-Barsky clip of segment p0-p1 against rect; None if fully out."""
    dx = p1.x - p0.x
    dy = p1.y - p0.y
    t0, t1 = 0.0, 1.0
    for p, q in (
        (-dx, p0.x - rect.left),
        (dx, rect.right - p0.x),
        (-dy, p0.y - rect.top),
        (dy, rect.bottom - p0.y),
    ):
        if p == 0.0:
            if q < 0.0:
                return None
            continue
        r = q / p
        if p < 0.0:
            if r > t1:
                return None
            t0 = max(t0, r)
        else:
            if r < t0:
                return None
            t1 = min(t1, r)
    return (Point(p0.x + t0 * dx, p0.y + t0 * dy), Point(p0.x + t1 * dx, p0.y + t1 * dy))


class PlottingArea(MovableElement):
    """Rectangular plot: movable by any inner point, resizable by borders and
    corners; holds any number of curves. Scales and comments follow it via
    the dominant/subordinate relation."""

    type_tag = "plot"

    def __init__(
        self,
        element_id: str,
        rect: Rect,
        x_range: tuple[float, float],
        y_range: tuple[float, float],
        curves: list[CurveSpec] | None = None,
        background_color: str = "#ffffff",
        **visual,
    ):
        super().__init__(element_id, **visual)
        if x_range[0] >= x_range[1] or y_range[0] >= y_range[1]:
            raise ValueError("plot ranges must be nonempty")
        self.rect = rect
        self.x_range = (float(x_range[0]), float(x_range[1]))
        self.y_range = (float(y_range[0]), float(y_range[1]))
        self.curves = list(curves or [])
        self.background_color = background_color

    # -- value <-> pixel -----------------------------------------------------

    def value_to_pixel(self, vx: float, vy: float) -> Point:
        x0, x1 = self.x_range
        y0, y1 = self.y_range
        px = self.rect.left + (vx - x0) * self.rect.width / (x1 - x0)
        py = self.rect.bottom - (vy - y0) * self.rect.height / (y1 - y0)
        return Point(px, py)

    def pixel_to_value(self, p: Point) -> tuple[float, float]:
        x0, x1 = self.x_range
        y0, y1 = self.y_range
        vx = x0 + (p.x - self.rect.left) * (x1 - x0) / self.rect.width
        vy = y0 + (self.rect.bottom - p.y) * (y1 - y0) / self.rect.height
        return (vx, vy)

    # -- sampling --------------------------------------------------------------

    def _samples(self, curve: CurveSpec) -> int:
        if curve.sample_count is not None:
            return max(2, curve.sample_count)
        return max(64, int(2 * self.rect.width))

    def sample_curve(self, curve: CurveSpec) -> list[tuple[float, float] | None]:
        """Uniform value-space samples; undefined evaluations become None
        gaps that split the drawn polyline."""
        n = self._samples(curve)
        out: list[tuple[float, float] | None] = []
        if curve.kind == "yOfX":
            x0, x1 = self.x_range
            for i in range(n):
                vx = x0 + (x1 - x0) * i / (n - 1)
                vy = evaluate(curve._y_ast, vx)
                out.append(None if vy is None else (vx, vy))
        else:
            r0, r1 = curve.r_range
            for i in range(n):
                r = r0 + (r1 - r0) * i / (n - 1)
                vx = evaluate(curve._x_ast, r)
                vy = evaluate(curve._y_ast, r)
                out.append(None if vx is None or vy is None else (vx, vy))
        return out

    def curve_pixel_points(self, curve: CurveSpec) -> list[Point | None]:
        return [
            None if v is None else self.value_to_pixel(v[0], v[1])
            for v in self.sample_curve(curve)
        ]

    # -- element contract --------------------------------------------------------

    # node ids: 0..3 corners, 4..7 edges N S W E, 8 interior.
    def define_cover(self, settings: CoverSettings) -> Cover:
        cb = CoverBuilder()
        nw, ne, se, sw = self.rect.corners()
        cb.circle(nw, settings.handle_radius, RESIZE, CURSOR_SIZE_NWSE)
        cb.circle(ne, settings.handle_radius, RESIZE, CURSOR_SIZE_NESW)
        cb.circle(se, settings.handle_radius, RESIZE, CURSOR_SIZE_NWSE)
        cb.circle(sw, settings.handle_radius, RESIZE, CURSOR_SIZE_NESW)
        cb.strip(nw, ne, settings.strip_half_width, RESIZE, CURSOR_SIZE_V)
        cb.strip(sw, se, settings.strip_half_width, RESIZE, CURSOR_SIZE_V)
        cb.strip(nw, sw, settings.strip_half_width, RESIZE, CURSOR_SIZE_H)
        cb.strip(ne, se, settings.strip_half_width, RESIZE, CURSOR_SIZE_H)
        cb.polygon(self.rect.corners(), MOVE_WHOLE, CURSOR_MOVE)
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
        corner_to_edge = {0: 0, 1: 1, 2: 2, 3: 3, 4: 4, 5: 5, 6: 6, 7: 7}
        new = _edge_resize(self.rect, corner_to_edge[node_id], dx, dy, PLOT_MIN_SIZE)
        if new == self.rect:
            return False
        self.rect = new
        return True

    def body_contains(self, p: Point) -> bool:
        return self.rect.contains(p)

    def draw_primitives(self) -> list[dict]:
        prims = [polygon_prim(self.rect.corners(), self.background_color, self.stroke_color, self.stroke_width)]
        for curve in self.curves:
            prims.extend(self._curve_prims(curve))
        return prims

    def _curve_prims(self, curve: CurveSpec) -> list[dict]:
        prims = []
        run: list[Point] = []
        pts = self.curve_pixel_points(curve)

        def flush():
            if len(run) >= 2:
                prims.append(polyline_prim(list(run), curve.color, 1.5))
            run.clear()

        prev: Point | None = None
        for pt in pts:
            if pt is None:
                flush()
                prev = None
                continue
            if prev is None:
                if self.rect.contains(pt):
                    run.append(pt)
                prev = pt
                continue
            clipped = _clip_segment(self.rect, prev, pt)
            if clipped is None:
                flush()
            else:
                c0, c1 = clipped
                if not run or run[-1] != c0:
                    flush()
                    run.append(c0)
                run.append(c1)
            prev = pt
        flush()
        return prims

    def to_record(self) -> dict:
        rec = self.base_record()
        r = self.rect
        rec["rect"] = [r.left, r.top, r.width, r.height]
        rec["xRange"] = list(self.x_range)
        rec["yRange"] = list(self.y_range)
        rec["curves"] = [c.to_record() for c in self.curves]
        rec["backgroundColor"] = self.background_color
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> PlottingArea:
        el = cls(
            rec["id"],
            Rect(*rec["rect"]),
            tuple(rec["xRange"]),
            tuple(rec["yRange"]),
            [CurveSpec.from_record(c) for c in rec["curves"]],
            background_color=rec["backgroundColor"],
        )
        el._load_visual(rec)
        return el


class ScaleEl(MovableElement):
    """Tick scale subordinate to a plotting area; movable anywhere on its
    own, it follows the area's moves and resizes."""

    type_tag = "scale"

    def __init__(
        self,
        element_id: str,
        owner_id: str,
        anchor: Point,
        axis: str = "x",
        length: float = 100.0,
        ticks: int = 5,
        font: str = DEFAULT_FONT,
        **visual,
    ):
        super().__init__(element_id, **visual)
        if axis not in ("x", "y"):
            raise ValueError("scale axis must be 'x' or 'y'")
        self.owner_id = owner_id
        self.anchor = anchor
        self.axis = axis
        self.length = float(length)
        self.ticks = max(2, int(ticks))
        self.font = font

    def _line(self) -> tuple[Point, Point]:
        if self.axis == "x":
            return (self.anchor, Point(self.anchor.x + self.length, self.anchor.y))
        return (self.anchor, Point(self.anchor.x, self.anchor.y + self.length))

    def define_cover(self, settings: CoverSettings) -> Cover:
        cb = CoverBuilder()
        a, b = self._line()
        cb.strip(a, b, settings.strip_half_width + 2.0, MOVE_WHOLE, CURSOR_MOVE)
        return cb.build()

    def bounds(self) -> Rect:
        a, b = self._line()
        return points_bounds([a, b]).inflated(4.0)

    def move_whole(self, dx: float, dy: float) -> bool:
        if dx == 0.0 and dy == 0.0:
            return False
        self.anchor = self.anchor.moved(dx, dy)
        return True

    def _reshape(self, node_id: int, dx: float, dy: float, p: Point) -> bool:
        return False

    def _owner_range(self) -> tuple[float, float] | None:
        if self.resolver is None:
            return None
        try:
            owner = self.resolver(self.owner_id)
        except KeyError:
            return None
        return owner.x_range if self.axis == "x" else owner.y_range

    def draw_primitives(self) -> list[dict]:
        a, b = self._line()
        prims = [polyline_prim([a, b], self.stroke_color, self.stroke_width)]
        rng = self._owner_range()
        for i in range(self.ticks):
            t = i / (self.ticks - 1)
            if self.axis == "x":
                pos = Point(a.x + t * self.length, a.y)
                prims.append(polyline_prim([pos, Point(pos.x, pos.y + 4.0)], self.stroke_color, self.stroke_width))
                label_pos = Point(pos.x - 6.0, pos.y + 14.0)
            else:
                pos = Point(a.x, a.y + t * self.length)
                prims.append(polyline_prim([pos, Point(pos.x - 4.0, pos.y)], self.stroke_color, self.stroke_width))
                label_pos = Point(pos.x - 30.0, pos.y + 4.0)
            if rng is not None:
                lo, hi = rng
                value = hi - t * (hi - lo) if self.axis == "y" else lo + t * (hi - lo)
                prims.append(text_prim(label_pos, f"{value:g}", self.font, self.stroke_color))
        return prims

    def to_record(self) -> dict:
        rec = self.base_record()
        rec["ownerId"] = self.owner_id
        rec["anchor"] = [self.anchor.x, self.anchor.y]
        rec["axis"] = self.axis
        rec["length"] = self.length
        rec["ticks"] = self.ticks
        rec["font"] = self.font
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> ScaleEl:
        el = cls(
            rec["id"],
            rec["ownerId"],
            Point(*rec["anchor"]),
            axis=rec["axis"],
            length=rec["length"],
            ticks=rec["ticks"],
            font=rec["font"],
        )
        el._load_visual(rec)
        return el


class CommentEl(MovableElement):
    """Free text note, optionally subordinate to a plotting area."""

    type_tag = "comment"

    def __init__(
        self,
        element_id: str,
        position: Point,
        text: str,
        owner_id: str | None = None,
        font: str = DEFAULT_FONT,
        **visual,
    ):
        super().__init__(element_id, **visual)
        self.position = position
        self.text = text
        self.owner_id = owner_id
        self.font = font

    def _box(self) -> Rect:
        width = max(7.0 * len(self.text), 10.0)
        return Rect(self.position.x, self.position.y - 12.0, width, 16.0)

    def define_cover(self, settings: CoverSettings) -> Cover:
        cb = CoverBuilder()
        cb.polygon(self._box().corners(), MOVE_WHOLE, CURSOR_MOVE)
        return cb.build()

    def bounds(self) -> Rect:
        return self._box()

    def move_whole(self, dx: float, dy: float) -> bool:
        if dx == 0.0 and dy == 0.0:
            return False
        self.position = self.position.moved(dx, dy)
        return True

    def _reshape(self, node_id: int, dx: float, dy: float, p: Point) -> bool:
        return False

    def draw_primitives(self) -> list[dict]:
        return [text_prim(self.position, self.text, self.font, self.stroke_color)]

    def to_record(self) -> dict:
        rec = self.base_record()
        rec["position"] = [self.position.x, self.position.y]
        rec["text"] = self.text
        rec["ownerId"] = self.owner_id
        rec["font"] = self.font
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> CommentEl:
        el = cls(rec["id"], Point(*rec["position"]), rec["text"], owner_id=rec["ownerId"], font=rec["font"])
        el._load_visual(rec)
        return el


# -- numerical integration ---------------------------------------------------------


def _probe(f, t: float, a: float, b: float) -> float:
    """Evaluate f at t; a singular point is nudged once toward the interior."""
    v = f(t)
    if v is not None and math.isfinite(v):
        return v
    nudge = (b - a) * 1e-12
    t2 = t + nudge if t < (a + b) / 2.0 else t - nudge
    v = f(t2)
    if v is not None and math.isfinite(v):
        return v
    raise IntegrationDomainError(f"integrand undefined around {t}")


def integrate(f, a: float, b: float, tol: float = 1e-8, max_depth: int = 20) -> float:
    """Adaptive Simpson quadrature of f over [a, b] to absolute tolerance.

    f maps a float to a float or None (undefined). Isolated undefined points
    are stepped around; an undefined stretch or exceeding the depth cap
    raises IntegrationDomainError.
    """
    if not a < b:
        raise ValueError("integration needs a < b")

    def simpson(fa: float, fm: float, fb: float, h: float) -> float:
        return h / 6.0 * (fa + 4.0 * fm + fb)

    def recurse(lo: float, hi: float, flo: float, fmid: float, fhi: float, whole: float, eps: float, depth: int) -> float:
        if depth > max_depth:
            raise IntegrationDomainError("interval halving exceeded the depth cap")
        mid = (lo + hi) / 2.0
        lm = (lo + mid) / 2.0
        rm = (mid + hi) / 2.0
        flm = _probe(f, lm, a, b)
        frm = _probe(f, rm, a, b)
        left = simpson(flo, flm, fmid, mid - lo)
        right = simpson(fmid, frm, fhi, hi - mid)
        if abs(left + right - whole) <= 15.0 * eps:
            return left + right + (left + right - whole) / 15.0
        return recurse(lo, mid, flo, flm, fmid, left, eps / 2.0, depth + 1) + recurse(
            mid, hi, fmid, frm, fhi, right, eps / 2.0, depth + 1
        )

    fa = _probe(f, a, a, b)
    fb = _probe(f, b, a, b)
    m = (a + b) / 2.0
    fm = _probe(f, m, a, b)
    whole = simpson(fa, fm, fb, b - a)
    return recurse(a, b, fa, fm, fb, whole, tol, 0)


def integrate_polyline(joints: list[tuple[float, float]], a: float, b: float) -> float:
    """Exact trapezoid integral of a piecewise-linear function over [a, b]."""
    total = 0.0
    for (x1, y1), (x2, y2) in zip(joints, joints[1:]):
        if x2 < x1:
            x1, y1, x2, y2 = x2, y2, x1, y1
        lo = max(a, x1)
        hi = min(b, x2)
        if hi <= lo or x2 == x1:
            continue
        slope = (y2 - y1) / (x2 - x1)
        y_lo = y1 + slope * (lo - x1)
        y_hi = y1 + slope * (hi - x1)
        total += (hi - lo) * (y_lo + y_hi) / 2.0
    return total


# -- area under a curve ---------------------------------------------------------------


class AreaUnderCurveEl(MovableElement):
    """The teaching demo: a painted area under a curve between movable
    borders a and b. The function is an expression or an editable polyline
    (joints in value space, each a sensitive dot)."""

    type_tag = "areaunder"

    def __init__(
        self,
        element_id: str,
        rect: Rect,
        x_range: tuple[float, float],
        y_range: tuple[float, float],
        a: float,
        b: float,
        fn_text: str | None = None,
        fn_joints: list[tuple[float, float]] | None = None,
        **visual,
    ):
        visual.setdefault("fill_color", "#9fd89f")
        super().__init__(element_id, **visual)
        if (fn_text is None) == (fn_joints is None):
            raise ValueError("give exactly one of fn_text / fn_joints")
        if not a < b:
            raise ValueError("borders need a < b")
        self.rect = rect
        self.x_range = (float(x_range[0]), float(x_range[1]))
        self.y_range = (float(y_range[0]), float(y_range[1]))
        self.a = float(a)
        self.b = float(b)
        self.fn_text = fn_text
        self.fn_joints = [(float(x), float(y)) for x, y in fn_joints] if fn_joints else None
        if fn_text is not None:
            self._ast = parse(fn_text)
            if not variables(self._ast) <= {"x"}:
                raise ValueError("the integrand uses the variable x")
        else:
            self._ast = None

    # -- mapping (same affine convention as PlottingArea) ----------------------

    def value_to_pixel(self, vx: float, vy: float) -> Point:
        x0, x1 = self.x_range
        y0, y1 = self.y_range
        px = self.rect.left + (vx - x0) * self.rect.width / (x1 - x0)
        py = self.rect.bottom - (vy - y0) * self.rect.height / (y1 - y0)
        return Point(px, py)

    def pixel_to_value(self, p: Point) -> tuple[float, float]:
        x0, x1 = self.x_range
        y0, y1 = self.y_range
        vx = x0 + (p.x - self.rect.left) * (x1 - x0) / self.rect.width
        vy = y0 + (self.rect.bottom - p.y) * (y1 - y0) / self.rect.height
        return (vx, vy)

    def fn_value(self, x: float) -> float | None:
        if self._ast is not None:
            return evaluate(self._ast, x)
        joints = self.fn_joints
        for (x1, y1), (x2, y2) in zip(joints, joints[1:]):
            lo, hi = (x1, x2) if x1 <= x2 else (x2, x1)
            if lo <= x <= hi and x2 != x1:
                return y1 + (y2 - y1) * (x - x1) / (x2 - x1)
        return None

    def integral(self) -> float:
        if self.fn_joints is not None:
            return integrate_polyline(self.fn_joints, self.a, self.b)
        return integrate(lambda x: evaluate(self._ast, x), self.a, self.b)

    def move_border(self, which: str, value: float) -> bool:
        """Set border a or b; borders clamp rather than cross."""
        if which == "a":
            value = min(value, self.b - BORDER_MIN_GAP)
            if value == self.a:
                return False
            self.a = value
        elif which == "b":
            value = max(value, self.a + BORDER_MIN_GAP)
            if value == self.b:
                return False
            self.b = value
        else:
            raise ValueError("border must be 'a' or 'b'")
        return True

    # -- element contract -------------------------------------------------------

    def _border_pixels(self) -> tuple[float, float]:
        return (self.value_to_pixel(self.a, 0.0).x, self.value_to_pixel(self.b, 0.0).x)

    def _region_points(self) -> list[Point]:
        n = 64
        pts = [self.value_to_pixel(self.a, 0.0)]
        for i in range(n):
            x = self.a + (self.b - self.a) * i / (n - 1)
            y = self.fn_value(x)
            if y is None:
                continue
            pts.append(self.value_to_pixel(x, y))
        pts.append(self.value_to_pixel(self.b, 0.0))
        return pts

    # node ids: 0 border a, 1 border b, then one dot per polyline joint,
    # then the painted region.
    def define_cover(self, settings: CoverSettings) -> Cover:
        cb = CoverBuilder()
        ax, bx = self._border_pixels()
        cb.strip(Point(ax, self.rect.top), Point(ax, self.rect.bottom), settings.strip_half_width, RECONFIGURE, CURSOR_SIZE_H)
        cb.strip(Point(bx, self.rect.top), Point(bx, self.rect.bottom), settings.strip_half_width, RECONFIGURE, CURSOR_SIZE_H)
        for x, y in self.fn_joints or []:
            cb.circle(self.value_to_pixel(x, y), settings.handle_radius, RECONFIGURE, CURSOR_HAND)
        region = self._region_points()
        if len(region) >= 3:
            cb.polygon(region, MOVE_WHOLE, CURSOR_MOVE)
        else:
            cb.polygon(self.rect.corners(), MOVE_WHOLE, CURSOR_MOVE)
        return cb.build()

    def bounds(self) -> Rect:
        return self.rect

    def move_whole(self, dx: float, dy: float) -> bool:
        if dx == 0.0 and dy == 0.0:
            return False
        self.rect = self.rect.moved(dx, dy)
        return True

    def _reshape(self, node_id: int, dx: float, dy: float, p: Point) -> bool:
        if node_id in (0, 1):
            vx, _ = self.pixel_to_value(p)
            return self.move_border("a" if node_id == 0 else "b", vx)
        joints = self.fn_joints or []
        j = node_id - 2
        if 0 <= j < len(joints):
            if dx == 0.0 and dy == 0.0:
                return False
            x0, x1 = self.x_range
            y0, y1 = self.y_range
            dvx = dx * (x1 - x0) / self.rect.width
            dvy = -dy * (y1 - y0) / self.rect.height
            joints[j] = (joints[j][0] + dvx, joints[j][1] + dvy)
            return True
        return False

    def insert_joint(self, segment_index: int, joint: tuple[float, float]) -> None:
        if self.fn_joints is None:
            raise ValueError("expression-backed areas have no joints")
        if not 0 <= segment_index < len(self.fn_joints) - 1:
            raise IndexError(f"segment {segment_index} out of range")
        self.fn_joints.insert(segment_index + 1, (float(joint[0]), float(joint[1])))

    def delete_joint(self, joint_index: int) -> None:
        if self.fn_joints is None:
            raise ValueError("expression-backed areas have no joints")
        if len(self.fn_joints) <= 2:
            raise ValueError("the border polyline keeps at least 2 joints")
        del self.fn_joints[joint_index]

    def body_contains(self, p: Point) -> bool:
        region = self._region_points()
        if len(region) < 3:
            return False
        from .geometry import point_in_polygon

        return point_in_polygon(p, region)

    def draw_primitives(self) -> list[dict]:
        prims = [polygon_prim(self.rect.corners(), "#fbfbfb", self.stroke_color, self.stroke_width)]
        region = self._region_points()
        if len(region) >= 3:
            prims.append(polygon_prim(region, self.fill_color, self.stroke_color, self.stroke_width))
        ax, bx = self._border_pixels()
        for x in (ax, bx):
            prims.append(polyline_prim([Point(x, self.rect.top), Point(x, self.rect.bottom)], "#c04020", 1.5))
        for x, y in self.fn_joints or []:
            center = self.value_to_pixel(x, y)
            prims.append(polygon_prim(Rect(center.x - 2.5, center.y - 2.5, 5.0, 5.0).corners(), "#c04020", None, 0.0))
        try:
            label = f"integral = {self.integral():.6g}"
        except IntegrationDomainError:
            label = "integral: domain error"
        prims.append(text_prim(Point(self.rect.left + 6.0, self.rect.bottom + 16.0), label, DEFAULT_FONT, "#202020"))
        return prims

    def to_record(self) -> dict:
        rec = self.base_record()
        r = self.rect
        rec["rect"] = [r.left, r.top, r.width, r.height]
        rec["xRange"] = list(self.x_range)
        rec["yRange"] = list(self.y_range)
        rec["a"] = self.a
        rec["b"] = self.b
        rec["fnText"] = self.fn_text
        rec["fnJoints"] = [[x, y] for x, y in self.fn_joints] if self.fn_joints else None
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> AreaUnderCurveEl:
        el = cls(
            rec["id"],
            Rect(*rec["rect"]),
            tuple(rec["xRange"]),
            tuple(rec["yRange"]),
            rec["a"],
            rec["b"],
            fn_text=rec["fnText"],
            fn_joints=[(j[0], j[1]) for j in rec["fnJoints"]] if rec["fnJoints"] else None,
        )
        el._load_visual(rec)
        return el
