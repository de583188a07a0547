"""Builders for the three worked demo scenes.

Village: five building kinds assembled from the shape bestiary, each resized
by its borders and moved by any inner point. PersonalData: nested elastic
groups of captioned placeholder controls (no data wiring). FunctionViewer:
plotting areas with curves, subordinate scales and comments, a function
list group, and the area-under-a-curve panel.

Default layouts are deterministic; building twice yields identical scenes.
All builder coordinates use at most six decimals so a save/load cycle
reproduces them bit-exactly.
"""

from __future__ import annotations

from .elements import CircleEl, PolygonEl, RectangleEl
from .geometry import Point, Rect
from .groups import ControlEl, DominantGroup, ElasticGroup, GroupTitle, RoofWeld
from .plotting import (
    AreaUnderCurveEl,
    CommentEl,
    PlottingArea,
    ScaleEl,
    curve_parametric,
    curve_y_of_x,
)
from .scene import Scene

# Six-decimal stand-ins for pi-derived angles keep builder scenes exactly
# representable in the persisted form.
UP = 4.712389  # ~3*pi/2: dome pointing up in y-down screen space
TAU6 = 6.283185

BUILDING_KINDS = ("cottage", "villa", "tower", "barn", "hangar")

_HOUSES = {
    # kind: (base width, base height, wall color, roof color, apex list (fx, h))
    "cottage": (80.0, 60.0, "#e8d3a8", "#9c5a33", [(0.5, 28.0)]),
    "villa": (110.0, 55.0, "#dde8c8", "#6f7d49", [(0.72, 22.0), (0.28, 22.0)]),
    "tower": (46.0, 110.0, "#cfd6e4", "#4a5a7d", [(1.0, 30.0)]),
    "barn": (100.0, 70.0, "#e4c3c3", "#8d3f3f", [(0.8, 20.0), (0.5, 32.0), (0.2, 20.0)]),
}


def add_building(scene: Scene, kind: str, at: Point) -> list[str]:
    """Add one building with its top-left at the given point; returns the new
    element ids (base first)."""
    if kind == "hangar":
        radius = 45.0
        hangar_id = scene.next_id("bld")
        scene.add_element(
            CircleEl(
                hangar_id,
                Point(at.x + radius, at.y + radius),
                radius,
                half=True,
                half_dir=UP,
                fill_color="#c9c9c9",
                stroke_color="#555555",
            )
        )
        return [hangar_id]
    if kind not in _HOUSES:
        raise ValueError(f"unknown building kind {kind!r}")
    width, height, wall, roof_color, apexes = _HOUSES[kind]
    base_id = scene.next_id("bld")
    base = RectangleEl(
        base_id,
        Rect(at.x, at.y, width, height),
        min_size=16.0,
        fill_color=wall,
        stroke_color="#444444",
    )
    scene.add_element(base)
    roof_id = scene.next_id("bld")
    vertices = [Point(at.x, at.y), Point(at.x + width, at.y)]
    for fx, h in apexes:
        vertices.append(Point(at.x + fx * width, at.y - h))
    roof = PolygonEl(roof_id, vertices, fill_color=roof_color, stroke_color="#444444")
    scene.add_element(roof)
    scene.add_constraint(RoofWeld.capture(f"weld-{base_id}", base, roof))
    return [base_id, roof_id]


def delete_element(scene: Scene, element_id: str) -> list[str]:
    """Remove an element plus anything welded to it (a house goes as a whole);
    returns the removed ids."""
    doomed = [element_id]
    for constraint in scene.constraints:
        if isinstance(constraint, RoofWeld) and element_id in constraint.element_ids():
            doomed.extend(i for i in constraint.element_ids() if i not in doomed)
    for eid in doomed:
        scene.remove_element(eid)
    return doomed


def build_village_scene() -> Scene:
    scene = Scene()
    scene.add_element(
        CommentEl("village-title", Point(40.0, 36.0), "Village", font="18px sans-serif", stroke_color="#333333")
    )
    add_building(scene, "cottage", Point(70.0, 220.0))
    add_building(scene, "villa", Point(210.0, 230.0))
    add_building(scene, "tower", Point(380.0, 170.0))
    add_building(scene, "barn", Point(480.0, 220.0))
    add_building(scene, "hangar", Point(640.0, 200.0))
    return scene


# -- personal data --------------------------------------------------------------


def _labeled_row(scene: Scene, prefix: str, caption: str, x: float, y: float, box_width: float = 150.0) -> list[str]:
    label_id = f"{prefix}-label"
    box_id = f"{prefix}-box"
    scene.add_element(
        ControlEl(label_id, Rect(x, y, 80.0, 20.0), kind="label", caption=caption, fill_color=None)
    )
    scene.add_element(ControlEl(box_id, Rect(x + 90.0, y, box_width, 20.0), kind="textbox", caption=""))
    return [label_id, box_id]


def _group_under_children(scene: Scene, group: ElasticGroup) -> None:
    """Register a group element just below its lowest child so child presses
    win inside the frame."""
    scene.add_element(group)
    indices = [scene.mover.registry.index(cid) for cid in group.children if cid in scene.mover.registry]
    if indices:
        scene.set_z_order(group.element_id, min(indices))


def build_personal_data_scene() -> Scene:
    scene = Scene()
    name_children = []
    name_children += _labeled_row(scene, "pd-first", "First name", 60.0, 70.0)
    name_children += _labeled_row(scene, "pd-last", "Last name", 60.0, 100.0)
    name_group = ElasticGroup(
        "pd-name", name_children, title=GroupTitle("Name"), stroke_color="#3a5a8c"
    )
    _group_under_children(scene, name_group)

    phone_children = _labeled_row(scene, "pd-phone", "Phone", 60.0, 170.0)
    phone_children += _labeled_row(scene, "pd-mobile", "Mobile", 60.0, 200.0)
    phones_group = ElasticGroup(
        "pd-phones", phone_children, title=GroupTitle("Phones"), stroke_color="#3a5a8c"
    )
    _group_under_children(scene, phones_group)

    # bottom-most rows: hiding the Country row visibly shrinks the nested
    # Address frame and the enclosing frame with it
    address_children = []
    address_children += _labeled_row(scene, "pd-street", "Street", 60.0, 270.0)
    address_children += _labeled_row(scene, "pd-city", "City", 60.0, 300.0)
    address_children += _labeled_row(scene, "pd-province", "Province", 60.0, 330.0)
    address_children += _labeled_row(scene, "pd-country", "Country", 60.0, 360.0)
    address_group = ElasticGroup(
        "pd-address", address_children, title=GroupTitle("Address"), stroke_color="#3a5a8c"
    )
    _group_under_children(scene, address_group)

    scene.add_element(
        ControlEl("pd-notes", Rect(400.0, 80.0, 180.0, 120.0), kind="listview", caption="Notes")
    )
    top = ElasticGroup(
        "pd-top",
        ["pd-name", "pd-address", "pd-phones", "pd-notes"],
        title=GroupTitle("Personal data"),
        frame_margin=10.0,
        stroke_color="#20406a",
    )
    _group_under_children(scene, top)
    return scene


# -- function viewer -----------------------------------------------------------------


def build_function_viewer_scene() -> Scene:
    scene = Scene()
    plot1 = PlottingArea(
        "fv-plot-1",
        Rect(60.0, 60.0, 320.0, 220.0),
        x_range=(-TAU6, TAU6),
        y_range=(-1.5, 1.5),
        curves=[curve_y_of_x("sin(x)", "#c03030"), curve_y_of_x("cos(x)", "#3040c0")],
    )
    scene.add_element(plot1)
    sx1 = ScaleEl("fv-scale-1x", "fv-plot-1", Point(60.0, 292.0), axis="x", length=320.0, ticks=5)
    sy1 = ScaleEl("fv-scale-1y", "fv-plot-1", Point(48.0, 60.0), axis="y", length=220.0, ticks=4)
    c1 = CommentEl("fv-comment-1", Point(60.0, 48.0), "Trigonometry", owner_id="fv-plot-1")
    for el in (sx1, sy1, c1):
        scene.add_element(el)
    scene.add_constraint(DominantGroup.capture_offsets("dom-fv-plot-1", plot1, [sx1, sy1, c1]))

    plot2 = PlottingArea(
        "fv-plot-2",
        Rect(430.0, 60.0, 220.0, 220.0),
        x_range=(-1.25, 1.25),
        y_range=(-1.25, 1.25),
        curves=[curve_parametric("cos(r)", "sin(r)", (0.0, TAU6), "#108050")],
    )
    scene.add_element(plot2)
    c2 = CommentEl("fv-comment-2", Point(430.0, 48.0), "Unit circle {cos(r), sin(r)}", owner_id="fv-plot-2")
    scene.add_element(c2)
    scene.add_constraint(DominantGroup.capture_offsets("dom-fv-plot-2", plot2, [c2]))

    area = AreaUnderCurveEl(
        "fv-area",
        Rect(60.0, 340.0, 320.0, 180.0),
        x_range=(0.0, TAU6),
        y_range=(-1.5, 1.5),
        a=0.5,
        b=2.5,
        fn_text="sin(x)",
    )
    scene.add_element(area)

    labels = []
    for i, text in enumerate(("x", "x^2", "sin(x)", "cos(x)", "exp(x)", "ln(x)")):
        label_id = f"fv-fn-{i}"
        scene.add_element(
            ControlEl(label_id, Rect(700.0, 80.0 + 24.0 * i, 110.0, 20.0), kind="label", caption=text, fill_color=None)
        )
        labels.append(label_id)
    fn_group = ElasticGroup("fv-functions", labels, title=GroupTitle("Functions"), stroke_color="#20406a")
    _group_under_children(scene, fn_group)
    return scene


DEMO_BUILDERS = {
    "village": build_village_scene,
    "personaldata": build_personal_data_scene,
    "funcview": build_function_viewer_scene,
}
