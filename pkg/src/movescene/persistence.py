"""Save and restore the complete scene: every position, size, z-order,
visibility flag, color and font.

The on-disk form is canonical JSON: sorted keys, no insignificant
whitespace, reals rounded to 1e-6 and negative zero normalized, so byte
equality of two documents is a valid test oracle. File extension:
`.scene.json`; the formatVersion field is checked before anything else.
"""

from __future__ import annotations

import json
import math

from .elements import (
    CircleEl,
    CrescentEl,
    LineEl,
    PieEl,
    PolygonEl,
    PolylineEl,
    RectangleEl,
    RingEl,
    StripEl,
)
from .groups import ControlEl, DominantGroup, ElasticGroup, FixedGroup, GroupDyn, RoofWeld
from .plotting import AreaUnderCurveEl, CommentEl, PlottingArea, ScaleEl
from .scene import Scene, SceneSettings

FORMAT_VERSION = 1
SCENE_FILE_SUFFIX = ".scene.json"

ELEMENT_TYPES = {
    cls.type_tag: cls
    for cls in (
        LineEl,
        PolylineEl,
        RectangleEl,
        PolygonEl,
        CircleEl,
        RingEl,
        StripEl,
        CrescentEl,
        PieEl,
        ControlEl,
        GroupDyn,
        FixedGroup,
        ElasticGroup,
        PlottingArea,
        ScaleEl,
        CommentEl,
        AreaUnderCurveEl,
    )
}

CONSTRAINT_KINDS = {cls.kind: cls for cls in (DominantGroup, RoofWeld)}


class SceneFormatError(ValueError):
    """Base for all scene-document failures."""


class SceneParseError(SceneFormatError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class SceneVersionError(SceneFormatError):
    pass


class SceneIntegrityError(SceneFormatError):
    pass


# -- canonical encoding ----------------------------------------------------------


def _canonical_value(value, path: str = ""):
    if isinstance(value, bool) or value is None or isinstance(value, (str, int)):
        return value
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"non-finite number at {path or 'document root'}")
        rounded = round(value, 6)
        return 0.0 if rounded == 0.0 else rounded
    if isinstance(value, dict):
        return {k: _canonical_value(v, f"{path}.{k}") for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_canonical_value(v, f"{path}[{i}]") for i, v in enumerate(value)]
    raise TypeError(f"unserializable {type(value).__name__} at {path}")


def canonical_bytes(doc: dict) -> bytes:
    canon = _canonical_value(doc)
    return json.dumps(canon, sort_keys=True, separators=(",", ":"), ensure_ascii=False, allow_nan=False).encode(
        "utf-8"
    )


# -- save -------------------------------------------------------------------------


def scene_to_doc(scene: Scene) -> dict:
    return {
        "formatVersion": FORMAT_VERSION,
        "sceneSettings": {
            "handleRadius": scene.settings.handle_radius,
            "stripHalfWidth": scene.settings.strip_half_width,
            "raiseOnCatch": scene.settings.raise_on_catch,
        },
        "elements": [scene.elements[eid].to_record() for eid in sorted(scene.elements)],
        "groups": [c.to_record() for c in sorted(scene.constraints, key=lambda c: c.group_id)],
        "zOrder": list(scene.mover.registry),
    }


def save_scene(scene: Scene) -> bytes:
    """Canonical document bytes for the scene.

    Serialization runs twice through a load so that every derived value
    (elastic frames in particular) is computed from the rounded coordinates
    the document itself carries; save∘load∘save is then byte-stable.
    """
    first = canonical_bytes(scene_to_doc(scene))
    return canonical_bytes(scene_to_doc(load_scene(first)))


# -- load -------------------------------------------------------------------------


def load_scene(data: bytes | str) -> Scene:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise SceneParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise SceneVersionError("scene document must be a JSON object")
    version = doc.get("formatVersion")
    if version != FORMAT_VERSION:
        raise SceneVersionError(f"unsupported formatVersion {version!r} (expected {FORMAT_VERSION})")
    return scene_from_doc(doc)


def scene_from_doc(doc: dict) -> Scene:
    try:
        settings_rec = doc["sceneSettings"]
        settings = SceneSettings(
            handle_radius=settings_rec["handleRadius"],
            strip_half_width=settings_rec["stripHalfWidth"],
            raise_on_catch=settings_rec["raiseOnCatch"],
        )
        scene = Scene(settings)
        for rec in doc["elements"]:
            type_tag = rec["type"]
            cls = ELEMENT_TYPES.get(type_tag)
            if cls is None:
                raise SceneIntegrityError(f"unknown element type {type_tag!r}")
            element = cls.from_record(rec)
            if element.element_id in scene.elements:
                raise SceneIntegrityError(f"duplicate element id {element.element_id!r}")
            element.resolver = scene.element_of
            scene.elements[element.element_id] = element
        for rec in doc["groups"]:
            kind = rec["kind"]
            cls = CONSTRAINT_KINDS.get(kind)
            if cls is None:
                raise SceneIntegrityError(f"unknown group kind {kind!r}")
            constraint = cls.from_record(rec)
            for eid in constraint.element_ids():
                if eid not in scene.elements:
                    raise SceneIntegrityError(f"group {rec['id']!r} references missing element {eid!r}")
            scene.constraints.append(constraint)
        for element in scene.elements.values():
            if not hasattr(element, "child_ids"):
                continue
            for cid in element.child_ids():
                if cid not in scene.elements:
                    raise SceneIntegrityError(
                        f"group element {element.element_id!r} references missing child {cid!r}"
                    )
        for eid in doc["zOrder"]:
            if eid not in scene.elements:
                raise SceneIntegrityError(f"zOrder references missing element {eid!r}")
            scene.mover.add(eid)
    except KeyError as exc:
        raise SceneIntegrityError(f"missing field {exc.args[0]!r}") from None
    scene._recompute_elastic()
    return scene


def scenes_equal(a: Scene, b: Scene) -> bool:
    return save_scene(a) == save_scene(b)
