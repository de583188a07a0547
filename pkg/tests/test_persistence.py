import json
import math
import random

import pytest

from genscenes import random_scene
from movescene.demos import DEMO_BUILDERS
from movescene.elements import PolylineEl
from movescene.geometry import Point
from movescene.persistence import (
    SceneIntegrityError,
    SceneParseError,
    SceneVersionError,
    canonical_bytes,
    load_scene,
    save_scene,
    scene_to_doc,
)
from movescene.scene import Scene


class TestCanonicalForm:
    def test_sorted_keys_no_whitespace(self):
        data = canonical_bytes({"b": 1, "a": [1.5, 2]})
        assert data == b'{"a":[1.5,2],"b":1}'

    def test_rounding_to_micro(self):
        data = canonical_bytes({"v": 1.23456789})
        assert data == b'{"v":1.234568}'

    def test_negative_zero_normalized(self):
        assert canonical_bytes({"v": -0.0000001}) == b'{"v":0.0}'

    def test_non_finite_rejected(self):
        with pytest.raises(ValueError):
            canonical_bytes({"v": math.inf})

    def test_ints_stay_ints(self):
        assert canonical_bytes({"v": 3}) == b'{"v":3}'


class TestSaveLoad:
    def test_empty_scene(self):
        doc = json.loads(save_scene(Scene()))
        assert doc["formatVersion"] == 1
        assert doc["elements"] == []
        assert doc["zOrder"] == []

    def test_save_load_save_byte_identity_on_demos(self):
        for name, builder in DEMO_BUILDERS.items():
            scene = builder()
            first = save_scene(scene)
            second = save_scene(load_scene(first))
            assert first == second, name

    def test_rotated_polyline_reloads_to_micro(self):
        scene = Scene()
        el = PolylineEl("pl", [Point(10, 10), Point(90, 40), Point(150, 20)])
        scene.add_element(el)
        el.rotate_whole(el.rotation_center(), 0.7853981633974483)
        joints_before = list(el.joints)
        loaded = load_scene(save_scene(scene))
        for a, b in zip(joints_before, loaded.element_of("pl").joints):
            assert abs(a.x - b.x) <= 5e-7
            assert abs(a.y - b.y) <= 5e-7

    def test_load_rebuilds_z_order(self):
        scene = DEMO_BUILDERS["village"]()
        scene.mover.set_z_order(scene.mover.registry[0], "top")
        loaded = load_scene(save_scene(scene))
        assert loaded.mover.registry == scene.mover.registry

    def test_random_scene_round_trips(self):
        for seed in range(30):
            rng = random.Random(1000 + seed)
            scene = random_scene(rng, n_elements=rng.randint(2, 7))
            first = save_scene(scene)
            second = save_scene(load_scene(first))
            assert first == second, f"seed {seed}"

    def test_fresh_builder_scene_is_already_canonical(self):
        # builders use <= 6-decimal coordinates, so rounding is a no-op
        scene = DEMO_BUILDERS["village"]()
        assert save_scene(scene) == save_scene(load_scene(save_scene(scene)))


class TestLoadErrors:
    def test_unknown_version(self):
        doc = scene_to_doc(Scene())
        doc["formatVersion"] = 999
        with pytest.raises(SceneVersionError):
            load_scene(canonical_bytes(doc))

    def test_truncated_document(self):
        data = save_scene(DEMO_BUILDERS["village"]())[:-20]
        with pytest.raises(SceneParseError) as err:
            load_scene(data)
        assert err.value.line >= 1
        assert err.value.column >= 1

    def test_dangling_z_order_id(self):
        doc = scene_to_doc(Scene())
        doc["zOrder"] = ["ghost"]
        with pytest.raises(SceneIntegrityError):
            load_scene(canonical_bytes(doc))

    def test_unknown_element_type(self):
        doc = scene_to_doc(Scene())
        doc["elements"] = [{"id": "x", "type": "hologram", "visible": True, "visual": {}}]
        with pytest.raises(SceneIntegrityError):
            load_scene(canonical_bytes(doc))

    def test_dangling_group_child(self):
        scene = DEMO_BUILDERS["personaldata"]()
        doc = json.loads(save_scene(scene))
        for rec in doc["elements"]:
            if rec["type"] == "elastic":
                rec["children"].append("ghost")
                break
        with pytest.raises(SceneIntegrityError):
            load_scene(canonical_bytes(doc))

    def test_not_an_object(self):
        with pytest.raises(SceneVersionError):
            load_scene(b"[1,2,3]")
