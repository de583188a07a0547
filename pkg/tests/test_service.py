import json
import socket

import pytest

from movescene.demos import build_function_viewer_scene, build_village_scene
from movescene.elements import RectangleEl
from movescene.geometry import Point, Rect, bounding_union
from movescene.groups import ElasticGroup
from movescene.persistence import load_scene, save_scene
from movescene.render import build_render_list, render_list_to_svg
from movescene.scene import Scene
from movescene.service import (
    PointerDown,
    PointerMove,
    PointerUp,
    ReplayScriptError,
    SceneSession,
    apply_event,
    handle_protocol_lines,
    parse_script,
    replay,
    serve_tcp,
)


def simple_scene():
    scene = Scene()
    scene.add_element(RectangleEl("r0", Rect(10, 10, 100, 60), fill_color="#808080"))
    return scene


class TestParseScript:
    def test_events_and_comments(self):
        events = parse_script("# a drag\ndown 10 20 left\nmove 15 25\nup\ncommand hide r0\n")
        kinds = [type(e).__name__ for _, e in events]
        assert kinds == ["PointerDown", "PointerMove", "PointerUp", "Command"]

    def test_unknown_event(self):
        with pytest.raises(ReplayScriptError):
            parse_script("wiggle 1 2\n")

    def test_bad_button(self):
        with pytest.raises(ReplayScriptError) as err:
            parse_script("down 1 2 middle\n")
        assert err.value.line == 1

    def test_quoted_command_args(self):
        events = parse_script('command setFont r0 "14px serif"\n')
        assert events[0][1].args == ("r0", "14px serif")


class TestApplyEvent:
    def test_move_without_grab_is_no_change(self):
        scene = simple_scene()
        assert apply_event(scene, PointerMove(50, 50)) is False

    def test_down_move_up_translates(self):
        scene = simple_scene()
        apply_event(scene, PointerDown(50, 40, "left"))
        assert apply_event(scene, PointerMove(60, 40)) is True
        apply_event(scene, PointerUp())
        assert scene.element_of("r0").rect.top_left() == Point(20, 10)

    def test_hide_inside_group_recomputes_frame(self):
        scene = Scene()
        scene.add_element(RectangleEl("a", Rect(0, 0, 40, 20)))
        scene.add_element(RectangleEl("b", Rect(100, 0, 40, 20)))
        group = ElasticGroup("g", ["a", "b"])
        scene.add_element(group)
        replay(scene, "command hide b\n")
        assert group.frame == bounding_union([scene.element_of("a").bounds()]).inflated(group.frame_margin)

    def test_unknown_command(self):
        scene = simple_scene()
        with pytest.raises(ReplayScriptError):
            replay(scene, "command conjure r0\n")

    def test_bad_curve_leaves_scene_unchanged(self):
        scene = build_function_viewer_scene()
        before = save_scene(scene)
        with pytest.raises(ReplayScriptError):
            replay(scene, "command addCurve fv-plot-1 foo(x) #102030\n")
        assert save_scene(scene) == before

    def test_good_curve_applies(self):
        scene = build_function_viewer_scene()
        replay(scene, 'command addCurve fv-plot-1 "sin(x)+x/2" #102030\n')
        assert scene.element_of("fv-plot-1").curves[-1].text == "sin(x)+x/2"


class TestReplay:
    def test_empty_script_is_identity(self):
        scene = build_village_scene()
        before = save_scene(scene)
        replay(scene, "")
        assert save_scene(scene) == before

    def test_same_script_twice_is_deterministic(self):
        script = "down 90 250 left\nmove 120 260\nmove 140 240\nup\ncommand zorder bld-1 top\n"
        a = build_village_scene()
        b = build_village_scene()
        replay(a, script)
        replay(b, script)
        assert save_scene(a) == save_scene(b)

    def test_down_during_grab_reports_line(self):
        scene = simple_scene()
        with pytest.raises(ReplayScriptError) as err:
            replay(scene, "down 50 40 left\ndown 55 45 left\n")
        assert err.value.line == 2

    def test_stray_up_is_tolerated(self):
        scene = simple_scene()
        report = replay(scene, "up\nup\n")
        assert report.events_applied == 2


class TestRenderList:
    def test_pure_function_of_scene(self):
        scene = build_village_scene()
        first = json.dumps(build_render_list(scene), sort_keys=True)
        second = json.dumps(build_render_list(scene), sort_keys=True)
        assert first == second

    def test_order_follows_z_order(self):
        scene = Scene()
        scene.add_element(RectangleEl("a", Rect(0, 0, 40, 20), fill_color="#111111"))
        scene.add_element(RectangleEl("b", Rect(10, 0, 40, 20), fill_color="#222222"))
        first_fills = [i["fill"] for i in build_render_list(scene)["items"] if i["kind"] == "polygon"]
        assert first_fills == ["#111111", "#222222"]
        scene.set_z_order("a", "top")
        second_fills = [i["fill"] for i in build_render_list(scene)["items"] if i["kind"] == "polygon"]
        assert second_fills == ["#222222", "#111111"]

    def test_cursor_hint_from_pointer(self):
        scene = simple_scene()
        assert build_render_list(scene, Point(50, 40))["cursor"] == "move"
        assert build_render_list(scene, Point(110, 40))["cursor"] == "sizeH"
        assert build_render_list(scene, Point(500, 500))["cursor"] == "default"

    def test_hidden_elements_not_rendered(self):
        scene = simple_scene()
        scene.set_visible("r0", False)
        assert build_render_list(scene)["items"] == []

    def test_svg_export_mentions_primitives(self):
        svg = render_list_to_svg(build_render_list(build_village_scene()))
        assert svg.startswith("<svg")
        assert "<polygon" in svg and "<text" in svg


class TestSessionProtocol:
    def test_hello_sends_render_list(self):
        session = SceneSession(simple_scene())
        hello = session.hello()
        assert hello[0]["type"] == "renderList"
        assert hello[0]["seq"] == 0

    def test_drag_produces_render_push(self):
        session = SceneSession(simple_scene())
        session.handle({"type": "down", "x": 50, "y": 40, "button": "left"})
        replies = session.handle({"type": "move", "x": 60, "y": 45})
        kinds = [r["type"] for r in replies]
        assert kinds == ["ack", "renderList"]
        assert replies[0]["changed"] is True
        session.handle({"type": "up"})
        assert session.scene.element_of("r0").rect.top_left() == Point(20, 15)

    def test_malformed_then_valid(self):
        out = handle_protocol_lines(
            SceneSession(simple_scene()),
            ["{nope", '{"type":"down","x":50,"y":40,"button":"left"}', '{"type":"up"}'],
        )
        parsed = [json.loads(line) for line in out]
        assert parsed[1]["type"] == "error"
        assert parsed[2]["type"] == "ack"

    def test_save_message_returns_doc(self):
        scene = simple_scene()
        session = SceneSession(scene)
        replies = session.handle({"type": "save"})
        assert replies[0]["type"] == "scene"
        assert replies[0]["doc"] == save_scene(scene).decode("utf-8")

    def test_protocol_error_keeps_session_alive(self):
        session = SceneSession(simple_scene())
        session.handle({"type": "down", "x": 50, "y": 40, "button": "left"})
        replies = session.handle({"type": "down", "x": 55, "y": 42, "button": "left"})
        assert replies[0]["type"] == "error"
        replies = session.handle({"type": "up"})
        assert replies[0]["type"] == "ack"


def drive_tcp(port, lines):
    with socket.create_connection(("127.0.0.1", port), timeout=5) as sock:
        reader = sock.makefile("r", encoding="utf-8")
        hello = json.loads(reader.readline())
        assert hello["type"] == "renderList"
        replies = []
        for line in lines:
            sock.sendall((line + "\n").encode("utf-8"))
            reply = json.loads(reader.readline())
            replies.append(reply)
            while reply["type"] == "ack" and reply["changed"]:
                reply = json.loads(reader.readline())  # drain the render push
        return replies


class TestTCPServer:
    def test_served_drag_matches_in_process(self):
        script = [
            '{"type":"down","x":50,"y":40,"button":"left"}',
            '{"type":"move","x":72,"y":31}',
            '{"type":"up"}',
            '{"type":"save"}',
        ]
        served_scene = simple_scene()
        server = serve_tcp(served_scene, "127.0.0.1", 0)
        try:
            port = server.server_address[1]
            replies = drive_tcp(port, script)
        finally:
            server.shutdown()
        served_doc = replies[-1]["doc"]

        local = simple_scene()
        apply_event(local, PointerDown(50, 40, "left"))
        apply_event(local, PointerMove(72, 31))
        apply_event(local, PointerUp())
        assert served_doc == save_scene(local).decode("utf-8")

    def test_two_sequential_connections_share_scene(self):
        scene = simple_scene()
        server = serve_tcp(scene, "127.0.0.1", 0)
        try:
            port = server.server_address[1]
            drive_tcp(port, ['{"type":"down","x":50,"y":40,"button":"left"}', '{"type":"move","x":60,"y":40}', '{"type":"up"}'])
            replies = drive_tcp(port, ['{"type":"save"}'])
        finally:
            server.shutdown()
        assert json.loads(replies[-1]["doc"])["elements"][0]["rect"][0] == 20.0


class TestCLI:
    def test_exit_codes(self, tmp_path):
        from movescene.cli import main
        from movescene.persistence import canonical_bytes, scene_to_doc

        scene_file = tmp_path / "v.scene.json"
        scene_file.write_bytes(save_scene(build_village_scene()))
        script_ok = tmp_path / "ok.script"
        script_ok.write_text("down 90 250 left\nmove 100 255\nup\n")
        out = tmp_path / "out.scene.json"
        assert main(["replay", "--scene", str(scene_file), "--script", str(script_ok), "--out", str(out)]) == 0
        assert out.exists()

        script_bad = tmp_path / "bad.script"
        script_bad.write_text("down 1 1 left\ndown 2 2 left\n")
        assert main(["replay", "--scene", str(scene_file), "--script", str(script_bad), "--out", str(out)]) == 3

        assert main(["check", "--scene", str(scene_file)]) == 0

        # a rectangle squeezed below its own minimum trips the invariant suite
        broken = Scene()
        broken.add_element(RectangleEl("r", Rect(0, 0, 30, 30), min_size=10.0))
        doc = scene_to_doc(broken)
        doc["elements"][0]["rect"] = [0.0, 0.0, 4.0, 4.0]
        bad_scene = tmp_path / "bad.scene.json"
        bad_scene.write_bytes(canonical_bytes(doc))
        assert main(["check", "--scene", str(bad_scene)]) == 2

        svg = tmp_path / "v.svg"
        assert main(["export-svg", "--scene", str(scene_file), "--out", str(svg)]) == 0
        assert svg.read_text().startswith("<svg")

        demo_out = tmp_path / "pd.scene.json"
        assert main(["new-demo", "personaldata", "--out", str(demo_out)]) == 0
        load_scene(demo_out.read_bytes())

    def test_version_error_exit(self, tmp_path):
        from movescene.cli import main

        bad = tmp_path / "bad.json"
        bad.write_text('{"formatVersion": 999}')
        assert main(["check", "--scene", str(bad)]) == 3


class TestStructuralCommandsDuringGrab:
    def test_insert_joint_on_grabbed_polyline_releases_grab(self):
        from movescene.elements import PolylineEl
        from movescene.service import Command, apply_command

        scene = Scene()
        scene.add_element(PolylineEl("pl", [Point(0, 0), Point(100, 0), Point(200, 0)]))
        assert scene.mover.catch(Point(50, 0), "left")
        apply_command(scene, Command("insertJoint", ("pl", "0", "50", "20")))
        assert scene.mover.grab is None
        # and a subsequent move is a clean no-op rather than a mis-dispatch
        assert apply_event(scene, PointerMove(60, 5)) is False
