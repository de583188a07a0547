"""The headless runtime surface: event scripts, deterministic replay with
optional per-event invariant checking, the scene command set, and the
newline-delimited JSON session protocol.

One mutation thread per scene session: the protocol reader applies messages
in order under the scene lock and the writer emits ordered replies.
"""

from __future__ import annotations

import json
import shlex
import socketserver
import threading
from dataclasses import dataclass, field

from .demos import add_building, delete_element
from .elements import PieEl, PolylineEl
from .geometry import Point
from .groups import ElasticGroup
from .mover import GrabProtocolError
from .persistence import save_scene
from .plotting import AreaUnderCurveEl, PlottingArea, curve_y_of_x
from .render import build_render_list
from .scene import Scene


class CommandError(ValueError):
    """A scene command could not be applied; the scene is unchanged."""


class ReplayScriptError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class InvariantViolation(AssertionError):
    pass


# -- events ------------------------------------------------------------------


@dataclass(frozen=True)
class PointerDown:
    x: float
    y: float
    button: str


@dataclass(frozen=True)
class PointerMove:
    x: float
    y: float


@dataclass(frozen=True)
class PointerUp:
    pass


@dataclass(frozen=True)
class Command:
    name: str
    args: tuple[str, ...]


Event = PointerDown | PointerMove | PointerUp | Command


def parse_script(text: str) -> list[tuple[int, Event]]:
    """Parse an event script: one event per line, `#` comments allowed.

    down x y left|right / move x y / up / command name args...
    """
    events: list[tuple[int, Event]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            tokens = shlex.split(line)
        except ValueError as exc:
            raise ReplayScriptError(str(exc), line_no) from None
        kind = tokens[0]
        try:
            if kind == "down":
                x, y = float(tokens[1]), float(tokens[2])
                button = tokens[3]
                if button not in ("left", "right"):
                    raise ReplayScriptError(f"unknown button {button!r}", line_no)
                events.append((line_no, PointerDown(x, y, button)))
            elif kind == "move":
                events.append((line_no, PointerMove(float(tokens[1]), float(tokens[2]))))
            elif kind == "up":
                events.append((line_no, PointerUp()))
            elif kind == "command":
                if len(tokens) < 2:
                    raise ReplayScriptError("command needs a name", line_no)
                events.append((line_no, Command(tokens[1], tuple(tokens[2:]))))
            else:
                raise ReplayScriptError(f"unknown event {kind!r}", line_no)
        except (IndexError, ValueError) as exc:
            if isinstance(exc, ReplayScriptError):
                raise
            raise ReplayScriptError(f"malformed {kind!r} event: {exc}", line_no) from None
    for x, y in ((e.x, e.y) for _, e in events if isinstance(e, (PointerDown, PointerMove))):
        if not (abs(x) < 1e9 and abs(y) < 1e9):
            raise ReplayScriptError("pointer coordinates must be finite", 0)
    return events


# -- commands ------------------------------------------------------------------


def _need(args: tuple[str, ...], count: int, usage: str) -> None:
    if len(args) != count:
        raise CommandError(f"usage: {usage}")


def _drop_grab_for_structural_change(scene: Scene, element_id: str) -> None:
    """A command that changes an element's node layout mid-grab would leave
    the grab pointing at the wrong node; release first."""
    grab = scene.mover.grab
    if grab is not None and grab.element_id == element_id:
        scene.mover.release()


def apply_command(scene: Scene, command: Command) -> bool:
    name = command.name
    args = command.args
    try:
        if name == "hide":
            _need(args, 1, "hide <id>")
            return scene.set_visible(args[0], False)
        if name == "show":
            _need(args, 1, "show <id>")
            return scene.set_visible(args[0], True)
        if name == "setColor":
            _need(args, 2, "setColor <id> <color>")
            return scene.set_color(args[0], args[1])
        if name == "setFont":
            _need(args, 2, "setFont <id> <font>")
            return scene.set_font(args[0], args[1])
        if name == "zorder":
            _need(args, 2, "zorder <id> <top|bottom|index>")
            position = args[1] if args[1] in ("top", "bottom") else int(args[1])
            return scene.set_z_order(args[0], position)
        if name == "moveTitle":
            _need(args, 2, "moveTitle <groupId> <t>")
            group = scene.element_of(args[0])
            if not isinstance(group, ElasticGroup):
                raise CommandError(f"{args[0]!r} is not an elastic group")
            return scene.mutate(args[0], lambda g: g.move_title(float(args[1])))
        if name == "groupStyle":
            _need(args, 4, "groupStyle <groupId> <font|-> <color|-> <spread 0|1>")
            group = scene.element_of(args[0])
            if not isinstance(group, ElasticGroup):
                raise CommandError(f"{args[0]!r} is not an elastic group")
            font = None if args[1] == "-" else args[1]
            color = None if args[2] == "-" else args[2]
            spread = args[3] not in ("0", "false")
            group.apply_group_style(font=font, color=color, spread_to_nested=spread)
            scene.invalidate_covers()
            return True
        if name == "childVisible":
            _need(args, 3, "childVisible <groupId> <childId> <0|1>")
            group = scene.element_of(args[0])
            if not isinstance(group, ElasticGroup):
                raise CommandError(f"{args[0]!r} is not an elastic group")
            visible = args[2] not in ("0", "false")
            changed = group.set_child_visible(args[1], visible)
            if changed:
                scene.after_mutation(args[0], group.bounds().top_left(), None)
            return changed
        if name == "addBuilding":
            _need(args, 3, "addBuilding <kind> <x> <y>")
            add_building(scene, args[0], Point(float(args[1]), float(args[2])))
            return True
        if name == "delete":
            _need(args, 1, "delete <id>")
            delete_element(scene, args[0])
            return True
        if name == "addCurve":
            _need(args, 3, "addCurve <plotId> <expression> <color>")
            plot = scene.element_of(args[0])
            if not isinstance(plot, PlottingArea):
                raise CommandError(f"{args[0]!r} is not a plotting area")
            curve = curve_y_of_x(args[1], args[2])
            return scene.mutate(args[0], lambda el: el.curves.append(curve) or True)
        if name == "moveBorder":
            _need(args, 3, "moveBorder <id> <a|b> <value>")
            area = scene.element_of(args[0])
            if not isinstance(area, AreaUnderCurveEl):
                raise CommandError(f"{args[0]!r} is not an area-under-curve element")
            return scene.mutate(args[0], lambda el: el.move_border(args[1], float(args[2])))
        if name == "insertJoint":
            _need(args, 4, "insertJoint <id> <segment> <x> <y>")
            element = scene.element_of(args[0])
            _drop_grab_for_structural_change(scene, args[0])
            seg = int(args[1])
            x, y = float(args[2]), float(args[3])
            if isinstance(element, PolylineEl):
                return scene.mutate(args[0], lambda el: el.insert_joint(seg, Point(x, y)) or True)
            if isinstance(element, AreaUnderCurveEl):
                return scene.mutate(args[0], lambda el: el.insert_joint(seg, (x, y)) or True)
            raise CommandError(f"{args[0]!r} has no joints")
        if name == "deleteJoint":
            _need(args, 2, "deleteJoint <id> <index>")
            element = scene.element_of(args[0])
            _drop_grab_for_structural_change(scene, args[0])
            index = int(args[1])
            if isinstance(element, (PolylineEl, AreaUnderCurveEl)):
                return scene.mutate(args[0], lambda el: el.delete_joint(index) or True)
            raise CommandError(f"{args[0]!r} has no joints")
        if name == "zoomSlice":
            _need(args, 3, "zoomSlice <id> <index> <factor>")
            element = scene.element_of(args[0])
            if not isinstance(element, PieEl):
                raise CommandError(f"{args[0]!r} is not a pie")
            return scene.mutate(args[0], lambda el: el.zoom_slice(int(args[1]), float(args[2])) or True)
        if name == "resizePie":
            _need(args, 2, "resizePie <id> <factor>")
            element = scene.element_of(args[0])
            if not isinstance(element, PieEl):
                raise CommandError(f"{args[0]!r} is not a pie")
            return scene.mutate(args[0], lambda el: el.resize_whole(float(args[1])) or True)
    except CommandError:
        raise
    except (KeyError, IndexError, ValueError) as exc:
        raise CommandError(str(exc)) from None
    raise CommandError(f"unknown command {name!r}")


def apply_event(scene: Scene, event: Event) -> bool:
    """Apply one event; returns whether the render list changed."""
    if isinstance(event, PointerDown):
        # a structural command may have dropped the grabbed element mid-grab
        return scene.pointer_down(Point(event.x, event.y), event.button)
    if isinstance(event, PointerMove):
        return scene.pointer_move(Point(event.x, event.y))
    if isinstance(event, PointerUp):
        scene.pointer_up()
        return False
    return apply_command(scene, event)


# -- replay --------------------------------------------------------------------


@dataclass
class ReplayReport:
    events_applied: int = 0
    changed_events: int = 0
    violations: list[str] = field(default_factory=list)


def replay(scene: Scene, script_text: str, check_invariants: bool = False) -> ReplayReport:
    report = ReplayReport()
    pointer_down = False
    for line_no, event in parse_script(script_text):
        # nesting is about the button state: a press that caught nothing
        # still holds the pointer down
        if isinstance(event, PointerDown):
            if pointer_down:
                raise ReplayScriptError("down while the pointer is already down", line_no)
            pointer_down = True
        elif isinstance(event, PointerUp):
            pointer_down = False
        try:
            changed = apply_event(scene, event)
        except GrabProtocolError as exc:
            raise ReplayScriptError(str(exc), line_no) from None
        except CommandError as exc:
            raise ReplayScriptError(str(exc), line_no) from None
        report.events_applied += 1
        if changed:
            report.changed_events += 1
        if check_invariants:
            for violation in check_scene_invariants(scene):
                report.violations.append(f"line {line_no}: {violation}")
    return report


# -- invariant suite --------------------------------------------------------------


def check_scene_invariants(scene: Scene) -> list[str]:
    from .elements import PolygonEl, RectangleEl, RingEl, _sector_angles_valid
    from .geometry import bounding_union, is_convex

    problems: list[str] = []
    for eid in scene.mover.registry:
        if eid not in scene.elements:
            problems.append(f"z-order references missing element {eid!r}")
    for eid, el in scene.elements.items():
        if isinstance(el, ElasticGroup):
            visible = [scene.elements[c] for c in el.children if c in scene.elements and scene.elements[c].visible]
            missing = [c for c in el.children if c not in scene.elements]
            if missing:
                problems.append(f"group {eid!r} references missing children {missing}")
                continue
            if not visible:
                expected = el.frame.height == 0.0
                if not expected:
                    problems.append(f"elastic group {eid!r} frame not collapsed with no visible children")
            else:
                expected_frame = bounding_union([c.bounds() for c in visible]).inflated(el.frame_margin)
                if expected_frame != el.frame:
                    problems.append(
                        f"elastic group {eid!r} frame {el.frame} != union+margin {expected_frame}"
                    )
        elif isinstance(el, PolygonEl):
            if el.convex_only and not is_convex(el.vertices):
                problems.append(f"convex-locked polygon {eid!r} became non-convex")
        elif isinstance(el, RectangleEl):
            if el.rect.width < el.min_size - 1e-9 or el.rect.height < el.min_size - 1e-9:
                problems.append(f"rectangle {eid!r} below its minimum size")
            if el.resize_mode == "fixedRatio" and abs(el.rect.width / el.rect.height - el.ratio) > 1e-6:
                problems.append(f"rectangle {eid!r} broke its fixed ratio")
            if any(b - a <= 0 for a, b in zip(el.partitions, el.partitions[1:])):
                problems.append(f"rectangle {eid!r} partitions out of order")
        elif isinstance(el, RingEl):
            if not 0 < el.inner_radius < el.outer_radius:
                problems.append(f"ring {eid!r} radii out of order")
            if el.sectors and not _sector_angles_valid([s.start_angle for s in el.sectors]):
                problems.append(f"ring {eid!r} sector angles out of order")
    return problems


# -- session protocol ---------------------------------------------------------------


class SceneSession:
    """Message-level protocol core, transport-agnostic: feed one inbound
    message dict, get the ordered reply dicts."""

    def __init__(self, scene: Scene, lock: threading.Lock | None = None):
        self.scene = scene
        self.lock = lock or threading.Lock()
        self.seq = 0
        self.pointer_down = False

    def hello(self) -> list[dict]:
        with self.lock:
            return [{"type": "renderList", "seq": 0, "list": build_render_list(self.scene)}]

    def handle(self, message: dict) -> list[dict]:
        self.seq += 1
        seq = self.seq
        try:
            event = self._to_event(message)
        except (KeyError, TypeError, ValueError) as exc:
            return [{"type": "error", "seq": seq, "message": f"malformed message: {exc}"}]
        with self.lock:
            if event == "save":
                doc = save_scene(self.scene).decode("utf-8")
                return [{"type": "scene", "seq": seq, "doc": doc}]
            if isinstance(event, PointerDown):
                if self.pointer_down:
                    return [{"type": "error", "seq": seq, "message": "down while the pointer is already down"}]
                self.pointer_down = True
            elif isinstance(event, PointerUp):
                self.pointer_down = False
            try:
                changed = apply_event(self.scene, event)
            except (GrabProtocolError, CommandError) as exc:
                return [{"type": "error", "seq": seq, "message": str(exc)}]
            replies = [{"type": "ack", "seq": seq, "changed": changed}]
            if changed:
                replies.append({"type": "renderList", "seq": seq, "list": build_render_list(self.scene)})
            return replies

    @staticmethod
    def _to_event(message: dict) -> Event | str:
        kind = message["type"]
        if kind == "down":
            button = message["button"]
            if button not in ("left", "right"):
                raise ValueError(f"unknown button {button!r}")
            return PointerDown(float(message["x"]), float(message["y"]), button)
        if kind == "move":
            return PointerMove(float(message["x"]), float(message["y"]))
        if kind == "up":
            return PointerUp()
        if kind == "command":
            return Command(message["name"], tuple(str(a) for a in message.get("args", [])))
        if kind == "save":
            return "save"
        raise ValueError(f"unknown message type {kind!r}")


def handle_protocol_lines(session: SceneSession, lines) -> list[str]:
    """Drive a session from an iterable of NDJSON lines (testing helper)."""
    out = [json.dumps(m, sort_keys=True) for m in session.hello()]
    for line in lines:
        line = line.strip()
        if not line:
            continue
        try:
            message = json.loads(line)
        except json.JSONDecodeError as exc:
            session.seq += 1
            out.append(json.dumps({"type": "error", "seq": session.seq, "message": f"bad JSON: {exc.msg}"}, sort_keys=True))
            continue
        for reply in session.handle(message):
            out.append(json.dumps(reply, sort_keys=True))
    return out


class SceneTCPServer(socketserver.ThreadingTCPServer):
    """NDJSON session protocol over TCP; all connections share one scene,
    serialized by the scene lock."""

    allow_reuse_address = True
    daemon_threads = True

    def __init__(self, address: tuple[str, int], scene: Scene):
        self.scene = scene
        self.scene_lock = threading.Lock()
        super().__init__(address, _TCPHandler)


class _TCPHandler(socketserver.StreamRequestHandler):
    def handle(self) -> None:
        session = SceneSession(self.server.scene, self.server.scene_lock)
        for reply in session.hello():
            self._send(reply)
        for raw in self.rfile:
            line = raw.decode("utf-8", errors="replace").strip()
            if not line:
                continue
            try:
                message = json.loads(line)
                replies = session.handle(message)
            except json.JSONDecodeError as exc:
                session.seq += 1
                replies = [{"type": "error", "seq": session.seq, "message": f"bad JSON: {exc.msg}"}]
            try:
                for reply in replies:
                    self._send(reply)
            except (BrokenPipeError, ConnectionResetError):
                return

    def _send(self, message: dict) -> None:
        self.wfile.write((json.dumps(message, sort_keys=True) + "\n").encode("utf-8"))


def serve_tcp(scene: Scene, host: str = "127.0.0.1", port: int = 7341) -> SceneTCPServer:
    """Start the protocol server on a background thread; caller owns shutdown."""
    server = SceneTCPServer((host, port), scene)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    return server
