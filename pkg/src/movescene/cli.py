"""Command line entry point.

Exit codes: 0 success, 2 invariant violation, 3 protocol or script error.
"""

from __future__ import annotations

import argparse
import sys
import threading
from pathlib import Path

from .demos import DEMO_BUILDERS
from .persistence import SceneFormatError, load_scene, save_scene
from .render import build_render_list, render_list_to_svg
from .service import ReplayScriptError, check_scene_invariants, replay, serve_tcp
from .webserve import serve_http

EXIT_OK = 0
EXIT_INVARIANT = 2
EXIT_PROTOCOL = 3


def _load(path: str):
    return load_scene(Path(path).read_bytes())


def _parse_addr(addr: str) -> tuple[str, int]:
    host, _, port = addr.rpartition(":")
    return (host or "127.0.0.1", int(port))


def cmd_replay(args) -> int:
    scene = _load(args.scene)
    try:
        report = replay(scene, Path(args.script).read_text(), check_invariants=args.check_invariants)
    except ReplayScriptError as exc:
        print(f"script error: {exc}", file=sys.stderr)
        return EXIT_PROTOCOL
    out = save_scene(scene)
    if args.out:
        Path(args.out).write_bytes(out)
    else:
        sys.stdout.write(out.decode("utf-8") + "\n")
    print(
        f"applied {report.events_applied} events ({report.changed_events} changed view)",
        file=sys.stderr,
    )
    if report.violations:
        for violation in report.violations:
            print(f"invariant violation: {violation}", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


def cmd_serve(args) -> int:
    scene = _load(args.scene)
    host, port = _parse_addr(args.listen)
    tcp = serve_tcp(scene, host, port)
    print(f"protocol: tcp://{host}:{tcp.server_address[1]}", flush=True)
    http_server = None
    if args.http:
        http_host, http_port = _parse_addr(args.http)
        http_server = serve_http(scene, http_host, http_port, args.assets)
        print(f"client:   http://{http_host}:{http_server.server_address[1]}/  (WebSocket at /ws)", flush=True)
    try:
        threading.Event().wait()
    except KeyboardInterrupt:
        pass
    finally:
        tcp.shutdown()
        if http_server:
            http_server.shutdown()
    return EXIT_OK


def cmd_new_demo(args) -> int:
    scene = DEMO_BUILDERS[args.name]()
    data = save_scene(scene)
    if args.out:
        Path(args.out).write_bytes(data)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(data.decode("utf-8") + "\n")
    return EXIT_OK


def cmd_check(args) -> int:
    scene = _load(args.scene)
    problems = check_scene_invariants(scene)
    round_trip = save_scene(load_scene(save_scene(scene))) == save_scene(scene)
    if not round_trip:
        problems.append("save/load/save is not byte-stable")
    if problems:
        for problem in problems:
            print(f"FAIL {problem}")
        return EXIT_INVARIANT
    print("ok")
    return EXIT_OK


def cmd_export_svg(args) -> int:
    scene = _load(args.scene)
    width, _, height = args.size.partition("x")
    svg = render_list_to_svg(build_render_list(scene), int(width), int(height))
    Path(args.out).write_text(svg)
    print(f"wrote {args.out}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="movescene", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("replay", help="apply an event script to a scene file")
    p.add_argument("--scene", required=True)
    p.add_argument("--script", required=True)
    p.add_argument("--out")
    p.add_argument("--check-invariants", action="store_true")
    p.set_defaults(fn=cmd_replay)

    p = sub.add_parser("serve", help="serve the session protocol for a scene")
    p.add_argument("--scene", required=True)
    p.add_argument("--listen", default="127.0.0.1:7341")
    p.add_argument("--http", help="also serve the browser client at host:port")
    p.add_argument("--assets", default="frontend/dist", help="client asset bundle directory")
    p.set_defaults(fn=cmd_serve)

    p = sub.add_parser("new-demo", help="write a demo scene file")
    p.add_argument("name", choices=sorted(DEMO_BUILDERS))
    p.add_argument("--out")
    p.set_defaults(fn=cmd_new_demo)

    p = sub.add_parser("check", help="run the invariant suite on a scene file")
    p.add_argument("--scene", required=True)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("export-svg", help="static SVG snapshot of a scene")
    p.add_argument("--scene", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--size", default="1024x768")
    p.set_defaults(fn=cmd_export_svg)

    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SceneFormatError as exc:
        print(f"scene error: {exc}", file=sys.stderr)
        return EXIT_PROTOCOL
    except FileNotFoundError as exc:
        print(f"missing file: {exc.filename}", file=sys.stderr)
        return EXIT_PROTOCOL


if __name__ == "__main__":
    raise SystemExit(main())
