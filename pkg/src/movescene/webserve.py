"""Browser transport for the session protocol: a small HTTP server that
serves the client asset bundle and upgrades /ws connections to WebSocket,
carrying the same JSON messages as the TCP protocol (one message per text
frame instead of one per line).
"""

from __future__ import annotations

import base64
import hashlib
import json
import struct
import threading
from http.server import SimpleHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from .scene import Scene
from .service import SceneSession

_WS_GUID = "258EAFA5-E914-47DA-95CA-C5AB0DC85B11"

OP_TEXT = 0x1
OP_CLOSE = 0x8
OP_PING = 0x9
OP_PONG = 0xA


def _accept_key(client_key: str) -> str:
    digest = hashlib.sha1((client_key + _WS_GUID).encode("ascii")).digest()
    return base64.b64encode(digest).decode("ascii")


def read_frame(rfile) -> tuple[int, bytes] | None:
    """One complete (possibly fragmented) message: (opcode, payload)."""
    opcode = None
    payload = b""
    while True:
        header = rfile.read(2)
        if len(header) < 2:
            return None
        fin = header[0] & 0x80
        op = header[0] & 0x0F
        masked = header[1] & 0x80
        length = header[1] & 0x7F
        if length == 126:
            length = struct.unpack(">H", rfile.read(2))[0]
        elif length == 127:
            length = struct.unpack(">Q", rfile.read(8))[0]
        mask = rfile.read(4) if masked else b""
        chunk = rfile.read(length)
        if len(chunk) < length:
            return None
        if masked:
            chunk = bytes(b ^ mask[i % 4] for i, b in enumerate(chunk))
        if op != 0:
            opcode = op
        payload += chunk
        if fin:
            return (opcode or 0, payload)


def write_frame(wfile, opcode: int, payload: bytes) -> None:
    header = bytearray([0x80 | opcode])
    n = len(payload)
    if n < 126:
        header.append(n)
    elif n < 1 << 16:
        header.append(126)
        header += struct.pack(">H", n)
    else:
        header.append(127)
        header += struct.pack(">Q", n)
    wfile.write(bytes(header) + payload)
    wfile.flush()


class SceneHTTPServer(ThreadingHTTPServer):
    allow_reuse_address = True
    daemon_threads = True

    def __init__(self, address: tuple[str, int], scene: Scene, assets_dir: str | Path):
        self.scene = scene
        self.scene_lock = threading.Lock()
        self.assets_dir = str(assets_dir)
        super().__init__(address, _HTTPHandler)


class _HTTPHandler(SimpleHTTPRequestHandler):
    protocol_version = "HTTP/1.1"

    def __init__(self, request, client_address, server):
        super().__init__(request, client_address, server, directory=server.assets_dir)

    def log_message(self, fmt, *args):  # quiet by default
        pass

    def do_GET(self) -> None:
        if self.path.split("?")[0] == "/ws":
            self._websocket()
            return
        super().do_GET()

    def _websocket(self) -> None:
        key = self.headers.get("Sec-WebSocket-Key")
        if self.headers.get("Upgrade", "").lower() != "websocket" or not key:
            self.send_error(400, "expected a WebSocket upgrade")
            return
        self.send_response_only(101)
        self.send_header("Upgrade", "websocket")
        self.send_header("Connection", "Upgrade")
        self.send_header("Sec-WebSocket-Accept", _accept_key(key))
        self.end_headers()
        self.close_connection = True

        session = SceneSession(self.server.scene, self.server.scene_lock)
        try:
            for reply in session.hello():
                self._send_json(reply)
            while True:
                frame = read_frame(self.rfile)
                if frame is None:
                    return
                opcode, payload = frame
                if opcode == OP_CLOSE:
                    write_frame(self.wfile, OP_CLOSE, b"")
                    return
                if opcode == OP_PING:
                    write_frame(self.wfile, OP_PONG, payload)
                    continue
                if opcode != OP_TEXT:
                    continue
                try:
                    message = json.loads(payload.decode("utf-8"))
                    replies = session.handle(message)
                except (json.JSONDecodeError, UnicodeDecodeError) as exc:
                    session.seq += 1
                    replies = [{"type": "error", "seq": session.seq, "message": f"bad JSON: {exc}"}]
                for reply in replies:
                    self._send_json(reply)
        except (BrokenPipeError, ConnectionResetError):
            return

    def _send_json(self, message: dict) -> None:
        write_frame(self.wfile, OP_TEXT, json.dumps(message, sort_keys=True).encode("utf-8"))


def serve_http(scene: Scene, host: str, port: int, assets_dir: str | Path) -> SceneHTTPServer:
    server = SceneHTTPServer((host, port), scene, assets_dir)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    return server
