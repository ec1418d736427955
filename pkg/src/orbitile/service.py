"""Stateless JSON-over-HTTP service for the designer frontend.

Plain standard-library server: every request is parsed, executed through
the shared request core, and answered with a JSON body and an explicit
Content-Length.  No sessions, no caches; identical requests produce
byte-identical responses.
"""

import json
import sys
import traceback
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlparse

from .api import (
    build_request,
    classify_request,
    cover_request,
    enumerate_request,
    error_payload,
)
from .errors import OrbitileError, RequestValidationError
from .render import tiling_json

POST_ROUTES = {
    "/api/classify": classify_request,
    "/api/build": build_request,
    "/api/cover": cover_request,
}


class ApiHandler(BaseHTTPRequestHandler):
    server_version = "orbitile/0.1"
    protocol_version = "HTTP/1.1"

    def log_message(self, fmt, *args):
        if not getattr(self.server, "quiet", False):
            BaseHTTPRequestHandler.log_message(self, fmt, *args)

    def _send(self, status, body):
        data = (tiling_json(body) if isinstance(body, dict) else body)
        data = data.encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(data)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(data)

    def _send_error_for(self, exc):
        try:
            status, body = error_payload(exc)
        except Exception:
            traceback.print_exc(file=sys.stderr)
            status, body = 500, {"error": "internal",
                                 "message": "unexpected failure"}
        self._send(status, body)

    def do_OPTIONS(self):
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods",
                         "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self):
        url = urlparse(self.path)
        if url.path == "/api/health":
            return self._send(200, {"status": "ok"})
        if url.path == "/api/enumerate":
            query = parse_qs(url.query)
            walls = query.get("walls", [None])[0]
            max_order = query.get("max_order", [None])[0]
            try:
                if walls is None or max_order is None:
                    raise RequestValidationError(
                        "walls and max_order query parameters are required")
                doc = enumerate_request(walls, max_order)
            except OrbitileError as exc:
                return self._send_error_for(exc)
            return self._send(200, doc)
        self._send(404, {"error": "not_found", "message": self.path})

    def do_POST(self):
        url = urlparse(self.path)
        handler = POST_ROUTES.get(url.path)
        if handler is None:
            status = 405 if url.path in ("/api/health", "/api/enumerate") \
                else 404
            return self._send(status, {"error": "not_found",
                                       "message": self.path})
        try:
            length = int(self.headers.get("Content-Length") or 0)
        except ValueError:
            length = 0
        raw = self.rfile.read(length) if length > 0 else b""
        try:
            payload = json.loads(raw.decode("utf-8")) if raw else {}
        except UnicodeDecodeError:
            return self._send(400, {"error": "malformed_json",
                                    "message": "body is not UTF-8"})
        except json.JSONDecodeError as exc:
            return self._send(400, {"error": "malformed_json",
                                    "message": str(exc),
                                    "position": exc.pos})
        try:
            doc = handler(payload)
        except OrbitileError as exc:
            return self._send_error_for(exc)
        except Exception:
            traceback.print_exc(file=sys.stderr)
            return self._send(500, {"error": "internal",
                                    "message": "unexpected failure"})
        self._send(200, doc)


def make_server(host="127.0.0.1", port=0, quiet=False):
    """Bound but not yet serving; port 0 picks a free port."""
    server = ThreadingHTTPServer((host, port), ApiHandler)
    server.quiet = quiet
    return server


def run_server(host="127.0.0.1", port=8647):
    server = make_server(host, port)
    sys.stderr.write("listening on http://%s:%d\n"
                     % (host, server.server_address[1]))
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
