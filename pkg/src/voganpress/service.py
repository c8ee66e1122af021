"""Stateless HTTP JSON API over the catalog and the press engine.

Endpoints (all JSON, UTF-8):

    GET  /families
    GET  /diagram?family=D&m=5&n=3          canonical diagram JSON
    POST /press       {diagram ref, circling, vertex}
    POST /reduce      {diagram ref, circling}
    POST /related     {diagram ref, c1, c2}
    POST /equivalent  {diagram ref, c1, c2}
    POST /classify    {diagram ref}

A diagram ref is either {"family": ..., "params": {...}} (rebuilt from the
catalog) or an inline {"diagram": {...}} in the canonical form, accepted
unverified.  Errors: 400 malformed input, 404 unknown route, 422 not
pressable / not admissible, 413 enumeration cap exceeded; every error body is
{"code": ..., "message": ...}.  Responses carry permissive cross-origin
headers so a browser UI served from another origin can call the API.
"""

from __future__ import annotations

import json
from fractions import Fraction
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlparse

from . import catalog, engine
from .errors import (
    CapExceeded,
    InvalidCircling,
    InvalidParams,
    NotAdmissible,
    NotPressable,
    UnknownVertex,
    VoganError,
)

_STATUS = {
    InvalidParams: (400, "invalid_params"),
    InvalidCircling: (400, "invalid_circling"),
    NotPressable: (422, "not_pressable"),
    UnknownVertex: (422, "unknown_vertex"),
    NotAdmissible: (422, "not_admissible"),
    CapExceeded: (413, "cap_exceeded"),
}


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


def _api_error(exc: VoganError) -> ApiError:
    status, code = _STATUS.get(type(exc), (400, "bad_request"))
    return ApiError(status, code, str(exc))


def _resolve_diagram(body: dict) -> catalog.Diagram:
    if "diagram" in body:
        obj = body["diagram"]
        if not isinstance(obj, dict):
            raise ApiError(400, "malformed", "diagram must be an object")
        return catalog.diagram_from_dict(obj)
    family = body.get("family")
    if family is None:
        raise ApiError(400, "malformed", "need family+params or an inline diagram")
    params = body.get("params", {}) or {}
    spec = catalog.family_spec(
        family,
        m=params.get("m"),
        n=params.get("n"),
        alpha=params.get("alpha"),
        parity_rule=body.get("parity_rule"),
    )
    return catalog.build_preferred_diagram(spec)


def _circling(body: dict, key: str) -> list[int]:
    if key not in body:
        raise ApiError(400, "malformed", f"missing field {key!r}")
    value = body[key]
    if isinstance(value, dict):
        value = value.get("circled")
    if not isinstance(value, list) or not all(isinstance(x, int) for x in value):
        raise ApiError(400, "malformed", f"{key} must be a list of vertex ids")
    return value


def handle_get(path: str, query: dict) -> tuple[int, str]:
    if path == "/families":
        payload = {
            "families": [
                {
                    "family": t.family,
                    "params": list(t.params),
                    "constraints": t.constraints,
                    "parity_rule": t.parity_rule,
                }
                for t in catalog.list_families()
            ]
        }
        return 200, json.dumps(payload, separators=(",", ":"))
    if path == "/diagram":
        def one(key):
            vals = query.get(key)
            return vals[0] if vals else None

        family = one("family")
        if family is None:
            raise ApiError(400, "malformed", "missing family")
        try:
            m = int(one("m")) if one("m") is not None else None
            n = int(one("n")) if one("n") is not None else None
            alpha = Fraction(one("alpha")) if one("alpha") is not None else None
        except ValueError as exc:
            raise ApiError(400, "malformed", f"bad parameter: {exc}") from exc
        spec = catalog.family_spec(family, m=m, n=n, alpha=alpha, parity_rule=one("parity_rule"))
        diagram = catalog.build_preferred_diagram(spec)
        return 200, catalog.diagram_to_json(diagram)
    raise ApiError(404, "not_found", f"no route {path}")


def handle_post(path: str, body: dict) -> tuple[int, str]:
    diagram = _resolve_diagram(body)
    if path == "/press":
        circled = engine.as_circling(diagram, _circling(body, "circling"))
        vertex = body.get("vertex")
        if not isinstance(vertex, int):
            raise ApiError(400, "malformed", "vertex must be an integer")
        result = engine.press(diagram, circled, vertex)
        payload = {
            "circling": engine.circling_to_dict(result),
            "admissible": engine.is_admissible(diagram, result),
            "pressable": engine.pressable(diagram, result),
        }
    elif path == "/reduce":
        circled = engine.as_circling(diagram, _circling(body, "circling"))
        reduced, steps = engine.reduce(diagram, circled)
        payload = {"circling": engine.circling_to_dict(reduced), "steps": list(steps)}
    elif path == "/related":
        c1 = engine.as_circling(diagram, _circling(body, "c1"))
        c2 = engine.as_circling(diagram, _circling(body, "c2"))
        steps = engine.f_related(diagram, c1, c2)
        payload = {"related": steps is not None}
        if steps is not None:
            payload["steps"] = list(steps)
    elif path == "/equivalent":
        c1 = engine.as_circling(diagram, _circling(body, "c1"))
        c2 = engine.as_circling(diagram, _circling(body, "c2"))
        same, witness = engine.equivalent(diagram, c1, c2)
        payload = {"equivalent": same}
        if same:
            sym, steps = witness
            payload["symmetry"] = engine.symmetry_to_dict(sym)
            payload["steps"] = list(steps)
    elif path == "/classify":
        classes = engine.classify(diagram, cap=body.get("cap"))
        payload = {"classes": [engine.class_to_dict(cl) for cl in classes]}
    else:
        raise ApiError(404, "not_found", f"no route {path}")
    return 200, json.dumps(payload, separators=(",", ":"))


class VoganRequestHandler(BaseHTTPRequestHandler):
    server_version = "voganpress/0.1"
    protocol_version = "HTTP/1.1"

    def log_message(self, fmt, *args):  # quiet by default
        if getattr(self.server, "verbose", False):
            super().log_message(fmt, *args)

    def _send(self, status: int, text: str) -> None:
        data = text.encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(data)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()
        self.wfile.write(data)

    def _send_error(self, err: ApiError) -> None:
        self._send(err.status, json.dumps({"code": err.code, "message": err.message}))

    def do_OPTIONS(self) -> None:
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self) -> None:
        parsed = urlparse(self.path)
        try:
            status, text = handle_get(parsed.path, parse_qs(parsed.query))
            self._send(status, text)
        except ApiError as err:
            self._send_error(err)
        except VoganError as exc:
            self._send_error(_api_error(exc))

    def do_POST(self) -> None:
        parsed = urlparse(self.path)
        try:
            length = int(self.headers.get("Content-Length", "0"))
            raw = self.rfile.read(length) if length else b""
            try:
                body = json.loads(raw.decode("utf-8")) if raw else {}
            except (json.JSONDecodeError, UnicodeDecodeError) as exc:
                raise ApiError(400, "malformed", f"bad JSON body: {exc}") from exc
            if not isinstance(body, dict):
                raise ApiError(400, "malformed", "body must be a JSON object")
            status, text = handle_post(parsed.path, body)
            self._send(status, text)
        except ApiError as err:
            self._send_error(err)
        except VoganError as exc:
            self._send_error(_api_error(exc))


def make_server(host: str = "127.0.0.1", port: int = 8080) -> ThreadingHTTPServer:
    """Bind and return the server (callers run serve_forever)."""
    return ThreadingHTTPServer((host, port), VoganRequestHandler)


def run(host: str = "127.0.0.1", port: int = 8080) -> None:
    server = make_server(host, port)
    try:
        server.serve_forever()
    finally:
        server.server_close()
