"""Command-line front end and the stateless local JSON service.

Every command is a pure function of its inputs: identical invocations give
byte-identical output.  Exit codes: 0 success, 1 domain violation, 2 parse
error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlparse

from . import graph as graphmod
from . import lattice, wire
from .flip import FlipError, flip
from .skewcurves import (Star, display, equivariant_description, parse_sheaf,
                         phi, phi_inv)
from .triang import validate
from .wire import WireError

log = logging.getLogger("skewtilt")

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_PARSE = 2


class DomainError(Exception):
    """A structurally well-formed request that violates the model."""


def _dumps(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _load_tri_file(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise WireError("cannot read triangulation file %s: %s" % (path, exc))
    return wire.tri_from_wire(payload)


def cmd_map(args):
    n = args.n
    if args.arc:
        try:
            payload = json.loads(args.arc)
        except json.JSONDecodeError as exc:
            raise WireError("bad arc JSON: %s" % exc)
        g = wire.arc_from_wire(payload, n)
        print(display(phi(g)))
        print(equivariant_description(g))
    else:
        s = parse_sheaf(args.sheaf, n)
        g = phi_inv(s)
        print(_dumps(wire.arc_to_wire(g)))
        print(equivariant_description(g))
    return EXIT_OK


def _report_payload(report):
    return {"ok": report.ok,
            "violations": [{"code": v.code, "detail": v.detail}
                           for v in report.violations]}


_ZETA_TEXT = {"+": "+", "-": "-", "pm0": "+-(0)", "pm1": "+-(1)",
              "pm2": "+-(2)"}


def _check_payload(tri):
    """Validation report; valid triangulations also carry the derived data
    the explorer panels show (sign classification, stability bits, names)."""
    from .flip import iota
    from .triang import is_fv, tilting_sheaf, zeta

    report = validate(tri.arcs, tri.n)
    payload = _report_payload(report)
    if not report.ok:
        return payload
    z1, z2 = zeta(tri)
    payload["zeta"] = [_ZETA_TEXT[z1], _ZETA_TEXT[z2]]
    payload["names"] = [display(s) for s in tilting_sheaf(tri)]
    fv = is_fv(tri)[0]
    payload["fv"] = fv
    payload["iota"] = list(iota(tri)) if fv else None
    return payload


def cmd_check(args):
    tri = _load_tri_file(args.file)
    payload = _check_payload(tri)
    print(_dumps(payload))
    return EXIT_OK if payload["ok"] else EXIT_DOMAIN


def _checked(tri):
    report = validate(tri.arcs, tri.n)
    if not report.ok:
        raise DomainError(_dumps(_report_payload(report)))
    return tri


def cmd_flip(args):
    tri = _checked(_load_tri_file(args.file))
    try:
        payload = json.loads(args.arc)
    except json.JSONDecodeError as exc:
        raise WireError("bad arc JSON: %s" % exc)
    g = wire.arc_from_wire(payload, tri.n)
    try:
        res = flip(tri, g)
    except FlipError as exc:
        raise DomainError(str(exc))
    print(_dumps(wire.flip_to_wire(res)))
    return EXIT_OK


def cmd_enumerate(args):
    for tri in graphmod.enumerate_tris(args.n, args.window):
        print(_dumps(wire.tri_to_wire(tri)))
    return EXIT_OK


def cmd_path(args):
    tri1 = _checked(_load_tri_file(args.file_a))
    tri2 = _checked(_load_tri_file(args.file_b))
    try:
        steps = graphmod.flip_path(tri1, tri2)
    except (FlipError, ValueError) as exc:
        raise DomainError(str(exc))
    print(_dumps({"steps": [wire.flip_to_wire(s) for s in steps]}))
    return EXIT_OK


def cmd_graph(args):
    g = graphmod.build_graph(args.n, args.window)
    text = graphmod.export_dot(g) if args.dot else graphmod.export_csv(g)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_shift(args):
    tri = _checked(_load_tri_file(args.file))
    x = lattice.parse_element(args.x, tri.n)
    out = graphmod.shift_all(tri, x)
    print(_dumps(wire.tri_to_wire(out)))
    return EXIT_OK


# -- the stateless service ----------------------------------------------------

def _model_payload(n):
    stars = [wire.arc_to_wire(g) for g in
             (Star(e1, e2, n) for e1 in "+-" for e2 in "+-")]
    return {
        "n": n,
        "stars": stars,
        "families": {
            "half": {"crosses": [1, 2], "signs": ["+", "-"]},
            "pair": {"k_min": 1, "k_max": n - 1},
            "tors": {"res_min": 0, "res_max": n - 1,
                     "len_min": 1, "len_max": n - 1},
        },
    }


def _handle_post(path, body):
    """Dispatch a POST; returns (status, payload-dict)."""
    if path == "/validate":
        tri = wire.tri_from_wire(body)
        payload = _check_payload(tri)
        return (200, payload) if payload["ok"] else (422, payload)
    if path == "/flip":
        tri, g = wire.flip_request_from_wire(body)
        _checked(tri)
        try:
            return 200, wire.flip_to_wire(flip(tri, g))
        except FlipError as exc:
            raise DomainError(str(exc))
    if path == "/path":
        if not isinstance(body, dict) or set(body) != {"from", "to"}:
            raise WireError("path request needs exactly 'from' and 'to'")
        tri1 = _checked(wire.tri_from_wire(body["from"]))
        tri2 = _checked(wire.tri_from_wire(body["to"]))
        try:
            steps = graphmod.flip_path(tri1, tri2)
        except (FlipError, ValueError) as exc:
            raise DomainError(str(exc))
        return 200, {"steps": [wire.flip_to_wire(s) for s in steps]}
    if path == "/shift":
        if not isinstance(body, dict) or set(body) != {"tri", "x"}:
            raise WireError("shift request needs exactly 'tri' and 'x'")
        tri = _checked(wire.tri_from_wire(body["tri"]))
        if not isinstance(body["x"], str):
            raise WireError("'x' must be a string in the x1/x2/x3/c grammar")
        x = lattice.parse_element(body["x"], tri.n)
        return 200, wire.tri_to_wire(graphmod.shift_all(tri, x))
    if path == "/map":
        if not isinstance(body, dict) or "n" not in body:
            raise WireError("map request needs 'n' and one of 'arc'/'sheaf'")
        n = body["n"]
        if not isinstance(n, int) or n < 2:
            raise WireError("'n' must be an integer >= 2")
        keys = set(body) - {"n"}
        if keys == {"arc"}:
            g = wire.arc_from_wire(body["arc"], n)
            return 200, {"sheaf": display(phi(g)),
                         "arc": wire.arc_to_wire(g),
                         "equivariant": equivariant_description(g)}
        if keys == {"sheaf"}:
            if not isinstance(body["sheaf"], str):
                raise WireError("'sheaf' must be a string")
            g = phi_inv(parse_sheaf(body["sheaf"], n))
            return 200, {"sheaf": display(phi(g)),
                         "arc": wire.arc_to_wire(g),
                         "equivariant": equivariant_description(g)}
        raise WireError("map request needs exactly one of 'arc'/'sheaf'")
    return 404, {"error": "no such endpoint %s" % path}


def _handle_get(path, query):
    if path == "/enumerate":
        try:
            n = int(query.get("n", [""])[0])
            window = int(query.get("window", [str(2 * n)])[0])
        except ValueError:
            raise WireError("enumerate needs integer n and window")
        if n < 2:
            raise WireError("'n' must be >= 2")
        try:
            nodes = graphmod.enumerate_tris(n, window)
        except ValueError as exc:
            raise DomainError(str(exc))
        return 200, {"nodes": [wire.tri_to_wire(t) for t in nodes]}
    if path == "/model":
        try:
            n = int(query.get("n", [""])[0])
        except ValueError:
            raise WireError("model needs integer n")
        if n < 2:
            raise WireError("'n' must be >= 2")
        return 200, _model_payload(n)
    return 404, {"error": "no such endpoint %s" % path}


def make_handler(static_root=None):
    class Handler(BaseHTTPRequestHandler):
        def log_message(self, fmt, *args):
            log.info("%s " + fmt, self.address_string(), *args)

        def _respond(self, status, payload):
            data = _dumps(payload).encode()
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(data)))
            self.send_header("Access-Control-Allow-Origin", "*")
            self.end_headers()
            self.wfile.write(data)

        def do_OPTIONS(self):
            self.send_response(204)
            self.send_header("Access-Control-Allow-Origin", "*")
            self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
            self.send_header("Access-Control-Allow-Headers", "Content-Type")
            self.end_headers()

        def do_POST(self):
            length = int(self.headers.get("Content-Length", 0))
            raw = self.rfile.read(length)
            try:
                body = json.loads(raw.decode("utf-8"))
            except (UnicodeDecodeError, json.JSONDecodeError) as exc:
                self._respond(400, {"error": "malformed JSON: %s" % exc})
                return
            try:
                status, payload = _handle_post(urlparse(self.path).path, body)
            except WireError as exc:
                self._respond(400, {"error": str(exc)})
                return
            except DomainError as exc:
                self._respond(422, _maybe_json(str(exc)))
                return
            self._respond(status, payload)

        def do_GET(self):
            url = urlparse(self.path)
            if url.path in ("/enumerate", "/model"):
                try:
                    status, payload = _handle_get(url.path, parse_qs(url.query))
                except WireError as exc:
                    self._respond(400, {"error": str(exc)})
                    return
                except DomainError as exc:
                    self._respond(422, _maybe_json(str(exc)))
                    return
                self._respond(status, payload)
                return
            self._serve_static(url.path)

        def _serve_static(self, path):
            if static_root is None:
                self._respond(404, {"error": "no static assets configured"})
                return
            rel = path.lstrip("/") or "index.html"
            full = os.path.realpath(os.path.join(static_root, rel))
            if not full.startswith(os.path.realpath(static_root)) \
                    or not os.path.isfile(full):
                self._respond(404, {"error": "not found"})
                return
            ctype = {"html": "text/html", "js": "text/javascript",
                     "css": "text/css", "map": "application/json",
                     "json": "application/json"}.get(
                         full.rsplit(".", 1)[-1], "application/octet-stream")
            with open(full, "rb") as fh:
                data = fh.read()
            self.send_response(200)
            self.send_header("Content-Type", ctype)
            self.send_header("Content-Length", str(len(data)))
            self.end_headers()
            self.wfile.write(data)

    return Handler


def _maybe_json(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return {"error": text}


def default_static_root():
    here = os.path.dirname(os.path.abspath(__file__))
    for candidate in (os.path.join(here, "..", "..", "frontend", "dist"),
                      os.path.join(os.getcwd(), "frontend", "dist")):
        if os.path.isdir(candidate):
            return os.path.realpath(candidate)
    return None


def cmd_serve(args):
    server = ThreadingHTTPServer(("127.0.0.1", args.port),
                                 make_handler(default_static_root()))
    log.info("serving on port %d", server.server_address[1])
    print("listening on http://127.0.0.1:%d" % server.server_address[1],
          flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="skewtilt",
        description="skew-curve / pseudo-triangulation engine")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("map", help="translate between arcs and sheaf names")
    p.add_argument("--n", type=int, required=True)
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--arc", help="skew-curve as wire JSON")
    grp.add_argument("--sheaf", help="sheaf name, e.g. 'O(x1-x2+2*x3)'")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("check", help="validate a triangulation file")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("flip", help="flip one arc of a triangulation file")
    p.add_argument("file")
    p.add_argument("--arc", required=True)
    p.set_defaults(func=cmd_flip)

    p = sub.add_parser("enumerate", help="stream canonical triangulations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--window", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("path", help="flip path between two triangulation files")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=cmd_path)

    p = sub.add_parser("graph", help="export the windowed tilting graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--window", type=int, required=True)
    fmt = p.add_mutually_exclusive_group(required=True)
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("shift", help="twist every arc by a group element")
    p.add_argument("file")
    p.add_argument("--x", required=True, help="element, e.g. 'x1 - x2 + 3*x3'")
    p.set_defaults(func=cmd_shift)

    p = sub.add_parser("serve", help="run the stateless JSON service")
    p.add_argument("--port", type=int, default=8787)
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv=None):
    logging.basicConfig(level=os.environ.get("SKEWTILT_LOG", "WARNING"))
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except WireError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    except (ValueError, DomainError) as exc:
        print("domain violation: %s" % exc, file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
