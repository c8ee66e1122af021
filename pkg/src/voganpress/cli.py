"""Command line interface.

Machine-readable JSON goes to stdout, human summaries to stderr.  Exit codes:
0 ok, 2 invalid parameters or malformed input, 3 press at an odd/uncircled/
unknown vertex, 4 inadmissible circling where admissibility is required,
5 enumeration cap exceeded, 6 could not bind the requested port.
"""

from __future__ import annotations

import argparse
import errno
import json
import sys
from fractions import Fraction

from . import catalog, engine, render
from .errors import (
    CapExceeded,
    DimensionMismatch,
    InvalidCircling,
    InvalidParams,
    NotAdmissible,
    NotPressable,
    UnknownVertex,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NOT_PRESSABLE = 3
EXIT_NOT_ADMISSIBLE = 4
EXIT_CAP = 5
EXIT_PORT = 6


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _out(obj) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def _add_diagram_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=catalog.FAMILY_NAMES, help="catalog family")
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--alpha", type=str, default=None, help="rational parameter for D21A, e.g. 2 or 1/2")
    p.add_argument("--parity-rule", choices=(catalog.EVEN_RULE, catalog.ODD_RULE), default=None,
                   help="override the family's admissibility parity")
    p.add_argument("--diagram", type=str, default=None, metavar="PATH",
                   help="load a diagram from canonical JSON instead of the catalog")


def _load_diagram(args) -> catalog.Diagram:
    if args.diagram is not None:
        with open(args.diagram, "r", encoding="utf-8") as fh:
            diagram = catalog.diagram_from_json(fh.read())
        _err(f"loaded {len(diagram.nodes)}-vertex diagram from {args.diagram} (marks unverified)")
        return diagram
    if args.family is None:
        raise InvalidParams("need --family (with parameters) or --diagram PATH")
    alpha = Fraction(args.alpha) if args.alpha is not None else None
    spec = catalog.family_spec(
        args.family, m=args.m, n=args.n, alpha=alpha, parity_rule=args.parity_rule
    )
    return catalog.build_preferred_diagram(spec)


def _parse_circle(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise InvalidParams(f"bad circling {text!r}: {exc}") from exc


def cmd_show(args) -> int:
    diagram = _load_diagram(args)
    circled = frozenset(_parse_circle(args.circle)) if args.circle else frozenset()
    if circled:
        circled = engine.as_circling(diagram, circled)
    print(render.render(diagram, args.format, circled))
    _err(f"{diagram.family.family}: {len(diagram.nodes)} vertices, "
         f"lowest root {diagram.lowest}, parity rule {diagram.family.parity_rule}")
    return EXIT_OK


def cmd_press(args) -> int:
    diagram = _load_diagram(args)
    circled = engine.as_circling(diagram, _parse_circle(args.circle))
    result = engine.press(diagram, circled, args.at)
    _out(engine.circling_to_dict(result))
    _err(f"pressed {args.at}: {sorted(circled)} -> {sorted(result)}")
    return EXIT_OK


def cmd_admissible(args) -> int:
    diagram = _load_diagram(args)
    circled = engine.as_circling(diagram, _parse_circle(args.circle))
    ok = engine.is_admissible(diagram, circled)
    _out({"admissible": ok})
    s = sum(diagram.a_label(i) for i in circled)
    _err(f"label sum {s} against rule '{diagram.family.parity_rule}'")
    return EXIT_OK


def cmd_reduce(args) -> int:
    diagram = _load_diagram(args)
    circled = engine.as_circling(diagram, _parse_circle(args.circle))
    reduced, steps = engine.reduce(diagram, circled)
    _out({"circling": engine.circling_to_dict(reduced), "steps": list(steps)})
    bound = engine.odd_removed_components(diagram)
    _err(f"reduced {sorted(circled)} -> {sorted(reduced)} in {len(steps)} presses "
         f"(size {len(reduced)} <= {bound} components)")
    return EXIT_OK


def cmd_related(args) -> int:
    diagram = _load_diagram(args)
    c1 = engine.as_circling(diagram, _parse_circle(args.c1))
    c2 = engine.as_circling(diagram, _parse_circle(args.c2))
    steps = engine.f_related(diagram, c1, c2)
    if steps is None:
        _out({"related": False})
        _err(f"{sorted(c1)} and {sorted(c2)} lie in different press orbits")
    else:
        _out({"related": True, "steps": list(steps)})
        _err(f"{sorted(c1)} -> {sorted(c2)} via presses {steps}")
    return EXIT_OK


def cmd_equivalent(args) -> int:
    diagram = _load_diagram(args)
    c1 = engine.as_circling(diagram, _parse_circle(args.c1))
    c2 = engine.as_circling(diagram, _parse_circle(args.c2))
    same, witness = engine.equivalent(diagram, c1, c2)
    if same:
        sym, steps = witness
        _out({
            "equivalent": True,
            "symmetry": engine.symmetry_to_dict(sym),
            "steps": list(steps),
        })
        _err(f"same real form: symmetry {sym.perm} then presses {steps}")
    else:
        _out({"equivalent": False})
        _err("not equivalent under any diagram symmetry")
    return EXIT_OK


def cmd_classify(args) -> int:
    diagram = _load_diagram(args)
    classes = engine.classify(diagram, cap=args.cap)
    _out({"classes": [engine.class_to_dict(cl) for cl in classes]})
    _err(f"{len(classes)} classes over "
         f"{sum(cl.size for cl in classes)} admissible circlings")
    return EXIT_OK


def cmd_symmetries(args) -> int:
    diagram = _load_diagram(args)
    syms = engine.automorphisms(diagram)
    _out({"symmetries": [engine.symmetry_to_dict(s) for s in syms]})
    _err(f"{len(syms)} diagram symmetries")
    return EXIT_OK


def cmd_serve(args) -> int:
    from . import service

    try:
        server = service.make_server(args.host, args.port)
    except OSError as exc:
        if exc.errno in (errno.EADDRINUSE, errno.EACCES):
            _err(f"cannot bind {args.host}:{args.port}: {exc}")
            return EXIT_PORT
        raise
    host, port = server.server_address[:2]
    print(f"serving on {host}:{port}", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        _err("interrupted, shutting down")
    finally:
        server.server_close()
    return EXIT_OK


def cmd_families(_args) -> int:
    _out({
        "families": [
            {
                "family": t.family,
                "params": list(t.params),
                "constraints": t.constraints,
                "parity_rule": t.parity_rule,
            }
            for t in catalog.list_families()
        ]
    })
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="voganpress",
        description="Press circled vertices on Vogan superdiagrams: build, press, "
        "reduce, compare and classify circlings of the contragredient families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("families", help="list the supported families")
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("show", help="render a diagram")
    _add_diagram_args(p)
    p.add_argument("--format", choices=render.STYLES, default="ascii")
    p.add_argument("--circle", type=str, default="", help="comma-separated circled ids")
    p.set_defaults(func=cmd_show)

    p = sub.add_parser("press", help="press a circled vertex")
    _add_diagram_args(p)
    p.add_argument("--circle", type=str, required=True)
    p.add_argument("--at", type=int, required=True)
    p.set_defaults(func=cmd_press)

    p = sub.add_parser("admissible", help="test admissibility of a circling")
    _add_diagram_args(p)
    p.add_argument("--circle", type=str, required=True)
    p.set_defaults(func=cmd_admissible)

    p = sub.add_parser("reduce", help="minimal circling in the press orbit")
    _add_diagram_args(p)
    p.add_argument("--circle", type=str, required=True)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("related", help="press sequence between two circlings, if any")
    _add_diagram_args(p)
    p.add_argument("--c1", type=str, required=True)
    p.add_argument("--c2", type=str, required=True)
    p.set_defaults(func=cmd_related)

    p = sub.add_parser("equivalent", help="same real form up to symmetry and presses")
    _add_diagram_args(p)
    p.add_argument("--c1", type=str, required=True)
    p.add_argument("--c2", type=str, required=True)
    p.set_defaults(func=cmd_equivalent)

    p = sub.add_parser("classify", help="partition admissible circlings into classes")
    _add_diagram_args(p)
    p.add_argument("--cap", type=int, default=None,
                   help="enumeration cap (default 2**22 or VOGAN_ORBIT_CAP)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("symmetries", help="list diagram symmetries")
    _add_diagram_args(p)
    p.set_defaults(func=cmd_symmetries)

    p = sub.add_parser("serve", help="run the HTTP JSON API")
    p.add_argument("--host", type=str, default="127.0.0.1")
    p.add_argument("--port", type=int, default=8080)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidParams, InvalidCircling, DimensionMismatch) as exc:
        _err(f"error: {exc}")
        return EXIT_INVALID
    except (NotPressable, UnknownVertex) as exc:
        _err(f"error: {exc}")
        return EXIT_NOT_PRESSABLE
    except NotAdmissible as exc:
        _err(f"error: {exc}")
        return EXIT_NOT_ADMISSIBLE
    except CapExceeded as exc:
        _err(f"error: {exc}")
        return EXIT_CAP
    except OSError as exc:
        _err(f"error: {exc}")
        return EXIT_INVALID


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
