"""Command-line surface: classification, enumeration, construction,
covers, and the designer service.

Every subcommand shells into the same request core the HTTP service
uses, so a payload behaves identically on both surfaces.  Exit codes:
0 success, 2 rejected request (parse or validation), 3 valid request
whose construction failed.
"""

import argparse
import json
import sys

from .api import (
    DEFAULT_MAX_COPIES,
    DEFAULT_MAX_DEPTH,
    DEFAULT_MIN_DIAMETER,
    DEFAULT_NOTATION,
    build_request,
    classify_request,
    cover_request,
    cover_svg_request,
    enumerate_request,
    error_payload,
)
from .errors import OrbitileError
from .render import EMPHASIS_MODES, tiling_json


def _csv_floats(text):
    try:
        return [float(t) for t in text.split(",") if t.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma-separated numbers")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="orbitile",
        description="Kaleidoscopic rooms: classify mirror notations, "
                    "construct fundamental polygons, unfold covers.")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="classify a mirror notation")
    c.add_argument("notation", help="notation such as *237")

    e = sub.add_parser("enumerate",
                       help="list canonical notations at a wall count")
    e.add_argument("--walls", type=int, required=True)
    e.add_argument("--max-order", type=int, required=True)

    b = sub.add_parser("build", help="construct the fundamental polygon")
    b.add_argument("notation", nargs="?", default=DEFAULT_NOTATION)
    b.add_argument("--free", type=_csv_floats, default=None,
                   metavar="A,B,...", help="free side lengths")
    b.add_argument("--out", default=None, help="write JSON here, not stdout")

    v = sub.add_parser("cover", help="unfold the polygon into a cover")
    v.add_argument("notation", nargs="?", default=DEFAULT_NOTATION)
    v.add_argument("--free", type=_csv_floats, default=None,
                   metavar="A,B,...")
    v.add_argument("--max-depth", type=int, default=DEFAULT_MAX_DEPTH)
    v.add_argument("--max-copies", type=int, default=DEFAULT_MAX_COPIES)
    v.add_argument("--min-diameter", type=float,
                   default=DEFAULT_MIN_DIAMETER)
    v.add_argument("--emphasis", choices=EMPHASIS_MODES, default=None)
    v.add_argument("--attenuation", type=_csv_floats, default=None,
                   metavar="A1,A2,...", help="per-mirror attenuations")
    v.add_argument("--format", choices=("svg", "tiling"), default="tiling")
    v.add_argument("--out", default=None)

    s = sub.add_parser("serve", help="run the designer HTTP service")
    s.add_argument("--port", type=int, default=8647)
    s.add_argument("--host", default="127.0.0.1")
    return parser


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _kv(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "-"
    if isinstance(value, list):
        return ",".join(str(v) for v in value) if value else "-"
    return str(value)


def _run(args):
    if args.command == "classify":
        record = classify_request({"notation": args.notation})
        for key in ("notation", "canonical", "kind", "euler_char",
                    "euler_char_exact", "is_orbifold", "is_bad",
                    "is_realizable", "constructible", "free_variables",
                    "roles"):
            if key in record:
                sys.stdout.write("%s=%s\n" % (key, _kv(record[key])))
        return 0
    if args.command == "enumerate":
        doc = enumerate_request(args.walls, args.max_order)
        for row in doc["orbifolds"]:
            sys.stdout.write("%s\t%s\t%.12g\n" % (
                row["notation"], row["kind"], row["euler_char"]))
        return 0
    if args.command == "build":
        record = build_request({"notation": args.notation,
                                "free_vars": args.free})
        _emit(tiling_json(record) + "\n", args.out)
        return 0
    if args.command == "cover":
        payload = {
            "notation": args.notation,
            "free_vars": args.free,
            "options": {
                "max_depth": args.max_depth,
                "max_copies": args.max_copies,
                "min_diameter": args.min_diameter,
            },
            "style": {},
        }
        if args.emphasis:
            payload["style"]["emphasis"] = args.emphasis
        if args.attenuation is not None:
            payload["style"]["attenuations"] = args.attenuation
        if args.format == "svg":
            _emit(cover_svg_request(payload), args.out)
        else:
            _emit(tiling_json(cover_request(payload)) + "\n", args.out)
        return 0
    if args.command == "serve":
        from .service import run_server

        run_server(args.host, args.port)
        return 0
    raise AssertionError("unreachable subcommand %r" % args.command)


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return _run(args)
    except OrbitileError as exc:
        status, body = error_payload(exc)
        sys.stderr.write("error: %s\n" % body.get("message", str(exc)))
        if body.get("hint"):
            sys.stderr.write("hint: %s\n" % body["hint"])
        if body.get("residuals"):
            sys.stderr.write("residuals: %s\n" % json.dumps(body["residuals"]))
        return 3 if status == 422 else 2


if __name__ == "__main__":
    sys.exit(main())
