"""Shared request core for the command line and the HTTP service.

Both surfaces accept the same JSON-shaped payloads and produce the same
JSON-shaped results by calling through here, so their behavior cannot
drift apart.  Validation errors are raised as typed exceptions;
error_payload maps any package error onto an HTTP status and a JSON
body, which the CLI reuses for its exit codes.
"""

import re
from fractions import Fraction

from .construct import build, polygon_area, required_free_vars
from .cover import CoverOptions, generate_cover
from .errors import (
    ConstructionError,
    CoverTooLargeError,
    InfeasibleFreeVariableError,
    NotRealizableError,
    OrbitileError,
    ParseError,
    RequestValidationError,
)
from .notation import (
    OrbifoldNotation,
    classify,
    enumerate_orbifolds,
    format_notation,
    normalize,
    parse,
)
from .render import RenderStyle, export_tiling, render_cover

DEFAULT_NOTATION = "*22222"
DEFAULT_MAX_DEPTH = 12
DEFAULT_MAX_COPIES = 500
DEFAULT_MIN_DIAMETER = 0.002
HARD_COPY_CAP = 20000
ENUMERATION_BUDGET = 2_000_000  # max_order ** walls scan bound

ENVELOPE_KEYS = ("notation", "free_vars", "options", "style")
OPTION_KEYS = ("max_depth", "max_copies", "min_diameter", "dedup_tolerance")
STYLE_KEYS = ("emphasis", "attenuations", "viewport_radius", "stroke",
              "fill", "size", "translational_mirror")
COLOR_PATTERN = re.compile(r"^[#a-zA-Z0-9(),.% -]{1,64}$")

TWO_WALL_HINT = ("two-wall rooms use one shared order: both corners change "
                 "together, so request *kk")


def _require_mapping(value, where):
    if value is None:
        return {}
    if not isinstance(value, dict):
        raise RequestValidationError("%s must be an object" % where)
    return value


def _reject_unknown(mapping, allowed, where):
    for key in mapping:
        if key not in allowed:
            raise RequestValidationError(
                "unknown %s field %r (expected one of %s)"
                % (where, key, ", ".join(allowed)))


def _number(value, where):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise RequestValidationError("%s must be a number" % where)
    return float(value)


def panel_rules(n):
    """Server-side wall-count rules mirroring the designer panel.

    A one-wall room has no corner choice: its single order is forced to
    one.  A two-wall room with unequal orders is rejected with the sync
    rule spelled out (the designer edits both corners together).
    """
    orders = n.orders
    if len(orders) == 1 and orders[0] != 1:
        return OrbifoldNotation([1])
    if len(orders) == 2 and orders[0] != orders[1]:
        raise NotRealizableError(
            "bad orbifold: not realizable (corner orders %s and %s disagree "
            "on a two-wall room)" % (orders[0], orders[1]),
            hint=TWO_WALL_HINT,
        )
    return n


def _parse_notation_field(payload):
    text = payload.get("notation", DEFAULT_NOTATION)
    if not isinstance(text, str):
        raise RequestValidationError("notation must be a string")
    return parse(text)


def _parse_free_vars(payload, n):
    raw = payload.get("free_vars")
    count, roles = required_free_vars(n)
    if raw is None:
        return None
    if isinstance(raw, (int, float)) and not isinstance(raw, bool):
        return [float(raw)] * count
    if not isinstance(raw, list):
        raise RequestValidationError("free_vars must be a number or a list")
    values = [_number(v, "free_vars[%d]" % i) for i, v in enumerate(raw)]
    if len(values) != count:
        raise RequestValidationError(
            "expected %d free variables for %s (%s), got %d"
            % (count, format_notation(normalize(n)),
               ", ".join(roles) if roles else "none", len(values)))
    return values


def _parse_options(payload):
    raw = _require_mapping(payload.get("options"), "options")
    _reject_unknown(raw, OPTION_KEYS, "options")
    depth = raw.get("max_depth", DEFAULT_MAX_DEPTH)
    copies = raw.get("max_copies", DEFAULT_MAX_COPIES)
    if isinstance(depth, bool) or not isinstance(depth, int):
        raise RequestValidationError("max_depth must be an integer")
    if isinstance(copies, bool) or not isinstance(copies, int):
        raise RequestValidationError("max_copies must be an integer")
    if copies > HARD_COPY_CAP:
        raise CoverTooLargeError(
            "max_copies %d exceeds the hard cap %d" % (copies, HARD_COPY_CAP))
    kwargs = {"max_depth": depth, "max_copies": copies}
    if "min_diameter" in raw:
        kwargs["min_diameter"] = _number(raw["min_diameter"], "min_diameter")
    else:
        kwargs["min_diameter"] = DEFAULT_MIN_DIAMETER
    if "dedup_tolerance" in raw:
        kwargs["dedup_tolerance"] = _number(raw["dedup_tolerance"],
                                            "dedup_tolerance")
    return CoverOptions(**kwargs)


def _parse_style(payload):
    raw = _require_mapping(payload.get("style"), "style")
    _reject_unknown(raw, STYLE_KEYS, "style")
    kwargs = {}
    if "emphasis" in raw:
        if not isinstance(raw["emphasis"], str):
            raise RequestValidationError("emphasis must be a string")
        kwargs["emphasis"] = raw["emphasis"]
    if "attenuations" in raw:
        att = raw["attenuations"]
        if not isinstance(att, list):
            raise RequestValidationError("attenuations must be a list")
        kwargs["attenuations"] = [
            _number(a, "attenuations[%d]" % i) for i, a in enumerate(att)]
        kwargs.setdefault("emphasis", "custom")
    if "viewport_radius" in raw:
        kwargs["viewport_radius"] = _number(raw["viewport_radius"],
                                            "viewport_radius")
    if "size" in raw:
        if isinstance(raw["size"], bool) or not isinstance(raw["size"], int):
            raise RequestValidationError("size must be an integer")
        kwargs["size"] = raw["size"]
    if "translational_mirror" in raw:
        tm = raw["translational_mirror"]
        if isinstance(tm, bool) or not isinstance(tm, int):
            raise RequestValidationError(
                "translational_mirror must be an integer")
        kwargs["translational_mirror"] = tm
    for key in ("stroke", "fill"):
        if key in raw:
            value = raw[key]
            if not isinstance(value, str) or not COLOR_PATTERN.match(value):
                raise RequestValidationError("%s is not a plain color" % key)
            kwargs[key] = value
    return RenderStyle(**kwargs)


# ---------------------------------------------------------------------------
# request handlers


def _euler_fields(cls):
    chi = cls.euler_char
    out = {"euler_char": float(chi)}
    if isinstance(chi, Fraction):
        out["euler_char_exact"] = "%d/%d" % (chi.numerator, chi.denominator)
    return out


def classify_request(payload):
    """Classification record for a notation; bad orbifolds are reported,
    not rejected."""
    payload = _require_mapping(payload, "request")
    _reject_unknown(payload, ("notation",), "request")
    n = _parse_notation_field(payload)
    cls = classify(n)
    out = {
        "notation": format_notation(n),
        "canonical": format_notation(normalize(n)),
        "kind": cls.kind,
        "is_orbifold": cls.is_orbifold,
        "is_bad": cls.is_bad,
        "is_realizable": cls.is_realizable,
    }
    out.update(_euler_fields(cls))
    if cls.is_realizable:
        try:
            count, roles = required_free_vars(n)
            out["free_variables"] = count
            out["roles"] = roles
            out["constructible"] = True
        except (ConstructionError, OrbitileError):
            out["free_variables"] = None
            out["roles"] = None
            out["constructible"] = False
    else:
        out["free_variables"] = None
        out["roles"] = None
        out["constructible"] = False
    return out


def _point(z):
    from .moebius import is_infinity

    return None if is_infinity(z) else [z.real, z.imag]


def polygon_record(p):
    cls = classify(p.notation)
    out = {
        "kind": p.kind,
        "notation": format_notation(p.notation),
        "corner_orders": list(p.corner_orders),
        "side_lengths": list(p.side_lengths),
        "free_vars": list(p.free_vars),
        "vertices": [_point(v) for v in p.vertices],
        "base_point": _point(p.base_point),
        "closure_residual": p.closure_residual,
        "angle_residuals": list(p.angle_residuals),
        "is_orbifold": p.is_orbifold,
        "area": polygon_area(p),
    }
    out.update(_euler_fields(cls))
    return out


def build_request(payload):
    """Construct the fundamental polygon described by the envelope."""
    payload = _require_mapping(payload, "request")
    _reject_unknown(payload, ("notation", "free_vars"), "request")
    n = panel_rules(_parse_notation_field(payload))
    fv = _parse_free_vars(payload, n)
    return polygon_record(build(n, fv))


def _cover_pieces(payload):
    payload = _require_mapping(payload, "request")
    _reject_unknown(payload, ENVELOPE_KEYS, "request")
    n = panel_rules(_parse_notation_field(payload))
    fv = _parse_free_vars(payload, n)
    options = _parse_options(payload)
    style = _parse_style(payload)
    p = build(n, fv)
    cover = generate_cover(p, options)
    return p, cover, style


def cover_request(payload):
    """Tiling document for the cover described by the envelope."""
    p, cover, style = _cover_pieces(payload)
    return export_tiling(p, cover, style)


def cover_svg_request(payload):
    """Vector-graphics text for the cover described by the envelope."""
    p, cover, style = _cover_pieces(payload)
    return render_cover(p, cover, style)


def enumerate_request(walls, max_order):
    """All canonical realizable notations at a wall count, classified."""
    try:
        walls = int(walls)
        max_order = int(max_order)
    except (TypeError, ValueError):
        raise RequestValidationError("walls and max_order must be integers")
    if walls < 1 or max_order < 2:
        raise RequestValidationError(
            "walls must be >= 1 and max_order >= 2")
    if max_order ** walls > ENUMERATION_BUDGET:
        raise RequestValidationError(
            "enumeration of %d walls up to order %d is too large; shrink one"
            % (walls, max_order))
    rows = []
    for n, cls in enumerate_orbifolds(walls, max_order):
        row = {"notation": format_notation(n), "kind": cls.kind,
               "is_orbifold": cls.is_orbifold}
        row.update(_euler_fields(cls))
        rows.append(row)
    return {"walls": walls, "max_order": max_order, "orbifolds": rows}


# ---------------------------------------------------------------------------
# uniform error mapping


def error_payload(exc):
    """(http_status, json_body) for any package error.

    400 malformed request, 413 over the copy cap, 422 valid request whose
    construction failed; everything else stays an exception.
    """
    if isinstance(exc, ParseError):
        return 400, {"error": "parse_error", "message": str(exc),
                     "position": exc.position}
    if isinstance(exc, RequestValidationError):
        body = {"error": "invalid_request", "message": str(exc)}
        if exc.hint:
            body["hint"] = exc.hint
        return 400, body
    if isinstance(exc, NotRealizableError):
        # a well-formed notation naming an impossible room: the request
        # parsed, so this is unprocessable content, not a bad request
        body = {"error": "not_realizable", "message": str(exc)}
        if exc.hint:
            body["hint"] = exc.hint
        return 422, body
    if isinstance(exc, CoverTooLargeError):
        return 413, {"error": "cover_too_large", "message": str(exc)}
    if isinstance(exc, InfeasibleFreeVariableError):
        return 422, {"error": "infeasible_free_variable",
                     "message": str(exc), "cut_index": exc.cut_index}
    if isinstance(exc, ConstructionError):
        return 422, {"error": "construction_failed", "message": str(exc),
                     "residuals": _json_residuals(exc.residuals)}
    if isinstance(exc, OrbitileError):
        return 400, {"error": "invalid_value", "message": str(exc)}
    raise exc


def _json_residuals(residuals):
    out = {}
    for key, value in residuals.items():
        if isinstance(value, (list, tuple)):
            out[key] = [float(v) for v in value]
        else:
            out[key] = float(value)
    return out
