"""Vector rendering of polygons and covers, plus the structured tiling
export consumed by the designer UI.

Output is deterministic text: scalable vector graphics with one group
per copy (painted back to front by depth so dim distant copies never
occlude the fundamental room), and a JSON tiling document whose floats
round-trip exactly.  Geodesic edges become line segments or circular
arcs; the arc always sweeps the side of its circle that actually carries
the edge, pinned by the edge midpoint.
"""

import cmath
import json
import math

from .cover import emphasis_weights
from .errors import NumericDomainError
from .geometry import EUCLIDEAN, SPHERICAL, transform_geodesic
from .moebius import IsometryTransform, MoebiusMatrix, is_infinity
from .notation import classify, format_notation

EPSILON = 1e-12
LINE_RADIUS_LIMIT = 1e6  # arcs flatter than this render as segments
EMPHASIS_MODES = ("orbifold", "translational", "universal", "custom")


class RenderStyle(object):
    """Presentation knobs: emphasis preset or explicit attenuations,
    spherical viewport, colors, pixel size."""

    __slots__ = ("attenuations", "emphasis", "viewport_radius",
                 "stroke", "fill", "size", "translational_mirror")

    def __init__(self, emphasis="universal", attenuations=None,
                 viewport_radius=3.0, stroke="#222222", fill="#4477aa",
                 size=800, translational_mirror=0):
        if emphasis not in EMPHASIS_MODES:
            raise NumericDomainError(
                "emphasis must be one of %s" % (EMPHASIS_MODES,))
        if viewport_radius <= 0 or size <= 0:
            raise NumericDomainError("viewport and size must be positive")
        self.emphasis = emphasis
        self.attenuations = (
            None if attenuations is None else [float(a) for a in attenuations]
        )
        self.viewport_radius = float(viewport_radius)
        self.stroke = str(stroke)
        self.fill = str(fill)
        self.size = int(size)
        self.translational_mirror = int(translational_mirror)

    def resolve_attenuations(self, n_edges):
        """Preset rules: orbifold all 0, universal all 1, translational a
        single 1; custom uses the explicit vector."""
        if self.emphasis == "orbifold":
            return [0.0] * n_edges
        if self.emphasis == "universal":
            return [1.0] * n_edges
        if self.emphasis == "translational":
            if not 0 <= self.translational_mirror < n_edges:
                raise NumericDomainError(
                    "translational mirror index out of range")
            att = [0.0] * n_edges
            att[self.translational_mirror] = 1.0
            return att
        if self.attenuations is None:
            raise NumericDomainError(
                "custom emphasis needs an attenuation vector")
        return list(self.attenuations)


class EdgePath(object):
    """One drawable piece of an edge: a segment, a circular arc (signed
    sweep, positive counterclockwise), or a segment pair broken across
    the point at infinity."""

    __slots__ = ("kind", "start", "end", "center", "radius", "sweep",
                 "clipped", "pieces")

    def __init__(self, kind, start, end, center=0j, radius=0.0, sweep=0.0,
                 clipped=False, pieces=()):
        self.kind = kind  # "line" | "arc" | "broken"
        self.start = start
        self.end = end
        self.center = center
        self.radius = radius
        self.sweep = sweep
        self.clipped = clipped
        self.pieces = pieces


def _clip_along(finite, direction, viewport_radius):
    """Point where the ray from `finite` along `direction` leaves the
    viewport circle: solve |finite + s*direction| = viewport_radius."""
    d = direction / abs(direction)
    b = finite.real * d.real + finite.imag * d.imag
    c = abs(finite) ** 2 - viewport_radius * viewport_radius
    s = -b + math.sqrt(max(b * b - c, 0.0))
    return finite + s * d


def geodesic_edge_path(edge, viewport_radius=3.0):
    """Drawable form of an edge: segment, arc, or broken segment pair.

    Arcs pick the sweep containing the sampled midpoint.  Edges with an
    endpoint at infinity, or straight edges that run through infinity
    (midpoint not between the endpoints), come back clipped against the
    viewport circle and flagged.
    """
    g = edge.geodesic
    a, b, m = edge.start, edge.end, edge.midpoint
    if g.is_line():
        ai, bi = is_infinity(a), is_infinity(b)
        if ai or bi:
            finite = b if ai else a
            out = _clip_along(finite, g.direction if ai else -g.direction,
                              viewport_radius)
            s, e = (out, b) if ai else (a, out)
            return EdgePath("line", s, e, clipped=True)
        u = b - a
        length = abs(u)
        along = float("nan") if is_infinity(m) else (
            ((m - a).real * u.real + (m - a).imag * u.imag) / length
            if length > EPSILON else 0.0)
        if not (-1e-9 <= along <= length + 1e-9):
            # the edge leaves a and returns to b the other way around the
            # sphere: two rays clipped at the viewport
            d = g.direction
            sign_a = 1.0 if (b - a).real * d.real + (b - a).imag * d.imag < 0 else -1.0
            p1 = _clip_along(a, sign_a * d, viewport_radius)
            p2 = _clip_along(b, -sign_a * d, viewport_radius)
            return EdgePath(
                "broken", a, b, clipped=True,
                pieces=(("line", a, p1), ("line", p2, b)),
            )
        return EdgePath("line", a, b)
    c, r = g.center, g.radius
    if r > LINE_RADIUS_LIMIT:
        return EdgePath("line", a, b)
    if abs(a - b) < EPSILON:
        # closed edge: the full circle
        return EdgePath("arc", a, b, c, r, 2.0 * math.pi)
    th_a = cmath.phase(a - c)
    th_b = cmath.phase(b - c)
    th_m = cmath.phase(m - c)
    ccw = (th_b - th_a) % (2.0 * math.pi)
    mid_off = (th_m - th_a) % (2.0 * math.pi)
    sweep = ccw if mid_off <= ccw + EPSILON else ccw - 2.0 * math.pi
    return EdgePath("arc", a, b, c, r, sweep)


def _fmt(x):
    if x == 0.0:
        x = 0.0  # normalize negative zero
    return "%.10g" % x


def _arc_command(start, end, center, radius, sweep):
    """Elliptical-arc command(s) with equal radii; full and near-full
    sweeps are split so the endpoints never coincide."""
    if abs(sweep) > 1.75 * math.pi:
        th_a = cmath.phase(start - center)
        mid = center + radius * cmath.exp(1j * (th_a + 0.5 * sweep))
        return (_arc_command(start, mid, center, radius, 0.5 * sweep)
                + _arc_command(mid, end, center, radius, 0.5 * sweep))
    large = 1 if abs(sweep) > math.pi else 0
    sweep_flag = 1 if sweep > 0 else 0
    return " A %s %s 0 %d %d %s %s" % (
        _fmt(radius), _fmt(radius), large, sweep_flag,
        _fmt(end.real), _fmt(end.imag),
    )


def _path_d(edge_paths, closed):
    """Path data visiting the edge pieces in order."""
    d = []
    pen = None
    for ep in edge_paths:
        if ep.kind == "broken":
            for _, s, e in ep.pieces:
                d.append(" M %s %s L %s %s" % (
                    _fmt(s.real), _fmt(s.imag), _fmt(e.real), _fmt(e.imag)))
            pen = None
            continue
        if pen is None or abs(pen - ep.start) > 1e-9:
            d.append(" M %s %s" % (_fmt(ep.start.real), _fmt(ep.start.imag)))
        if ep.kind == "line":
            d.append(" L %s %s" % (_fmt(ep.end.real), _fmt(ep.end.imag)))
        else:
            d.append(_arc_command(ep.start, ep.end, ep.center, ep.radius,
                                  ep.sweep))
        pen = ep.end
    if closed and pen is not None:
        d.append(" Z")
    return "".join(d).strip()


def _copy_edges(p, t):
    """Transient edge records for a transformed copy, reusing the
    fundamental polygon's Edge class."""
    from .construct import Edge

    out = []
    for e in p.edges:
        g2 = transform_geodesic(t, e.geodesic)
        out.append(Edge(g2, t(e.start), t(e.end), e.length, t(e.midpoint),
                        e.interior_sign))
    return out


def _copy_visible(kind, copy, viewport_radius):
    if kind != SPHERICAL:
        return True
    finite = [v for v in copy.vertices if not is_infinity(v)]
    if not finite:
        return False
    return any(abs(v) <= viewport_radius for v in finite)


def _copy_is_clipped(copy):
    return copy.contains_infinity or any(is_infinity(v) for v in copy.vertices)


def render_cover(p, copies, style=None):
    """Scalable-vector-graphics text for a cover: one group per copy,
    deepest copies painted first, fill opacity from the attenuation
    product.  Byte-identical for identical inputs."""
    if style is None:
        style = RenderStyle()
    att = style.resolve_attenuations(len(p.edges))
    intensities = emphasis_weights(copies, att)
    if p.kind == EUCLIDEAN:
        xs = [v.real for c in copies for v in c.vertices]
        ys = [v.imag for c in copies for v in c.vertices]
        x0, x1 = min(xs), max(xs)
        y0, y1 = min(ys), max(ys)
        mx, my = 0.05 * max(x1 - x0, 1e-9), 0.05 * max(y1 - y0, 1e-9)
        box = (x0 - mx, y0 - my, (x1 - x0) + 2 * mx, (y1 - y0) + 2 * my)
    else:
        box = (-1.05, -1.05, 2.10, 2.10)
    order = sorted(range(len(copies)), key=lambda i: (-copies[i].depth, i))
    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
        'viewBox="%s %s %s %s">' % (
            style.size, style.size,
            _fmt(box[0]), _fmt(box[1]), _fmt(box[2]), _fmt(box[3])),
        '<g transform="scale(1,-1)" stroke="%s" stroke-width="%s" '
        'fill="%s">' % (style.stroke, _fmt(0.004 * box[2]), style.fill),
    ]
    for i in order:
        copy = copies[i]
        if not _copy_visible(p.kind, copy, style.viewport_radius):
            continue
        edges = _copy_edges(p, copy.transform)
        paths = [geodesic_edge_path(e, style.viewport_radius) for e in edges]
        clipped = _copy_is_clipped(copy) or any(ep.clipped for ep in paths)
        d = _path_d(paths, closed=not clipped)
        if clipped:
            # open outline only: a region spanning infinity has no
            # meaningful filled interior in the chart
            body = '<path d="%s" fill="none"/>' % d
        else:
            body = '<path d="%s" fill-opacity="%s"/>' % (
                d, _fmt(intensities[i]))
        lines.append(
            '<g data-copy="%d" data-depth="%d" data-intensity="%s">%s</g>'
            % (i, copy.depth, _fmt(intensities[i]), body))
    if p.kind != EUCLIDEAN:
        lines.append(
            '<circle cx="0" cy="0" r="1" fill="none" stroke="%s" '
            'stroke-width="%s"/>' % (style.stroke, _fmt(0.006 * box[2])))
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _point_record(z):
    if is_infinity(z):
        return None
    return [z.real, z.imag]


def export_tiling(p, copies, style=None):
    """Structured tiling document: enough to rebuild every copy (the
    transforms are lossless) plus vertex coordinates for direct drawing.
    At-infinity vertices serialize as null."""
    if style is None:
        style = RenderStyle()
    att = style.resolve_attenuations(len(p.edges))
    intensities = emphasis_weights(copies, att)
    cls = classify(p.notation)
    doc = {
        "kind": p.kind,
        "notation": format_notation(p.notation),
        "euler_char": float(cls.euler_char),
        "vertices": [_point_record(v) for v in p.vertices],
        "corner_orders": list(p.corner_orders),
        "side_lengths": list(p.side_lengths),
        "base_point": _point_record(p.base_point),
        "closure_residual": p.closure_residual,
        "overlapping": bool(getattr(copies, "overlapping", False)),
        "style": {
            "emphasis": style.emphasis,
            "attenuations": att,
            "viewport_radius": style.viewport_radius,
            "stroke": style.stroke,
            "fill": style.fill,
            "size": style.size,
        },
        "copies": [
            {
                "matrix": {
                    "a": [c.transform.matrix.a.real, c.transform.matrix.a.imag],
                    "b": [c.transform.matrix.b.real, c.transform.matrix.b.imag],
                    "c": [c.transform.matrix.c.real, c.transform.matrix.c.imag],
                    "d": [c.transform.matrix.d.real, c.transform.matrix.d.imag],
                },
                "flip": c.transform.reversing,
                "depth": c.depth,
                "path": list(c.path),
                "intensity": intensities[i],
                "center": _point_record(c.center),
                "contains_infinity": c.contains_infinity,
                "vertices": [_point_record(v) for v in c.vertices],
            }
            for i, c in enumerate(copies)
        ],
    }
    return doc


def tiling_json(doc):
    """Canonical text form: UTF-8 JSON, shortest round-trip floats."""
    return json.dumps(doc, ensure_ascii=False, separators=(", ", ": "),
                      sort_keys=True)


def transform_from_record(record):
    """Rebuild a copy transform from its document record."""
    m = record["matrix"]
    return IsometryTransform(
        MoebiusMatrix(complex(*m["a"]), complex(*m["b"]),
                      complex(*m["c"]), complex(*m["d"])),
        record["flip"],
    )
