"""Scene content inside the mirrored room: planar meshes with a height
coordinate, lazy isometric placement, and spiral rays of the product
space (room plane x vertical interval).

A vertical geodesic of that product projects to a geodesic of the room
horizontally while its height changes linearly, so a ray is a spiral:
horizontal position = point at arc length t*s_H along a fixed geodesic,
height = z0 + t*s_Z.  Ray-triangle queries find the smallest positive t
where the spiral pierces a triangle given in chart coordinates
(x, y, height), by bracketing the plane equation on a chord-bounded grid
and bisecting.
"""

import cmath
import math

import numpy

from . import _kernels
from .errors import (
    DegenerateInputError,
    KindMismatchError,
    ObjectTooLargeError,
    ParseError,
)
from .geometry import (
    HYPERBOLIC,
    SPHERICAL,
    _check_kind,
    distance,
    geodesic_from_point_tangent,
    translation_taking,
)
from .moebius import IsometryTransform, MoebiusMatrix, is_infinity

EPSILON = 1e-12
ROOT_TOLERANCE = 1e-10
BARY_SLACK = 1e-9


def _metric_factor(kind, p):
    """Ratio of intrinsic tangent length to chart tangent length at p."""
    r2 = p.real * p.real + p.imag * p.imag
    if kind == HYPERBOLIC:
        return 2.0 / (1.0 - r2)
    if kind == SPHERICAL:
        return 2.0 / (1.0 + r2)
    return 1.0


class SceneMesh(object):
    """Immutable object snapshot: per-vertex (horizontal chart point,
    height), triangle index triples, and a horizontal pose applied lazily
    when vertices are realized."""

    __slots__ = ("kind", "vertices", "triangles", "pose")

    def __init__(self, kind, vertices, triangles, pose=None):
        _check_kind(kind)
        self.kind = kind
        self.vertices = tuple((complex(p), float(z)) for p, z in vertices)
        tris = []
        for tri in triangles:
            i, j, k = (int(x) for x in tri)
            for idx in (i, j, k):
                if not 0 <= idx < len(self.vertices):
                    raise DegenerateInputError(
                        "triangle index %d out of range" % idx
                    )
            tris.append((i, j, k))
        self.triangles = tuple(tris)
        self.pose = pose if pose is not None else IsometryTransform.identity()

    def posed_vertices(self):
        """Realize the pose: transformed (horizontal, height) pairs."""
        return [(self.pose(p), z) for p, z in self.vertices]

    def __repr__(self):
        return "SceneMesh(%s, %d vertices, %d triangles)" % (
            self.kind, len(self.vertices), len(self.triangles)
        )


def embed_object(raw_vertices, kind, triangles=()):
    """Adopt planar coordinates as model coordinates after recentering.

    Raw vertices are (x, y) or (x, y, height) rows; the horizontal mean
    is translated to the origin first (a flat pre-step, the object is
    not yet in the room), heights pass through.  Hyperbolic rooms refuse
    coordinates outside the unit disk.
    """
    _check_kind(kind)
    rows = list(raw_vertices)
    if not rows:
        raise DegenerateInputError("cannot embed an empty vertex list")
    parsed = []
    for row in rows:
        if isinstance(row, complex):
            parsed.append((row, 0.0))
        elif len(row) == 2:
            parsed.append((complex(float(row[0]), float(row[1])), 0.0))
        else:
            x, y, z = row
            parsed.append((complex(float(x), float(y)), float(z)))
    mean = sum(p for p, _ in parsed) / len(parsed)
    centered = [(p - mean, z) for p, z in parsed]
    if kind == HYPERBOLIC:
        worst = max(abs(p) for p, _ in centered)
        if worst >= 1.0:
            raise ObjectTooLargeError(
                "centered object reaches |z| = %.6g, outside the unit disk; "
                "scale it down uniformly (factor < %.6g) before embedding"
                % (worst, 1.0 / worst)
            )
    return SceneMesh(kind, centered, triangles)


def move_object(mesh, to):
    """New snapshot with the object carried to `to` by the native
    translation; the motion composes onto the stored pose, vertices are
    untouched until realized."""
    current = mesh.pose(0j)
    step = translation_taking(mesh.kind, current, to)
    return SceneMesh(mesh.kind, mesh.vertices, mesh.triangles,
                     step.compose(mesh.pose))


def load_mesh(text, kind):
    """Parse the minimal mesh text format: `v x y z` vertex rows and
    `f i j k` one-indexed face rows, whitespace separated, # comments."""
    verts, faces = [], []
    for lineno, line in enumerate(text.splitlines(), 1):
        parts = line.split()
        if not parts or parts[0].startswith("#"):
            continue
        try:
            if parts[0] == "v" and len(parts) == 4:
                verts.append((float(parts[1]), float(parts[2]), float(parts[3])))
            elif parts[0] == "f" and len(parts) == 4:
                faces.append(tuple(int(x) - 1 for x in parts[1:]))
            else:
                raise ValueError
        except ValueError:
            raise ParseError("unrecognized mesh line %r" % line, lineno)
    for face in faces:
        for idx in face:
            if not 0 <= idx < len(verts):
                raise ParseError("face index %d out of range" % (idx + 1), 0)
    return embed_object(verts, kind, faces)


# ---------------------------------------------------------------------------
# spiral rays


def _rotation(theta):
    w = cmath.exp(0.5j * theta)
    return MoebiusMatrix(w, 0.0, 0.0, w.conjugate())


class SpiralRay(object):
    """Product-space geodesic through (p0, z0).

    horizontal_speed is the intrinsic arc length covered per unit t (the
    intrinsic norm of the chart velocity), vertical_speed the signed
    height rate; they must not both vanish.  The horizontal track is
    stored both as a geodesic and as a pose matrix taking the home ray
    (origin, heading +1) onto it, so sampling is a closed-form matrix
    evaluation.
    """

    __slots__ = ("kind", "origin", "horizontal_geodesic", "horizontal_speed",
                 "vertical_speed", "room_height", "_frame")

    def __init__(self, kind, p0, z0, velocity, vertical_speed, room_height):
        _check_kind(kind)
        p0 = complex(p0)
        if kind == HYPERBOLIC and abs(p0) >= 1.0:
            raise KindMismatchError("spiral origin outside the Poincare disk")
        if room_height <= 0:
            raise DegenerateInputError("room height must be positive")
        velocity = complex(velocity)
        s_h = abs(velocity) * _metric_factor(kind, p0)
        s_z = float(vertical_speed)
        if s_h < EPSILON and abs(s_z) < EPSILON:
            raise DegenerateInputError("spiral needs a nonzero velocity")
        self.kind = kind
        self.origin = (p0, float(z0))
        self.vertical_speed = s_z
        self.room_height = float(room_height)
        if s_h < EPSILON:
            self.horizontal_speed = 0.0
            self.horizontal_geodesic = None
            self._frame = None
        else:
            self.horizontal_speed = s_h
            self.horizontal_geodesic = geodesic_from_point_tangent(
                kind, p0, velocity)
            base = translation_taking(kind, 0j, p0)
            heading = base.inverse().push_tangent(p0, velocity)
            self._frame = base.matrix.mul(_rotation(cmath.phase(heading)))

    def __repr__(self):
        return "SpiralRay(%s, p0=%r, z0=%g, s_H=%g, s_Z=%g)" % (
            self.kind, self.origin[0], self.origin[1],
            self.horizontal_speed, self.vertical_speed,
        )


def spiral_point(ray, t):
    """Spiral position at parameter t: (horizontal chart point, height)."""
    z = ray.origin[1] + t * ray.vertical_speed
    if ray._frame is None:
        return (ray.origin[0], z)
    s = 0.5 * t * ray.horizontal_speed
    if ray.kind == HYPERBOLIC:
        u, v = math.sinh(s), math.cosh(s)
    elif ray.kind == SPHERICAL:
        u, v = math.sin(s), math.cos(s)
    else:
        u, v = t * ray.horizontal_speed, 1.0
    m = ray._frame
    den = m.c * u + m.d * v
    if abs(den) < EPSILON:
        return (complex("inf"), z)
    return ((m.a * u + m.b * v) / den, z)


def spiral_samples(ray, ts):
    """Horizontal positions for an array of parameters (vectorized)."""
    ts = numpy.asarray(ts, dtype=numpy.float64)
    if ray._frame is None:
        return numpy.full(ts.shape, ray.origin[0], dtype=numpy.complex128)
    m = ray._frame
    return _kernels.geodesic_points(
        ray.kind, m.a, m.b, m.c, m.d, ts * ray.horizontal_speed)


def _as_xyz(v):
    if isinstance(v, tuple) and len(v) == 2:
        p, z = v
        p = complex(p)
        return numpy.array([p.real, p.imag, float(z)])
    x, y, z = v
    return numpy.array([float(x), float(y), float(z)])


def _barycentric_inside(pt, a, e1, e2):
    w = pt - a
    g11, g12, g22 = e1 @ e1, e1 @ e2, e2 @ e2
    det = g11 * g22 - g12 * g12
    if abs(det) < EPSILON:
        return False
    u = (g22 * (w @ e1) - g12 * (w @ e2)) / det
    v = (g11 * (w @ e2) - g12 * (w @ e1)) / det
    return u >= -BARY_SLACK and v >= -BARY_SLACK and u + v <= 1.0 + BARY_SLACK


def _plane_value(ray, normal, offset, t):
    p, z = spiral_point(ray, t)
    if is_infinity(p):
        return math.inf
    return normal[0] * p.real + normal[1] * p.imag + normal[2] * z - offset


def _search_window(ray, tri_pts, min_edge):
    """Parameter range that can possibly contain a triangle hit."""
    t_lo, t_hi = 0.0, math.inf
    if abs(ray.vertical_speed) > EPSILON:
        zs = [p[2] for p in tri_pts]
        a = (min(zs) - ray.origin[1]) / ray.vertical_speed
        b = (max(zs) - ray.origin[1]) / ray.vertical_speed
        t_lo, t_hi = max(0.0, min(a, b)), max(a, b)
    if ray.horizontal_speed > EPSILON and not math.isfinite(t_hi):
        if ray.kind == SPHERICAL:
            # horizontal track is a closed great circle
            t_hi = 2.0 * math.pi / ray.horizontal_speed
        else:
            # conservative reach: origin offset plus the chart region bound
            p0 = ray.origin[0]
            r0 = max(abs(complex(p[0], p[1])) for p in tri_pts)
            if ray.kind == HYPERBOLIC:
                r0 = min(r0, 1.0 - 1e-12)
                bound = distance(HYPERBOLIC, 0j, p0) + 2.0 * math.atanh(r0)
            else:
                bound = abs(p0) + r0
            t_hi = (bound + min_edge + 1.0) / ray.horizontal_speed
    if not math.isfinite(t_hi) or t_hi <= t_lo:
        return None
    return t_lo, t_hi


def spiral_triangle_intersect(ray, triangle):
    """Smallest t > 0 where the spiral pierces the triangle, or None.

    The triangle lives in the chart product coordinates (x, y, height).
    The signed plane equation is bracketed on a grid whose horizontal
    chord per step stays under half the shortest triangle edge, then
    bisected to |g| < 1e-10; each root is accepted only if its point
    lands inside the triangle (barycentric test).
    """
    tri_pts = [_as_xyz(v) for v in triangle]
    a, b, c = tri_pts
    e1, e2 = b - a, c - a
    normal = numpy.cross(e1, e2)
    edge_lengths = [
        float(numpy.linalg.norm(v)) for v in (e1, e2, c - b)
    ]
    min_edge = min(edge_lengths)
    norm_len = float(numpy.linalg.norm(normal))
    if norm_len < EPSILON * max(edge_lengths) ** 2 or min_edge < EPSILON:
        raise DegenerateInputError("triangle is degenerate")
    normal = normal / norm_len
    offset = float(normal @ a)

    if ray.horizontal_speed == 0.0:
        # affine case: vertical line against a plane
        den = normal[2] * ray.vertical_speed
        if abs(den) < EPSILON:
            return None
        p0 = ray.origin[0]
        t = (offset - normal[0] * p0.real - normal[1] * p0.imag
             - normal[2] * ray.origin[1]) / den
        if t <= EPSILON:
            return None
        pt = numpy.array([p0.real, p0.imag, ray.origin[1]
                          + t * ray.vertical_speed])
        return t if _barycentric_inside(pt, a, e1, e2) else None

    window = _search_window(ray, tri_pts, min_edge)
    if window is None:
        return None
    t_lo, t_hi = window

    # grid fine enough that each step's horizontal chart chord stays
    # under half the shortest edge, so no crossing slips between samples
    ts = _chord_bounded_grid(ray, t_lo, t_hi, 0.5 * min_edge)
    gs = [_plane_value(ray, normal, offset, t) for t in ts]
    for i in range(len(ts) - 1):
        g0, g1 = gs[i], gs[i + 1]
        if not (math.isfinite(g0) and math.isfinite(g1)):
            continue
        root = None
        if abs(g0) < ROOT_TOLERANCE:
            root = ts[i]
        elif g0 * g1 < 0.0:
            root = _bisect(ray, normal, offset, ts[i], ts[i + 1])
        if root is None or root <= EPSILON:
            continue
        p, z = spiral_point(ray, root)
        if is_infinity(p):
            continue
        pt = numpy.array([p.real, p.imag, z])
        if _barycentric_inside(pt, a, e1, e2):
            return root
    g_last = gs[-1]
    if math.isfinite(g_last) and abs(g_last) < ROOT_TOLERANCE and ts[-1] > EPSILON:
        p, z = spiral_point(ray, ts[-1])
        if not is_infinity(p):
            pt = numpy.array([p.real, p.imag, z])
            if _barycentric_inside(pt, a, e1, e2):
                return ts[-1]
    return None


def _chord_bounded_grid(ray, t_lo, t_hi, max_chord):
    """Sample parameters whose consecutive horizontal chart chords stay
    below max_chord, refining by interval bisection (depth capped; the
    cap only bites where the chart blows up near the spherical pole,
    where no finite triangle lives anyway)."""
    n0 = 64
    ts = list(numpy.linspace(t_lo, t_hi, n0 + 1))
    pts = list(spiral_samples(ray, numpy.array(ts)))
    out_t = [ts[0]]
    stack = [(ts[i], ts[i + 1], pts[i], pts[i + 1], 0)
             for i in range(len(ts) - 1)][::-1]
    while stack:
        ta, tb, pa, pb, depth = stack.pop()
        chord = abs(pb - pa) if (not is_infinity(pa) and not is_infinity(pb)) \
            else math.inf
        if chord <= max_chord or depth >= 24:
            out_t.append(tb)
            continue
        tm = 0.5 * (ta + tb)
        pm, _ = spiral_point(ray, tm)
        stack.append((tm, tb, pm, pb, depth + 1))
        stack.append((ta, tm, pa, pm, depth + 1))
    return out_t


def _bisect(ray, normal, offset, ta, tb):
    ga = _plane_value(ray, normal, offset, ta)
    for _ in range(200):
        tm = 0.5 * (ta + tb)
        gm = _plane_value(ray, normal, offset, tm)
        if abs(gm) < ROOT_TOLERANCE:
            return tm
        if (ga < 0.0) == (gm < 0.0):
            ta, ga = tm, gm
        else:
            tb = tm
    return 0.5 * (ta + tb)
