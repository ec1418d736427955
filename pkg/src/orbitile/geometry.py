"""The three planar geometry models and their geodesic calculus.

Spherical geometry lives on the stereographic plane: the unit sphere is
projected so the equator lands on the unit circle and the south pole goes
to infinity.  Great circles project to lines through the origin or to
circles through a pair of antipodal points of the unit circle, which forces

    radius^2 = |center|^2 + 1                (spherical circle geodesic)

Hyperbolic geometry lives on the Poincare disk: geodesics are diameters or
circles orthogonal to the unit circle, which forces

    |center|^2 = radius^2 + 1                (hyperbolic circle geodesic)

Euclidean geodesics are plain lines.  Both circle constraints fold into one
linear incidence system  2 Re(conj(c) p) = |p|^2 + s  with s = +1 hyperbolic
and s = -1 spherical; a singular system means the geodesic is a line through
the origin.

All angles are Euclidean angles between tangents (the models are conformal,
so these equal the intrinsic angles).  Distances are intrinsic: radians of
great-circle arc for spherical, the Poincare metric for hyperbolic.
"""

import cmath
import math

from .errors import (
    DegenerateInputError,
    IncidenceError,
    KindMismatchError,
)
from .moebius import INFINITY, IsometryTransform, MoebiusMatrix, is_infinity

SPHERICAL = "spherical"
EUCLIDEAN = "euclidean"
HYPERBOLIC = "hyperbolic"

KINDS = (SPHERICAL, EUCLIDEAN, HYPERBOLIC)

EPSILON = 1e-12
INCIDENCE_EPSILON = 1e-10

# sign s in the unified circle-geodesic incidence system
_MODEL_SIGN = {HYPERBOLIC: 1.0, SPHERICAL: -1.0}


class LineGeodesic(object):
    """A straight geodesic: through-origin lines in the disk models, any line
    in the Euclidean plane.  Stored as (foot of perpendicular from origin,
    unit direction with phase in [0, pi))."""

    __slots__ = ("point", "direction", "kind")

    def __init__(self, point, direction, kind):
        d = complex(direction)
        n = abs(d)
        if n < EPSILON:
            raise DegenerateInputError("line direction vanishes")
        d /= n
        p = complex(point)
        # canonical parametrization: drop the along-line component, fix sign
        p = p - (d.real * p.real + d.imag * p.imag) * d
        if d.imag < 0 or (d.imag == 0 and d.real < 0):
            d = -d
        self.point = p
        self.direction = d
        self.kind = kind

    def __repr__(self):
        return "LineGeodesic(%r, %r, %r)" % (self.point, self.direction, self.kind)

    def is_line(self):
        return True

    def model_residual(self):
        if self.kind == EUCLIDEAN:
            return 0.0
        return abs(self.point)  # disk-model geodesic lines pass through the origin

    def contains(self, z, tol=INCIDENCE_EPSILON):
        if is_infinity(z):
            return self.kind == SPHERICAL
        w = (z - self.point) * self.direction.conjugate()
        return abs(w.imag) <= tol

    def tangent_at(self, z):
        return self.direction

    def side_of(self, z):
        """Sign of the half-plane containing z; +1 on the left of direction."""
        if is_infinity(z):
            return 0.0
        w = (z - self.point) * self.direction.conjugate()
        return math.copysign(1.0, w.imag) if abs(w.imag) > 0 else 0.0


class CircleGeodesic(object):
    """A circular geodesic; the model invariant ties center to radius."""

    __slots__ = ("center", "radius", "kind")

    def __init__(self, center, radius, kind):
        if radius <= 0:
            raise DegenerateInputError("circle radius must be positive")
        self.center = complex(center)
        self.radius = float(radius)
        self.kind = kind

    def __repr__(self):
        return "CircleGeodesic(%r, %r, %r)" % (self.center, self.radius, self.kind)

    def is_line(self):
        return False

    def model_residual(self):
        if self.kind == HYPERBOLIC:
            return abs(abs(self.center) ** 2 - self.radius**2 - 1.0)
        if self.kind == SPHERICAL:
            return abs(self.radius**2 - abs(self.center) ** 2 - 1.0)
        return float("inf")  # Euclidean geodesics are never circles

    def contains(self, z, tol=INCIDENCE_EPSILON):
        if is_infinity(z):
            return False
        return abs(abs(z - self.center) - self.radius) <= tol

    def tangent_at(self, z):
        """Counterclockwise tangent (unit)."""
        w = 1j * (z - self.center)
        return w / abs(w)

    def side_of(self, z):
        """+1 inside the circle (left of the counterclockwise tangent)."""
        if is_infinity(z):
            return -1.0
        d = self.radius - abs(z - self.center)
        return math.copysign(1.0, d) if abs(d) > 0 else 0.0


def _check_kind(kind):
    if kind not in KINDS:
        raise KindMismatchError("unknown geometry kind %r" % (kind,))


def distance(kind, p, q):
    """Intrinsic distance between two model points."""
    _check_kind(kind)
    if kind == EUCLIDEAN:
        return abs(q - p)
    if kind == SPHERICAL:
        pi_, qi_ = is_infinity(p), is_infinity(q)
        if pi_ and qi_:
            return 0.0
        if pi_ or qi_:
            z = q if pi_ else p
            return math.pi - 2.0 * math.atan(abs(z))
        # atan2 form stays finite for antipodal points (denominator 0 -> pi)
        return 2.0 * math.atan2(abs(q - p), abs(1.0 + p.conjugate() * q))
    # hyperbolic
    a = abs(1.0 - p.conjugate() * q)
    b = abs(q - p)
    if b >= a:
        raise KindMismatchError("points outside the Poincare disk")
    return math.log((a + b) / (a - b))


def sphere_embed(z):
    """Stereographic inverse: extended-plane point -> unit sphere in R^3."""
    if is_infinity(z):
        return (0.0, 0.0, 1.0)
    r2 = z.real * z.real + z.imag * z.imag
    s = 1.0 / (1.0 + r2)
    return (2.0 * z.real * s, 2.0 * z.imag * s, (r2 - 1.0) * s)


def geodesic_through(kind, p, q):
    """The geodesic containing two distinct points."""
    _check_kind(kind)
    if kind == SPHERICAL:
        pi_, qi_ = is_infinity(p), is_infinity(q)
        if pi_ and qi_:
            raise DegenerateInputError("geodesic through two coincident points")
        if pi_ or qi_:
            z = q if pi_ else p
            if abs(z) < EPSILON:
                # both poles: every diameter works; pick the real axis
                return LineGeodesic(0j, 1 + 0j, kind)
            return LineGeodesic(0j, z / abs(z), kind)
    if abs(p - q) < EPSILON:
        raise DegenerateInputError("geodesic through two coincident points")
    if kind == EUCLIDEAN:
        return LineGeodesic(p, q - p, kind)
    s = _MODEL_SIGN[kind]
    # solve 2 Re(conj(c) p) = |p|^2 + s, same for q, for center c
    det = 4.0 * (p.real * q.imag - p.imag * q.real)
    if abs(det) < EPSILON:
        # p, q collinear with the origin: the geodesic is a diameter
        return LineGeodesic(0j, q - p, kind)
    rp = abs(p) ** 2 + s
    rq = abs(q) ** 2 + s
    cx = (q.imag * rp - p.imag * rq) * 2.0 / det
    cy = (p.real * rq - q.real * rp) * 2.0 / det
    c = complex(cx, cy)
    r2 = abs(c) ** 2 - s
    if r2 <= EPSILON:
        raise DegenerateInputError("degenerate geodesic circle")
    return CircleGeodesic(c, math.sqrt(r2), kind)


def geodesic_from_point_tangent(kind, p, tau):
    """The geodesic through p whose tangent at p is parallel to tau."""
    _check_kind(kind)
    n = abs(tau)
    if n < EPSILON:
        raise DegenerateInputError("tangent vanishes")
    tau = tau / n
    if kind == EUCLIDEAN:
        return LineGeodesic(p, tau, kind)
    if is_infinity(p):
        raise DegenerateInputError("tangent frame at infinity is not chartable")
    s = _MODEL_SIGN[kind]
    # incidence 2 Re(conj(c) p) = |p|^2 + s; tangency Re(conj(tau)(p - c)) = 0
    det = 2.0 * (p.real * tau.imag - p.imag * tau.real)
    if abs(det) < EPSILON:
        # radial tangent (or p at the origin): diameter along tau
        return LineGeodesic(0j, tau, kind)
    rp = abs(p) ** 2 + s
    rt = tau.real * p.real + tau.imag * p.imag
    cx = (tau.imag * rp - 2.0 * p.imag * rt) / det
    cy = (2.0 * p.real * rt - tau.real * rp) / det
    c = complex(cx, cy)
    r2 = abs(c) ** 2 - s
    if r2 <= EPSILON:
        raise DegenerateInputError("degenerate geodesic circle")
    return CircleGeodesic(c, math.sqrt(r2), kind)


def geodesic_through_three(kind, a, b, c):
    """Generalized circle through three points, tagged as a model geodesic.

    Used when two points do not pin the geodesic down (antipodal spherical
    endpoints) but a third incident point is known.
    """
    pts = [a, b, c]
    inf = [is_infinity(z) for z in pts]
    if sum(inf) >= 2:
        raise DegenerateInputError("coincident points at infinity")
    if any(inf):
        # a circle through infinity is a line through the finite pair
        fin = [z for z in pts if not is_infinity(z)]
        return LineGeodesic(fin[0], fin[1] - fin[0], kind)
    d = 2.0 * ((a - c).real * (b - c).imag - (a - c).imag * (b - c).real)
    if abs(d) < EPSILON:
        return LineGeodesic(a, b - a, kind)
    ra = abs(a) ** 2 - abs(c) ** 2
    rb = abs(b) ** 2 - abs(c) ** 2
    ux = ((b - c).imag * ra - (a - c).imag * rb) / d
    uy = ((a - c).real * rb - (b - c).real * ra) / d
    ctr = complex(ux, uy)
    return CircleGeodesic(ctr, abs(a - ctr), kind)


def _geodesic_frame(g):
    """(e1, e2, m): the two boundary/antipodal endpoints in lexicographic
    order and the arc point nearest the origin (the frame Fig.-8-style
    canonicalization pins down)."""
    if g.is_line():
        d = g.direction
        e1, e2 = -d, d
        m = 0j
    else:
        c, r = g.center, g.radius
        ac = abs(c)
        if g.kind == SPHERICAL and ac < EPSILON:
            # the equator itself; the nearest-point rule degenerates
            return (-1 + 0j, 1 + 0j, 1j)
        # intersection with the unit circle: foot +- half-chord
        # |z|=1 and |z-c|=r  =>  Re(conj(c) z) = (1 + |c|^2 - r^2)/2
        k = (1.0 + ac * ac - r * r) / 2.0
        foot = c * (k / (ac * ac))
        h2 = 1.0 - (k * k) / (ac * ac)
        if h2 < 0:
            h2 = 0.0
        half = 1j * (c / ac) * math.sqrt(h2)
        e1, e2 = foot - half, foot + half
        m = c * (1.0 - r / ac)
    if (e1.real, e1.imag) > (e2.real, e2.imag):
        e1, e2 = e2, e1
    return e1, e2, m


def canonical_transform(g):
    """Model isometry carrying g onto the canonical geodesic.

    Canonical targets: the real segment with midpoint at the origin for
    hyperbolic, the unit circle with the near arc point at +i for spherical,
    the real axis for Euclidean.  The endpoint pair lands on (-1, +1).
    A Moebius map is pinned by three points, and a model isometry matching
    the three conditions exists, so the three-point fit IS that isometry.
    """
    if g.kind == EUCLIDEAN:
        # z -> (z - point) / direction
        return IsometryTransform(
            MoebiusMatrix(1.0 / g.direction, -g.point / g.direction, 0, 1), False
        )
    e1, e2, m = _geodesic_frame(g)
    mid_target = 0j if g.kind == HYPERBOLIC else 1j
    matrix = MoebiusMatrix.from_three_points(e1, m, e2, -1 + 0j, mid_target, 1 + 0j)
    return IsometryTransform(matrix, False)


def point_at_distance(kind, p, g, d, side=1.0):
    """Transport p along g by intrinsic distance d.

    side > 0 moves in the direction of increasing canonical parameter
    (counterclockwise for the canonicalized geodesic), side < 0 opposite.
    """
    _check_kind(kind)
    if not g.contains(p):
        raise IncidenceError("point is not on the geodesic")
    sigma = 1.0 if side >= 0 else -1.0
    t = canonical_transform(g)
    x = t(p)
    if kind == HYPERBOLIC:
        s0 = 2.0 * math.atanh(max(-1.0 + EPSILON, min(1.0 - EPSILON, x.real)))
        x1 = complex(math.tanh((s0 + sigma * d) / 2.0), 0.0)
    elif kind == SPHERICAL:
        phi = math.atan2(x.imag, x.real) if not is_infinity(x) else 0.0
        if is_infinity(x):
            raise IncidenceError("canonical image left the unit circle")
        phi += sigma * d
        x1 = cmath.exp(1j * phi)
    else:
        x1 = complex(x.real + sigma * d, 0.0)
    return t.inverse()(x1)


def travel(kind, p, tau, d):
    """Geodesic exponential: start at p with unit tangent tau, go distance d.

    Returns (endpoint, geodesic, arrival tangent, midpoint of the segment).
    The arrival tangent keeps pointing forward along the geodesic.
    """
    _check_kind(kind)
    g = geodesic_from_point_tangent(kind, p, tau)
    t = canonical_transform(g)
    x = t(p)
    tau_c = t.push_tangent(p, tau)
    if kind == HYPERBOLIC:
        fwd = 1.0 if tau_c.real >= 0 else -1.0
        s0 = 2.0 * math.atanh(max(-1.0 + EPSILON, min(1.0 - EPSILON, x.real)))

        def at(s):
            return complex(math.tanh((s0 + fwd * s) / 2.0), 0.0)

        x_end, x_mid = at(d), at(d / 2.0)
        tau_end_c = complex(fwd, 0.0)
    elif kind == SPHERICAL:
        phi0 = math.atan2(x.imag, x.real)
        ccw = 1j * x  # counterclockwise tangent on the unit circle
        fwd = 1.0 if (tau_c.real * ccw.real + tau_c.imag * ccw.imag) >= 0 else -1.0

        def at(s):
            return cmath.exp(1j * (phi0 + fwd * s))

        x_end, x_mid = at(d), at(d / 2.0)
        tau_end_c = fwd * 1j * x_end
    else:
        fwd = 1.0 if tau_c.real >= 0 else -1.0

        def at(s):
            return complex(x.real + fwd * s, 0.0)

        x_end, x_mid = at(d), at(d / 2.0)
        tau_end_c = complex(fwd, 0.0)
    ti = t.inverse()
    endpoint = ti(x_end)
    midpoint = ti(x_mid)
    tau_end = ti.push_tangent(x_end, tau_end_c)
    tau_end /= abs(tau_end)
    return endpoint, g, tau_end, midpoint


def tangent_toward(kind, g, v, target):
    """Unit tangent of g at v pointing along g toward a nearby target point."""
    t = canonical_transform(g)
    x, xt = t(v), t(target)
    if kind == HYPERBOLIC or kind == EUCLIDEAN:
        fwd = 1.0 if xt.real >= x.real else -1.0
        tau_c = complex(fwd, 0.0)
    else:
        dphi = math.atan2(xt.imag, xt.real) - math.atan2(x.imag, x.real)
        while dphi <= -math.pi:
            dphi += 2.0 * math.pi
        while dphi > math.pi:
            dphi -= 2.0 * math.pi
        tau_c = (1.0 if dphi >= 0 else -1.0) * 1j * x
    ti = t.inverse()
    tau = ti.push_tangent(x, tau_c)
    return tau / abs(tau)


def angle_between(kind, g1, g2, at):
    """Angle in (0, pi] between two geodesics at a common point.

    Measured from the reversed conventional tangent of g1 to the
    conventional tangent of g2, so a straight continuation reads pi and a
    perpendicular crossing reads pi/2 regardless of tangent sign choices.
    """
    _check_kind(kind)
    if not g1.contains(at) or not g2.contains(at):
        raise IncidenceError("geodesics do not meet at the given point")
    t1 = g1.tangent_at(at)
    t2 = g2.tangent_at(at)
    a = abs(cmath.phase(-t2 / t1))
    if a < 1e-14:
        a = math.pi
    return a


def interior_angle(kind, g_in, g_out, v, mid_in, mid_out):
    """Polygon corner angle at v between the incoming edge (midpoint mid_in)
    and the outgoing edge (midpoint mid_out); full range (0, pi)."""
    tin = tangent_toward(kind, g_in, v, mid_in)
    tout = tangent_toward(kind, g_out, v, mid_out)
    return abs(cmath.phase(tout / tin))


def reflect_across(g):
    """Orientation-reversing isometry fixing g pointwise."""
    if g.is_line():
        d2 = g.direction * g.direction
        b = g.point - d2 * g.point.conjugate()
        return IsometryTransform(MoebiusMatrix(d2, b, 0, 1), True)
    c, r = g.center, g.radius
    return IsometryTransform(
        MoebiusMatrix(c, r * r - abs(c) ** 2, 1, -c.conjugate()), True
    )


def translation_taking(kind, a, b):
    """Orientation-preserving model isometry with a |-> b."""
    _check_kind(kind)
    if kind == EUCLIDEAN:
        return IsometryTransform(MoebiusMatrix(1, b - a, 0, 1), False)
    if kind == HYPERBOLIC:
        to_zero = MoebiusMatrix(1, -a, -a.conjugate(), 1)
        from_zero = MoebiusMatrix(1, b, b.conjugate(), 1)
        return IsometryTransform(from_zero.mul(to_zero), False)
    # spherical: rotations in the form [alpha beta; -conj(beta) conj(alpha)]
    if is_infinity(a):
        to_zero = MoebiusMatrix(0, 1, -1, 0)
    else:
        to_zero = MoebiusMatrix(1, -a, a.conjugate(), 1)
    if is_infinity(b):
        from_zero = MoebiusMatrix(0, -1, 1, 0)
    else:
        from_zero = MoebiusMatrix(1, b, -b.conjugate(), 1)
    return IsometryTransform(from_zero.mul(to_zero), False)


def transform_geodesic(t, g):
    """Image of a geodesic under a model isometry, as a geodesic value."""
    e1, e2, m = _geodesic_frame(g)
    w1, w2, wm = t(e1), t(e2), t(m)
    return geodesic_through_three(g.kind, w1, w2, wm)
