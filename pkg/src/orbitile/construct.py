"""Fundamental polygon construction for every realizable notation.

Triangles are rigid: their side lengths come straight from the corner
angles (spherical and hyperbolic law-of-cosines duals).  Euclidean shapes
are the four wallpaper cases, scaled by free variables.  Hyperbolic
polygons with four or more corners are cut into a chain of right-angled
building blocks:

    END | piece | piece | ... | END

where interior pieces are right pentagons owning one polygon corner each,
and each end is either a right quad owning two adjacent corners (feasible
when 1/a + 1/b < 1) or an "end pentagon" owning three consecutive corners
(2, k, 2).  Neighbouring pieces share a cut geodesic (a rung) meeting both
boundary chains at right angles.  Pentagon count is always N - 4; free
cut variables always number N - 3.

The solved pieces contribute only side lengths: partial sides accumulate
along the top and bottom chains and merge into full polygon sides.  The
final vertex coordinates always come from one anchored walk, so numeric
error concentrates in a single auditable pass, and the walk's closure gap
plus remeasured corner angles are reported on the polygon.
"""

import cmath
import math

import numpy

from .errors import (
    ConstructionError,
    InfeasibleFreeVariableError,
    NumericDomainError,
    WrongGeometryError,
)
from .geometry import (
    EUCLIDEAN,
    HYPERBOLIC,
    SPHERICAL,
    CircleGeodesic,
    angle_between,
    distance,
    geodesic_through_three,
    interior_angle,
    sphere_embed,
    translation_taking,
)
from .moebius import MoebiusMatrix
from .notation import format_notation, normalize, require_realizable

DEFAULT_FREE = 1.4
CLOSURE_LIMIT = 1e-6
EPSILON = 1e-12


def _angle_terms(k):
    return math.cos(math.pi / k), math.sin(math.pi / k)


def spherical_triangle_sides(k1, k2, k3):
    """Side lengths (d12, d23, d31) of the spherical triangle with corner
    angles pi/k1, pi/k2, pi/k3; the side (i, i+1) faces corner i+2."""
    if 1.0 / k1 + 1.0 / k2 + 1.0 / k3 <= 1.0 + EPSILON:
        raise WrongGeometryError("corner angles have no spherical excess")
    ks = (k1, k2, k3)
    out = []
    for i in range(3):
        ca, sa = _angle_terms(ks[i])
        cb, sb = _angle_terms(ks[(i + 1) % 3])
        cc, _ = _angle_terms(ks[(i + 2) % 3])
        arg = (cc + ca * cb) / (sa * sb)
        if abs(arg) > 1.0 + 1e-12:
            raise NumericDomainError("spherical side formula left acos domain")
        out.append(math.acos(max(-1.0, min(1.0, arg))))
    return tuple(out)


def hyperbolic_triangle_sides(k1, k2, k3):
    """Side lengths (d12, d23, d31) of the hyperbolic triangle with corner
    angles pi/k1, pi/k2, pi/k3."""
    if 1.0 / k1 + 1.0 / k2 + 1.0 / k3 >= 1.0 - EPSILON:
        raise WrongGeometryError("corner angles sum to pi or more")
    ks = (k1, k2, k3)
    out = []
    for i in range(3):
        ca, sa = _angle_terms(ks[i])
        cb, sb = _angle_terms(ks[(i + 1) % 3])
        cc, _ = _angle_terms(ks[(i + 2) % 3])
        arg = (cc + ca * cb) / (sa * sb)
        if arg < 1.0 - 1e-12:
            raise NumericDomainError("hyperbolic side formula left acosh domain")
        out.append(math.acosh(max(1.0, arg)))
    return tuple(out)


def right_quad_sides(k3, k4, d12):
    """Right quad *22(k3)(k4): corners (pi/2, pi/2, pi/k3, pi/k4), cut edge
    d12 between the two right corners.  Returns (d23, d34, d41)."""
    if 1.0 / k3 + 1.0 / k4 >= 1.0 - EPSILON:
        raise WrongGeometryError("quad corner pair is not hyperbolic")
    if not d12 > 0:
        raise InfeasibleFreeVariableError("cut edge d12 must be positive", 0)
    c3, s3 = _angle_terms(k3)
    c4, s4 = _angle_terms(k4)
    ch, sh = math.cosh(d12), math.sinh(d12)
    d23 = math.asinh((c4 + c3 * ch) / (s3 * sh))
    arg = (ch + c3 * c4) / (s3 * s4)
    if arg < 1.0 - 1e-12:
        raise NumericDomainError("quad far side left acosh domain")
    d34 = math.acosh(max(1.0, arg))
    d41 = math.asinh((c3 + c4 * ch) / (s4 * sh))
    return d23, d34, d41


def right_pentagon_sides(k5, d23, d51):
    """Right pentagon *2222(k5): four right corners and one pi/k5 corner.

    Inputs are the two cut edges d23, d51; returns (d12, d45, d34).  The
    cyclic edge order is d23, d12, d51, d45, d34 with the pi/k5 corner
    between d45 and d34: the two cuts flank d12, and each cut meets one of
    the corner's edges at its other foot (d23 meets d34, d51 meets d45).
    """
    if not (k5 > 1.0):
        raise WrongGeometryError("pentagon corner order must exceed 1")
    if not (d23 > 0 and d51 > 0):
        raise InfeasibleFreeVariableError("cut edges must be positive", 0)
    c5, s5 = _angle_terms(k5)
    cha, sha = math.cosh(d23), math.sinh(d23)
    chb, shb = math.cosh(d51), math.sinh(d51)
    arg = (c5 + cha * chb) / (sha * shb)
    if arg < 1.0 + 1e-12:
        raise InfeasibleFreeVariableError(
            "cut edges d23=%g, d51=%g leave no room for the d12 side" % (d23, d51), 0
        )
    d12 = math.acosh(arg)
    d45 = math.asinh((cha + c5 * chb) / (shb * s5))
    d34 = math.asinh((chb + c5 * cha) / (sha * s5))
    return d12, d45, d34


def solve_pentagon_entry(k5, entry, d51):
    """Invert the pentagon relation: find d23 such that the pentagon with
    cuts (d23, d51) has d12 = entry.  Feasible iff cosh(entry) > coth(d51).

    The relation  cosh(entry) sinh(d23) sinh(d51) = cos(pi/k5) + cosh(d23) cosh(d51)
    is linear in (sinh, cosh) of d23:  A sinh - B cosh = C  with
    A = cosh(entry) sinh(d51), B = cosh(d51), C = cos(pi/k5).
    """
    c5, _ = _angle_terms(k5)
    A = math.cosh(entry) * math.sinh(d51)
    B = math.cosh(d51)
    C = c5
    disc = A * A + C * C - B * B
    if A <= B or disc <= 0:
        raise InfeasibleFreeVariableError(
            "cut d51=%g too long for entry rung %g (needs cosh(entry) > coth(d51))"
            % (d51, entry),
            0,
        )
    s = (A * C + B * math.sqrt(disc)) / (A * A - B * B)
    if s <= 0:
        raise InfeasibleFreeVariableError(
            "pentagon entry solve produced a nonpositive cut", 0
        )
    d23 = math.asinh(s)
    # guard the root against the spurious branch
    check = (C + math.cosh(d23) * B) / (math.sinh(d23) * math.sinh(d51))
    if abs(check - math.cosh(entry)) > 1e-9 * max(1.0, math.cosh(entry)):
        raise NumericDomainError("pentagon entry solve lost the root")
    return d23


class Edge(object):
    """One polygon side: the carrying geodesic, endpoints, intrinsic length,
    the sampled midpoint (pins the correct arc), and which side_of sign is
    the polygon interior."""

    __slots__ = ("geodesic", "start", "end", "length", "midpoint", "interior_sign")

    def __init__(self, geodesic, start, end, length, midpoint, interior_sign):
        self.geodesic = geodesic
        self.start = start
        self.end = end
        self.length = length
        self.midpoint = midpoint
        self.interior_sign = interior_sign

    def __repr__(self):
        return "Edge(%r -> %r, len=%.6g)" % (self.start, self.end, self.length)


class FundamentalPolygon(object):
    __slots__ = (
        "kind",
        "vertices",
        "edges",
        "corner_orders",
        "side_lengths",
        "free_vars",
        "closure_residual",
        "angle_residuals",
        "notation",
        "base_point",
        "is_orbifold",
    )

    def __init__(self, kind, vertices, edges, corner_orders, side_lengths,
                 free_vars, closure_residual, angle_residuals, notation,
                 base_point, is_orbifold):
        self.kind = kind
        self.vertices = vertices
        self.edges = edges
        self.corner_orders = corner_orders
        self.side_lengths = side_lengths
        self.free_vars = free_vars
        self.closure_residual = closure_residual
        self.angle_residuals = angle_residuals
        self.notation = notation
        self.base_point = base_point
        self.is_orbifold = is_orbifold

    def __repr__(self):
        return "FundamentalPolygon(%s, %s, gap=%.3g)" % (
            format_notation(self.notation),
            self.kind,
            self.closure_residual,
        )

    def contains(self, z, tol=0.0):
        """Point-in-polygon for the (convex) fundamental domain."""
        for e in self.edges:
            s = e.geodesic.side_of(z)
            if s != 0 and s != e.interior_sign:
                if tol and abs(_signed_margin(e.geodesic, z)) <= tol:
                    continue
                return False
        return True


def _signed_margin(g, z):
    if g.is_line():
        w = (z - g.point) * g.direction.conjugate()
        return w.imag
    return g.radius - abs(z - g.center)


def _interior_sign_at(g, midpoint, travel_tangent):
    conv = g.tangent_at(midpoint)
    align = travel_tangent.real * conv.real + travel_tangent.imag * conv.imag
    return 1 if align >= 0 else -1


def _step_matrix(kind, d):
    """Model isometry pushing the origin distance d along the positive real
    axis (exact one-parameter subgroup element)."""
    if kind == HYPERBOLIC:
        ch, sh = math.cosh(d / 2.0), math.sinh(d / 2.0)
        return MoebiusMatrix(ch, sh, sh, ch)
    if kind == SPHERICAL:
        c, s = math.cos(d / 2.0), math.sin(d / 2.0)
        return MoebiusMatrix(c, s, -s, c)
    return MoebiusMatrix(1.0, d, 0.0, 1.0)


def _turn_matrix(theta):
    w = cmath.exp(0.5j * theta)
    return MoebiusMatrix(w, 0.0, 0.0, w.conjugate())  # z -> e^{i theta} z


def _walk(kind, placement, sides, orders):
    """Anchored walk: lay down the polygon edge by edge, turning by the
    exterior angle pi - pi/k at each corner (counterclockwise interior).

    The pose is carried as a matrix taking the home frame (origin, +1
    direction) to the current vertex and heading, so every step is a
    product of exact subgroup elements and every vertex an evaluation at
    the origin; nothing is reconstructed from drifting chart points.
    Returns (vertices, edges, closure_gap).
    """
    n = len(sides)
    M = placement
    start = M(0j)
    vertices = [start]
    edges = []
    for i in range(n):
        d = sides[i]
        tau = M.derivative(0j)  # forward travel direction
        mid = M.mul(_step_matrix(kind, d / 2.0))(0j)
        M = M.mul(_step_matrix(kind, d))
        end = M(0j)
        g = geodesic_through_three(kind, start, mid, end)
        # interior is left of travel; comparing the travel tangent with the
        # geodesic's conventional orientation at the same point fixes which
        # side_of sign that is (the alignment is constant along the edge)
        sign = _interior_sign_at(g, start, tau)
        edges.append(Edge(g, start, end, d, mid, sign))
        if i < n - 1:
            vertices.append(end)
            alpha = math.pi / orders[(i + 1) % n]
            M = M.mul(_turn_matrix(math.pi - alpha))
        start = end
    gap = distance(kind, end, vertices[0])
    return vertices, edges, gap


def _placement(kind):
    """Pose matrix for the walk anchor: hyperbolic and Euclidean polygons
    start at the origin heading along +1; spherical ones start at (1, 0) on
    the equator heading counterclockwise."""
    if kind == SPHERICAL:
        base = translation_taking(SPHERICAL, 0j, 1 + 0j).matrix
        return base.mul(_turn_matrix(math.pi / 2.0))
    return MoebiusMatrix.identity()


def _measure_angles(kind, vertices, edges, orders):
    """Recompute each interior corner angle from the built edges."""
    n = len(vertices)
    residuals = []
    for i in range(n):
        g_in = edges[(i - 1) % n]
        g_out = edges[i]
        if n == 1:
            measured = angle_between(kind, g_in.geodesic, g_out.geodesic, vertices[i])
        else:
            measured = interior_angle(
                kind, g_in.geodesic, g_out.geodesic, vertices[i],
                g_in.midpoint, g_out.midpoint,
            )
        residuals.append(measured - math.pi / orders[i])
    return residuals


def _base_point(kind, vertices, edges):
    """Interior reference point: centroid of vertices and edge midpoints,
    averaged in the quadric embedding so it lands inside the region.  Every
    polygon built here is geodesically convex (corner angles at most pi/2),
    so the projected mean of boundary points cannot escape; the flat chart
    centroid can, e.g. for thin spherical lunes."""
    pts = list(vertices) + [e.midpoint for e in edges]
    if kind == EUCLIDEAN:
        return sum(pts) / len(pts)
    if kind == SPHERICAL:
        xs = [sphere_embed(z) for z in pts]
        mx, my, mz = (sum(c) / len(xs) for c in zip(*xs))
        norm = math.sqrt(mx * mx + my * my + mz * mz)
        if norm < EPSILON or mz / norm > 1.0 - EPSILON:
            return 0j
        return complex(mx, my) / (norm - mz)
    mx = my = mt = 0.0
    for z in pts:
        s = 1.0 / (1.0 - (z.real * z.real + z.imag * z.imag))
        mx += 2.0 * z.real * s
        my += 2.0 * z.imag * s
        mt += 2.0 * s - 1.0
    mx, my, mt = mx / len(pts), my / len(pts), mt / len(pts)
    norm = math.sqrt(mt * mt - mx * mx - my * my)
    return complex(mx, my) / (norm + mt)


def _assemble(kind, vertices, edges, orders, sides, free_vars, gap, notation, cls):
    residuals = _measure_angles(kind, vertices, edges, orders)
    max_angle = max(abs(r) for r in residuals)
    if gap > CLOSURE_LIMIT or max_angle > 1e-4:
        raise ConstructionError(
            "polygon failed to close (gap %.3g, max angle residual %.3g)"
            % (gap, max_angle),
            residuals={"closure_gap": gap, "angle_residuals": residuals},
        )
    base = _base_point(kind, vertices, edges)
    return FundamentalPolygon(
        kind, vertices, edges, list(orders), list(sides), list(free_vars),
        gap, residuals, notation, base, cls.is_orbifold,
    )


# ---------------------------------------------------------------------------
# decomposition planner for hyperbolic N >= 4


class _Plan(object):
    """One deterministic decomposition of a hyperbolic N-gon.

    mode: 'triangle', 'quad' (single Eq.-8 quad), 'pentagon' (single Eq.-9
    pentagon), or 'chain' (the general fishbone).
    """

    __slots__ = ("mode", "rotation", "end_a", "end_b", "interiors", "roles", "n")

    def __init__(self, mode, rotation, end_a=None, end_b=None, interiors=None,
                 roles=None, n=0):
        self.mode = mode
        self.rotation = rotation
        self.end_a = end_a
        self.end_b = end_b
        self.interiors = interiors or []
        self.roles = roles or []
        self.n = n


def _rotated(orders, r):
    return tuple(orders[(r + i) % len(orders)] for i in range(len(orders)))


def _quad_pair_ok(a, b):
    return 1.0 / a + 1.0 / b < 1.0 - EPSILON


def _ep_triple_ok(a, b, c):
    return a == 2 and c == 2 and b > 1


def _plan_hyperbolic(orders):
    n = len(orders)
    if n == 3:
        return _Plan("triangle", 0, n=n)
    # single right quad: some rotation starts (2, 2, k3, k4)
    if n == 4:
        for r in range(4):
            rot = _rotated(orders, r)
            if rot[0] == 2 and rot[1] == 2 and _quad_pair_ok(rot[2], rot[3]):
                return _Plan("quad", r, roles=["cut d12"], n=n)
    # single right pentagon: some rotation starts (2, 2, 2, 2, k5)
    if n == 5:
        for r in range(5):
            rot = _rotated(orders, r)
            if all(rot[i] == 2 for i in range(4)) and rot[4] > 1:
                return _Plan(
                    "pentagon", r, roles=["cut d23", "cut d51"], n=n
                )
    # general chain: two ends plus N-4 interior pentagons
    for type_a, type_b in (("quad", "quad"), ("quad", "ep"), ("ep", "quad"), ("ep", "ep")):
        ea = 2 if type_a == "quad" else 3
        eb = 2 if type_b == "quad" else 3
        for r in range(n):
            rot = _rotated(orders, r)
            if type_a == "quad":
                if not _quad_pair_ok(rot[0], rot[1]):
                    continue
            else:
                if not _ep_triple_ok(rot[0], rot[1], rot[2]):
                    continue
            for j in range(ea, n - eb + 1):
                if type_b == "quad":
                    if not _quad_pair_ok(rot[j], rot[(j + 1) % n]):
                        continue
                else:
                    if not _ep_triple_ok(rot[j], rot[(j + 1) % n], rot[(j + 2) % n]):
                        continue
                bottom = list(range(ea, j))
                top = list(range(j + eb, n))
                top.reverse()  # leftmost top corner first
                interiors = _merge_arcs(top, bottom)
                plan = _Plan(
                    "chain", r,
                    end_a=(type_a, list(range(ea))),
                    end_b=(type_b, [j + t for t in range(eb)]),
                    interiors=interiors, n=n,
                )
                plan.roles = _chain_roles(plan)
                return plan
    return None


def _merge_arcs(top, bottom):
    """Interleave the two corner arcs into chain order, alternating and
    starting with the top arc."""
    out = []
    ti = bi = 0
    take_top = True
    while ti < len(top) or bi < len(bottom):
        if take_top and ti < len(top):
            out.append((top[ti], "top"))
            ti += 1
        elif bi < len(bottom):
            out.append((bottom[bi], "bottom"))
            bi += 1
        else:
            out.append((top[ti], "top"))
            ti += 1
        take_top = not take_top
    return out


def _chain_roles(plan):
    """Free variables in consumption order.

    Every rung between two pieces is free unless an end pentagon produces
    it (its d12 output).  End pentagons instead free their two boundary
    partials, except when two of them share the single rung of a two-piece
    chain: then the right one's second partial is solved to match.
    """
    type_a, type_b = plan.end_a[0], plan.end_b[0]
    m = len(plan.interiors)
    roles = []
    if type_a == "ep":
        roles.append("left end partial (bottom)")
        roles.append("left end partial (top)")
    elif m > 0 or type_b == "quad":
        roles.append("cut 0")
    for idx, (corner, side) in enumerate(plan.interiors):
        if idx == m - 1 and type_b == "ep":
            break  # its exit rung comes from the right end pentagon
        roles.append("cut after corner %d" % corner)
    if type_b == "ep":
        roles.append("right end partial (top)")
        if not (m == 0 and type_a == "ep"):
            roles.append("right end partial (bottom)")
    return roles


def _solve_chain(plan, rot, fv):
    """Solve every piece of the fishbone and accumulate the polygon side
    lengths in the rotated indexing."""
    n = plan.n
    m = len(plan.interiors)
    type_a, own_a = plan.end_a
    type_b, own_b = plan.end_b
    f = iter(fv)
    # left end: an end pentagon produces the first rung, a quad consumes it
    if type_a == "ep":
        bot_a = next(f)
        top_a = next(f)
        r0, full_a0, full_a1 = right_pentagon_sides(rot[own_a[1]], bot_a, top_a)
    elif m > 0 or type_b == "quad":
        r0 = next(f)
        if not r0 > 0:
            raise InfeasibleFreeVariableError("cut lengths must be positive", 0)
    else:
        r0 = None  # the right end pentagon fills it in
    # interior exit rungs, left to right
    exits = [None] * m
    for j in range(m):
        if j == m - 1 and type_b == "ep":
            break
        exits[j] = next(f)
        if not exits[j] > 0:
            raise InfeasibleFreeVariableError("cut lengths must be positive", j + 1)
    # right end pentagon: produces the final rung from its two partials
    if type_b == "ep":
        k_b = rot[own_b[1] % n]
        top_b = next(f)
        if m == 0 and type_a == "ep":
            # both ends share one rung: match the left end's output
            bot_b = solve_pentagon_entry(k_b, r0, top_b)
        else:
            bot_b = next(f)
        rm, full_b0, full_b1 = right_pentagon_sides(k_b, top_b, bot_b)
        if m > 0:
            exits[m - 1] = rm
        elif r0 is None:
            r0 = rm
    # interior pieces, all forward: entry rung from the left, exit known
    pent = []
    entry = r0
    for j, (corner, side) in enumerate(plan.interiors):
        crossing, rightp, leftp = right_pentagon_sides(rot[corner], entry, exits[j])
        pent.append((corner, side, crossing, rightp, leftp))
        entry = exits[j]
    # sweep the chain, merging partials into full sides
    sides = [None] * n
    if type_a == "ep":
        sides[own_a[0]] = full_a0
        sides[own_a[1]] = full_a1
        open_top, open_bot = top_a, bot_a
    else:
        d23_a, d34_a, d41_a = right_quad_sides(rot[own_a[0]], rot[own_a[1]], r0)
        sides[own_a[0]] = d34_a
        open_top, open_bot = d23_a, d41_a
    for corner, side, crossing, rightp, leftp in pent:
        if side == "bottom":
            sides[(corner - 1) % n] = open_bot + leftp
            open_bot = rightp
            open_top += crossing
        else:
            sides[corner % n] = open_top + leftp
            open_top = rightp
            open_bot += crossing
    j0 = own_b[0]
    if type_b == "ep":
        sides[(j0 - 1) % n] = open_bot + bot_b
        sides[j0 % n] = full_b0
        sides[(j0 + 1) % n] = full_b1
        sides[(j0 + 2) % n] = open_top + top_b
    else:
        d23_b, d34_b, d41_b = right_quad_sides(rot[j0 % n], rot[(j0 + 1) % n], entry)
        sides[(j0 - 1) % n] = open_bot + d23_b
        sides[j0 % n] = d34_b
        sides[(j0 + 1) % n] = open_top + d41_b
    if any(s is None for s in sides):
        raise ConstructionError("decomposition bookkeeping left a side unset")
    return sides


# ---------------------------------------------------------------------------
# free variable planning


def required_free_vars(n):
    """Number and roles of the free variables the notation's construction
    consumes, in consumption order."""
    cls = require_realizable(n)
    norm = normalize(n)
    orders = norm.orders
    walls = len(orders)
    if cls.kind == SPHERICAL:
        if walls >= 4:
            raise ConstructionError(
                "spherical polygons with more than three corners are not constructible here"
            )
        return 0, []
    if cls.kind == EUCLIDEAN:
        if walls == 3:
            return 1, ["scale"]
        if walls == 4 and all(k == 2 for k in orders):
            return 2, ["width", "height"]
        raise ConstructionError(
            "Euclidean polygons beyond the four wallpaper shapes are not constructible"
        )
    if walls == 3:
        return 0, []
    plan = _plan_hyperbolic(orders)
    if plan is None:
        raise ConstructionError(
            "no decomposition: the corner sequence offers no usable end pieces"
        )
    return len(plan.roles), list(plan.roles)


def _resolve_free_vars(count, fv):
    if fv is None:
        return [DEFAULT_FREE] * count
    fv = [float(v) for v in fv]
    if len(fv) != count:
        raise ConstructionError(
            "expected %d free variables, got %d" % (count, len(fv))
        )
    for v in fv:
        if not (v > 0) or not math.isfinite(v):
            raise InfeasibleFreeVariableError("free variables must be positive", 0)
    return fv


# ---------------------------------------------------------------------------
# build


def build(n, free_vars=None):
    """Construct the fundamental polygon of a realizable notation."""
    cls = require_realizable(n)
    norm = normalize(n)
    orders = norm.orders
    count, _roles = required_free_vars(n)
    fv = _resolve_free_vars(count, free_vars)
    if cls.kind == SPHERICAL:
        return _build_spherical(orders, fv, norm, cls)
    if cls.kind == EUCLIDEAN:
        return _build_euclidean(orders, fv, norm, cls)
    return _build_hyperbolic(orders, fv, norm, cls)


def _build_spherical(orders, fv, norm, cls):
    walls = len(orders)
    if walls == 1:
        # the monogon: one mirror along the full equator, vertex at (1, 0)
        equator = CircleGeodesic(0j, 1.0, SPHERICAL)
        v = 1 + 0j
        edge = Edge(equator, v, v, 2.0 * math.pi, -1 + 0j, 1)
        return FundamentalPolygon(
            SPHERICAL, [v], [edge], list(orders), [2.0 * math.pi], fv,
            0.0, [0.0], norm, 0j, cls.is_orbifold,
        )
    if walls == 2:
        sides = [math.pi, math.pi]
    else:
        sides = list(spherical_triangle_sides(*orders))
    vertices, edges, gap = _walk(SPHERICAL, _placement(SPHERICAL), sides, orders)
    return _assemble(SPHERICAL, vertices, edges, orders, sides, fv, gap, norm, cls)


def _build_euclidean(orders, fv, norm, cls):
    walls = len(orders)
    if walls == 4:
        w, h = fv
        sides = [w, h, w, h]
    else:
        scale = fv[0]
        sides = [scale * math.sin(math.pi / orders[(i + 2) % 3]) for i in range(3)]
    vertices, edges, gap = _walk(EUCLIDEAN, _placement(EUCLIDEAN), sides, orders)
    return _assemble(EUCLIDEAN, vertices, edges, orders, sides, fv, gap, norm, cls)


def _build_hyperbolic(orders, fv, norm, cls):
    walls = len(orders)
    plan = _plan_hyperbolic(orders) if walls > 3 else _Plan("triangle", 0, n=3)
    if plan is None:
        raise ConstructionError(
            "no decomposition: the corner sequence offers no usable end pieces"
        )
    if plan.mode == "triangle":
        sides = list(hyperbolic_triangle_sides(*orders))
        rot_orders, rot_sides = orders, sides
    elif plan.mode == "quad":
        rot_orders = _rotated(orders, plan.rotation)
        d12 = fv[0]
        d23, d34, d41 = right_quad_sides(rot_orders[2], rot_orders[3], d12)
        rot_sides = [d12, d23, d34, d41]
    elif plan.mode == "pentagon":
        rot_orders = _rotated(orders, plan.rotation)
        d23, d51 = fv
        d12, d45, d34 = right_pentagon_sides(rot_orders[4], d23, d51)
        # cyclic edge order d23, d12, d51, d45, d34 puts the k corner at
        # vertex 4, between d45 and d34
        rot_sides = [d23, d12, d51, d45, d34]
    else:
        rot_orders = _rotated(orders, plan.rotation)
        rot_sides = _solve_chain(plan, rot_orders, fv)
    # de-rotate so the polygon matches the canonical corner order
    if plan.rotation:
        n_ = len(orders)
        sides = [rot_sides[(j - plan.rotation) % n_] for j in range(n_)]
    else:
        sides = list(rot_sides)
    vertices, edges, gap = _walk(HYPERBOLIC, _placement(HYPERBOLIC), sides, orders)
    if walls > 3:
        # Re-anchor the walk so the polygon surrounds the origin.  A corner
        # anchor pushes the far side of a large room to chart radius ~ its
        # diameter, where the disk holds only ~eps*e^(2 rho) of angular
        # precision and remeasured residuals drown in representation noise;
        # centering halves the radius and keeps every vertex measurable.
        # The second walk rebuilds the pose chain from exact subgroup
        # factors, so no chart round-trip error is inherited from the first.
        center = _base_point(HYPERBOLIC, vertices, edges)
        recenter = translation_taking(HYPERBOLIC, center, 0j).matrix
        vertices, edges, gap = _walk(HYPERBOLIC, recenter, sides, orders)
    return _assemble(HYPERBOLIC, vertices, edges, orders, sides, fv, gap, norm, cls)


# ---------------------------------------------------------------------------
# validation and area


def validate_closure(p):
    """Independent residual report: remeasure angles, side lengths, and the
    gap between the walk's final point and its anchor."""
    kind = p.kind
    n = len(p.vertices)
    angle_res = _measure_angles(kind, p.vertices, p.edges, p.corner_orders)
    length_res = []
    for i, e in enumerate(p.edges):
        if n == 1:
            length_res.append(0.0)
            continue
        measured = distance(kind, e.start, e.end)
        length_res.append(measured - p.side_lengths[i])
    gap = distance(kind, p.edges[-1].end, p.vertices[0])
    return {
        "closure_gap": gap,
        "max_angle_residual": max(abs(r) for r in angle_res),
        "max_length_residual": max(abs(r) for r in length_res),
        "angle_residuals": angle_res,
        "length_residuals": length_res,
    }


_GL_NODES, _GL_WEIGHTS = numpy.polynomial.legendre.leggauss(32)


def polygon_area(p):
    """Intrinsic area by integrating the model's area one-form along the
    boundary (counterclockwise): 2 (x dy - y dx) / (1 -+ |z|^2)."""
    kind = p.kind
    if kind == HYPERBOLIC:
        def form(z, dz):
            w = 2.0 / (1.0 - (z.real * z.real + z.imag * z.imag))
            return w * (z.real * dz.imag - z.imag * dz.real)
    elif kind == SPHERICAL:
        def form(z, dz):
            w = 2.0 / (1.0 + (z.real * z.real + z.imag * z.imag))
            return w * (z.real * dz.imag - z.imag * dz.real)
    else:
        def form(z, dz):
            return 0.5 * (z.real * dz.imag - z.imag * dz.real)
    total = 0.0
    for e in p.edges:
        total += _edge_integral(e, form)
    return total


def _edge_integral(e, form):
    g = e.geodesic
    if g.is_line():
        a, b = e.start, e.end
        d = b - a
        acc = 0.0
        for t, w in zip(_GL_NODES, _GL_WEIGHTS):
            z = a + (t + 1.0) * 0.5 * d
            acc += w * form(z, d * 0.5)
        return acc
    c, r = g.center, g.radius
    th0 = cmath.phase(e.start - c)
    th1 = cmath.phase(e.end - c)
    thm = cmath.phase(e.midpoint - c)
    if abs(e.start - e.end) < 1e-14:
        sweep = 2.0 * math.pi  # full-circle edge (the monogon), counterclockwise
    else:
        sweep = (th1 - th0) % (2.0 * math.pi)
        mid_off = (thm - th0) % (2.0 * math.pi)
        if mid_off > sweep + 1e-12:
            sweep -= 2.0 * math.pi
    panels = max(1, int(math.ceil(abs(sweep) / 0.5)))
    acc = 0.0
    for k in range(panels):
        t0 = th0 + sweep * k / panels
        dt = sweep / panels
        for t, w in zip(_GL_NODES, _GL_WEIGHTS):
            theta = t0 + (t + 1.0) * 0.5 * dt
            z = c + r * cmath.exp(1j * theta)
            dz = 1j * r * cmath.exp(1j * theta) * dt * 0.5
            acc += w * form(z, dz)
    return acc
