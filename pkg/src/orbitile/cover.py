"""Universal cover generation by breadth-first mirror reflection.

Starting from the fundamental room, every copy spawns candidates by
reflection across each of its edges; a candidate is new when its center
(the image of the room's base point) is not already claimed.  One BFS
serves all three geometries: spherical covers terminate naturally when
the sphere is exhausted, Euclidean and hyperbolic ones stop at the
depth/count/diameter limits.  The transform carried by each copy is the
isometry taking the fundamental room onto it, so downstream consumers
(emphasis weighting, rendering, scene placement) never re-derive words
in the reflection group.

Non-integer corner orders still generate a cover, but the tiles overlap
instead of meshing; the result is flagged and deduplication falls back
to exact-transform comparison so distinct overlapping tiles survive.
"""

import numpy

from . import _kernels
from .errors import NumericDomainError
from .geometry import HYPERBOLIC, SPHERICAL, reflect_across
from .moebius import IsometryTransform, action_equal, chordal, is_infinity

DEDUP_TOLERANCE = 1e-7
VERTEX_MATCH_TOLERANCE = 1e-7
# centers this far out in the spherical chart dedup as if at the pole;
# the intrinsic formula is fine there but the flagged/unflagged split
# must not depend on whether a denominator underflowed to the sentinel
AT_INFINITY_RADIUS = 1e9


class CoverOptions(object):
    """Stopping and deduplication controls for cover generation."""

    __slots__ = ("max_depth", "max_copies", "min_diameter", "dedup_tolerance")

    def __init__(self, max_depth=12, max_copies=500, min_diameter=0.002,
                 dedup_tolerance=DEDUP_TOLERANCE):
        if max_depth <= 0 or max_copies <= 0:
            raise NumericDomainError("cover limits must be positive")
        if min_diameter <= 0 or dedup_tolerance <= 0:
            raise NumericDomainError("cover thresholds must be positive")
        self.max_depth = int(max_depth)
        self.max_copies = int(max_copies)
        self.min_diameter = float(min_diameter)
        self.dedup_tolerance = float(dedup_tolerance)

    def __repr__(self):
        return "CoverOptions(max_depth=%d, max_copies=%d, min_diameter=%g, dedup_tolerance=%g)" % (
            self.max_depth, self.max_copies, self.min_diameter, self.dedup_tolerance,
        )


class RoomCopy(object):
    """One tile of the cover.

    transform takes the fundamental room onto this copy; path lists the
    fundamental edge indices of the reflections that reached it, so
    depth == len(path) and the orientation flip parity equals depth
    parity.  mirror_bounces counts path occurrences per edge and feeds
    the attenuation product.
    """

    __slots__ = ("transform", "depth", "path", "mirror_bounces", "vertices",
                 "center", "center_at_infinity", "contains_infinity")

    def __init__(self, transform, depth, path, mirror_bounces, vertices,
                 center, center_at_infinity, contains_infinity):
        self.transform = transform
        self.depth = depth
        self.path = path
        self.mirror_bounces = mirror_bounces
        self.vertices = vertices
        self.center = center
        self.center_at_infinity = center_at_infinity
        self.contains_infinity = contains_infinity

    def __repr__(self):
        return "RoomCopy(depth=%d, path=%r)" % (self.depth, self.path)


class Cover(list):
    """Copies in BFS discovery order, plus cover-level flags."""

    def __init__(self, copies, overlapping):
        list.__init__(self, copies)
        self.overlapping = overlapping


def copy_center(p, t):
    """Center of the copy t: image of the polygon's base point.  May be
    the point at infinity (spherical copy over the far pole)."""
    return t(p.base_point)


def _euclidean_diameter(vertices):
    best = 0.0
    for i in range(len(vertices)):
        for j in range(i + 1, len(vertices)):
            d = abs(vertices[i] - vertices[j])
            if d > best:
                best = d
    return best


def _same_vertex_set(va, vb, tol):
    """Unordered vertex-list match in the chordal metric (finite at the
    pole).  Reflections permute corner labels, hence set comparison."""
    if len(va) != len(vb):
        return False
    used = [False] * len(vb)
    for z in va:
        hit = False
        for j, w in enumerate(vb):
            if not used[j] and chordal(z, w) <= tol:
                used[j] = True
                hit = True
                break
        if not hit:
            return False
    return True


def _contains_infinity(p, t):
    """Whether the copy t covers the chart's point at infinity: pull it
    back and run the fundamental room's containment test."""
    if p.kind != SPHERICAL:
        return False
    w = t.inverse()(complex("inf"))
    if is_infinity(w):
        return False  # the fundamental room itself never spans the pole
    return p.contains(w, tol=1e-9)


def _make_copy(p, t, depth, path):
    vertices = [t(v) for v in p.vertices]
    center = copy_center(p, t)
    at_inf = is_infinity(center) or abs(center) > AT_INFINITY_RADIUS
    bounces = [0] * len(p.edges)
    for e in path:
        bounces[e] += 1
    return RoomCopy(t, depth, list(path), bounces, vertices, center,
                    at_inf, _contains_infinity(p, t))


def generate_cover(p, opts=None):
    """Breadth-first reflection cover of a built fundamental polygon.

    FIFO over (copy, edge) pairs: copies in discovery order, edges by
    index, so the output order is deterministic.  A candidate is the
    parent reflected across its own edge image, i.e. parent transform
    composed with the reflection across the fundamental edge.
    """
    if opts is None:
        opts = CoverOptions()
    kind = p.kind
    reflections = [reflect_across(e.geodesic) for e in p.edges]
    overlapping = not p.is_orbifold

    first = _make_copy(p, IsometryTransform.identity(), 0, [])
    copies = [first]
    at_infinity_copies = [first] if first.center_at_infinity else []
    centers = numpy.zeros(256, dtype=numpy.complex128)
    n_centers = 0
    if not first.center_at_infinity:
        centers[0] = first.center
        n_centers = 1

    i = 0
    while i < len(copies) and len(copies) < opts.max_copies:
        parent = copies[i]
        i += 1
        if parent.depth >= opts.max_depth:
            continue
        for e in range(len(reflections)):
            t = parent.transform.compose(reflections[e])
            cand = _make_copy(p, t, parent.depth + 1, parent.path + [e])
            if kind == HYPERBOLIC and \
                    _euclidean_diameter(cand.vertices) < opts.min_diameter:
                continue
            if overlapping:
                if any(action_equal(t, c.transform) for c in copies):
                    continue
            elif cand.center_at_infinity:
                if any(_same_vertex_set(cand.vertices, other.vertices,
                                        VERTEX_MATCH_TOLERANCE)
                       for other in at_infinity_copies):
                    continue
            else:
                d = _kernels.min_center_distance(
                    kind, centers, n_centers, cand.center)
                if d <= opts.dedup_tolerance:
                    continue
            copies.append(cand)
            if cand.center_at_infinity:
                at_infinity_copies.append(cand)
            else:
                if n_centers == centers.shape[0]:
                    grown = numpy.zeros(2 * n_centers, dtype=numpy.complex128)
                    grown[:n_centers] = centers
                    centers = grown
                centers[n_centers] = cand.center
                n_centers += 1
            if len(copies) >= opts.max_copies:
                break
    return Cover(copies, overlapping)


def emphasis_weights(copies, attenuations):
    """Per-copy intensity: product over edges of attenuation^bounces.

    All zeros leaves only the fundamental room visible; all ones lights
    the whole cover; a single one traces chains through that one mirror.
    """
    att = [float(a) for a in attenuations]
    for a in att:
        if not (0.0 <= a <= 1.0):
            raise NumericDomainError("attenuations must lie in [0, 1]")
    out = []
    for c in copies:
        if len(att) != len(c.mirror_bounces):
            raise NumericDomainError(
                "expected %d attenuations, got %d"
                % (len(c.mirror_bounces), len(att))
            )
        w = 1.0
        for e, k in enumerate(c.mirror_bounces):
            if k:
                w *= att[e] ** k
        out.append(w)
    return out
