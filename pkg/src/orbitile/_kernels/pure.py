"""Vectorized numeric kernels, reference implementation.

These are the inner loops of cover generation and scene sampling: batch
distance queries against the accumulated center list, batch Moebius
evaluation, and geodesic sampling in a canonical frame.  numpy keeps the
reference version honest on speed while the compiled variant in
_speedups is bit-for-bit interchangeable.
"""

import numpy

BACKEND = "pure"


def center_distances(kind, centers, z):
    """Intrinsic distances from every center to the probe point z.

    centers is a complex128 array of finite model points; z a finite
    complex.  Mirrors geometry.distance for each kind.
    """
    if kind == "euclidean":
        return numpy.abs(centers - z)
    zc = complex(z).conjugate()
    if kind == "spherical":
        return 2.0 * numpy.arctan2(
            numpy.abs(centers - z), numpy.abs(1.0 + zc * centers)
        )
    a = numpy.abs(1.0 - zc * centers)
    b = numpy.abs(centers - z)
    # 2 atanh(b/a); the ratio is < 1 for points inside the disk, and the
    # clamp (largest double below 1) keeps boundary rounding finite
    ratio = numpy.minimum(b / a, 0.9999999999999999)
    return 2.0 * numpy.arctanh(ratio)


def min_center_distance(kind, centers, count, z):
    """Smallest intrinsic distance from z to the first count centers."""
    if count == 0:
        return numpy.inf
    return float(numpy.min(center_distances(kind, centers[:count], z)))


def transform_points(a, b, c, d, reversing, points):
    """Apply the Moebius matrix (a b; c d), conjugating first if reversing,
    to a complex128 array of points."""
    w = numpy.conj(points) if reversing else points
    return (a * w + b) / (c * w + d)


def geodesic_points(kind, a, b, c, d, offsets):
    """Points at signed arc-length offsets along a framed geodesic.

    (a b; c d) is a pose matrix taking the home ray (origin, heading +1,
    real-axis geodesic) to the parametrization start, so the point at arc
    length s is the image of the home chart coordinate: s euclidean,
    tanh(s/2) hyperbolic, tan(s/2) spherical.  Evaluated homogeneously so
    the spherical antipode (s = pi, chart coordinate at infinity) stays
    finite.
    """
    if kind == "euclidean":
        u = offsets.astype(numpy.complex128)
        return (a * u + b) / (c * u + d)
    if kind == "hyperbolic":
        u, v = numpy.sinh(0.5 * offsets), numpy.cosh(0.5 * offsets)
    else:
        u, v = numpy.sin(0.5 * offsets), numpy.cos(0.5 * offsets)
    return (a * u + b * v) / (c * u + d * v)
