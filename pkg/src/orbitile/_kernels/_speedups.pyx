# cython: boundscheck=False, wraparound=False, cdivision=True
# cython: language_level=3
"""Compiled twin of the reference numpy kernels.

Same functions, same contracts as pure.py; scalar loops over typed
memoryviews instead of ufunc chains.  The module is optional: the
package falls back to the reference implementation when this extension
is absent.
"""

import numpy

from libc.math cimport atan, atanh, cos, cosh, sin, sinh, sqrt

BACKEND = "compiled"

ctypedef double complex cplx

DEF HYP_RATIO_CAP = 0.9999999999999999  # largest double below 1


cdef inline double _abs2(cplx z) noexcept nogil:
    return z.real * z.real + z.imag * z.imag


cdef int _mode(str kind) except -1:
    if kind == "euclidean":
        return 0
    if kind == "spherical":
        return 1
    if kind == "hyperbolic":
        return 2
    raise ValueError("unknown kind %r" % kind)


cdef inline double _ratio2(int mode, cplx c, cplx z, cplx zc) noexcept nogil:
    # squared monotone surrogate for the intrinsic distance: |c - z|^2
    # euclidean, |c - z|^2 / |1 +- conj(z) c|^2 on the curved models
    if mode == 0:
        return _abs2(c - z)
    if mode == 1:
        return _abs2(c - z) / _abs2(1.0 + zc * c)
    return _abs2(c - z) / _abs2(1.0 - zc * c)


cdef inline double _from_ratio2(int mode, double r2) noexcept nogil:
    cdef double r = sqrt(r2)
    if mode == 0:
        return r
    if mode == 1:
        return 2.0 * atan(r)  # r = inf (antipode) gives pi
    if r > HYP_RATIO_CAP:
        r = HYP_RATIO_CAP
    return 2.0 * atanh(r)


def center_distances(str kind, centers, z):
    """Intrinsic distances from every center to the probe point z."""
    cdef int mode = _mode(kind)
    arr = numpy.ascontiguousarray(centers, dtype=numpy.complex128)
    cdef cplx[::1] cs = arr
    cdef Py_ssize_t i, n = cs.shape[0]
    out_arr = numpy.empty(n, dtype=numpy.float64)
    cdef double[::1] out = out_arr
    cdef cplx zz = z
    cdef cplx zc = zz.conjugate()
    for i in range(n):
        out[i] = _from_ratio2(mode, _ratio2(mode, cs[i], zz, zc))
    return out_arr


def min_center_distance(str kind, centers, Py_ssize_t count, z):
    """Smallest intrinsic distance from z to the first count centers.

    The distance is monotone in the squared ratio, so the loop tracks
    only multiply-adds and the transcendental runs once at the end.
    """
    cdef int mode = _mode(kind)
    if count == 0:
        return float("inf")
    arr = numpy.ascontiguousarray(centers, dtype=numpy.complex128)
    cdef cplx[::1] cs = arr
    cdef cplx zz = z
    cdef cplx zc = zz.conjugate()
    cdef double best, r2
    cdef Py_ssize_t i
    best = _ratio2(mode, cs[0], zz, zc)
    for i in range(1, count):
        r2 = _ratio2(mode, cs[i], zz, zc)
        if r2 < best:
            best = r2
    return _from_ratio2(mode, best)


def transform_points(a, b, c, d, bint reversing, points):
    """Apply the Moebius matrix (a b; c d), conjugating first if
    reversing, to an array of points."""
    arr = numpy.ascontiguousarray(points, dtype=numpy.complex128)
    cdef cplx[::1] ps = arr
    cdef Py_ssize_t i, n = ps.shape[0]
    out_arr = numpy.empty(n, dtype=numpy.complex128)
    cdef cplx[::1] out = out_arr
    cdef cplx ca = a, cb = b, cc = c, cd = d, w
    for i in range(n):
        w = ps[i].conjugate() if reversing else ps[i]
        out[i] = (ca * w + cb) / (cc * w + cd)
    return out_arr


def geodesic_points(str kind, a, b, c, d, offsets):
    """Points at signed arc-length offsets along a framed geodesic
    (see the reference implementation for the frame convention)."""
    cdef int mode = _mode(kind)
    arr = numpy.ascontiguousarray(offsets, dtype=numpy.float64)
    cdef double[::1] ts = arr
    cdef Py_ssize_t i, n = ts.shape[0]
    out_arr = numpy.empty(n, dtype=numpy.complex128)
    cdef cplx[::1] out = out_arr
    cdef cplx ca = a, cb = b, cc = c, cd = d
    cdef double u, v
    for i in range(n):
        if mode == 0:
            out[i] = (ca * ts[i] + cb) / (cc * ts[i] + cd)
        else:
            if mode == 2:
                u, v = sinh(0.5 * ts[i]), cosh(0.5 * ts[i])
            else:
                u, v = sin(0.5 * ts[i]), cos(0.5 * ts[i])
            out[i] = (ca * u + cb * v) / (cc * u + cd * v)
    return out_arr
