"""Numeric kernel dispatch: compiled extension when available, numpy
reference otherwise.

Set ORBITILE_PURE=1 to force the reference implementation (useful for
benchmarking one against the other; see benchmarks/bench_kernels.py).
"""

import os

from . import pure

_impl = pure
if os.environ.get("ORBITILE_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _speedups as _impl
    except ImportError:
        _impl = pure

BACKEND = _impl.BACKEND
center_distances = _impl.center_distances
min_center_distance = _impl.min_center_distance
transform_points = _impl.transform_points
geodesic_points = _impl.geodesic_points
