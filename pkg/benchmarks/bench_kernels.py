"""Reference-vs-compiled kernel benchmark.

Times each kernel on cover-sized batches, then a full cover generation
under each backend in a subprocess (backend choice is import-time).

    python3 benchmarks/bench_kernels.py
"""

import os
import random
import subprocess
import sys
import time

import numpy

from orbitile._kernels import pure

try:
    from orbitile._kernels import _speedups
except ImportError:
    _speedups = None

SIZES = (64, 1024, 16384)
REPEAT = 200


def timed(fn, *args):
    best = float("inf")
    for _ in range(5):
        t0 = time.perf_counter()
        for _ in range(REPEAT):
            fn(*args)
        best = min(best, (time.perf_counter() - t0) / REPEAT)
    return best


def bench_batch(impl, n, rng):
    centers = numpy.array([
        complex(rng.uniform(-0.9, 0.9), rng.uniform(-0.9, 0.9))
        for _ in range(n)])
    offsets = numpy.linspace(-2.0, 2.0, n)
    z = 0.17 + 0.05j
    rows = {}
    rows["center_distances"] = timed(
        impl.center_distances, "hyperbolic", centers, z)
    rows["min_center_distance"] = timed(
        impl.min_center_distance, "hyperbolic", centers, n, z)
    rows["transform_points"] = timed(
        impl.transform_points, 1.1 + 0.1j, 0.2j, 0.2j, 1.1 - 0.1j, False,
        centers)
    rows["geodesic_points"] = timed(
        impl.geodesic_points, "hyperbolic", 1.1 + 0.1j, 0.2j, 0.2j,
        1.1 - 0.1j, offsets)
    return rows


def bench_cover(forced):
    script = (
        "import time\n"
        "from orbitile.construct import build\n"
        "from orbitile.cover import CoverOptions, generate_cover\n"
        "from orbitile.notation import parse\n"
        "from orbitile._kernels import BACKEND\n"
        "p = build(parse('*237'))\n"
        "opts = CoverOptions(max_depth=40, max_copies=4000,"
        " min_diameter=0.01)\n"
        "t0 = time.perf_counter()\n"
        "c = generate_cover(p, opts)\n"
        "dt = time.perf_counter() - t0\n"
        "print('%s %d %.3f' % (BACKEND, len(c), dt))\n"
    )
    env = dict(os.environ, ORBITILE_PURE=forced)
    out = subprocess.run([sys.executable, "-c", script],
                         capture_output=True, text=True, env=env)
    if out.returncode != 0:
        raise RuntimeError(out.stderr)
    return out.stdout.strip()


def main():
    rng = random.Random(1)
    print("kernel microbenchmarks (seconds per call, best of 5)")
    for n in SIZES:
        ref = bench_batch(pure, n, rng)
        print("\nbatch size %d" % n)
        if _speedups is None:
            for name, t in ref.items():
                print("  %-20s pure %.3g  (compiled kernels not built)"
                      % (name, t))
            continue
        fast = bench_batch(_speedups, n, rng)
        for name in ref:
            print("  %-20s pure %.3g   compiled %.3g   speedup %.2fx"
                  % (name, ref[name], fast[name], ref[name] / fast[name]))
    print("\nend-to-end cover of *237 (backend copies seconds)")
    print("  " + bench_cover("1"))
    if _speedups is not None:
        print("  " + bench_cover("0"))


if __name__ == "__main__":
    main()
