import cmath
import math
import random

import pytest

from orbitile.errors import DegenerateInputError, IncidenceError
from orbitile.geometry import (
    EUCLIDEAN,
    HYPERBOLIC,
    SPHERICAL,
    CircleGeodesic,
    LineGeodesic,
    angle_between,
    canonical_transform,
    distance,
    geodesic_from_point_tangent,
    geodesic_through,
    geodesic_through_three,
    interior_angle,
    point_at_distance,
    reflect_across,
    sphere_embed,
    tangent_toward,
    transform_geodesic,
    translation_taking,
    travel,
)
from orbitile.moebius import INFINITY, IsometryTransform, action_equal, is_infinity

TOL = 1e-10

# frozen oracle: d(0.2+0.1i, -0.3+0.4i) via the hyperboloid lift
HYP_DIST_ORACLE = 1.2902128068885852
SPH_DIST_ORACLE = 1.0679690797474546


def hyperboloid_distance(p, q):
    """Independent oracle: lift to the hyperboloid, Minkowski acosh."""

    def lift(z):
        r2 = abs(z) ** 2
        return (2 * z.real / (1 - r2), 2 * z.imag / (1 - r2), (1 + r2) / (1 - r2))

    P, Q = lift(p), lift(q)
    return math.acosh(max(1.0, P[2] * Q[2] - P[0] * Q[0] - P[1] * Q[1]))


def sphere_distance(p, q):
    """Independent oracle: embed on the unit sphere, great-circle angle."""
    P, Q = sphere_embed(p), sphere_embed(q)
    dot = sum(a * b for a, b in zip(P, Q))
    return math.acos(max(-1.0, min(1.0, dot)))


def random_disk_point(rng, rmax=0.9):
    r = rmax * math.sqrt(rng.random())
    a = rng.uniform(0, 2 * math.pi)
    return cmath.rect(r, a)


def test_distance_trivial():
    assert abs(distance(SPHERICAL, 0j, 1 + 0j) - math.pi / 2) < TOL
    assert abs(distance(HYPERBOLIC, 0j, 0.5 + 0j) - math.log(3)) < TOL
    assert abs(distance(EUCLIDEAN, 1j, 1 + 1j) - 1.0) < TOL
    assert abs(distance(SPHERICAL, 0j, INFINITY) - math.pi) < TOL


def test_distance_oracles():
    p, q = 0.2 + 0.1j, -0.3 + 0.4j
    assert abs(distance(HYPERBOLIC, p, q) - HYP_DIST_ORACLE) < TOL
    assert abs(distance(SPHERICAL, p, q) - SPH_DIST_ORACLE) < TOL
    rng = random.Random(101)
    for _ in range(200):
        a, b = random_disk_point(rng), random_disk_point(rng)
        assert abs(distance(HYPERBOLIC, a, b) - hyperboloid_distance(a, b)) < TOL
        c = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        d = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        assert abs(distance(SPHERICAL, c, d) - sphere_distance(c, d)) < TOL


def test_geodesic_through_diameter():
    g = geodesic_through(HYPERBOLIC, 0.1 + 0j, -0.2 + 0j)
    assert g.is_line()
    assert abs(g.point) < TOL
    g = geodesic_through(SPHERICAL, 0j, 0.5 + 0j)
    assert g.is_line()


def test_geodesic_through_orthocircle():
    g = geodesic_through(HYPERBOLIC, 0.5 + 0j, 0.5j)
    assert not g.is_line()
    assert g.model_residual() < TOL
    assert g.contains(0.5 + 0j) and g.contains(0.5j)


def test_geodesic_through_random():
    rng = random.Random(103)
    for _ in range(200):
        p, q = random_disk_point(rng), random_disk_point(rng)
        if abs(p - q) < 1e-3:
            continue
        g = geodesic_through(HYPERBOLIC, p, q)
        assert g.model_residual() < TOL
        assert g.contains(p) and g.contains(q)
        u = complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))
        v = complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))
        if abs(u - v) < 1e-3:
            continue
        gs = geodesic_through(SPHERICAL, u, v)
        assert gs.model_residual() < TOL
        assert gs.contains(u) and gs.contains(v)


def test_geodesic_through_degenerate():
    with pytest.raises(DegenerateInputError):
        geodesic_through(HYPERBOLIC, 0.3 + 0j, 0.3 + 0j)


def test_geodesic_antipodal_pair_is_diameter():
    p = 0.4 + 0.3j
    q = -1.0 / p.conjugate()  # stereographic antipode
    g = geodesic_through(SPHERICAL, p, q)
    assert g.is_line()
    assert g.contains(p) and g.contains(q)


def test_canonical_transform_identity_cases():
    g = LineGeodesic(0j, 1 + 0j, HYPERBOLIC)
    assert action_equal(canonical_transform(g), IsometryTransform.identity())
    eq = CircleGeodesic(0j, 1.0, SPHERICAL)
    assert action_equal(canonical_transform(eq), IsometryTransform.identity())


def test_canonical_transform_orthocircle():
    g = CircleGeodesic(math.sqrt(2) + 0j, 1.0, HYPERBOLIC)
    t = canonical_transform(g)
    s = 1 / math.sqrt(2)
    assert abs(t(complex(s, -s)) - (-1)) < TOL
    assert abs(t(complex(s, s)) - 1) < TOL
    assert abs(t(math.sqrt(2) - 1 + 0j)) < TOL


def test_canonical_transform_preserves_distance():
    rng = random.Random(107)
    for kind in (HYPERBOLIC, SPHERICAL):
        for _ in range(25):
            p = random_disk_point(rng)
            q = random_disk_point(rng)
            if abs(p - q) < 1e-3:
                continue
            g = geodesic_through(kind, p, q)
            t = canonical_transform(g)
            for _ in range(4):
                a, b = random_disk_point(rng), random_disk_point(rng)
                assert abs(distance(kind, t(a), t(b)) - distance(kind, a, b)) < TOL


def test_point_at_distance_trivial():
    g = LineGeodesic(0j, 1 + 0j, HYPERBOLIC)
    p = 0.25 + 0j
    assert abs(point_at_distance(HYPERBOLIC, p, g, 0.0) - p) < TOL


def test_point_at_distance_equator_quarter():
    eq = CircleGeodesic(0j, 1.0, SPHERICAL)
    out = point_at_distance(SPHERICAL, 1 + 0j, eq, math.pi / 2, side=1.0)
    assert abs(out - 1j) < TOL


def test_point_at_distance_diameter():
    g = LineGeodesic(0j, 1 + 0j, HYPERBOLIC)
    out = point_at_distance(HYPERBOLIC, 0j, g, math.log(3), side=1.0)
    assert abs(out - 0.5) < TOL


def test_point_at_distance_incidence_error():
    g = LineGeodesic(0j, 1 + 0j, HYPERBOLIC)
    with pytest.raises(IncidenceError):
        point_at_distance(HYPERBOLIC, 0.2j, g, 1.0)


def test_point_at_distance_consistency():
    rng = random.Random(109)
    for kind in (HYPERBOLIC, SPHERICAL, EUCLIDEAN):
        for _ in range(50):
            if kind == EUCLIDEAN:
                p = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
                q = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
            else:
                p, q = random_disk_point(rng), random_disk_point(rng)
            if abs(p - q) < 1e-3:
                continue
            g = geodesic_through(kind, p, q)
            d = rng.uniform(0.05, 1.0)
            for side in (1.0, -1.0):
                out = point_at_distance(kind, p, g, d, side)
                assert g.contains(out, 1e-9)
                assert abs(distance(kind, p, out) - d) < 1e-9


def test_angle_between_perpendicular_diameters():
    g1 = LineGeodesic(0j, 1 + 0j, HYPERBOLIC)
    g2 = LineGeodesic(0j, 1j, HYPERBOLIC)
    assert abs(angle_between(HYPERBOLIC, g1, g2, 0j) - math.pi / 2) < TOL


def test_angle_between_self_is_straight():
    g = LineGeodesic(0j, 1 + 0j, HYPERBOLIC)
    assert abs(angle_between(HYPERBOLIC, g, g, 0.3 + 0j) - math.pi) < TOL


def test_angle_between_finite_difference():
    # diameter and an orthogonal circle, crossing on the real axis
    g1 = LineGeodesic(0j, 1 + 0j, HYPERBOLIC)
    g2 = CircleGeodesic(math.sqrt(2) + 0j, 1.0, HYPERBOLIC)
    at = math.sqrt(2) - 1 + 0j
    a = angle_between(HYPERBOLIC, g1, g2, at)
    # tangent of g2 at `at` by finite differences along the circle
    h = 1e-6
    c, r = g2.center, g2.radius
    phi = cmath.phase(at - c)
    t2 = ((c + r * cmath.exp(1j * (phi + h))) - (c + r * cmath.exp(1j * (phi - h)))) / (2 * h)
    t1 = 1 + 0j
    expected = abs(cmath.phase(-t2 / t1))
    assert abs(a - expected) < 1e-8


def test_reflect_real_axis_is_conjugation():
    g = LineGeodesic(0j, 1 + 0j, HYPERBOLIC)
    t = reflect_across(g)
    assert t.reversing
    assert action_equal(t, IsometryTransform.conjugation())


def test_reflect_equator_is_pole_swap():
    eq = CircleGeodesic(0j, 1.0, SPHERICAL)
    t = reflect_across(eq)
    assert is_infinity(t(0j))
    z = 0.3 + 0.4j
    assert abs(t(z) - 1.0 / z.conjugate()) < TOL


def test_reflect_orthocircle():
    g = CircleGeodesic(math.sqrt(2) + 0j, 1.0, HYPERBOLIC)
    t = reflect_across(g)
    rng = random.Random(113)
    for k in range(20):
        phi = cmath.phase(-g.center) + (k - 10) * 0.05
        z = g.center + g.radius * cmath.exp(1j * phi)
        if abs(z) < 1:
            assert abs(t(z) - z) < TOL
    for _ in range(50):
        a, b = random_disk_point(rng), random_disk_point(rng)
        assert abs(distance(HYPERBOLIC, t(a), t(b)) - distance(HYPERBOLIC, a, b)) < TOL
    assert action_equal(t.compose(t), IsometryTransform.identity())


def test_translation_taking():
    assert action_equal(
        translation_taking(HYPERBOLIC, 0.3 + 0.2j, 0.3 + 0.2j), IsometryTransform.identity()
    )
    t = translation_taking(HYPERBOLIC, 0j, 0.4 + 0j)
    assert abs(t(0j) - 0.4) < 1e-12
    rng = random.Random(127)
    for kind in (HYPERBOLIC, SPHERICAL, EUCLIDEAN):
        for _ in range(30):
            a, b = random_disk_point(rng), random_disk_point(rng)
            t = translation_taking(kind, a, b)
            assert not t.reversing
            assert abs(t(a) - b) < 1e-12
            p, q = random_disk_point(rng), random_disk_point(rng)
            assert abs(distance(kind, t(p), t(q)) - distance(kind, p, q)) < TOL


def test_translation_taking_infinity():
    t = translation_taking(SPHERICAL, INFINITY, 0j)
    assert abs(t(INFINITY)) < TOL
    t = translation_taking(SPHERICAL, 0j, INFINITY)
    assert is_infinity(t(0j))


def test_travel():
    rng = random.Random(131)
    for kind in (HYPERBOLIC, SPHERICAL, EUCLIDEAN):
        for _ in range(50):
            p = random_disk_point(rng, 0.7)
            tau = cmath.exp(1j * rng.uniform(0, 2 * math.pi))
            d = rng.uniform(0.05, 0.9)
            end, g, tau_end, mid = travel(kind, p, tau, d)
            assert g.contains(p) and g.contains(end, 1e-9) and g.contains(mid, 1e-9)
            assert abs(distance(kind, p, end) - d) < 1e-9
            assert abs(distance(kind, p, mid) - d / 2) < 1e-9
            # forward tangent: a further tiny step moves away from p
            end2, _, _, _ = travel(kind, end, tau_end, d * 0.01)
            assert distance(kind, p, end2) > distance(kind, p, end) - 1e-12
            # initial direction agrees with tau
            step, _, _, _ = travel(kind, p, tau, 1e-6)
            assert abs((step - p) / abs(step - p) - tau) < 1e-4


def test_travel_round_trip():
    rng = random.Random(137)
    for kind in (HYPERBOLIC, SPHERICAL, EUCLIDEAN):
        for _ in range(30):
            p = random_disk_point(rng, 0.6)
            tau = cmath.exp(1j * rng.uniform(0, 2 * math.pi))
            d = rng.uniform(0.1, 0.8)
            end, _, tau_end, _ = travel(kind, p, tau, d)
            back, _, _, _ = travel(kind, end, -tau_end, d)
            assert abs(back - p) < 1e-9


def test_tangent_toward():
    g = LineGeodesic(0j, 1 + 0j, HYPERBOLIC)
    tau = tangent_toward(HYPERBOLIC, g, 0j, 0.5 + 0j)
    assert abs(tau - 1) < TOL
    tau = tangent_toward(HYPERBOLIC, g, 0j, -0.5 + 0j)
    assert abs(tau + 1) < TOL
    eq = CircleGeodesic(0j, 1.0, SPHERICAL)
    tau = tangent_toward(SPHERICAL, eq, 1 + 0j, 1j)
    assert abs(tau - 1j) < TOL


def test_interior_angle_quarter():
    g1 = LineGeodesic(0j, 1 + 0j, HYPERBOLIC)
    g2 = LineGeodesic(0j, 1j, HYPERBOLIC)
    a = interior_angle(HYPERBOLIC, g1, g2, 0j, 0.5 + 0j, 0.5j)
    assert abs(a - math.pi / 2) < TOL


def test_transform_geodesic_invariant():
    rng = random.Random(139)
    for kind in (HYPERBOLIC, SPHERICAL):
        for _ in range(40):
            p, q = random_disk_point(rng), random_disk_point(rng)
            if abs(p - q) < 1e-3:
                continue
            g = geodesic_through(kind, p, q)
            t = translation_taking(kind, random_disk_point(rng, 0.5), random_disk_point(rng, 0.5))
            r = reflect_across(geodesic_through(kind, random_disk_point(rng), random_disk_point(rng)))
            for tr in (t, r, t.compose(r)):
                img = transform_geodesic(tr, g)
                assert img.model_residual() < 1e-9
                assert img.contains(tr(p), 1e-8)
                assert img.contains(tr(q), 1e-8)


def test_geodesic_through_three():
    g = geodesic_through_three(SPHERICAL, -1 + 0j, 1 + 0j, 1j)
    assert not g.is_line()
    assert abs(g.center) < TOL and abs(g.radius - 1) < TOL
    g = geodesic_through_three(HYPERBOLIC, -0.5 + 0j, 0.5 + 0j, 0j)
    assert g.is_line()
    g = geodesic_through_three(SPHERICAL, 2 + 0j, INFINITY, -2 + 0j)
    assert g.is_line()
