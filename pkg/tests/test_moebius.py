import cmath
import math
import random

import pytest

from orbitile.errors import DegenerateInputError
from orbitile.moebius import (
    INFINITY,
    IsometryTransform,
    MoebiusMatrix,
    action_equal,
    chordal,
    is_infinity,
)

RESIDUAL = 1e-12


def random_transform(rng):
    while True:
        entries = [complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(4)]
        det = entries[0] * entries[3] - entries[1] * entries[2]
        if abs(det) > 0.1:
            break
    m = MoebiusMatrix(*entries)
    return IsometryTransform(m, rng.random() < 0.5)


def test_identity_apply():
    m = MoebiusMatrix.identity()
    z = 0.3 + 0.4j
    assert abs(m(z) - z) < RESIDUAL


def test_pole_and_infinity():
    m = MoebiusMatrix(1, 0, 1, -0.5)  # z / (z - 0.5)
    assert is_infinity(m(0.5 + 0j))
    assert abs(m(INFINITY) - 1.0) < RESIDUAL
    ident = MoebiusMatrix.identity()
    assert is_infinity(ident(INFINITY))


def test_three_point_fit_trivial():
    m = MoebiusMatrix.from_three_points(0j, 1 + 0j, INFINITY, 0j, 1 + 0j, INFINITY)
    assert action_equal(IsometryTransform(m), IsometryTransform.identity())
    m = MoebiusMatrix.from_three_points(-1 + 0j, 1j, 1 + 0j, -1 + 0j, 1j, 1 + 0j)
    assert action_equal(IsometryTransform(m), IsometryTransform.identity())


def test_three_point_fit_semicircle_to_segment():
    # lower unit semicircle onto the real segment
    m = MoebiusMatrix.from_three_points(-1 + 0j, -1j, 1 + 0j, -1 + 0j, 0j, 1 + 0j)
    assert abs(m(-1 + 0j) - (-1)) < RESIDUAL
    assert abs(m(-1j) - 0) < RESIDUAL
    assert abs(m(1 + 0j) - 1) < RESIDUAL


def test_three_point_fit_random():
    rng = random.Random(7)
    for _ in range(50):
        zs = [complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(3)]
        ws = [complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(3)]
        if min(abs(zs[i] - zs[j]) for i in range(3) for j in range(i + 1, 3)) < 1e-3:
            continue
        if min(abs(ws[i] - ws[j]) for i in range(3) for j in range(i + 1, 3)) < 1e-3:
            continue
        m = MoebiusMatrix.from_three_points(*zs, *ws)
        for z, w in zip(zs, ws):
            assert abs(m(z) - w) < 1e-10


def test_three_point_fit_degenerate():
    with pytest.raises(DegenerateInputError):
        MoebiusMatrix.from_three_points(0j, 0j, 1 + 0j, 0j, 1j, 1 + 0j)


def test_compose_identity_neutral():
    rng = random.Random(11)
    for _ in range(10):
        t = random_transform(rng)
        assert action_equal(IsometryTransform.identity().compose(t), t)
        assert action_equal(t.compose(IsometryTransform.identity()), t)


def test_conjugation_involution():
    k = IsometryTransform.conjugation()
    assert action_equal(k.compose(k), IsometryTransform.identity())


def test_compose_pointwise():
    rng = random.Random(13)
    for _ in range(40):
        t1, t2 = random_transform(rng), random_transform(rng)
        comp = t1.compose(t2)
        for _ in range(10):
            z = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            assert chordal(comp(z), t1(t2(z))) < RESIDUAL


def test_compose_associative():
    rng = random.Random(17)
    for _ in range(20):
        a, b, c = (random_transform(rng) for _ in range(3))
        assert action_equal(a.compose(b).compose(c), a.compose(b.compose(c)))


def test_inverse():
    rng = random.Random(19)
    ident = IsometryTransform.identity()
    for _ in range(30):
        t = random_transform(rng)
        assert action_equal(t.compose(t.inverse()), ident)
        assert action_equal(t.inverse().compose(t), ident)


def test_inverse_translation_form():
    # disk translation z |-> (z - z0)/(1 - conj(z0) z) with z0 = 0.3
    t = IsometryTransform(MoebiusMatrix(1, -0.3, -0.3, 1))
    ti = IsometryTransform(MoebiusMatrix(1, 0.3, 0.3, 1))
    assert action_equal(t.inverse(), ti)


def test_reflection_self_inverse():
    k = IsometryTransform.conjugation()
    assert action_equal(k.inverse(), k)


def test_normalization_preserves_action():
    m = MoebiusMatrix(3 + 1j, 2, 1, 4 - 2j)
    scaled = MoebiusMatrix((3 + 1j) * 5j, 2 * 5j, 1 * 5j, (4 - 2j) * 5j)
    assert action_equal(IsometryTransform(m), IsometryTransform(scaled))
    det = m.a * m.d - m.b * m.c
    assert abs(abs(det) - 1.0) < RESIDUAL


def test_reversing_composition_rule():
    rng = random.Random(23)
    for _ in range(20):
        t1, t2 = random_transform(rng), random_transform(rng)
        comp = t1.compose(t2)
        assert comp.reversing == (t1.reversing ^ t2.reversing)


def test_push_tangent_matches_finite_difference():
    rng = random.Random(29)
    h = 1e-7
    for _ in range(20):
        t = random_transform(rng)
        z = complex(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5))
        tau = cmath.exp(1j * rng.uniform(0, 2 * math.pi))
        pushed = t.push_tangent(z, tau)
        fd = (t(z + h * tau) - t(z)) / h
        assert abs(pushed - fd) < 1e-5 * max(1.0, abs(pushed))


def test_chordal_infinity():
    assert chordal(INFINITY, INFINITY) == 0.0
    assert abs(chordal(0j, INFINITY) - 2.0) < RESIDUAL
