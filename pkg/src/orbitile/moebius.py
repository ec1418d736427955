"""Moebius and anti-Moebius transformations as normalized 2x2 complex matrices.

The group of rigid motions in all three planar models (stereographic plane,
Euclidean plane, Poincare disk) is generated by maps

    z |-> (a z + b) / (c z + d)          orientation preserving
    z |-> (a conj(z) + b) / (c conj(z) + d)   orientation reversing

The reversing case conjugates FIRST, then applies the matrix, which keeps
composition closed form: (M1 * K) (M2 * K) = (M1 conj(M2)) with the flags
xor-ed (K is entrywise complex conjugation of the argument).

Matrices are stored normalized to unit determinant; equality of transforms
is decided by action on probe points, never by entry comparison (entries
are only defined up to a unit-modulus scalar).

Infinity is a first-class point: the stereographic image of the south pole.
"""

import cmath
import math

EPSILON = 1e-12
ACTION_EPSILON = 1e-9

INFINITY = complex("inf")


def is_infinity(z):
    return cmath.isinf(z)


def chordal(z, w):
    """Distance between two extended-plane points on the unit sphere (chord length).

    Bounded metric, finite at infinity; used for probe comparisons.
    """
    zi, wi = is_infinity(z), is_infinity(w)
    if zi and wi:
        return 0.0
    if zi:
        return 2.0 / math.sqrt(1.0 + abs(w) ** 2)
    if wi:
        return 2.0 / math.sqrt(1.0 + abs(z) ** 2)
    return 2.0 * abs(z - w) / math.sqrt((1.0 + abs(z) ** 2) * (1.0 + abs(w) ** 2))


class MoebiusMatrix(object):
    """2x2 complex matrix acting on the extended plane, det normalized to 1."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        a, b, c, d = complex(a), complex(b), complex(c), complex(d)
        det = a * d - b * c
        if abs(det) < EPSILON:
            from .errors import DegenerateInputError

            raise DegenerateInputError("matrix determinant vanishes")
        s = cmath.sqrt(det)
        self.a = a / s
        self.b = b / s
        self.c = c / s
        self.d = d / s

    def __repr__(self):
        return "MoebiusMatrix(%r, %r, %r, %r)" % (self.a, self.b, self.c, self.d)

    def __call__(self, z):
        if is_infinity(z):
            if abs(self.c) < EPSILON:
                return INFINITY
            return self.a / self.c
        den = self.c * z + self.d
        if abs(den) < EPSILON * max(1.0, abs(z)):
            return INFINITY
        return (self.a * z + self.b) / den

    def mul(self, other):
        return MoebiusMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def conj_entries(self):
        return MoebiusMatrix(
            self.a.conjugate(), self.b.conjugate(), self.c.conjugate(), self.d.conjugate()
        )

    def inverse(self):
        return MoebiusMatrix(self.d, -self.b, -self.c, self.a)

    def derivative(self, z):
        """f'(z) = det / (cz+d)^2 = 1/(cz+d)^2 after normalization."""
        den = self.c * z + self.d
        return 1.0 / (den * den)

    @staticmethod
    def identity():
        return MoebiusMatrix(1, 0, 0, 1)

    @staticmethod
    def to_zero_one_inf(z1, z2, z3):
        """Matrix sending (z1, z2, z3) to (0, 1, infinity)."""
        if is_infinity(z1):
            return MoebiusMatrix(0, z2 - z3, 1, -z3)
        if is_infinity(z2):
            return MoebiusMatrix(1, -z1, 1, -z3)
        if is_infinity(z3):
            return MoebiusMatrix(1, -z1, 0, z2 - z1)
        return MoebiusMatrix(z2 - z3, -z1 * (z2 - z3), z2 - z1, -z3 * (z2 - z1))

    @staticmethod
    def from_three_points(z1, z2, z3, w1, w2, w3):
        """The unique map with z_i |-> w_i, via cross ratio composition."""
        from .errors import DegenerateInputError

        for p, q in ((z1, z2), (z2, z3), (z1, z3), (w1, w2), (w2, w3), (w1, w3)):
            if chordal(p, q) < EPSILON:
                raise DegenerateInputError("three-point fit needs distinct points")
        fwd = MoebiusMatrix.to_zero_one_inf(z1, z2, z3)
        back = MoebiusMatrix.to_zero_one_inf(w1, w2, w3)
        return back.inverse().mul(fwd)


class IsometryTransform(object):
    """A Moebius matrix plus an orientation-reversal flag.

    Action: T(z) = M(z) when not reversing, T(z) = M(conj(z)) when reversing.
    Immutable; all operations return fresh values.
    """

    __slots__ = ("matrix", "reversing")

    def __init__(self, matrix, reversing=False):
        self.matrix = matrix
        self.reversing = bool(reversing)

    def __repr__(self):
        return "IsometryTransform(%r, reversing=%r)" % (self.matrix, self.reversing)

    def __call__(self, z):
        if self.reversing and not is_infinity(z):
            z = z.conjugate()
        return self.matrix(z)

    def compose(self, other):
        """self after other: (self.compose(other))(z) = self(other(z))."""
        m2 = other.matrix.conj_entries() if self.reversing else other.matrix
        return IsometryTransform(self.matrix.mul(m2), self.reversing ^ other.reversing)

    def inverse(self):
        inv = self.matrix.inverse()
        if self.reversing:
            # T(z) = M(conj z)  =>  T^-1(w) = conj(M^-1(w)) = conj-entrywise(M^-1)(conj w)
            return IsometryTransform(inv.conj_entries(), True)
        return IsometryTransform(inv, False)

    def push_tangent(self, z, tau):
        """Image of a tangent vector tau at z (conjugate-linear when reversing)."""
        if self.reversing:
            return self.matrix.derivative(z.conjugate()) * tau.conjugate()
        return self.matrix.derivative(z) * tau

    @staticmethod
    def identity():
        return IsometryTransform(MoebiusMatrix.identity(), False)

    @staticmethod
    def conjugation():
        return IsometryTransform(MoebiusMatrix.identity(), True)


_PROBES = (0j, 1 + 0j, 1j, -1 + 0j, 0.5 + 0.5j, -0.3 + 0.7j)


def action_equal(t1, t2, tol=ACTION_EPSILON):
    """Transforms compared by action on a fixed probe set (chordal metric).

    Three generic probes pin a Moebius map; the extras guard pole hits.
    """
    return all(chordal(t1(z), t2(z)) <= tol for z in _PROBES)
