"""Orbifold notation: parsing, normalization, classification, enumeration.

A mirror-boundary orbifold is written *k1...kN: a polygon whose i-th corner
has interior angle pi/k_i and whose edges are all mirrors.  The notation is
read around the boundary, so cyclic rotations and the full reversal name the
same orbifold; the canonical representative is the lexicographic minimum
over both.  Corners with k_i = 1 have angle pi and are not corners at all;
they are dropped (the monogon *1 keeps its single entry and prints as *).

The Euler characteristic

    chi = sum_i 1/(2 k_i) - N/2 + 1

decides the universal cover: positive spherical, zero Euclidean, negative
hyperbolic.  Two families admit no geometric realization at all (the bad
orbifolds): *k with k > 1 and *k1k2 with k1 != k2.
"""

import math
from fractions import Fraction

from .errors import NotRealizableError, ParseError

MAX_ORDER = 10**6  # corner angle pi/k underflows double precision beyond this

SPHERICAL = "spherical"
EUCLIDEAN = "euclidean"
HYPERBOLIC = "hyperbolic"


def _is_integer_order(k):
    return isinstance(k, int) or (isinstance(k, float) and k.is_integer())


class OrbifoldNotation(object):
    """An ordered list of corner orders k_i >= 1 (ints, or reals for
    non-orbifold scenes)."""

    __slots__ = ("orders",)

    def __init__(self, orders):
        orders = tuple(orders)
        if not orders:
            raise ParseError("empty order list", 0)
        for k in orders:
            if not (k >= 1):
                raise ParseError("corner order %r is below 1" % (k,), 0)
            if k > MAX_ORDER:
                raise ParseError("corner order %r exceeds %d" % (k, MAX_ORDER), 0)
        self.orders = orders

    @property
    def walls(self):
        return len(self.orders)

    def __eq__(self, other):
        return isinstance(other, OrbifoldNotation) and self.orders == other.orders

    def __hash__(self):
        return hash(self.orders)

    def __repr__(self):
        return "OrbifoldNotation(%r)" % (list(self.orders),)

    def __str__(self):
        return format_notation(self)


def parse(text):
    """Parse notation text: '*' then digit tokens 1-9 or parenthesized
    numbers ('(10)', '(1.5)')."""
    if not text:
        raise ParseError("empty notation", 0)
    if text[0] != "*":
        raise ParseError("notation must start with '*'", 0)
    orders = []
    i = 1
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isdigit():
            if ch == "0":
                raise ParseError("corner order must be positive", i)
            orders.append(int(ch))
            i += 1
        elif ch == "(":
            j = text.find(")", i + 1)
            if j < 0:
                raise ParseError("unterminated '('", i)
            body = text[i + 1 : j]
            if not body:
                raise ParseError("empty parentheses", i)
            try:
                value = int(body)
            except ValueError:
                try:
                    value = float(body)
                except ValueError:
                    raise ParseError("unreadable order %r" % (body,), i + 1)
            if not math.isfinite(value) or value <= 0:
                raise ParseError("corner order must be positive", i + 1)
            if value < 1:
                raise ParseError("corner order %r is below 1" % (value,), i + 1)
            orders.append(value)
            i = j + 1
        else:
            raise ParseError("unexpected character %r" % (ch,), i)
    if not orders:
        # bare '*' is the monogon *1
        orders = [1]
    return OrbifoldNotation(orders)


def format_notation(n):
    """Inverse of parse on canonical values; bit-exact round-trip."""
    if n.orders == (1,):
        return "*"
    out = ["*"]
    for k in n.orders:
        if _is_integer_order(k):
            ki = int(k)
            out.append(str(ki) if 1 <= ki <= 9 else "(%d)" % ki)
        else:
            out.append("(%s)" % repr(k))
    return "".join(out)


def euler_characteristic(n):
    """chi = sum 1/(2 k_i) - N/2 + 1; exact Fraction for integer orders."""
    if all(_is_integer_order(k) for k in n.orders):
        total = sum(Fraction(1, 2 * int(k)) for k in n.orders)
        return total - Fraction(len(n.orders), 2) + 1
    return sum(1.0 / (2.0 * k) for k in n.orders) - len(n.orders) / 2.0 + 1.0


def _canonical_orders(orders):
    """Lexicographic minimum over all rotations of both orientations."""
    best = None
    for seq in (orders, tuple(reversed(orders))):
        m = len(seq)
        for r in range(m):
            cand = seq[r:] + seq[:r]
            if best is None or cand < best:
                best = cand
    return best


def normalize(n):
    """Drop angle-pi corners (order 1) and return the canonical necklace."""
    orders = tuple(k for k in n.orders if k != 1)
    if not orders:
        orders = (1,)
    return OrbifoldNotation(_canonical_orders(orders))


class Classification(object):
    __slots__ = ("euler_char", "kind", "is_orbifold", "is_bad", "is_realizable")

    def __init__(self, euler_char, kind, is_orbifold, is_bad):
        self.euler_char = euler_char
        self.kind = kind
        self.is_orbifold = is_orbifold
        self.is_bad = is_bad
        self.is_realizable = not is_bad

    def __repr__(self):
        return (
            "Classification(euler_char=%r, kind=%r, is_orbifold=%r, is_bad=%r)"
            % (self.euler_char, self.kind, self.is_orbifold, self.is_bad)
        )


def classify(n):
    chi = euler_characteristic(n)
    if chi > 0:
        kind = SPHERICAL
    elif chi < 0:
        kind = HYPERBOLIC
    else:
        kind = EUCLIDEAN
    norm = normalize(n)
    ks = norm.orders
    if len(ks) == 1:
        is_bad = ks[0] != 1
    elif len(ks) == 2:
        is_bad = ks[0] != ks[1]
    else:
        is_bad = False
    is_orbifold = all(_is_integer_order(k) for k in n.orders)
    return Classification(chi, kind, is_orbifold, is_bad)


def require_realizable(n):
    cls = classify(n)
    if cls.is_bad:
        norm = normalize(n)
        raise NotRealizableError(
            "bad orbifold: not realizable (%s)" % format_notation(norm)
        )
    return cls


def enumerate_orbifolds(walls, max_order):
    """All canonical good orbifolds with exactly `walls` corners and integer
    orders <= max_order, classified, in lexicographic order."""
    if walls < 1 or max_order < 2:
        return []
    if walls == 1:
        n = OrbifoldNotation([1])
        return [(n, classify(n))]
    if walls == 2:
        out = []
        for k in range(2, max_order + 1):
            n = OrbifoldNotation([k, k])
            out.append((n, classify(n)))
        return out
    seen = set()
    out = []
    # scan all order tuples, keeping canonical representatives only
    for tup in _order_tuples(walls, max_order):
        if _canonical_orders(tup) != tup or tup in seen:
            continue
        seen.add(tup)
        n = OrbifoldNotation(tup)
        out.append((n, classify(n)))
    out.sort(key=lambda pair: pair[0].orders)
    return out


def _order_tuples(walls, max_order):
    tup = [2] * walls
    while True:
        yield tuple(tup)
        i = walls - 1
        while i >= 0 and tup[i] == max_order:
            tup[i] = 2
            i -= 1
        if i < 0:
            return
        tup[i] += 1
