"""Exact arithmetic on the Farey graph of the once-punctured torus.

Essential properly embedded arcs on the once-punctured torus are classified,
up to isotopy, by a slope: a reduced fraction p/q, or infinity written 1/0.
Two distinct slopes admit disjoint arc representatives exactly when
|p*q' - q*p'| = 1, so the slopes form the vertex set of the Farey graph and
triples of pairwise adjacent slopes span the ideal triangles of the Farey
tessellation of the hyperbolic plane.

Everything here is integer arithmetic.  Points of the circle at infinity are
either slopes or quadratic irrationals (a + b*sqrt(d))/c, and all comparisons
are exact sign computations, never floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Union

from sympy import factorint

__all__ = [
    "Slope",
    "INFINITY",
    "QuadraticIrrational",
    "BoundaryPoint",
    "FareyEdge",
    "FareyTriangle",
    "intersection_number",
    "adjacent",
    "mediant_neighbors",
    "compare_boundary",
    "circular_order",
    "interleaved",
    "enumerate_slopes",
]


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


@total_ordering
@dataclass(frozen=True)
class Slope:
    """A reduced fraction p/q with q >= 0; infinity is the pair (1, 0).

    Construction normalizes, so equality and hashing are structural.
    """

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if p == 0 and q == 0:
            raise ValueError("0/0 is not a slope")
        g = math.gcd(p, q)
        p, q = p // g, q // g
        if q < 0:
            p, q = -p, -q
        if q == 0:
            p = 1
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def is_infinity(self) -> bool:
        return self.q == 0

    @property
    def value(self) -> Fraction | None:
        """Exact rational value, or None for infinity."""
        if self.q == 0:
            return None
        return Fraction(self.p, self.q)

    @classmethod
    def parse(cls, text: str) -> "Slope":
        """Parse 'p/q', a bare integer, or 'inf'."""
        text = text.strip()
        if text in ("inf", "infinity", "1/0"):
            return INFINITY
        if "/" in text:
            num, _, den = text.partition("/")
            return cls(int(num), int(den))
        return cls(int(text), 1)

    def __str__(self) -> str:
        if self.q == 0:
            return "inf"
        return f"{self.p}/{self.q}"

    def __lt__(self, other: "Slope") -> bool:
        # Finite slopes by value, infinity greatest.
        if not isinstance(other, Slope):
            return NotImplemented
        if self.q == 0:
            return False
        if other.q == 0:
            return True
        return self.p * other.q < other.p * self.q


INFINITY = Slope(1, 0)


def intersection_number(alpha: Slope, beta: Slope) -> int:
    """Geometric intersection number |p*q' - q*p'| of two slopes."""
    return abs(alpha.p * beta.q - alpha.q * beta.p)


def adjacent(alpha: Slope, beta: Slope) -> bool:
    """True when the slopes span an edge of the Farey graph."""
    return intersection_number(alpha, beta) == 1


@dataclass(frozen=True, init=False)
class FareyEdge:
    """Unordered pair of Farey-adjacent slopes, stored in sorted order."""

    low: Slope
    high: Slope

    def __init__(self, u: Slope, w: Slope):
        if intersection_number(u, w) != 1:
            raise ValueError(f"{u} and {w} are not Farey-adjacent")
        if w < u:
            u, w = w, u
        object.__setattr__(self, "low", u)
        object.__setattr__(self, "high", w)

    @property
    def endpoints(self) -> tuple[Slope, Slope]:
        return (self.low, self.high)

    def __contains__(self, s: Slope) -> bool:
        return s == self.low or s == self.high

    def other_endpoint(self, s: Slope) -> Slope:
        if s == self.low:
            return self.high
        if s == self.high:
            return self.low
        raise ValueError(f"{s} is not an endpoint of {self}")

    def __str__(self) -> str:
        return f"{{{self.low}, {self.high}}}"


@dataclass(frozen=True, init=False)
class FareyTriangle:
    """Three pairwise-adjacent slopes: an ideal triangle of the tessellation."""

    vertices: tuple[Slope, Slope, Slope]

    def __init__(self, u: Slope, v: Slope, w: Slope):
        verts = tuple(sorted((u, v, w)))
        for i in range(3):
            if intersection_number(verts[i], verts[(i + 1) % 3]) != 1:
                raise ValueError(f"{u}, {v}, {w} do not span a Farey triangle")
        object.__setattr__(self, "vertices", verts)

    def edges(self) -> tuple[FareyEdge, FareyEdge, FareyEdge]:
        u, v, w = self.vertices
        return (FareyEdge(u, v), FareyEdge(v, w), FareyEdge(u, w))

    def __contains__(self, s: Slope) -> bool:
        return s in self.vertices

    def __str__(self) -> str:
        return "{%s, %s, %s}" % self.vertices


def mediant_neighbors(edge: FareyEdge) -> tuple[Slope, Slope]:
    """The apexes of the two ideal triangles containing the edge.

    With endpoint vectors signed so their determinant is +1, the apexes are
    the mediant (p+p')/(q+q') and the co-mediant (p-p')/(q-q').
    """
    u, w = edge.endpoints
    p, q, r, s = u.p, u.q, w.p, w.q
    if p * s - q * r < 0:
        p, q, r, s = r, s, p, q
    return (Slope(p + r, q + s), Slope(p - r, q - s))


def _squarefree_split(n: int) -> tuple[int, int]:
    """Write n = s * f**2 with s squarefree; returns (s, f)."""
    if n <= 0:
        raise ValueError("positive integer required")
    s, f = 1, 1
    for prime, exp in factorint(n).items():
        if exp % 2:
            s *= prime
        f *= prime ** (exp // 2)
    return s, f


@dataclass(frozen=True)
class QuadraticIrrational:
    """Exact value (a + b*sqrt(d))/c with b != 0, c > 0 and d >= 2 squarefree.

    Construction normalizes: square factors of d are absorbed into b, the
    denominator sign into a and b, and the content gcd(a, b, c) is divided
    out.  Values that reduce to rationals are rejected.
    """

    a: int
    b: int
    d: int
    c: int

    def __post_init__(self):
        a, b, d, c = self.a, self.b, self.d, self.c
        if c == 0:
            raise ValueError("zero denominator")
        if b == 0 or d < 2:
            raise ValueError("value is rational")
        root, f = _squarefree_split(d)
        b, d = b * f, root
        if d == 1:
            raise ValueError("value is rational")
        if c < 0:
            a, b, c = -a, -b, -c
        g = math.gcd(math.gcd(a, b), c)
        object.__setattr__(self, "a", a // g)
        object.__setattr__(self, "b", b // g)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "c", c // g)

    def approx(self) -> float:
        """Floating-point approximation; for display only."""
        return (self.a + self.b * math.sqrt(self.d)) / self.c

    def __str__(self) -> str:
        if self.b == 1:
            root = f"√{self.d}"
        elif self.b == -1:
            root = f"-√{self.d}"
        else:
            root = f"{self.b}√{self.d}"
        if self.a == 0:
            num = root
        elif root.startswith("-"):
            num = f"{self.a}{root}"
        else:
            num = f"{self.a}+{root}"
        if self.c == 1:
            return num
        return f"({num})/{self.c}"


BoundaryPoint = Union[Slope, QuadraticIrrational]


def _root_combo_sign(a: int, b: int, d: int) -> int:
    """Exact sign of a + b*sqrt(d) for squarefree d >= 2."""
    if b == 0:
        return _sign(a)
    if a == 0:
        return _sign(b)
    if (a > 0) == (b > 0):
        return _sign(a)
    lhs, rhs = a * a, b * b * d
    if lhs == rhs:
        raise ArithmeticError("discriminant is not squarefree")
    if a > 0:
        return 1 if lhs > rhs else -1
    return -1 if lhs > rhs else 1


def compare_boundary(x: BoundaryPoint, y: BoundaryPoint) -> int:
    """Exact three-way comparison (-1, 0, +1) on R plus infinity.

    Infinity is the maximum element of this linear order.  Quadratic
    irrationals are comparable with every slope, but two irrationals must
    share one discriminant.
    """
    x_inf = isinstance(x, Slope) and x.q == 0
    y_inf = isinstance(y, Slope) and y.q == 0
    if x_inf or y_inf:
        return (not y_inf) - (not x_inf)
    if isinstance(x, Slope) and isinstance(y, Slope):
        return _sign(x.p * y.q - y.p * x.q)
    if isinstance(x, Slope):
        return -compare_boundary(y, x)
    if isinstance(y, Slope):
        # (a + b*sqrt(d))/c vs p/q: sign of (a*q - p*c) + (b*q)*sqrt(d)
        return _root_combo_sign(x.a * y.q - y.p * x.c, x.b * y.q, x.d)
    if x.d != y.d:
        raise ValueError(
            f"cannot compare irrationals with discriminants {x.d} and {y.d}"
        )
    return _root_combo_sign(x.a * y.c - y.a * x.c, x.b * y.c - y.b * x.c, x.d)


def circular_order(x: BoundaryPoint, y: BoundaryPoint, z: BoundaryPoint) -> bool:
    """True when going around the circle in the direction of increasing
    reals (wrapping through infinity) from x meets y before z."""
    xy = compare_boundary(x, y)
    yz = compare_boundary(y, z)
    zx = compare_boundary(z, x)
    if xy == 0 or yz == 0 or zx == 0:
        raise ValueError("circular order requires three distinct points")
    return (xy < 0 and yz < 0) or (yz < 0 and zx < 0) or (zx < 0 and xy < 0)


def interleaved(
    pair1: tuple[BoundaryPoint, BoundaryPoint],
    pair2: tuple[BoundaryPoint, BoundaryPoint],
) -> bool:
    """True when the two pairs alternate around the circle at infinity.

    Interleaved pairs separate each other, so they can never both span
    edges of the Farey graph.
    """
    a, c = pair1
    b, d = pair2
    for u, v in ((a, c), (a, b), (a, d), (b, c), (c, d), (b, d)):
        if compare_boundary(u, v) == 0:
            raise ValueError("interleaving requires four distinct points")
    return circular_order(a, b, c) != circular_order(a, d, c)


def enumerate_slopes(bound: int) -> list[Slope]:
    """All reduced p/q with |p| <= bound and 0 <= q <= bound, sorted.

    The q = 0 row contributes only infinity.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    out = [INFINITY]
    for q in range(1, bound + 1):
        for p in range(-bound, bound + 1):
            if math.gcd(p, q) == 1:
                out.append(Slope(p, q))
    return sorted(out)
