"""SL(2,Z) mapping classes of the once-punctured torus.

A mapping class is an integer matrix [a b; c d] with determinant one.  It
acts on slopes as a Moebius map p/q -> (a*p + b*q)/(c*p + d*q) and extends
to an isometry of the hyperbolic plane.  The absolute trace of the
projective representative sorts the action into three kinds:

  |t| < 2  elliptic   -> periodic: fixes an ideal triangle or a Farey edge
  |t| = 2  parabolic  -> reducible: fixes exactly one slope
  |t| > 2  loxodromic -> pseudo-Anosov: two irrational fixed points and an
                         invariant line of Farey edges (the axis)

All side and direction tests are exact integer sign computations.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Union

from .core import (
    INFINITY,
    FareyEdge,
    FareyTriangle,
    QuadraticIrrational,
    Slope,
    interleaved,
    mediant_neighbors,
)

__all__ = [
    "MappingClass",
    "TrivialAction",
    "Periodic",
    "Reducible",
    "PseudoAnosov",
    "Classification",
    "FixedTriangle",
    "FixedEdge",
    "EllipticCell",
    "ParabolicNormalForm",
    "Axis",
    "extend_axis",
]

_MATRIX_RE = re.compile(
    r"^\s*(-?\d+)\s*,\s*(-?\d+)\s*;\s*(-?\d+)\s*,\s*(-?\d+)\s*$"
)


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b)."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_x, x = x, old_x - quot * x
        old_y, y = y, old_y - quot * y
    return old_r, old_x, old_y


@dataclass(frozen=True)
class TrivialAction:
    """Plus or minus the identity: every slope is fixed."""


@dataclass(frozen=True)
class Periodic:
    psl_order: int  # 2 or 3


@dataclass(frozen=True)
class Reducible:
    n: int
    fixed_slope: Slope
    conjugator: "MappingClass"


@dataclass(frozen=True)
class PseudoAnosov:
    repelling: QuadraticIrrational
    attracting: QuadraticIrrational


Classification = Union[TrivialAction, Periodic, Reducible, PseudoAnosov]


@dataclass(frozen=True)
class FixedTriangle:
    triangle: FareyTriangle


@dataclass(frozen=True)
class FixedEdge:
    edge: FareyEdge


EllipticCell = Union[FixedTriangle, FixedEdge]


class ParabolicNormalForm(NamedTuple):
    fixed_slope: Slope
    n: int
    conjugator: "MappingClass"


@dataclass(frozen=True)
class Axis:
    """One fundamental period of the invariant line of a loxodromic element.

    ``edges`` lists the Farey edges crossed by the axis, from some starting
    edge up to and including its image under the mapping class; ``period``
    is the number of steps between them.  ``side_form`` holds the integer
    coefficients (s2, s1, s0) of Q(p, q) = s2*p^2 + s1*p*q + s0*q^2, which
    vanishes exactly at the two fixed points, so its sign on a slope tells
    which side of the axis the slope lies on.
    """

    edges: tuple[FareyEdge, ...]
    period: int
    repelling: QuadraticIrrational
    attracting: QuadraticIrrational
    side_form: tuple[int, int, int]

    def form_value(self, s: Slope) -> int:
        s2, s1, s0 = self.side_form
        return s2 * s.p * s.p + s1 * s.p * s.q + s0 * s.q * s.q

    def side(self, s: Slope) -> int:
        v = _sign(self.form_value(s))
        if v == 0:
            raise ArithmeticError(f"{s} lies on the axis boundary")
        return v

    def same_side(self, x: Slope, y: Slope) -> bool:
        """True when the axis does not separate the two slopes."""
        return self.side(x) == self.side(y)

    def order_less(self, x: Slope, y: Slope) -> bool:
        """Strict order toward the attracting endpoint, on one side.

        x comes before y when {x, attracting} and {y, repelling} are
        interleaved around the circle at infinity.
        """
        if x == y:
            raise ValueError("order requires distinct slopes")
        if not self.same_side(x, y):
            raise ValueError(f"{x} and {y} lie on opposite sides of the axis")
        return interleaved((x, self.attracting), (y, self.repelling))


@dataclass(frozen=True)
class MappingClass:
    """An SL(2,Z) matrix [a b; c d] acting on slopes as a Moebius map."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        det = self.a * self.d - self.b * self.c
        if det != 1:
            raise ValueError(f"determinant is {det}, expected 1")

    @classmethod
    def identity(cls) -> "MappingClass":
        return cls(1, 0, 0, 1)

    @classmethod
    def parse(cls, text: str) -> "MappingClass":
        """Parse the row-major form 'a,b;c,d'."""
        m = _MATRIX_RE.match(text)
        if not m:
            raise ValueError(f"malformed matrix {text!r}, expected 'a,b;c,d'")
        return cls(*(int(g) for g in m.groups()))

    def __str__(self) -> str:
        return f"{self.a},{self.b};{self.c},{self.d}"

    @property
    def trace(self) -> int:
        return self.a + self.d

    def __neg__(self) -> "MappingClass":
        return MappingClass(-self.a, -self.b, -self.c, -self.d)

    def __matmul__(self, other: "MappingClass") -> "MappingClass":
        return MappingClass(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "MappingClass":
        return MappingClass(self.d, -self.b, -self.c, self.a)

    @property
    def psl_rep(self) -> "MappingClass":
        """The sign-normalized projective representative.

        Trace positive, or trace zero and c > 0, or c = 0 and b > 0.  The
        representative acts identically on every slope.
        """
        t = self.trace
        if t > 0 or (t == 0 and (self.c > 0 or (self.c == 0 and self.b > 0))):
            return self
        return -self

    def act(self, s: Slope) -> Slope:
        """Image of a slope under the Moebius action."""
        return Slope(self.a * s.p + self.b * s.q, self.c * s.p + self.d * s.q)

    def act_edge(self, e: FareyEdge) -> FareyEdge:
        return FareyEdge(self.act(e.low), self.act(e.high))

    def _is_projective_identity(self) -> bool:
        return self.b == 0 and self.c == 0

    def classify(self) -> Classification:
        if self._is_projective_identity():
            return TrivialAction()
        m = self.psl_rep
        t = m.trace
        if t < 2:
            return Periodic(psl_order=2 if t == 0 else 3)
        if t == 2:
            fixed, n, conj = self._parabolic_data()
            return Reducible(n=n, fixed_slope=fixed, conjugator=conj)
        repelling, attracting = self._loxodromic_fixed_points()
        return PseudoAnosov(repelling=repelling, attracting=attracting)

    # -- parabolic ---------------------------------------------------------

    def _parabolic_data(self) -> tuple[Slope, int, "MappingClass"]:
        m = self.psl_rep
        if m.c == 0:
            fixed = INFINITY
        else:
            # trace 2 forces the double fixed point (a - 1)/c
            fixed = Slope(m.a - 1, m.c)
        _, x, y = _ext_gcd(fixed.p, fixed.q)
        conj = MappingClass(fixed.p, -y, fixed.q, x)
        normal = conj.inverse() @ m @ conj
        assert normal.a == 1 and normal.c == 0 and normal.d == 1
        assert normal.b != 0
        return fixed, normal.b, conj

    def parabolic_normal_form(self) -> ParabolicNormalForm:
        """Fixed slope, translation amount n, and a conjugator P with
        P(inf) = fixed slope and P^-1 * m * P = [1 n; 0 1]."""
        if self._is_projective_identity() or abs(self.trace) != 2:
            raise ValueError(f"{self} is not reducible")
        fixed, n, conj = self._parabolic_data()
        return ParabolicNormalForm(fixed, n, conj)

    # -- elliptic ----------------------------------------------------------

    def elliptic_fixed_cell(self) -> EllipticCell:
        """Locate the invariant cell of a periodic mapping class.

        The rotation center z0 = ((a-d) + i*sqrt(4-t^2))/(2c) has rational
        real part and rational squared imaginary part, so each tessellation
        edge admits an exact side test.  Starting from the base triangle
        {0, 1, inf}, cross the unique edge separating the current triangle
        from z0 until z0 lies inside (order 3: fixed triangle) or exactly on
        an edge geodesic (order 2: fixed edge).
        """
        if self._is_projective_identity() or abs(self.trace) >= 2:
            raise ValueError(f"{self} is not periodic")
        m = self.psl_rep
        t = m.trace
        assert m.c != 0  # |t| < 2 with c = 0 would force |t| = 2
        xn, y2n, den = m.a - m.d, 4 - t * t, 2 * m.c
        tri = (Slope(0, 1), Slope(1, 1), INFINITY)
        for _ in range(100_000):
            crossing = None
            on_edge = None
            for i in range(3):
                u, w = tri[i], tri[(i + 1) % 3]
                opp = tri[(i + 2) % 3]
                s0 = _center_side(u, w, xn, y2n, den)
                if s0 == 0:
                    on_edge = FareyEdge(u, w)
                    break
                if s0 != _vertex_side(u, w, opp):
                    crossing = (u, w, opp)
                    break
            if on_edge is not None:
                cell = FixedEdge(on_edge)
                assert m.act(on_edge.low) == on_edge.high
                assert m.act(on_edge.high) == on_edge.low
                return cell
            if crossing is None:
                triangle = FareyTriangle(*tri)
                assert m.act(triangle.vertices[0]) in triangle
                assert m.act(triangle.vertices[1]) in triangle
                return FixedTriangle(triangle)
            u, w, opp = crossing
            n1, n2 = mediant_neighbors(FareyEdge(u, w))
            tri = (u, w, n2 if n1 == opp else n1)
        raise RuntimeError("fixed-cell walk failed to terminate")

    # -- loxodromic --------------------------------------------------------

    def _loxodromic_fixed_points(
        self,
    ) -> tuple[QuadraticIrrational, QuadraticIrrational]:
        m = self.psl_rep
        t = m.trace  # >= 3 after normalization
        disc = t * t - 4
        # c = 0 would force |trace| = 2, so the fixed-point quadratic is genuine
        assert m.c != 0
        # The root ((a-d) + sqrt(disc))/(2c) pairs with eigenvalue
        # (t + sqrt(disc))/2 > 1, hence is the attracting point.
        attracting = QuadraticIrrational(m.a - m.d, 1, disc, 2 * m.c)
        repelling = QuadraticIrrational(m.a - m.d, -1, disc, 2 * m.c)
        return repelling, attracting

    def fixed_boundary_points(
        self,
    ) -> tuple[QuadraticIrrational, QuadraticIrrational]:
        """(repelling, attracting) fixed points on the circle at infinity."""
        if self._is_projective_identity() or abs(self.trace) <= 2:
            raise ValueError(f"{self} is not pseudo-Anosov")
        return self._loxodromic_fixed_points()

    def axis(self) -> Axis:
        """One fundamental period of the invariant line of Farey edges.

        A Farey edge lies on the axis exactly when the side form Q takes
        opposite signs at its endpoints.  The first such edge is found among
        {k, inf} for integers k inside the root bound, falling back to
        mediant descent inside the unit interval around the form's vertex.
        The walk then repeatedly crosses into the triangle on the attracting
        side until it reaches the image of the starting edge.
        """
        if self._is_projective_identity() or abs(self.trace) <= 2:
            raise ValueError(f"{self} is not pseudo-Anosov")
        m = self.psl_rep
        a, b, c, d = m.a, m.b, m.c, m.d
        t = a + d
        repelling, attracting = self._loxodromic_fixed_points()
        form = (c, d - a, -b)

        def q_val(s: Slope) -> int:
            return c * s.p * s.p + (d - a) * s.p * s.q - b * s.q * s.q

        e0 = None
        sign_inf = _sign(q_val(INFINITY))
        bound = (abs(a - d) + t) // (2 * abs(c)) + 1
        for k in range(0, bound + 1):
            for kk in (k, -k) if k else (0,):
                if _sign(q_val(Slope(kk, 1))) != sign_inf:
                    e0 = FareyEdge(Slope(kk, 1), INFINITY)
                    break
            if e0 is not None:
                break
        if e0 is None:
            # both fixed points lie in one unit interval: mediant descent
            k = (a - d) // (2 * c)
            vertex = Fraction(a - d, 2 * c)
            lo, hi = Slope(k, 1), Slope(k + 1, 1)
            while True:
                mid = Slope(lo.p + hi.p, lo.q + hi.q)
                if _sign(q_val(mid)) != _sign(q_val(lo)):
                    e0 = FareyEdge(lo, mid)
                    break
                if vertex < mid.value:
                    hi = mid
                else:
                    lo = mid

        target = m.act_edge(e0)
        edges = [e0]
        cur = e0
        for _ in range(1_000_000):
            if cur == target:
                break
            u, w = cur.endpoints
            n1, n2 = mediant_neighbors(cur)
            apex = n1 if not interleaved((u, w), (n1, attracting)) else n2
            qa = _sign(q_val(apex))
            cur = FareyEdge(apex, w if qa == _sign(q_val(u)) else u)
            edges.append(cur)
        else:
            raise RuntimeError("axis walk failed to terminate")
        assert len(edges) >= 2
        return Axis(
            edges=tuple(edges),
            period=len(edges) - 1,
            repelling=repelling,
            attracting=attracting,
            side_form=form,
        )


def extend_axis(ax: Axis, steps: int) -> list[FareyEdge]:
    """Continue the axis walk ``steps`` edges beyond the fundamental period."""
    s2, s1, s0 = ax.side_form

    def q_val(s: Slope) -> int:
        return s2 * s.p * s.p + s1 * s.p * s.q + s0 * s.q * s.q

    edges = list(ax.edges)
    cur = edges[-1]
    for _ in range(steps):
        u, w = cur.endpoints
        n1, n2 = mediant_neighbors(cur)
        apex = n1 if not interleaved((u, w), (n1, ax.attracting)) else n2
        qa = _sign(q_val(apex))
        cur = FareyEdge(apex, w if qa == _sign(q_val(u)) else u)
        edges.append(cur)
    return edges


# -- exact side tests for the elliptic walk --------------------------------


def _vertex_side(u: Slope, w: Slope, x: Slope) -> int:
    """Side of the geodesic through u, w on which the boundary slope x lies.

    For a semicircle between finite endpoints the sign is that of
    (x - center)^2 - radius^2, so x between the endpoints gives -1 and
    infinity gives +1.  For a vertical geodesic (one endpoint infinite) the
    sign is that of x minus the finite endpoint.
    """
    if u.q == 0 or w.q == 0:
        r = u if w.q == 0 else w
        return _sign(x.p * r.q - r.p * x.q)  # x is never infinity here
    a1, b1 = u.p, u.q
    a2, b2 = w.p, w.q
    if x.q == 0:
        return 1
    lhs = 2 * b1 * b2 * x.p - x.q * (a1 * b2 + a2 * b1)
    rhs = x.q * (a2 * b1 - a1 * b2)
    return _sign(lhs * lhs - rhs * rhs)


def _center_side(u: Slope, w: Slope, xn: int, y2n: int, den: int) -> int:
    """Side test for the elliptic fixed point z0 with Re = xn/den and
    Im^2 = y2n/den^2, against the geodesic through u and w.

    Uses the same sign convention as _vertex_side; 0 means z0 lies on the
    geodesic.
    """
    if u.q == 0 or w.q == 0:
        r = u if w.q == 0 else w
        # sign of Re(z0) - r = (xn*r.q - r.p*den) / (den*r.q)
        return _sign((xn * r.q - r.p * den) * den * r.q)
    a1, b1 = u.p, u.q
    a2, b2 = w.p, w.q
    lhs = 2 * b1 * b2 * xn - den * (a1 * b2 + a2 * b1)
    mid = 2 * b1 * b2
    rhs = den * (a2 * b1 - a1 * b2)
    return _sign(lhs * lhs + mid * mid * y2n - rhs * rhs)
