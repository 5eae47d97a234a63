"""Arc classes with disjoint image under a mapping class.

A slope v is a solution for the mapping class h when v and h(v) have
intersection number at most one, i.e. the corresponding arcs can be made
disjoint (or are equal, for an invariant arc).  Solutions are grouped into
h-equivalence classes: v and w are h-equivalent when some power of h sends
v to w.

The classification drives the enumeration.  Periodic classes have their
solutions on the invariant cell, reducible ones at the fixed slope and
(for translation amount +-1) its Farey neighbors, and pseudo-Anosov ones
among the endpoints of one fundamental period of axis edges.  Each
non-trivial mapping class admits at most two classes, and at most one when
periodic; ``solve`` computes the classes and records whether that bound
held, never truncating what it found.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import FareyEdge, Slope, intersection_number
from .mapclass import (
    Axis,
    Classification,
    FixedEdge,
    FixedTriangle,
    MappingClass,
    Periodic,
    PseudoAnosov,
    Reducible,
    TrivialAction,
)

__all__ = [
    "Provenance",
    "ArcClass",
    "SolutionSet",
    "ClassBoundReport",
    "is_solution",
    "solve",
    "h_equivalent",
    "check_class_bound",
]


class Provenance(enum.Enum):
    """How a class was found; mirrors the case analysis."""

    ELLIPTIC_TRIANGLE = "elliptic_triangle"
    ELLIPTIC_EDGE = "elliptic_edge"
    PARABOLIC_FIXED = "parabolic_fixed"
    PARABOLIC_NEIGHBORS = "parabolic_neighbors"
    LOXODROMIC_VISIBLE = "loxodromic_visible"


@dataclass(frozen=True)
class ArcClass:
    """One h-equivalence class of solutions.

    ``members`` is a finite sample of the orbit, each a power of the
    mapping class applied to the representative.  ``side`` is the sign of
    the axis side form on the members (pseudo-Anosov only).
    """

    representative: Slope
    members: tuple[Slope, ...]
    side: int | None
    provenance: Provenance


@dataclass(frozen=True)
class SolutionSet:
    mapping_class: MappingClass
    classification: Classification
    classes: tuple[ArcClass, ...]
    bound_ok: bool


def is_solution(m: MappingClass, alpha: Slope) -> bool:
    """True when alpha and its image can be isotoped to be disjoint."""
    return intersection_number(alpha, m.act(alpha)) <= 1


def solve(m: MappingClass) -> SolutionSet:
    """All h-equivalence classes of slopes with disjoint image."""
    cls = m.classify()
    if isinstance(cls, TrivialAction):
        raise ValueError("trivial action: every slope is invariant")
    if isinstance(cls, Periodic):
        classes = _solve_periodic(m)
    elif isinstance(cls, Reducible):
        classes = _solve_reducible(m, cls)
    else:
        classes = _solve_pseudo_anosov(m, cls)
    classes = tuple(sorted(classes, key=lambda c: c.representative))
    ok = len(classes) <= (1 if isinstance(cls, Periodic) else 2)
    return SolutionSet(m, cls, classes, ok)


def _orbit_sample(m: MappingClass, start: Slope, length: int) -> tuple[Slope, ...]:
    out = [start]
    for _ in range(length - 1):
        out.append(m.act(out[-1]))
    return tuple(out)


def _solve_periodic(m: MappingClass) -> list[ArcClass]:
    cell = m.elliptic_fixed_cell()
    if isinstance(cell, FixedTriangle):
        verts = cell.triangle.vertices
        provenance = Provenance.ELLIPTIC_TRIANGLE
    else:
        verts = cell.edge.endpoints
        provenance = Provenance.ELLIPTIC_EDGE
    members = _orbit_sample(m, verts[0], len(verts))
    assert set(members) == set(verts)
    assert all(is_solution(m, v) for v in verts)
    return [ArcClass(verts[0], members, None, provenance)]


def _solve_reducible(m: MappingClass, cls: Reducible) -> list[ArcClass]:
    fixed = cls.fixed_slope
    classes = [ArcClass(fixed, (fixed,), None, Provenance.PARABOLIC_FIXED)]
    if abs(cls.n) == 1:
        # Farey neighbors of the fixed slope: one further orbit
        rep = cls.conjugator.act(Slope(0, 1))
        classes.append(
            ArcClass(rep, _orbit_sample(m, rep, 4), None, Provenance.PARABOLIC_NEIGHBORS)
        )
    return classes


def _axis_candidates(ax: Axis) -> list[Slope]:
    """Endpoints of the fundamental-period edges, in walk order."""
    seen: list[Slope] = []
    for e in ax.edges:
        for v in e.endpoints:
            if v not in seen:
                seen.append(v)
    return seen


def _solve_pseudo_anosov(m: MappingClass, cls: PseudoAnosov) -> list[ArcClass]:
    ax = m.axis()
    candidates = _axis_candidates(ax)
    sols = [v for v in candidates if is_solution(m, v)]
    sol_set = set(sols)

    parent = {v: v for v in sols}

    def find(v: Slope) -> Slope:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(u: Slope, w: Slope) -> None:
        parent[find(u)] = find(w)

    for v in sols:
        x = v
        for _ in range(ax.period + 1):
            x = m.act(x)
            if x in sol_set:
                union(v, x)

    groups: dict[Slope, list[Slope]] = {}
    for v in sols:  # candidate order
        groups.setdefault(find(v), []).append(v)

    classes = []
    for members in groups.values():
        rep = members[0]
        side = ax.side(rep)
        assert all(ax.side(v) == side for v in members)
        classes.append(
            ArcClass(rep, tuple(members), side, Provenance.LOXODROMIC_VISIBLE)
        )
    return classes


def _translate_into(m: MappingClass, v: Slope, window: set[Slope]) -> Slope:
    """Shift v by powers of m until it lands in the candidate window."""
    if v in window:
        return v
    minv = m.inverse()
    fwd = bwd = v
    for _ in range(100_000):
        fwd = m.act(fwd)
        if fwd in window:
            return fwd
        bwd = minv.act(bwd)
        if bwd in window:
            return bwd
    raise RuntimeError(f"{v} never reaches the axis window")


def h_equivalent(m: MappingClass, alpha: Slope, beta: Slope) -> bool:
    """Decide whether some power of m maps alpha to beta.

    Both slopes must be solutions; the case structure makes the decision
    exact and bounded.
    """
    cls = m.classify()
    if isinstance(cls, TrivialAction):
        return alpha == beta
    if not is_solution(m, alpha) or not is_solution(m, beta):
        raise ValueError("h-equivalence is only decided for solutions")
    if isinstance(cls, Periodic):
        x = alpha
        for _ in range(3):
            if x == beta:
                return True
            x = m.act(x)
        return False
    if isinstance(cls, Reducible):
        p_inv = cls.conjugator.inverse()
        x, y = p_inv.act(alpha), p_inv.act(beta)
        if x.q == 0 or y.q == 0:
            return x == y
        assert x.q == 1 and y.q == 1
        return (y.p - x.p) % cls.n == 0
    ax = m.axis()
    if ax.side(alpha) != ax.side(beta):
        return False
    window = set(_axis_candidates(ax))
    x = _translate_into(m, alpha, window)
    y = _translate_into(m, beta, window)
    fwd = bwd = x
    minv = m.inverse()
    for _ in range(ax.period + 2):
        if fwd == y or bwd == y:
            return True
        fwd = m.act(fwd)
        bwd = minv.act(bwd)
    return fwd == y or bwd == y


@dataclass(frozen=True)
class ClassBoundReport:
    """Outcome of checking the at-most-two-classes bound on one matrix."""

    mapping_class: MappingClass
    excluded: bool
    classification: Classification
    class_count: int
    representatives: tuple[Slope, ...]
    axis_period: int | None
    bound_ok: bool


def check_class_bound(m: MappingClass) -> ClassBoundReport:
    """Run solve and report whether the class-count bound held.

    Trivial actions are excluded: every slope is an invariant singleton
    class, so no finite bound applies.  Violations are reported, not
    raised; they indicate a bug, never a valid outcome.
    """
    cls = m.classify()
    if isinstance(cls, TrivialAction):
        return ClassBoundReport(m, True, cls, 0, (), None, True)
    result = solve(m)
    period = None
    if isinstance(cls, PseudoAnosov):
        period = m.axis().period
    return ClassBoundReport(
        m,
        False,
        result.classification,
        len(result.classes),
        tuple(c.representative for c in result.classes),
        period,
        result.bound_ok,
    )
