"""Brute-force cross-check for the solver.

Scans every slope with numerator and denominator up to a bound, keeps the
solutions, and groups them by orbit connectivity inside the truncated
universe.  Orbits leave any bounded universe, so the grouping is compared
with the solver through the four-part criterion in ``agree`` rather than
by literal equality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Slope, enumerate_slopes
from .mapclass import MappingClass, TrivialAction
from .solver import SolutionSet, h_equivalent, is_solution

__all__ = ["OracleResult", "brute_force", "agree"]


@dataclass(frozen=True)
class OracleResult:
    mapping_class: MappingClass
    bound: int
    iteration_cap: int
    solutions: tuple[Slope, ...]
    groups: tuple[tuple[Slope, ...], ...]


def brute_force(m: MappingClass, bound: int = 50, iteration_cap: int = 16) -> OracleResult:
    """Exhaustive solution scan over the bounded slope universe.

    Two solutions are grouped when one is the image of the other under a
    power of m with exponent at most iteration_cap in absolute value.
    """
    if isinstance(m.classify(), TrivialAction):
        raise ValueError("trivial action: every slope is a solution")
    if bound < 2:
        raise ValueError("bound must be >= 2")
    if iteration_cap < 2:
        raise ValueError("iteration_cap must be >= 2")

    sols = [s for s in enumerate_slopes(bound) if is_solution(m, s)]
    sol_set = set(sols)

    parent = {s: s for s in sols}

    def find(s: Slope) -> Slope:
        while parent[s] != s:
            parent[s] = parent[parent[s]]
            s = parent[s]
        return s

    for s in sols:
        x = s
        for _ in range(iteration_cap):
            x = m.act(x)
            if x in sol_set:
                parent[find(s)] = find(x)

    by_root: dict[Slope, list[Slope]] = {}
    for s in sols:  # already sorted
        by_root.setdefault(find(s), []).append(s)
    groups = tuple(tuple(g) for g in by_root.values())

    return OracleResult(m, bound, iteration_cap, tuple(sols), groups)


def agree(solver_result: SolutionSet, oracle_result: OracleResult) -> bool:
    """Check solver and oracle outputs against each other.

    True when (a) every oracle group contains a slope h-equivalent to some
    solver representative, (b) distinct groups match distinct classes,
    (c) every solver representative inside the scanned universe shows up
    among the oracle solutions, and (d) the counts are equal.  Results for
    different mapping classes never agree.
    """
    if solver_result.mapping_class.psl_rep != oracle_result.mapping_class.psl_rep:
        return False
    m = solver_result.mapping_class
    classes = solver_result.classes
    if len(oracle_result.groups) != len(classes):
        return False

    matched: list[int] = []
    for group in oracle_result.groups:
        hit = None
        for s in group:
            for idx, cl in enumerate(classes):
                if h_equivalent(m, s, cl.representative):
                    hit = idx
                    break
            if hit is not None:
                break
        if hit is None:
            return False
        matched.append(hit)
    if len(set(matched)) != len(matched):
        return False

    sol_set = set(oracle_result.solutions)
    bound = oracle_result.bound
    for cl in classes:
        rep = cl.representative
        if abs(rep.p) <= bound and rep.q <= bound and rep not in sol_set:
            return False
    return True
