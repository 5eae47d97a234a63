"""Genus-one knot catalog and unknotting-count bookkeeping.

There are exactly two fibred genus-one knots, the trefoil and the
figure-eight, and their monodromies are periodic and pseudo-Anosov
respectively; ``monodromy`` verifies that classification before handing
the matrix out, since any conjugate matrix would serve equally well and
only the classification pins the catalog down.  Each h-equivalence class
of arcs with disjoint monodromy image yields one unknotting crossing
change, so the fibred counts are computed end to end through the solver.
Non-fibred doubled knots admit a single unknotting crossing change; that
count is a recorded constant, not something this module can recompute.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .mapclass import MappingClass, Periodic, PseudoAnosov
from .solver import solve

__all__ = [
    "Trefoil",
    "FigureEight",
    "NonFibredDoubled",
    "GenusOneKnot",
    "parse_knot",
    "monodromy",
    "unknotting_crossing_change_count",
]

TREFOIL_MONODROMY = MappingClass(1, 1, -1, 0)
FIGURE_EIGHT_MONODROMY = MappingClass(2, 1, 1, 1)


@dataclass(frozen=True)
class Trefoil:
    pass


@dataclass(frozen=True)
class FigureEight:
    pass


@dataclass(frozen=True)
class NonFibredDoubled:
    label: str


GenusOneKnot = Union[Trefoil, FigureEight, NonFibredDoubled]


def parse_knot(name: str) -> GenusOneKnot:
    """Parse 'trefoil', 'figure8', or 'doubled:<label>'."""
    name = name.strip()
    if name == "trefoil":
        return Trefoil()
    if name == "figure8":
        return FigureEight()
    if name.startswith("doubled:"):
        return NonFibredDoubled(label=name[len("doubled:"):])
    raise ValueError(f"unknown knot {name!r}; expected trefoil, figure8, or doubled:<label>")


def monodromy(knot: GenusOneKnot) -> MappingClass:
    """Fibre monodromy of a fibred genus-one knot."""
    if isinstance(knot, Trefoil):
        m = TREFOIL_MONODROMY
        assert isinstance(m.classify(), Periodic)
        return m
    if isinstance(knot, FigureEight):
        m = FIGURE_EIGHT_MONODROMY
        assert isinstance(m.classify(), PseudoAnosov)
        return m
    raise ValueError(f"{knot} is not fibred")


def unknotting_crossing_change_count(knot: GenusOneKnot) -> int:
    """Number of unknotting crossing changes, up to equivalence."""
    if isinstance(knot, NonFibredDoubled):
        return 1
    return len(solve(monodromy(knot)).classes)
