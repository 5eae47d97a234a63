"""Seeded random sweeps over SL(2,Z).

Matrices are sampled as words in the shear [1 1; 0 1] and the quarter-turn
[0 -1; 1 0], which together generate the whole group.  A fixed seed fully
determines the sample, so verification runs are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .mapclass import MappingClass
from .oracle import agree, brute_force
from .solver import check_class_bound, solve

__all__ = ["GEN_SHEAR", "GEN_TURN", "random_mapping_classes", "VerificationReport", "run_verification"]

GEN_SHEAR = MappingClass(1, 1, 0, 1)
GEN_TURN = MappingClass(0, -1, 1, 0)


def random_mapping_classes(count: int, word_length: int, seed: int) -> list[MappingClass]:
    """``count`` seeded random words in the two generators.

    Word lengths are uniform in [1, word_length]; words that multiply out
    to plus or minus the identity are discarded and redrawn.
    """
    rng = random.Random(seed)
    out: list[MappingClass] = []
    while len(out) < count:
        m = MappingClass.identity()
        for _ in range(rng.randint(1, word_length)):
            m = m @ (GEN_SHEAR if rng.randrange(2) else GEN_TURN)
        if m.b == 0 and m.c == 0:
            continue
        out.append(m)
    return out


@dataclass
class VerificationReport:
    count: int
    word_length: int
    seed: int
    bound_failures: list[MappingClass] = field(default_factory=list)
    oracle_checks: int = 0
    oracle_failures: list[MappingClass] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.bound_failures and not self.oracle_failures


def run_verification(
    count: int,
    word_length: int = 20,
    seed: int = 0,
    bound: int = 50,
    iteration_cap: int = 16,
    oracle_stride: int = 100,
    on_result=None,
) -> VerificationReport:
    """Check the class-count bound on ``count`` random matrices.

    Every matrix goes through ``check_class_bound``; a deterministic
    1-in-``oracle_stride`` subsample is also compared against the
    brute-force oracle.  ``on_result`` receives
    (index, matrix, report, oracle_ok_or_None) per matrix.
    """
    report = VerificationReport(count, word_length, seed)
    for i, m in enumerate(random_mapping_classes(count, word_length, seed)):
        bound_report = check_class_bound(m)
        if not bound_report.bound_ok:
            report.bound_failures.append(m)
        oracle_ok = None
        if i % oracle_stride == 0:
            report.oracle_checks += 1
            oracle_ok = agree(solve(m), brute_force(m, bound, iteration_cap))
            if not oracle_ok:
                report.oracle_failures.append(m)
        if on_result is not None:
            on_result(i, m, bound_report, oracle_ok)
    return report
