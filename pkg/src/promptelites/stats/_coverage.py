# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from promptelites.archive import DEFAULT_AXES, DEFAULT_UNIVERSE, Archive
from promptelites.phenotype import Axis

from ._significance import ContingencyTable2x2, StatResult, chi_square_2x2_yates

DEFAULT_THRESHOLD = 0.55


def coverage_contingency(
    archive_a: Archive,
    archive_b: Archive,
    threshold: float = DEFAULT_THRESHOLD,
    universe: Sequence[int] = DEFAULT_UNIVERSE,
    axes: Sequence[Axis] = DEFAULT_AXES,
) -> ContingencyTable2x2:
    """Count the covered and uncovered cells of two archives.

    A cell of the projected space is covered when it holds an elite whose
    fitness is strictly above `threshold`.
    """
    cells = math.prod(universe)
    covered_a = len(archive_a.covered_cells(axes, threshold, universe))
    covered_b = len(archive_b.covered_cells(axes, threshold, universe))
    return ContingencyTable2x2(
        covered_a, cells - covered_a, covered_b, cells - covered_b
    )


@dataclass(frozen=True)
class CoverageRow:
    """Coverage of two archives compared with a chi-square test.

    Attributes:
        any_a: The coverage of the first archive counting every elite.
        hp_a: The coverage of the first archive counting high performers only.
        any_b: Same as `any_a` for the second archive.
        hp_b: Same as `hp_a` for the second archive.
        table: The high-performer contingency table.
        test: The chi-square test of the table, with Cramér's V.
    """

    any_a: float
    hp_a: float
    any_b: float
    hp_b: float
    table: ContingencyTable2x2
    test: StatResult

    def to_dict(self) -> dict[str, Any]:
        return {
            "any_a": self.any_a,
            "hp_a": self.hp_a,
            "any_b": self.any_b,
            "hp_b": self.hp_b,
            "table": self.table.to_list(),
            **self.test.to_dict(),
        }


def coverage_table(
    archive_a: Archive,
    archive_b: Archive,
    threshold: float = DEFAULT_THRESHOLD,
    universe: Sequence[int] = DEFAULT_UNIVERSE,
    axes: Sequence[Axis] = DEFAULT_AXES,
) -> CoverageRow:
    """Compare the coverage of two archives, e.g. MAP-Elites against random search."""
    table = coverage_contingency(archive_a, archive_b, threshold, universe, axes)
    return CoverageRow(
        any_a=archive_a.coverage(axes, None, universe),
        hp_a=archive_a.coverage(axes, threshold, universe),
        any_b=archive_b.coverage(axes, None, universe),
        hp_b=archive_b.coverage(axes, threshold, universe),
        table=table,
        test=chi_square_2x2_yates(table),
    )
