# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import enum
import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Self

import numpy as np
from scipy import stats

from promptelites.typing import str_enum

ALPHA = 0.05


@dataclass(frozen=True)
class StatResult:
    """The outcome of a statistical test.

    Attributes:
        statistic: The test statistic.
        p_value: The two-sided p-value.
        effect_size: The effect size, if the test defines one.
        significant: Whether `p_value < ALPHA`.
        degenerate: Whether the input did not allow the test to be computed.
            Degenerate results have a zero statistic and a p-value of 1.
    """

    statistic: float
    p_value: float
    effect_size: float | None = None
    significant: bool = False
    degenerate: bool = False

    @classmethod
    def of(
        cls, statistic: float, p_value: float, effect_size: float | None = None
    ) -> Self:
        p_value = min(max(p_value, 0.0), 1.0)
        return cls(statistic, p_value, effect_size, significant=p_value < ALPHA)

    @classmethod
    def degenerated(cls, effect_size: float | None = None) -> Self:
        return cls(0.0, 1.0, effect_size, significant=False, degenerate=True)

    def to_dict(self) -> dict[str, float | bool | None]:
        return {
            "statistic": self.statistic,
            "p_value": self.p_value,
            "effect_size": self.effect_size,
            "significant": self.significant,
            "degenerate": self.degenerate,
        }


@dataclass(frozen=True)
class ContingencyTable2x2:
    """A 2x2 table of counts.

    Row one holds the covered and uncovered cells of the first method, row two
    those of the second method.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if min(self.a, self.b, self.c, self.d) < 0:
            raise ValueError("Contingency counts must be non-negative.")
        if self.total < 1:
            raise ValueError("A contingency table needs at least one count.")

    @property
    def total(self) -> int:
        return self.a + self.b + self.c + self.d

    def marginals(self) -> tuple[int, int, int, int]:
        """The row sums followed by the column sums."""
        return (
            self.a + self.b,
            self.c + self.d,
            self.a + self.c,
            self.b + self.d,
        )

    def to_list(self) -> list[int]:
        return [self.a, self.b, self.c, self.d]


@str_enum
class EffectMagnitude(enum.Enum):
    SMALL = "small"
    MEDIUM = "medium"
    LARGE = "large"


def effect_magnitude(effect_size: float) -> EffectMagnitude:
    """Classify a Cramér's V: below 0.2, up to 0.5, above 0.5."""
    if effect_size < 0.2:
        return EffectMagnitude.SMALL
    if effect_size <= 0.5:
        return EffectMagnitude.MEDIUM
    return EffectMagnitude.LARGE


def chi_square_2x2_yates(table: ContingencyTable2x2) -> StatResult:
    """Run a chi-square test of independence with continuity correction.

    The statistic is `n (|ad - bc| - n/2)^2 / ((a+b)(c+d)(a+c)(b+d))`, where
    the corrected difference is floored at zero, and has one degree of
    freedom. The effect size is Cramér's V.

    Tables with an empty row or column give a degenerate result.
    """
    marginals = table.marginals()
    if 0 in marginals:
        return StatResult.degenerated()

    n = table.total
    difference = max(abs(table.a * table.d - table.b * table.c) - n / 2, 0.0)
    statistic = n * difference**2 / math.prod(marginals)
    p_value = float(stats.chi2.sf(statistic, df=1))
    return StatResult.of(statistic, p_value, cramers_v(statistic, n))


def cramers_v(chi2: float, n: int) -> float:
    """Compute Cramér's V of a 2x2 table, `sqrt(chi2 / n)`."""
    if n < 1:
        raise ValueError(f"The number of observations must be positive, got {n}.")
    if chi2 < 0:
        raise ValueError(f"The chi-square statistic must be non-negative, got {chi2}.")
    return min(math.sqrt(chi2 / n), 1.0)


def spearman(x: Sequence[float], y: Sequence[float]) -> StatResult:
    """Compute the Spearman rank correlation and its two-sided p-value.

    Ties get average ranks. The p-value comes from the Student-t distribution
    with `n - 2` degrees of freedom. Constant inputs give a degenerate result.
    """
    xs = np.asarray(x, dtype=float)
    ys = np.asarray(y, dtype=float)
    if xs.shape != ys.shape or xs.ndim != 1:
        raise ValueError("Spearman correlation needs two sequences of equal length.")
    if len(xs) < 3:
        raise ValueError("Spearman correlation needs at least three observations.")
    if np.ptp(xs) == 0 or np.ptp(ys) == 0:
        return StatResult.degenerated()

    result = stats.spearmanr(xs, ys)
    rho = float(result.statistic)  # type: ignore
    p_value = float(result.pvalue)  # type: ignore
    return StatResult.of(rho, p_value, rho)


def two_proportion_z(k1: int, n1: int, k2: int, n2: int) -> StatResult:
    """Run a pooled two-proportion z-test of `k1/n1` against `k2/n2`.

    The effect size is the difference of the two proportions. Pooled
    proportions of 0 or 1 give a degenerate result.
    """
    if n1 < 1 or n2 < 1:
        raise ValueError("Both samples must contain at least one observation.")
    if not (0 <= k1 <= n1 and 0 <= k2 <= n2):
        raise ValueError("Successes must be between 0 and the sample size.")

    p1 = k1 / n1
    p2 = k2 / n2
    pooled = (k1 + k2) / (n1 + n2)
    if pooled in (0.0, 1.0):
        return StatResult.degenerated(p1 - p2)

    se = math.sqrt(pooled * (1 - pooled) * (1 / n1 + 1 / n2))
    z = (p1 - p2) / se
    p_value = float(2 * stats.norm.sf(abs(z)))
    return StatResult.of(z, p_value, p1 - p2)
