# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import csv
from collections.abc import Mapping, Sequence
from typing import Any

from promptelites.stats import (
    CoverageRow,
    EnrichmentReport,
    StatResult,
    effect_magnitude,
)
from promptelites.typing import PathLike

SIGNIFICANCE_MARKER = "†"

COVERAGE_CSV_HEADER = (
    "label",
    "map_any",
    "map_hp",
    "random_any",
    "random_hp",
    "chi2",
    "p_value",
    "cramers_v",
    "effect",
    "significant",
)
CORRELATION_CSV_HEADER = ("feature", "rho", "p_value", "significant")
ENRICHMENT_CSV_HEADER = (
    "feature",
    "overall",
    "high_performers",
    "z",
    "p_value",
    "significant",
    "complement",
    "z_complement",
    "p_value_complement",
    "significant_complement",
)


def marked(value: float, result: StatResult | None, digits: int = 2) -> str:
    """Format a value, followed by a dagger when the test is significant."""
    text = f"{value:.{digits}f}"
    if result is not None and result.significant:
        text += SIGNIFICANCE_MARKER
    return text


def format_p_value(p_value: float) -> str:
    return f"{p_value:.4f}"


def write_coverage_csv(rows: Sequence[tuple[str, CoverageRow]], path: PathLike) -> None:
    """Write one row per comparison of a MAP-Elites and a random-search archive.

    Coverages are percentages; Cramér's V is computed on the high-performer table.
    """
    with open(path, "w", encoding="utf-8", newline="") as file:
        writer = csv.writer(file)
        writer.writerow(COVERAGE_CSV_HEADER)
        for label, row in rows:
            test = row.test
            effect = 0.0 if test.effect_size is None else test.effect_size
            writer.writerow([
                label,
                _percent(row.any_a),
                _percent(row.hp_a),
                _percent(row.any_b),
                _percent(row.hp_b),
                f"{test.statistic:.2f}",
                format_p_value(test.p_value),
                f"{effect:.3f}",
                str(effect_magnitude(effect)),
                _flag(test),
            ])


def write_correlation_csv(
    correlations: Mapping[str, StatResult], path: PathLike
) -> None:
    """Write the Spearman correlation of each feature with fitness."""
    with open(path, "w", encoding="utf-8", newline="") as file:
        writer = csv.writer(file)
        writer.writerow(CORRELATION_CSV_HEADER)
        for feature, result in correlations.items():
            writer.writerow([
                feature,
                marked(result.statistic, result, digits=3),
                format_p_value(result.p_value),
                _flag(result),
            ])


def write_enrichment_csv(report: EnrichmentReport, path: PathLike) -> None:
    """Write the proportion of each feature overall and among high performers.

    Proportions are percentages; the high-performer column carries a dagger
    when it differs significantly from the overall one.
    """
    with open(path, "w", encoding="utf-8", newline="") as file:
        writer = csv.writer(file)
        writer.writerow(ENRICHMENT_CSV_HEADER)
        for enrichment in report.features:
            overall = enrichment.versus_overall
            complement = enrichment.versus_complement
            writer.writerow([
                enrichment.feature,
                _percent(enrichment.overall_proportion),
                marked(100 * enrichment.hp_proportion, overall, digits=1),
                f"{overall.statistic:.3f}",
                format_p_value(overall.p_value),
                _flag(overall),
                _optional_percent(enrichment.complement_proportion),
                "" if complement is None else f"{complement.statistic:.3f}",
                "" if complement is None else format_p_value(complement.p_value),
                "" if complement is None else _flag(complement),
            ])


def correlations_to_dict(
    correlations: Mapping[str, StatResult],
) -> dict[str, dict[str, Any]]:
    return {feature: result.to_dict() for feature, result in correlations.items()}


# --------------------------------------------------------------------------- #
# Private Functions
# --------------------------------------------------------------------------- #


def _percent(value: float) -> str:
    return f"{100 * value:.1f}"


def _optional_percent(value: float | None) -> str:
    return "" if value is None else _percent(value)


def _flag(result: StatResult) -> str:
    return SIGNIFICANCE_MARKER if result.significant else ""
