# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

from ._coverage import (
    DEFAULT_THRESHOLD,
    CoverageRow,
    coverage_contingency,
    coverage_table,
)
from ._enrichment import (
    CORRELATED_FEATURES,
    FEATURES,
    EnrichmentReport,
    FeatureEnrichment,
    NoHighPerformersError,
    enrichment_report,
    feature_correlations,
)
from ._significance import (
    ALPHA,
    ContingencyTable2x2,
    EffectMagnitude,
    StatResult,
    chi_square_2x2_yates,
    cramers_v,
    effect_magnitude,
    spearman,
    two_proportion_z,
)

__all__ = [
    # _coverage
    "DEFAULT_THRESHOLD",
    "CoverageRow",
    "coverage_contingency",
    "coverage_table",
    # _enrichment
    "CORRELATED_FEATURES",
    "FEATURES",
    "EnrichmentReport",
    "FeatureEnrichment",
    "NoHighPerformersError",
    "enrichment_report",
    "feature_correlations",
    # _significance
    "ALPHA",
    "ContingencyTable2x2",
    "EffectMagnitude",
    "StatResult",
    "chi_square_2x2_yates",
    "cramers_v",
    "effect_magnitude",
    "spearman",
    "two_proportion_z",
]
