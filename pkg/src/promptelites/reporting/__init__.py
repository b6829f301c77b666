# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

from ._heatmap import (
    HEATMAP_CSV_HEADER,
    HeatmapPoint,
    heatmap_points,
    render_scatter,
    write_heatmap_csv,
)
from ._tables import (
    CORRELATION_CSV_HEADER,
    COVERAGE_CSV_HEADER,
    ENRICHMENT_CSV_HEADER,
    SIGNIFICANCE_MARKER,
    correlations_to_dict,
    format_p_value,
    marked,
    write_correlation_csv,
    write_coverage_csv,
    write_enrichment_csv,
)

__all__ = [
    # _heatmap
    "HEATMAP_CSV_HEADER",
    "HeatmapPoint",
    "heatmap_points",
    "render_scatter",
    "write_heatmap_csv",
    # _tables
    "CORRELATION_CSV_HEADER",
    "COVERAGE_CSV_HEADER",
    "ENRICHMENT_CSV_HEADER",
    "SIGNIFICANCE_MARKER",
    "correlations_to_dict",
    "format_p_value",
    "marked",
    "write_correlation_csv",
    "write_coverage_csv",
    "write_enrichment_csv",
]
