# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

from ._binning import Axis, BinConfig, BinKey
from ._categories import CotCategory, ShotCategory, cot_category, shot_category
from ._errors import EmptyTextError
from ._phenotype import Phenotype, extract, type_token_ratio, word_count

__all__ = [
    # _binning
    "Axis",
    "BinConfig",
    "BinKey",
    # _categories
    "CotCategory",
    "ShotCategory",
    "cot_category",
    "shot_category",
    # _errors
    "EmptyTextError",
    # _phenotype
    "Phenotype",
    "extract",
    "type_token_ratio",
    "word_count",
]
