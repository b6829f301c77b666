# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import enum

from promptelites.typing import str_enum


@str_enum
class ShotCategory(enum.Enum):
    ZERO_SHOT = "zero_shot"
    FEW_SHOT = "few_shot"
    MANY_SHOT = "many_shot"


@str_enum
class CotCategory(enum.Enum):
    NO_COT = "no_cot"
    COT1 = "cot1"
    COT2_PLUS = "cot2_plus"


def shot_category(shots: int) -> ShotCategory:
    """Classify a number of examples: none, one or two, more than two."""
    if shots < 0:
        raise ValueError(f"The number of shots must be non-negative, got {shots}.")

    match shots:
        case 0:
            return ShotCategory.ZERO_SHOT
        case 1 | 2:
            return ShotCategory.FEW_SHOT
        case _:
            return ShotCategory.MANY_SHOT


def cot_category(depth: int) -> CotCategory:
    """Classify a reasoning depth: absent, one step, two or more steps."""
    if depth < 0:
        raise ValueError(f"The depth must be non-negative, got {depth}.")

    match depth:
        case 0:
            return CotCategory.NO_COT
        case 1:
            return CotCategory.COT1
        case _:
            return CotCategory.COT2_PLUS
