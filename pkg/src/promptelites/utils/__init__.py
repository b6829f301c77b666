# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

from ._logging import get_formatter, get_library_logger
from ._misc import (
    full_class_name,
    get_configs,
    round_half_up,
    stable_digest,
    to_tuple,
)
from ._reproducibility import draw_seed, make_rng, unit_hash

__all__ = [
    # _logging
    "get_formatter",
    "get_library_logger",
    # _misc
    "full_class_name",
    "get_configs",
    "round_half_up",
    "stable_digest",
    "to_tuple",
    # _reproducibility
    "draw_seed",
    "make_rng",
    "unit_hash",
]
