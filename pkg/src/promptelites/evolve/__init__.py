# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

from ._config import Algorithm, RunConfig
from ._engine import (
    EVAL_STREAM,
    GENERATION_STREAM,
    POPULATION_STREAM,
    Engine,
    SearchResult,
    next_generation,
    run_map_elites,
    run_random_search,
)
from ._log import IterationRecord, RunLog
from ._outputs import RunOutputs, output_prefix, write_run_outputs
from ._state import Candidate, SearchState

__all__ = [
    # _config
    "Algorithm",
    "RunConfig",
    # _engine
    "EVAL_STREAM",
    "GENERATION_STREAM",
    "POPULATION_STREAM",
    "Engine",
    "SearchResult",
    "next_generation",
    "run_map_elites",
    "run_random_search",
    # _log
    "IterationRecord",
    "RunLog",
    # _outputs
    "RunOutputs",
    "output_prefix",
    "write_run_outputs",
    # _state
    "Candidate",
    "SearchState",
]
