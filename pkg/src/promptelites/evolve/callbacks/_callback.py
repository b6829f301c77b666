# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

from typing import Protocol

from promptelites.archive import Individual
from promptelites.evaluators import FitnessResult
from promptelites.evolve import IterationRecord, SearchState


class Callback(Protocol):
    """Interface for callbacks that can be registered with the search engine."""

    def on_init(self, state: SearchState) -> None:
        pass

    def on_run_start(self, state: SearchState) -> None:
        pass

    def on_iteration_start(self, state: SearchState) -> None:
        pass

    def on_individual_evaluated(
        self,
        state: SearchState,
        individual: Individual,
        result: FitnessResult,
    ) -> None:
        pass

    def on_iteration_end(self, state: SearchState, record: IterationRecord) -> None:
        pass

    def on_run_end(
        self,
        state: SearchState,
        error: Exception | KeyboardInterrupt | None,
    ) -> None:
        pass
