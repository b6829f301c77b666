# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

from tqdm import tqdm

from promptelites.archive import Individual
from promptelites.evaluators import FitnessResult
from promptelites.evolve import IterationRecord, SearchState
from promptelites.evolve.callbacks import Callback


class ProgressBarLogger(Callback):
    """Shows a progress bar over the fitness evaluations of each iteration."""

    def __init__(self) -> None:
        super().__init__()
        self._pbar: tqdm[None] | None = None

    def on_iteration_start(self, state: SearchState) -> None:
        self._pbar = tqdm(
            total=state.config.population_size,
            desc=f"Iteration {state.iteration}",
        )

    def on_individual_evaluated(
        self,
        state: SearchState,
        individual: Individual,
        result: FitnessResult,
    ) -> None:
        if self._pbar is not None:
            self._pbar.update(1)
            self._pbar.set_postfix(fitness=f"{individual.fitness:.2f}", refresh=False)

    def on_iteration_end(self, state: SearchState, record: IterationRecord) -> None:
        self._close()

    def on_run_end(
        self,
        state: SearchState,
        error: Exception | KeyboardInterrupt | None,
    ) -> None:
        self._close()

    # ----------------------------------------------------------------------- #
    # Private Methods
    # ----------------------------------------------------------------------- #

    def _close(self) -> None:
        if self._pbar is not None:
            self._pbar.close()
            self._pbar = None
