# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

from dataclasses import asdict

import wandb

from promptelites import utils
from promptelites.evolve import IterationRecord, SearchState
from promptelites.evolve.callbacks import Callback

_SUMMARIES = {
    "min_fitness": "max",
    "mean_fitness": "max",
    "max_fitness": "max",
    "archive_size": "max",
    "best_fitness": "max",
    "qd_score": "max",
    "coverage_any": "max",
    "coverage_hp": "max",
    "inserted": "last",
    "replaced": "last",
    "rejected": "last",
    "failures": "last",
    "model_calls": "last",
}


class WandbLogger(Callback):
    """Pushes the per-iteration records of a run to Weights & Biases."""

    def __init__(
        self,
        name: str | None = "{run_name}",
        project: str | None = None,
        entity: str | None = None,
        tags: list[str] | None = None,
        notes: str | None = None,
    ) -> None:
        super().__init__()

        self._name = name
        self._project = project
        self._entity = entity
        self._tags = tags
        self._notes = notes

    # ----------------------------------------------------------------------- #
    # Public Methods
    # ----------------------------------------------------------------------- #

    def on_init(self, state: SearchState) -> None:
        if self._name is not None:
            self._name = self._name.format(run_name=state.run_name)

        wandb.init(
            name=self._name,
            project=self._project,
            entity=self._entity,
            tags=self._tags,
            notes=self._notes,
            config={
                "run": state.config.get_configs(recursive=True),
                "task": utils.get_configs(state.task, recursive=True),
                "model": utils.get_configs(state.model, recursive=True),
                "parallelism": state.config.parallelism,
            },
        )

        wandb.define_metric("iteration", summary="max")
        for name, summary in _SUMMARIES.items():
            wandb.define_metric(name, summary=summary, step_metric="iteration")

    def on_iteration_end(self, state: SearchState, record: IterationRecord) -> None:
        wandb.log(asdict(record))

    def on_run_end(
        self,
        state: SearchState,
        error: Exception | KeyboardInterrupt | None,
    ) -> None:
        if isinstance(error, Exception):
            wandb.alert(
                title="Search Error",
                text=str(error),
                level=wandb.AlertLevel.ERROR,
            )
            wandb.finish(exit_code=1)
        else:
            wandb.summary["total_evaluations"] = state.log.total_evaluations
            wandb.summary["total_model_calls"] = state.log.total_model_calls
            wandb.summary["degraded"] = state.log.degraded
            wandb.finish(exit_code=0)
