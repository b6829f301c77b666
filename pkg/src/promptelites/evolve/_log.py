# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

from dataclasses import asdict, dataclass, field
from typing import Any


@dataclass(frozen=True)
class IterationRecord:
    """The summary of one iteration of a run."""

    iteration: int
    min_fitness: float
    mean_fitness: float
    max_fitness: float
    archive_size: int
    best_fitness: float
    qd_score: float
    coverage_any: float
    coverage_hp: float
    inserted: int
    replaced: int
    rejected: int
    failures: int
    model_calls: int


@dataclass
class RunLog:
    """What happened during a run.

    Attributes:
        run_name: The name of the run.
        iterations: One record per iteration, numbered from 1.
        total_evaluations: The number of fitness evaluations.
        total_model_calls: The number of completions computed by the model.
        total_failures: The number of requests that failed after their retries.
        wall_time: The duration of the run in seconds. Not exported, so that
            the exports of seeded runs are reproducible.
    """

    run_name: str
    iterations: list[IterationRecord] = field(default_factory=list)
    total_evaluations: int = 0
    total_model_calls: int = 0
    total_failures: int = 0
    wall_time: float = 0.0

    @property
    def degraded(self) -> bool:
        """Whether some answers were counted wrong because a request failed."""
        return self.total_failures > 0

    def append(self, record: IterationRecord) -> None:
        expected = len(self.iterations) + 1
        if record.iteration != expected:
            raise ValueError(
                f"Expected the record of iteration {expected}, got {record.iteration}."
            )
        self.iterations.append(record)

    def to_dict(self) -> dict[str, Any]:
        return {
            "run_name": self.run_name,
            "iterations": [asdict(record) for record in self.iterations],
            "total_evaluations": self.total_evaluations,
            "total_model_calls": self.total_model_calls,
            "total_failures": self.total_failures,
            "degraded": self.degraded,
        }
