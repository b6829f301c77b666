# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from promptelites.archive import Archive, Individual
from promptelites.evaluators import LanguageModel
from promptelites.grammar import GenericTables, Genotype, Grammar
from promptelites.tasks import TaskDataset

from ._config import RunConfig
from ._log import RunLog

if TYPE_CHECKING:
    from .callbacks import Callback


@dataclass(frozen=True)
class Candidate:
    """A genotype waiting to be evaluated.

    Attributes:
        genotype: The genotype.
        parent_id: The individual it comes from, `None` if freshly sampled.
        prior_evaluations: How many times the genotype was already evaluated
            (non-zero for genotypes redrawn from the archive).
    """

    genotype: Genotype
    parent_id: int | None = None
    prior_evaluations: int = 0


class SearchState:
    """The state of the search engine."""

    def __init__(
        self,
        run_name: str,
        config: RunConfig,
        task: TaskDataset,
        model: LanguageModel,
        grammar: Grammar,
        tables: GenericTables,
        eval_indices: tuple[int, ...],
        callbacks: tuple[Callback, ...],
    ) -> None:
        self._run_name = run_name
        self._config = config
        self._task = task
        self._model = model
        self._grammar = grammar
        self._tables = tables
        self._eval_indices = eval_indices
        self._callbacks = callbacks

        self._archive = Archive(config.bin_config)
        self._log = RunLog(run_name)
        self._iteration = 0
        self._population: list[Individual] = []
        self._individuals: list[Individual] = []

    # ----------------------------------------------------------------------- #
    # Properties
    # ----------------------------------------------------------------------- #

    @property
    def run_name(self) -> str:
        return self._run_name

    @property
    def config(self) -> RunConfig:
        return self._config

    @property
    def task(self) -> TaskDataset:
        return self._task

    @property
    def model(self) -> LanguageModel:
        return self._model

    @property
    def grammar(self) -> Grammar:
        return self._grammar

    @property
    def tables(self) -> GenericTables:
        return self._tables

    @property
    def eval_indices(self) -> tuple[int, ...]:
        """The evaluation instances shared by all the individuals of the run."""
        return self._eval_indices

    @property
    def callbacks(self) -> tuple[Callback, ...]:
        return self._callbacks

    @property
    def archive(self) -> Archive:
        return self._archive

    @property
    def log(self) -> RunLog:
        return self._log

    @property
    def iteration(self) -> int:
        """The current iteration, numbered from 1 (0 before the run starts)."""
        return self._iteration

    @property
    def population(self) -> list[Individual]:
        """The individuals evaluated so far in the current iteration."""
        return self._population

    @property
    def individuals(self) -> list[Individual]:
        """Every individual evaluated so far, in evaluation order."""
        return self._individuals

    @property
    def next_id(self) -> int:
        return len(self._individuals)

    # ----------------------------------------------------------------------- #
    # Public Methods
    # ----------------------------------------------------------------------- #

    def next_iteration(self) -> None:
        self._iteration += 1
        self._population = []

    def add(self, individual: Individual) -> None:
        self._population.append(individual)
        self._individuals.append(individual)
