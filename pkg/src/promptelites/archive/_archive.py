# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import enum
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from typing import Any

from promptelites._errors import SchemaError
from promptelites.phenotype import Axis, BinConfig, BinKey
from promptelites.typing import Configs, Configurable, StateDict, Stateful, str_enum

from ._individual import Individual

DEFAULT_AXES = (Axis.SHOTS, Axis.DEPTH)
DEFAULT_UNIVERSE = (5, 5)


@str_enum
class InsertionResult(enum.Enum):
    INSERTED = "inserted"
    REPLACED = "replaced"
    REJECTED = "rejected"


@dataclass(frozen=True)
class InsertionRecord:
    """An entry of the insertion log of an archive."""

    iteration: int
    key: BinKey
    old_fitness: float | None
    new_fitness: float
    individual_id: int

    def to_dict(self) -> dict[str, Any]:
        return {
            "iteration": self.iteration,
            "key": self.key.to_list(),
            "old_fitness": self.old_fitness,
            "new_fitness": self.new_fitness,
            "individual_id": self.individual_id,
        }


class Archive(Configurable, Stateful):
    """A MAP-Elites archive keeping the best individual of each cell.

    Cells are the bins of the (shots, words, depth) descriptor space. An
    individual replaces the elite of its cell only if its fitness is strictly
    greater, so ties keep the incumbent. All the insertions must go through a
    single owner; readers work on the snapshots returned by `elites`.
    """

    def __init__(self, bin_config: BinConfig | None = None) -> None:
        self._bin_config = BinConfig() if bin_config is None else bin_config
        self._cells: dict[BinKey, Individual] = {}
        self._log: list[InsertionRecord] = []

    # ----------------------------------------------------------------------- #
    # Properties
    # ----------------------------------------------------------------------- #

    @property
    def bin_config(self) -> BinConfig:
        return self._bin_config

    @property
    def insertion_log(self) -> tuple[InsertionRecord, ...]:
        return tuple(self._log)

    # ----------------------------------------------------------------------- #
    # Public Methods
    # ----------------------------------------------------------------------- #

    def key_of(self, individual: Individual) -> BinKey:
        return self._bin_config.bin(individual.phenotype)

    def try_insert(self, individual: Individual, iteration: int) -> InsertionResult:
        """Add an individual to its cell if the cell is empty or it improves it."""
        key = self.key_of(individual)
        incumbent = self._cells.get(key)

        if incumbent is None:
            result = InsertionResult.INSERTED
        elif individual.fitness > incumbent.fitness:
            result = InsertionResult.REPLACED
        else:
            return InsertionResult.REJECTED

        self._cells[key] = individual
        self._log.append(
            InsertionRecord(
                iteration=iteration,
                key=key,
                old_fitness=None if incumbent is None else incumbent.fitness,
                new_fitness=individual.fitness,
                individual_id=individual.id,
            )
        )
        return result

    def get(self, key: BinKey) -> Individual | None:
        return self._cells.get(key)

    def elites(self) -> list[Individual]:
        """The elites of all the cells, ordered by cell key."""
        return [self._cells[key] for key in sorted(self._cells)]

    def best(self) -> Individual | None:
        """The elite with the highest fitness, the first by key among ties."""
        best: Individual | None = None
        for elite in self.elites():
            if best is None or elite.fitness > best.fitness:
                best = elite
        return best

    def qd_score(self) -> float:
        """The sum of the fitness of all the elites."""
        return math.fsum(elite.fitness for elite in self._cells.values())

    def covered_cells(
        self,
        axes: Sequence[Axis] = DEFAULT_AXES,
        min_fitness: float | None = None,
        universe: Sequence[int] | None = None,
    ) -> set[tuple[int, ...]]:
        """The cells of the projected space holding an elite.

        Args:
            axes: The axes to project the archive on.
            min_fitness: Only count elites whose fitness is strictly greater.
                `None` counts every elite.
            universe: The number of bins along each projected axis. Indices
                beyond the universe fall into its last bin.

        Returns:
            The projected indices of the covered cells.
        """
        sizes = _resolve_universe(axes, universe)
        covered: set[tuple[int, ...]] = set()
        for key, elite in self._cells.items():
            if min_fitness is not None and not elite.fitness > min_fitness:
                continue
            covered.add(
                tuple(
                    min(index, size - 1)
                    for index, size in zip(key.project(axes), sizes, strict=True)
                )
            )
        return covered

    def coverage(
        self,
        axes: Sequence[Axis] = DEFAULT_AXES,
        min_fitness: float | None = None,
        universe: Sequence[int] | None = None,
    ) -> float:
        """The fraction of the projected space covered by elites.

        See `covered_cells` for the arguments. The word-count axis has no
        natural bound, so projections on it need an explicit universe.
        """
        sizes = _resolve_universe(axes, universe)
        return len(self.covered_cells(axes, min_fitness, sizes)) / math.prod(sizes)

    def get_configs(self, recursive: bool) -> Configs:
        return {"bin_config": self._bin_config.get_configs(recursive)}

    def state_dict(self) -> StateDict:
        return {
            "bin_config": self._bin_config.to_list(),
            "cells": [
                {"key": key.to_list(), **self._cells[key].to_dict()}
                for key in sorted(self._cells)
            ],
            "insertion_log": [record.to_dict() for record in self._log],
        }

    def load_state_dict(self, state_dict: StateDict) -> None:
        try:
            bin_config = BinConfig(*state_dict["bin_config"])
            cells: dict[BinKey, Individual] = {}
            for cell in state_dict["cells"]:
                individual = Individual.from_dict(cell)
                key = bin_config.bin(individual.phenotype)
                if key.to_list() != list(cell.get("key", key.to_list())):
                    raise SchemaError("cells.key", f"{cell['key']} != {key}")
                if key in cells:
                    raise SchemaError("cells.key", f"duplicate cell {key}")
                cells[key] = individual
            log = [
                InsertionRecord(
                    iteration=int(record["iteration"]),
                    key=BinKey(*record["key"]),
                    old_fitness=record["old_fitness"],
                    new_fitness=float(record["new_fitness"]),
                    individual_id=int(record["individual_id"]),
                )
                for record in state_dict.get("insertion_log", [])
            ]
        except (KeyError, TypeError) as e:
            raise SchemaError(str(e).strip("'"), "malformed archive export") from e

        self._bin_config = bin_config
        self._cells = cells
        self._log = log

    # ----------------------------------------------------------------------- #
    # Magic Methods
    # ----------------------------------------------------------------------- #

    def __len__(self) -> int:
        return len(self._cells)

    def __iter__(self) -> Iterator[Individual]:
        return iter(self.elites())

    def __contains__(self, key: object) -> bool:
        return key in self._cells


# --------------------------------------------------------------------------- #
# Private Functions
# --------------------------------------------------------------------------- #


def _resolve_universe(
    axes: Sequence[Axis], universe: Sequence[int] | None
) -> tuple[int, ...]:
    if universe is None:
        if tuple(axes) != DEFAULT_AXES:
            raise ValueError(
                f"Projections on {[str(axis) for axis in axes]} need an explicit "
                "universe."
            )
        universe = DEFAULT_UNIVERSE

    if len(universe) != len(axes):
        raise ValueError(
            f"Expected one universe size per axis ({len(axes)}), got {len(universe)}."
        )
    if any(size < 1 for size in universe):
        raise ValueError("Universe sizes must be positive.")

    return tuple(universe)
