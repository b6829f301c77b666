# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import enum
from dataclasses import dataclass, field

from promptelites.archive import DEFAULT_UNIVERSE
from promptelites.grammar import DEFAULT_MAX_SHOTS
from promptelites.phenotype import BinConfig
from promptelites.typing import Configs, Configurable, str_enum


@str_enum
class Algorithm(enum.Enum):
    MAP_ELITES = "map_elites"
    RANDOM = "random"


@dataclass(frozen=True)
class RunConfig(Configurable):
    """The settings of a search run.

    Attributes:
        population_size: The number of individuals evaluated per iteration.
        num_iterations: The number of iterations.
        mut_rate: The fraction of the population mutated into offspring.
        mut_chance: The probability with which each locus of an offspring
            is mutated.
        num_evaluations: The number of task instances each individual is
            evaluated on.
        bin_config: The bin widths of the archive.
        max_shots: The maximum number of examples of a prompt.
        seed: The seed of the run.
        algorithm: MAP-Elites or the random-search baseline.
        parallelism: The maximum number of concurrent fitness evaluations.
        hp_threshold: Individuals above this fitness are high performers.
        universe: The number of shots and depth bins the coverage is
            computed on.
        resample_eval_instances: Draw a new evaluation set for every
            individual instead of one for the whole run.
    """

    population_size: int = 50
    num_iterations: int = 10
    mut_rate: float = 0.4
    mut_chance: float = 0.4
    num_evaluations: int = 50
    bin_config: BinConfig = field(default_factory=BinConfig)
    max_shots: int = DEFAULT_MAX_SHOTS
    seed: int = 0
    algorithm: Algorithm = Algorithm.MAP_ELITES
    parallelism: int = 1
    hp_threshold: float = 0.55
    universe: tuple[int, int] = DEFAULT_UNIVERSE
    resample_eval_instances: bool = False

    def __post_init__(self) -> None:
        for name in ("population_size", "num_iterations", "num_evaluations"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1.")
        for name in ("mut_rate", "mut_chance"):
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise ValueError(f"{name} must be in [0, 1].")
        if self.max_shots < 0:
            raise ValueError("max_shots must be non-negative.")
        if self.seed < 0:
            raise ValueError("seed must be non-negative.")
        if self.parallelism < 1:
            raise ValueError("parallelism must be at least 1.")
        if len(self.universe) != 2 or min(self.universe) < 1:
            raise ValueError("universe must hold two positive bin counts.")

    @property
    def budget(self) -> int:
        """The number of fitness evaluations of the run."""
        return self.population_size * self.num_iterations

    def get_configs(self, recursive: bool) -> Configs:
        return {
            "population_size": self.population_size,
            "num_iterations": self.num_iterations,
            "mut_rate": self.mut_rate,
            "mut_chance": self.mut_chance,
            "num_evaluations": self.num_evaluations,
            "bin_config": self.bin_config.to_list(),
            "max_shots": self.max_shots,
            "seed": self.seed,
            "algorithm": str(self.algorithm),
            "hp_threshold": self.hp_threshold,
            "universe": list(self.universe),
            "resample_eval_instances": self.resample_eval_instances,
        }
