# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

from dataclasses import dataclass
from typing import Any, Self

from promptelites.grammar import Genotype
from promptelites.phenotype import Phenotype


@dataclass(frozen=True)
class Provenance:
    """When an individual was evaluated and which individual it comes from.

    Attributes:
        iteration: The one-based iteration of the evaluation.
        parent_id: The individual it was mutated or redrawn from, `None` for
            freshly sampled genotypes.
    """

    iteration: int
    parent_id: int | None = None


@dataclass(frozen=True)
class Individual:
    """An evaluated genotype.

    Attributes:
        id: The identifier of the individual, unique within a run.
        genotype: The genotype.
        phenotype: The measured descriptors.
        fitness: The fraction of evaluation instances answered correctly.
        eval_count: How many times this genotype has been evaluated, counting
            the evaluations of the elites it was redrawn from.
        provenance: Where the individual comes from.
    """

    id: int
    genotype: Genotype
    phenotype: Phenotype
    fitness: float
    eval_count: int = 1
    provenance: Provenance = Provenance(iteration=1)

    def __post_init__(self) -> None:
        if not 0.0 <= self.fitness <= 1.0:
            raise ValueError(f"Fitness must be in [0, 1], got {self.fitness}.")
        if self.eval_count < 1:
            raise ValueError("An individual must be evaluated at least once.")

    @classmethod
    def from_dict(cls, document: dict[str, Any]) -> Self:
        provenance = document.get("provenance", {})
        return cls(
            id=int(document["id"]),
            genotype=Genotype.from_list(document["genotype"]),
            phenotype=Phenotype.from_dict(document["phenotype"]),
            fitness=float(document["fitness"]),
            eval_count=int(document.get("eval_count", 1)),
            provenance=Provenance(
                iteration=int(provenance.get("iteration", 1)),
                parent_id=provenance.get("parent_id"),
            ),
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "genotype": self.genotype.to_list(),
            "phenotype": self.phenotype.to_dict(),
            "fitness": self.fitness,
            "eval_count": self.eval_count,
            "provenance": {
                "iteration": self.provenance.iteration,
                "parent_id": self.provenance.parent_id,
            },
        }
