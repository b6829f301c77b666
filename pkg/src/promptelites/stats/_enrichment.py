# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import Any

from promptelites._errors import PromptElitesError
from promptelites.archive import Individual
from promptelites.phenotype import (
    CotCategory,
    ShotCategory,
    cot_category,
    shot_category,
)

from ._coverage import DEFAULT_THRESHOLD
from ._significance import StatResult, spearman, two_proportion_z


class NoHighPerformersError(PromptElitesError, ValueError):
    """Raised when no individual is above the high-performer threshold."""


type FeaturePredicate = Callable[[Individual], bool]


def _features() -> dict[str, FeaturePredicate]:
    features: dict[str, FeaturePredicate] = {
        "has-context": lambda ind: ind.phenotype.has_context,
    }
    for shots in ShotCategory:
        features[str(shots)] = _has_shot_category(shots)
    for cot in CotCategory:
        features[str(cot)] = _has_cot_category(cot)
    return features


def _has_shot_category(category: ShotCategory) -> FeaturePredicate:
    return lambda ind: shot_category(ind.phenotype.shots) == category


def _has_cot_category(category: CotCategory) -> FeaturePredicate:
    return lambda ind: cot_category(ind.phenotype.depth) == category


FEATURES = tuple(_features())


@dataclass(frozen=True)
class FeatureEnrichment:
    """How often a feature appears among the high performers.

    Attributes:
        feature: The name of the feature.
        overall_proportion: The proportion among all the individuals.
        hp_proportion: The proportion among the high performers.
        versus_overall: The z-test of the high performers against all the
            individuals. The high performers belong to both samples, which makes
            this test anti-conservative.
        complement_proportion: The proportion among the other individuals,
            `None` if every individual is a high performer.
        versus_complement: The z-test of the high performers against the other
            individuals, `None` if every individual is a high performer.
    """

    feature: str
    overall_proportion: float
    hp_proportion: float
    versus_overall: StatResult
    complement_proportion: float | None
    versus_complement: StatResult | None

    @property
    def significant(self) -> bool:
        return self.versus_overall.significant

    @property
    def enriched(self) -> bool:
        """Whether the feature is more frequent among the high performers."""
        return self.hp_proportion > self.overall_proportion

    def to_dict(self) -> dict[str, Any]:
        return {
            "feature": self.feature,
            "overall_proportion": self.overall_proportion,
            "hp_proportion": self.hp_proportion,
            "versus_overall": self.versus_overall.to_dict(),
            "complement_proportion": self.complement_proportion,
            "versus_complement": (
                None
                if self.versus_complement is None
                else self.versus_complement.to_dict()
            ),
        }


@dataclass(frozen=True)
class EnrichmentReport:
    threshold: float
    population_count: int
    high_performer_count: int
    features: tuple[FeatureEnrichment, ...]

    def feature(self, name: str) -> FeatureEnrichment:
        for enrichment in self.features:
            if enrichment.feature == name:
                return enrichment
        raise KeyError(name)

    def to_dict(self) -> dict[str, Any]:
        return {
            "threshold": self.threshold,
            "population_count": self.population_count,
            "high_performer_count": self.high_performer_count,
            "features": [enrichment.to_dict() for enrichment in self.features],
        }


def enrichment_report(
    individuals: Sequence[Individual],
    threshold: float = DEFAULT_THRESHOLD,
) -> EnrichmentReport:
    """Compare the features of the high performers with those of the population.

    High performers are the individuals whose fitness is strictly above
    `threshold`. Each feature (context role, shot categories, reasoning
    categories) is tested with a two-proportion z-test against the whole
    population and against the individuals that are not high performers.

    Raises:
        NoHighPerformersError: If no individual is a high performer.
    """
    high = [ind for ind in individuals if ind.fitness > threshold]
    rest = [ind for ind in individuals if not ind.fitness > threshold]
    if len(high) == 0:
        raise NoHighPerformersError(
            f"No individual has a fitness above {threshold} "
            f"(out of {len(individuals)})."
        )

    enrichments: list[FeatureEnrichment] = []
    for name, predicate in _features().items():
        k_all = sum(1 for ind in individuals if predicate(ind))
        k_high = sum(1 for ind in high if predicate(ind))
        k_rest = k_all - k_high

        complement_proportion = None
        versus_complement = None
        if len(rest) > 0:
            complement_proportion = k_rest / len(rest)
            versus_complement = two_proportion_z(k_high, len(high), k_rest, len(rest))

        enrichments.append(
            FeatureEnrichment(
                feature=name,
                overall_proportion=k_all / len(individuals),
                hp_proportion=k_high / len(high),
                versus_overall=two_proportion_z(
                    k_high, len(high), k_all, len(individuals)
                ),
                complement_proportion=complement_proportion,
                versus_complement=versus_complement,
            )
        )

    return EnrichmentReport(
        threshold=threshold,
        population_count=len(individuals),
        high_performer_count=len(high),
        features=tuple(enrichments),
    )


CORRELATED_FEATURES: dict[str, Callable[[Individual], float]] = {
    "shots": lambda ind: ind.phenotype.shots,
    "word_count": lambda ind: ind.phenotype.word_count,
    "depth": lambda ind: ind.phenotype.depth,
    "has_context": lambda ind: float(ind.phenotype.has_context),
    "type_token_ratio": lambda ind: ind.phenotype.type_token_ratio,
}


def feature_correlations(individuals: Sequence[Individual]) -> dict[str, StatResult]:
    """Spearman correlation between fitness and each phenotypic feature.

    Every evaluated individual counts once, re-evaluations included.
    """
    fitness = [ind.fitness for ind in individuals]
    return {
        name: spearman([feature(ind) for ind in individuals], fitness)
        for name, feature in CORRELATED_FEATURES.items()
    }
