# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

from dataclasses import dataclass
from typing import Protocol

from promptelites import utils
from promptelites.phenotype import Phenotype, ShotCategory, shot_category

from ._config import EvaluatorConfig
from ._matching import normalize_answer
from ._model import CallCounter, CompletionRequest, LanguageModel

FALLBACK_ANSWER = "unknown"


class MockRule(Protocol):
    """Decides whether the mock model answers an instance correctly.

    Rules must be pure functions of their arguments and of their own seed.
    """

    def __call__(self, phenotype: Phenotype, instance_index: int) -> bool: ...


def _structure(phenotype: Phenotype) -> tuple[int, int, int, int]:
    return (
        phenotype.shots,
        phenotype.word_count,
        phenotype.depth,
        int(phenotype.has_context),
    )


@dataclass(frozen=True)
class ConstantRule(MockRule):
    """Answers every instance correctly with the same probability."""

    probability: float = 0.5
    seed: int = 0

    def __call__(self, phenotype: Phenotype, instance_index: int) -> bool:
        draw = utils.unit_hash(self.seed, *_structure(phenotype), instance_index)
        return draw < self.probability


@dataclass(frozen=True)
class ZeroShotOnlyRule(MockRule):
    """Answers correctly if and only if the prompt has no examples."""

    def __call__(self, phenotype: Phenotype, instance_index: int) -> bool:
        return phenotype.shots == 0


@dataclass(frozen=True)
class ShotsRewardRule(MockRule):
    """Answers correctly more often the more examples the prompt shows.

    Attributes:
        probabilities: The match probability of zero-shot, few-shot and
            many-shot prompts.
        seed: The seed of the rule.
    """

    probabilities: tuple[float, float, float] = (0.3, 0.5, 0.7)
    seed: int = 0

    def __call__(self, phenotype: Phenotype, instance_index: int) -> bool:
        match shot_category(phenotype.shots):
            case ShotCategory.ZERO_SHOT:
                probability = self.probabilities[0]
            case ShotCategory.FEW_SHOT:
                probability = self.probabilities[1]
            case ShotCategory.MANY_SHOT:
                probability = self.probabilities[2]

        draw = utils.unit_hash(self.seed, *_structure(phenotype), instance_index)
        return draw < probability


@dataclass(frozen=True)
class NoisyThresholdRule(MockRule):
    """Gives each prompt structure a hidden quality and blurs it with noise.

    The quality of a structure is drawn uniformly in `[low, high]`; an instance
    is answered correctly when the quality plus a Gaussian noise term exceeds
    the threshold.
    """

    low: float = 0.3
    high: float = 0.9
    noise: float = 0.2
    threshold: float = 0.5
    seed: int = 0

    def quality(self, phenotype: Phenotype) -> float:
        draw = utils.unit_hash(self.seed, *_structure(phenotype))
        return self.low + (self.high - self.low) * draw

    def __call__(self, phenotype: Phenotype, instance_index: int) -> bool:
        rng = utils.make_rng(self.seed, *_structure(phenotype), instance_index)
        noise = self.noise * float(rng.standard_normal())
        return self.quality(phenotype) + noise > self.threshold


MOCK_RULES = ("constant", "zero-shot-only", "shots-reward", "noisy-threshold")


def make_rule(config: EvaluatorConfig) -> MockRule:
    """Build the mock rule named in the configuration."""
    match config.mock_rule.replace("_", "-"):
        case "constant":
            return ConstantRule(config.mock_probability, config.mock_seed)
        case "zero-shot-only":
            return ZeroShotOnlyRule()
        case "shots-reward":
            return ShotsRewardRule(seed=config.mock_seed)
        case "noisy-threshold":
            return NoisyThresholdRule(seed=config.mock_seed)
        case name:
            raise ValueError(
                f"Unknown mock rule '{name}', expected one of {list(MOCK_RULES)}."
            )


class MockModel(LanguageModel):
    """An offline model whose correctness is decided by a rule.

    When the rule says the instance is answered correctly the model returns its
    target; otherwise it returns the first admissible answer that differs from
    the target, or `FALLBACK_ANSWER` for open-ended tasks.
    """

    def __init__(self, rule: MockRule) -> None:
        self._rule = rule
        self._calls = CallCounter()

    @property
    def rule(self) -> MockRule:
        return self._rule

    @property
    def num_calls(self) -> int:
        return self._calls.value

    def complete(self, request: CompletionRequest) -> str:
        self._calls.increment()
        target = request.instance.target
        if self._rule(request.phenotype, request.instance_index):
            return target

        for choice in request.choices or ():
            if normalize_answer(choice) != normalize_answer(target):
                return choice
        return FALLBACK_ANSWER

    def close(self) -> None:
        pass
