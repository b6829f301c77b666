# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import time
from collections.abc import Sequence
from dataclasses import dataclass

from promptelites import utils
from promptelites.grammar import (
    GenericTables,
    Genotype,
    Grammar,
    PromptTemplate,
    expand,
)
from promptelites.phenotype import Phenotype, extract
from promptelites.tasks import (
    TaskDataset,
    instantiate,
    render_reference,
    select_examples,
)

from ._errors import AmbiguousOutputError, AuthenticationError, EvaluatorError
from ._matching import match_answer
from ._model import CompletionRequest, LanguageModel


@dataclass(frozen=True)
class EvalOutcome:
    """The answer of the model to one evaluation instance.

    Attributes:
        instance_index: The index of the evaluated instance.
        raw_output: The completion, empty if the request failed.
        matched: Whether the completion gives the expected answer.
        latency: The time spent waiting for the completion, in seconds.
        error: The reason the request failed, `None` if it succeeded.
        ambiguous: Whether the completion matched several choices.
    """

    instance_index: int
    raw_output: str
    matched: bool
    latency: float
    error: str | None = None
    ambiguous: bool = False


@dataclass(frozen=True)
class FitnessResult:
    """The evaluation of a genotype.

    Attributes:
        fitness: The fraction of the evaluation instances answered correctly.
        phenotype: The descriptors of the genotype.
        template: The expanded template.
        outcomes: One outcome per evaluation instance, in the given order.
        failures: How many requests failed after exhausting their retries.
    """

    fitness: float
    phenotype: Phenotype
    template: PromptTemplate
    outcomes: tuple[EvalOutcome, ...]
    failures: int


def fitness(
    genotype: Genotype,
    task: TaskDataset,
    eval_instance_indices: Sequence[int],
    model: LanguageModel,
    grammar: Grammar,
    tables: GenericTables,
) -> FitnessResult:
    """Evaluate a genotype as the fraction of instances answered correctly.

    Examples are drawn from the instances outside the evaluation set whenever
    there are enough of them, so that the examples are the same for every
    evaluated instance; otherwise from all the other instances.

    Requests that still fail after their retries count as wrong answers and
    are tallied in `FitnessResult.failures`. Rejected credentials abort the
    evaluation.

    Raises:
        AuthenticationError: If the endpoint rejects the credentials.
        GenotypeError: If the genotype does not replay against the grammar.
        InsufficientExamplesError: If the task is too small for the template.
    """
    if len(eval_instance_indices) == 0:
        raise ValueError("At least one evaluation instance is needed.")

    template = expand(genotype, grammar, tables)

    logger = utils.get_library_logger()
    evaluated = set(eval_instance_indices)
    pool = [idx for idx in range(len(task.instances)) if idx not in evaluated]
    if len(pool) < template.shots:
        logger.warning(
            "Task '%s' has %d instances outside the evaluation set but the "
            "prompt needs %d examples: examples may overlap the evaluation set.",
            task.name,
            len(pool),
            template.shots,
        )
        pool = list(range(len(task.instances)))

    reference_ids = select_examples(task, template.example_seeds, pool)
    phenotype = extract(template, render_reference(template, task, reference_ids))

    outcomes: list[EvalOutcome] = []
    for idx in eval_instance_indices:
        prompt = instantiate(template, task, idx, pool=pool)
        request = CompletionRequest(
            text=prompt.text,
            instance_index=idx,
            instance=prompt.instance,
            choices=task.choices,
            phenotype=phenotype,
        )

        start = time.perf_counter()
        try:
            output = model.complete(request)
        except AuthenticationError:
            raise
        except EvaluatorError as e:
            logger.warning("Instance %d counted as wrong: %s", idx, e)
            latency = time.perf_counter() - start
            outcomes.append(EvalOutcome(idx, "", False, latency, error=str(e)))
            continue
        latency = time.perf_counter() - start

        try:
            matched = match_answer(output, prompt.instance.target, task.choices)
        except AmbiguousOutputError as e:
            logger.warning("Instance %d counted as wrong: %s", idx, e)
            outcomes.append(EvalOutcome(idx, output, False, latency, ambiguous=True))
            continue

        outcomes.append(EvalOutcome(idx, output, matched, latency))

    num_correct = sum(1 for outcome in outcomes if outcome.matched)
    return FitnessResult(
        fitness=num_correct / len(outcomes),
        phenotype=phenotype,
        template=template,
        outcomes=tuple(outcomes),
        failures=sum(1 for outcome in outcomes if outcome.error is not None),
    )
