# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

from collections.abc import Collection, Sequence
from dataclasses import dataclass

import numpy as np

from promptelites.grammar import Placeholder, PromptTemplate

from ._dataset import TaskDataset, TaskInstance
from ._errors import InsufficientExamplesError

EXAMPLE_FORMAT = "Q: {input}\nA: {target}"


@dataclass(frozen=True)
class InstantiatedPrompt:
    """The text of a prompt filled in for one task instance.

    Attributes:
        text: The full prompt text.
        instance_index: The index of the instance filling `[[task entry]]`.
        instance: The instance filling `[[task entry]]`.
        example_ids: The indices of the instances used as examples, in slot
            order. Never contains `instance_index`.
    """

    text: str
    instance_index: int
    instance: TaskInstance
    example_ids: tuple[int, ...]


def render_example(instance: TaskInstance) -> str:
    """Render an instance as a worked example."""
    return EXAMPLE_FORMAT.format(input=instance.input, target=instance.target)


def select_examples(
    task: TaskDataset,
    seeds: Sequence[int],
    pool: Sequence[int] | None = None,
    exclude: Collection[int] = (),
) -> tuple[int, ...]:
    """Pick the instance shown in each example slot.

    The seed of a slot fixes a permutation of the pool; the slot takes the
    first instance of its permutation that is neither excluded nor already
    taken by a previous slot. The result therefore only depends on the seeds,
    the pool and the excluded instances.

    Args:
        task: The task.
        seeds: The seed of each example slot.
        pool: The indices of the instances examples may be drawn from. All the
            instances of the task if not given.
        exclude: The indices that must not be used as examples.

    Returns:
        The index of the instance of each slot.

    Raises:
        InsufficientExamplesError: If the pool has fewer usable instances than
            there are slots.
    """
    candidates = range(len(task.instances)) if pool is None else pool
    available = set(candidates).difference(exclude)
    if len(available) < len(seeds):
        raise InsufficientExamplesError(
            f"The template needs {len(seeds)} examples but only "
            f"{len(available)} instances of task '{task.name}' can be used."
        )

    taken: list[int] = []
    for seed in seeds:
        order = np.random.default_rng(seed).permutation(len(candidates))
        taken.append(
            next(
                candidates[j]
                for j in order
                if candidates[j] in available and candidates[j] not in taken
            )
        )

    return tuple(taken)


def instantiate(
    template: PromptTemplate,
    task: TaskDataset,
    instance_index: int,
    example_seeds: Sequence[int] | None = None,
    pool: Sequence[int] | None = None,
) -> InstantiatedPrompt:
    """Fill the task placeholders of a template for one task instance.

    Args:
        template: The template.
        task: The task.
        instance_index: The index of the instance filling `[[task entry]]`.
        example_seeds: The seed of each example slot. Defaults to the seeds
            recorded in the template.
        pool: The instances examples may be drawn from (see
            `select_examples`). The evaluated instance is always excluded.

    Returns:
        The instantiated prompt.

    Raises:
        InsufficientExamplesError: If there are not enough instances to fill the
            example slots without showing the evaluated instance.
    """
    seeds = template.example_seeds if example_seeds is None else example_seeds
    if len(seeds) != template.shots:
        raise ValueError(
            f"The template has {template.shots} example slots, "
            f"got {len(seeds)} seeds."
        )

    instance = task.instances[instance_index]
    example_ids = select_examples(task, seeds, pool, exclude={instance_index})
    text = template.render(
        _placeholder_values(task, instance.input),
        [render_example(task.instances[idx]) for idx in example_ids],
    )

    return InstantiatedPrompt(
        text=text,
        instance_index=instance_index,
        instance=instance,
        example_ids=example_ids,
    )


def render_reference(
    template: PromptTemplate,
    task: TaskDataset,
    example_ids: Sequence[int],
) -> str:
    """Render the part of a prompt that does not change across instances.

    This is the prompt with `[[task entry]]` left blank: the text the
    word-count and lexical-diversity descriptors of an individual are measured
    on.
    """
    return template.render(
        _placeholder_values(task, ""),
        [render_example(task.instances[idx]) for idx in example_ids],
    )


# --------------------------------------------------------------------------- #
# Private Functions
# --------------------------------------------------------------------------- #


def _placeholder_values(task: TaskDataset, entry: str) -> dict[Placeholder, str]:
    return {
        Placeholder.TASK_REQUEST: task.task_request,
        Placeholder.LLM_INSTRUCTION: task.llm_instruction,
        Placeholder.TASK_ENTRY: entry,
    }
