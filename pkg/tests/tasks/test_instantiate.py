# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import numpy as np
import pytest

from promptelites.grammar import GenericTables, Genotype, Grammar, expand
from promptelites.tasks import (
    InsufficientExamplesError,
    NotEnoughInstancesError,
    TaskDataset,
    instantiate,
    render_example,
    render_reference,
    sample_eval_instances,
    select_examples,
)
from tests.conftest import TaskFactory


def test_sample_eval_instances_is_a_permutation_prefix(task: TaskDataset) -> None:
    indices = sample_eval_instances(task, 10, np.random.default_rng(0))

    assert len(indices) == 10
    assert len(set(indices)) == 10
    assert all(0 <= idx < len(task) for idx in indices)
    assert indices == sample_eval_instances(task, 10, np.random.default_rng(0))


def test_sample_single_instance_is_uniform(make_task: TaskFactory) -> None:
    task = make_task(10)
    rng = np.random.default_rng(2)
    draws = [sample_eval_instances(task, 1, rng)[0] for _ in range(10_000)]

    frequencies = np.bincount(draws, minlength=10) / len(draws)
    np.testing.assert_allclose(frequencies, 0.1, atol=0.01)


def test_sample_all_instances(task: TaskDataset) -> None:
    indices = sample_eval_instances(task, len(task), np.random.default_rng(1))
    assert sorted(indices) == list(range(len(task)))


def test_sample_too_many_instances(task: TaskDataset) -> None:
    with pytest.raises(NotEnoughInstancesError):
        sample_eval_instances(task, len(task) + 1, np.random.default_rng(0))


def test_select_examples_is_a_function_of_the_seeds(task: TaskDataset) -> None:
    first = select_examples(task, [3, 4, 5], exclude={0})
    second = select_examples(task, [3, 4, 5], exclude={0})

    assert first == second
    assert len(set(first)) == 3
    assert 0 not in first


def test_select_examples_from_pool(task: TaskDataset) -> None:
    pool = [10, 11, 12]
    assert sorted(select_examples(task, [1, 2, 3], pool=pool)) == pool


def test_select_examples_needs_enough_candidates(make_task: TaskFactory) -> None:
    task = make_task(num_instances=3)
    with pytest.raises(InsufficientExamplesError):
        select_examples(task, [1, 2, 3], exclude={0})


def test_instantiate_one_shot_prompt(
    one_shot_genotype: Genotype,
    grammar: Grammar,
    tables: GenericTables,
    task: TaskDataset,
) -> None:
    template = expand(one_shot_genotype, grammar, tables)
    prompt = instantiate(template, task, instance_index=4)

    assert prompt.instance == task.instances[4]
    assert len(prompt.example_ids) == 1
    assert 4 not in prompt.example_ids

    example = render_example(task.instances[prompt.example_ids[0]])
    lines = prompt.text.split("\n")
    assert lines[0] == tables.context(6)
    assert lines[1] == task.task_request
    assert lines[2] == "Consider this example: " + example.split("\n")[0]
    assert task.instances[4].input in lines
    assert lines[-1] == task.llm_instruction


def test_instantiate_never_shows_the_evaluated_instance(
    grammar: Grammar, tables: GenericTables, make_task: TaskFactory
) -> None:
    task = make_task(num_instances=11)
    template = expand(
        Genotype.parse(
            "P1 S0 R0 X1@1 N1@2 N1@3 N1@4 N1@5 N1@6 N1@7 N1@8 N1@9 N0@10 E0 I0"
        ),
        grammar,
        tables,
    )
    assert template.shots == 10

    for idx in range(len(task)):
        prompt = instantiate(template, task, idx)
        assert idx not in prompt.example_ids
        assert sorted(prompt.example_ids) == [j for j in range(len(task)) if j != idx]


def test_instantiate_needs_enough_instances(
    grammar: Grammar, tables: GenericTables, make_task: TaskFactory
) -> None:
    task = make_task(num_instances=2)
    template = expand(Genotype.parse("P1 S0 R0 X1@1 N0@2 E0 I0"), grammar, tables)

    with pytest.raises(InsufficientExamplesError):
        instantiate(template, task, 0)


def test_render_reference_leaves_the_entry_blank(
    zero_shot_genotype: Genotype,
    grammar: Grammar,
    tables: GenericTables,
    task: TaskDataset,
) -> None:
    template = expand(zero_shot_genotype, grammar, tables)
    text = render_reference(template, task, ())

    assert text == f"{task.task_request}\n\n{task.llm_instruction}"
