# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import json
from collections.abc import Callable
from pathlib import Path

import pytest

from promptelites.grammar import GenericTables, Genotype, Grammar
from promptelites.tasks import TaskDataset, TaskInstance

type TaskFactory = Callable[..., TaskDataset]


def build_task(
    num_instances: int = 60,
    choices: tuple[str, ...] | None = ("yes", "no"),
    name: str = "toy",
) -> TaskDataset:
    """A synthetic yes/no task whose targets alternate."""
    labels = choices if choices is not None else ("alpha", "beta")
    instances = tuple(
        TaskInstance(
            input=f"Is {idx} an even number?",
            target=labels[idx % len(labels)],
        )
        for idx in range(num_instances)
    )
    return TaskDataset(
        name=name,
        task_request="Decide whether the statement holds.",
        llm_instruction="Answer with only yes or no.",
        instances=instances,
        choices=choices,
    )


@pytest.fixture
def make_task() -> TaskFactory:
    return build_task


@pytest.fixture
def task() -> TaskDataset:
    return build_task()


@pytest.fixture
def grammar() -> Grammar:
    return Grammar.default()


@pytest.fixture
def tables() -> GenericTables:
    return GenericTables.default()


@pytest.fixture
def one_shot_genotype() -> Genotype:
    """Context role 6, one example, three reasoning steps."""
    return Genotype.parse("P2 C5 S0 R0 X0@17 T2 E0 I0")


@pytest.fixture
def zero_shot_genotype() -> Genotype:
    """No context role, no examples, no reasoning directive."""
    return Genotype.parse("P1 S1 R0 E0 I0")


@pytest.fixture
def task_file(tmp_path: Path, task: TaskDataset) -> Path:
    path = tmp_path / "task.json"
    path.write_text(json.dumps(task.to_dict()), encoding="utf-8")
    return path
