# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

from promptelites._errors import SchemaError

from ._bigbench import DEFAULT_INSTRUCTION, convert_bigbench
from ._dataset import TaskDataset, TaskInstance, load_task
from ._errors import (
    InsufficientExamplesError,
    NotEnoughInstancesError,
    TaskParseError,
)
from ._instantiate import (
    EXAMPLE_FORMAT,
    InstantiatedPrompt,
    instantiate,
    render_example,
    render_reference,
    select_examples,
)
from ._sampling import sample_eval_instances

__all__ = [
    # _bigbench
    "DEFAULT_INSTRUCTION",
    "convert_bigbench",
    # _dataset
    "TaskDataset",
    "TaskInstance",
    "load_task",
    # _errors
    "InsufficientExamplesError",
    "NotEnoughInstancesError",
    "SchemaError",
    "TaskParseError",
    # _instantiate
    "EXAMPLE_FORMAT",
    "InstantiatedPrompt",
    "instantiate",
    "render_example",
    "render_reference",
    "select_examples",
    # _sampling
    "sample_eval_instances",
]
