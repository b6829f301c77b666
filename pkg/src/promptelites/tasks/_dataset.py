# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Self

from promptelites._errors import SchemaError
from promptelites.typing import Configs, Configurable, PathLike

from ._errors import TaskParseError


@dataclass(frozen=True)
class TaskInstance:
    """A question of the task together with its expected answer."""

    input: str
    target: str

    def __post_init__(self) -> None:
        if len(self.input.strip()) == 0:
            raise SchemaError("input", "must be non-empty")
        if len(self.target.strip()) == 0:
            raise SchemaError("target", "must be non-empty")


@dataclass(frozen=True)
class TaskDataset(Configurable):
    """A benchmark task: the text filling the task placeholders and its instances.

    Attributes:
        name: The name of the task, used to name the output files.
        task_request: The text replacing `[[task request]]`.
        llm_instruction: The text replacing `[[LLM instruction]]`.
        instances: The answer-bearing instances. They fill `[[task entry]]` and
            are also the pool the examples are drawn from.
        choices: The admissible answer labels, if the task is a multiple-choice
            one.
    """

    name: str
    task_request: str
    llm_instruction: str
    instances: tuple[TaskInstance, ...]
    choices: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if len(self.instances) == 0:
            raise SchemaError("instances", "must contain at least one instance")

        if self.choices is not None:
            if len(self.choices) == 0:
                raise SchemaError("choices", "must be non-empty when present")
            for idx, instance in enumerate(self.instances):
                if instance.target not in self.choices:
                    raise SchemaError(
                        f"instances[{idx}].target",
                        f"'{instance.target}' is not one of {list(self.choices)}",
                    )

    # ----------------------------------------------------------------------- #
    # Factory Methods
    # ----------------------------------------------------------------------- #

    @classmethod
    def from_dict(cls, document: Any) -> Self:
        """Build a dataset from its JSON form, checking every field."""
        if not isinstance(document, dict):
            raise SchemaError("<root>", "the task document must be a JSON object")

        name = _required_text(document, "name")
        task_request = _required_text(document, "task_request")
        llm_instruction = _required_text(document, "llm_instruction")

        choices: tuple[str, ...] | None = None
        if document.get("choices") is not None:
            raw_choices = document["choices"]
            if not isinstance(raw_choices, list) or not all(
                isinstance(choice, str) for choice in raw_choices
            ):
                raise SchemaError("choices", "must be a list of strings")
            choices = tuple(raw_choices)

        raw_instances = document.get("instances")
        if not isinstance(raw_instances, list):
            raise SchemaError("instances", "must be a list of objects")

        instances: list[TaskInstance] = []
        for idx, raw in enumerate(raw_instances):
            if not isinstance(raw, dict):
                raise SchemaError(f"instances[{idx}]", "must be an object")
            try:
                instance = TaskInstance(
                    input=_required_text(raw, "input"),
                    target=_required_text(raw, "target"),
                )
            except SchemaError as e:
                raise SchemaError(f"instances[{idx}].{e.field}") from e
            instances.append(instance)

        return cls(
            name=name,
            task_request=task_request,
            llm_instruction=llm_instruction,
            instances=tuple(instances),
            choices=choices,
        )

    # ----------------------------------------------------------------------- #
    # Public Methods
    # ----------------------------------------------------------------------- #

    def to_dict(self) -> dict[str, Any]:
        """The JSON form accepted by `from_dict`."""
        document: dict[str, Any] = {
            "name": self.name,
            "task_request": self.task_request,
            "llm_instruction": self.llm_instruction,
        }
        if self.choices is not None:
            document["choices"] = list(self.choices)
        document["instances"] = [
            {"input": instance.input, "target": instance.target}
            for instance in self.instances
        ]
        return document

    def get_configs(self, recursive: bool) -> Configs:
        return {
            "name": self.name,
            "num_instances": len(self.instances),
            "choices": None if self.choices is None else list(self.choices),
        }

    def __len__(self) -> int:
        return len(self.instances)


def load_task(path: PathLike) -> TaskDataset:
    """Load and check a task file.

    Raises:
        TaskParseError: If the file is not valid JSON.
        SchemaError: If a field is missing or invalid.
    """
    try:
        document = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise TaskParseError(f"Invalid task file '{path}': {e}.") from e

    return TaskDataset.from_dict(document)


# --------------------------------------------------------------------------- #
# Private Functions
# --------------------------------------------------------------------------- #


def _required_text(document: dict[str, Any], key: str) -> str:
    value = document.get(key)
    if not isinstance(value, str) or len(value.strip()) == 0:
        raise SchemaError(key, "must be a non-empty string")
    return value
