# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import json
from pathlib import Path
from typing import Any

from promptelites._errors import SchemaError
from promptelites.typing import PathLike

from ._dataset import TaskDataset, TaskInstance
from ._errors import TaskParseError

DEFAULT_INSTRUCTION = "Answer with only the correct option and nothing else."


def convert_bigbench(
    path: PathLike,
    name: str | None = None,
    task_request: str | None = None,
    llm_instruction: str = DEFAULT_INSTRUCTION,
    limit: int | None = None,
) -> TaskDataset:
    """Convert a BIG-bench JSON task into a task dataset.

    Examples with `target_scores` use their highest-scoring option as target,
    and the options become the admissible answers when every example offers
    the same ones. Examples with a `target` string (or list of strings, of
    which the first is kept) are open-ended.

    Args:
        path: The path to the BIG-bench `task.json` file.
        name: The name of the task. Defaults to the `name` of the file.
        task_request: The task request. Defaults to the `description` of the
            file.
        llm_instruction: The LLM instruction.
        limit: Keep only the first `limit` examples.

    Returns:
        The converted dataset.
    """
    try:
        document = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise TaskParseError(f"Invalid BIG-bench file '{path}': {e}.") from e

    if not isinstance(document, dict):
        raise SchemaError("<root>", "the BIG-bench document must be a JSON object")

    raw_examples = document.get("examples")
    if not isinstance(raw_examples, list) or len(raw_examples) == 0:
        raise SchemaError("examples", "must be a non-empty list")
    if limit is not None:
        raw_examples = raw_examples[:limit]

    instances: list[TaskInstance] = []
    option_sets: set[tuple[str, ...]] = set()
    for idx, example in enumerate(raw_examples):
        if not isinstance(example, dict) or not isinstance(example.get("input"), str):
            raise SchemaError(f"examples[{idx}].input", "must be a string")

        target, options = _parse_target(example, idx)
        option_sets.add(options)
        instances.append(TaskInstance(input=example["input"].strip(), target=target))

    choices = None
    if len(option_sets) == 1 and len(first := next(iter(option_sets))) > 0:
        choices = first

    request = task_request or str(document.get("description", "")).strip()
    if len(request) == 0:
        raise SchemaError("description", "empty, pass a task request explicitly")

    return TaskDataset(
        name=name or str(document.get("name") or Path(path).parent.name),
        task_request=request,
        llm_instruction=llm_instruction,
        instances=tuple(instances),
        choices=choices,
    )


# --------------------------------------------------------------------------- #
# Private Functions
# --------------------------------------------------------------------------- #


def _parse_target(example: dict[str, Any], idx: int) -> tuple[str, tuple[str, ...]]:
    scores = example.get("target_scores")
    if isinstance(scores, dict) and len(scores) > 0:
        options = tuple(str(option) for option in scores)
        best = max(options, key=lambda option: float(scores[option]))
        return best, options

    match example.get("target"):
        case str(target):
            return target.strip(), ()
        case [str(target), *_]:
            return target.strip(), ()
        case _:
            raise SchemaError(
                f"examples[{idx}].target", "needs 'target' or 'target_scores'"
            )
