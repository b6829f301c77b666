# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import threading
from dataclasses import dataclass
from typing import Protocol

from promptelites.phenotype import Phenotype
from promptelites.tasks import TaskInstance


@dataclass(frozen=True)
class CompletionRequest:
    """A prompt to complete, with what the mock models need to answer it.

    Attributes:
        text: The full prompt text.
        instance_index: The index of the evaluated task instance.
        instance: The evaluated task instance.
        choices: The admissible answers of the task, if any.
        phenotype: The phenotype of the individual the prompt comes from.
    """

    text: str
    instance_index: int
    instance: TaskInstance
    choices: tuple[str, ...] | None
    phenotype: Phenotype


class LanguageModel(Protocol):
    """Interface for the models answering the prompts.

    Implementations must be safe to call from several threads at once.
    """

    @property
    def num_calls(self) -> int:
        """The number of completions actually computed (cache hits excluded)."""
        ...

    def complete(self, request: CompletionRequest) -> str:
        """Complete a prompt.

        Returns:
            The completion, cut to the configured number of output tokens.
        """
        ...

    def close(self) -> None:
        """Release the resources held by the model."""
        ...


class CallCounter:
    """A thread-safe counter."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._value = 0

    @property
    def value(self) -> int:
        with self._lock:
            return self._value

    def increment(self) -> None:
        with self._lock:
            self._value += 1


def truncate_tokens(text: str, max_tokens: int) -> str:
    """Keep the first `max_tokens` whitespace-separated tokens of a text."""
    return " ".join(text.split()[:max_tokens])
