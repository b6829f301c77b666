# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import json
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Self

from promptelites.typing import Configs, Configurable, PathLike

from ._errors import GrammarError

TABLE_SIZE = 10

# The role texts are replaceable configuration: only the first one comes with
# the grammar description, the other nine follow its register.
DEFAULT_CONTEXTS = (
    "You are a researcher presenting your findings at a scientific conference, "
    "answering questions from fellow scientists.",
    "You are a university professor explaining a concept to a class of "
    "attentive students.",
    "You are an expert consultant advising a client who needs a precise answer.",
    "You are a careful editor checking a manuscript for factual and logical "
    "errors.",
    "You are a judge weighing the evidence presented before reaching a verdict.",
    "You are a teacher grading an exam and must give the single correct answer.",
    "You are a detective reasoning about the clues of a case.",
    "You are a librarian helping a visitor find exactly the information they "
    "asked for.",
    "You are a quiz show contestant who answers concisely and correctly.",
    "You are an analyst preparing a brief report for a decision maker.",
)

DEFAULT_THOUGHTS = tuple(
    f"Think step by step. The number of steps you must consider is {number}."
    for number in range(1, TABLE_SIZE + 1)
)


@dataclass(frozen=True)
class GenericTables(Configurable):
    """The texts substituted for the generic `((cK))` and `((tK))` tokens.

    Entry `K` (one-based) of `thoughts` asks for `K` reasoning steps, so it
    carries a reasoning depth of `K`.
    """

    contexts: tuple[str, ...] = DEFAULT_CONTEXTS
    thoughts: tuple[str, ...] = DEFAULT_THOUGHTS

    def __post_init__(self) -> None:
        for name, entries in (("contexts", self.contexts), ("thoughts", self.thoughts)):
            if len(entries) != TABLE_SIZE:
                raise GrammarError(
                    f"The '{name}' table must have exactly {TABLE_SIZE} entries, "
                    f"got {len(entries)}."
                )
            if any(not isinstance(entry, str) or not entry for entry in entries):
                raise GrammarError(f"The '{name}' table entries must be non-empty.")

    @classmethod
    def default(cls) -> Self:
        return cls()

    @classmethod
    def from_json(cls, path: PathLike) -> Self:
        """Load the tables from a `{"contexts": [...], "thoughts": [...]}` file."""
        try:
            with open(path, encoding="utf-8") as file:
                document = json.load(file)
        except json.JSONDecodeError as e:
            raise GrammarError(f"Invalid tables document '{path}': {e}.") from e

        if not isinstance(document, dict):
            raise GrammarError("The tables document must be a JSON object.")

        return cls(
            contexts=_as_entries(document, "contexts"),
            thoughts=_as_entries(document, "thoughts"),
        )

    def context(self, number: int) -> str:
        """The text of the one-based context entry `number`."""
        return self.contexts[self._offset(number)]

    def thought(self, number: int) -> str:
        """The text of the one-based thought entry `number`."""
        return self.thoughts[self._offset(number)]

    def depth(self, number: int) -> int:
        """The reasoning depth carried by the one-based thought entry `number`."""
        self._offset(number)
        return number

    def get_configs(self, recursive: bool) -> Configs:
        return {"contexts": list(self.contexts), "thoughts": list(self.thoughts)}

    def _offset(self, number: int) -> int:
        if not 1 <= number <= TABLE_SIZE:
            raise GrammarError(
                f"Generic table entries are numbered 1..{TABLE_SIZE}, got {number}."
            )
        return number - 1


def _as_entries(document: dict[str, object], key: str) -> tuple[str, ...]:
    entries = document.get(key)
    if not isinstance(entries, Sequence) or isinstance(entries, str):
        raise GrammarError(f"The tables document must define a '{key}' list.")
    return tuple(entries)  # type: ignore
