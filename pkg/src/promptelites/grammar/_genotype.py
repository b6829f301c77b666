# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import enum
import re
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from typing import Any, Self

from promptelites._errors import SchemaError
from promptelites.typing import str_enum

_CHOICE_PATTERN = re.compile(r"^([A-Za-z_]+?)(\d+)(?:@(\d+))?$")


@dataclass(frozen=True)
class Choice:
    """The choice of production `index` when expanding `symbol`.

    Choices whose production emits an `[[example]]` placeholder also carry the
    seed that decides which task instance fills that example slot.
    """

    symbol: str
    index: int
    seed: int | None = None

    def __str__(self) -> str:
        text = f"{self.symbol}{self.index}"
        return text if self.seed is None else f"{text}@{self.seed}"


@dataclass(frozen=True)
class Genotype:
    """An ordered list of production choices in depth-first expansion order."""

    choices: tuple[Choice, ...]

    # ----------------------------------------------------------------------- #
    # Factory Methods
    # ----------------------------------------------------------------------- #

    @classmethod
    def parse(cls, text: str) -> Self:
        """Parse the compact notation, e.g. `"P2 C6 S0 R0 X0@17 T3 E0 I0"`."""
        choices: list[Choice] = []
        for token in text.replace(",", " ").split():
            match = _CHOICE_PATTERN.match(token)
            if match is None:
                raise ValueError(f"Invalid choice token '{token}'.")
            seed = None if match.group(3) is None else int(match.group(3))
            choices.append(Choice(match.group(1), int(match.group(2)), seed))

        return cls(tuple(choices))

    @classmethod
    def from_list(cls, items: Sequence[Sequence[Any]]) -> Self:
        """Build a genotype from its JSON form: `[[symbol, index, seed], ...]`.

        Raises:
            SchemaError: If an item is not a `[symbol, index]` or
                `[symbol, index, seed]` list.
        """
        choices = []
        for position, item in enumerate(items):
            try:
                symbol, index, *rest = item
                seed = None if len(rest) == 0 or rest[0] is None else int(rest[0])
                choice = Choice(str(symbol), int(index), seed)
            except (TypeError, ValueError) as e:
                raise SchemaError(f"genotype[{position}]", str(e)) from e
            if len(rest) > 1:
                raise SchemaError(f"genotype[{position}]", "too many values")
            choices.append(choice)
        return cls(tuple(choices))

    # ----------------------------------------------------------------------- #
    # Public Methods
    # ----------------------------------------------------------------------- #

    def to_list(self) -> list[list[Any]]:
        """The JSON form of the genotype."""
        return [[choice.symbol, choice.index, choice.seed] for choice in self.choices]

    # ----------------------------------------------------------------------- #
    # Magic Methods
    # ----------------------------------------------------------------------- #

    def __len__(self) -> int:
        return len(self.choices)

    def __iter__(self) -> Iterator[Choice]:
        return iter(self.choices)

    def __str__(self) -> str:
        return " ".join(str(choice) for choice in self.choices)


@str_enum
class ValidationIssue(enum.Enum):
    """Why a genotype does not replay against a grammar."""

    CHOICE_UNDERFLOW = "choice_underflow"
    CHOICE_OVERFLOW = "choice_overflow"
    INDEX_OUT_OF_RANGE = "index_out_of_range"
    SYMBOL_MISMATCH = "symbol_mismatch"


@dataclass(frozen=True)
class ValidationFailure:
    """Where and why the replay of a genotype failed.

    Attributes:
        position: The index in the choice list at which the replay failed.
        nonterminal: The nonterminal being expanded, or `None` when the
            derivation was already complete (overflow).
        issue: The kind of failure.
    """

    position: int
    nonterminal: str | None
    issue: ValidationIssue

    @property
    def message(self) -> str:
        match self.issue:
            case ValidationIssue.CHOICE_UNDERFLOW:
                return (
                    f"Missing choice at position {self.position} to expand "
                    f"'{self.nonterminal}'."
                )
            case ValidationIssue.CHOICE_OVERFLOW:
                return (
                    f"Unused choices from position {self.position}: the derivation "
                    "is already complete."
                )
            case ValidationIssue.INDEX_OUT_OF_RANGE:
                return (
                    f"Rule index at position {self.position} is out of range for "
                    f"'{self.nonterminal}'."
                )
            case ValidationIssue.SYMBOL_MISMATCH:
                return (
                    f"Choice at position {self.position} does not expand "
                    f"'{self.nonterminal}'."
                )
