# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import string
from dataclasses import dataclass
from typing import Any, Self

from promptelites.grammar import PromptTemplate

from ._errors import EmptyTextError


@dataclass(frozen=True)
class Phenotype:
    """The behavioral descriptors of an individual.

    Attributes:
        shots: The number of examples.
        word_count: The number of words of the instance-independent prompt.
        depth: The requested number of reasoning steps, `0` when absent.
        has_context: Whether the prompt opens with a context role.
        type_token_ratio: The lexical diversity of the instance-independent
            prompt. Recorded for analysis only, it is not an archive axis.
    """

    shots: int
    word_count: int
    depth: int
    has_context: bool
    type_token_ratio: float = 0.0

    def __post_init__(self) -> None:
        for name in ("shots", "word_count", "depth"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative.")
        if not 0.0 <= self.type_token_ratio <= 1.0:
            raise ValueError("type_token_ratio must be in [0, 1].")

    @classmethod
    def from_dict(cls, document: dict[str, Any]) -> Self:
        return cls(
            shots=int(document["shots"]),
            word_count=int(document["word_count"]),
            depth=int(document["depth"]),
            has_context=bool(document["has_context"]),
            type_token_ratio=float(document.get("type_token_ratio", 0.0)),
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "shots": self.shots,
            "word_count": self.word_count,
            "depth": self.depth,
            "has_context": self.has_context,
            "type_token_ratio": self.type_token_ratio,
        }


def word_count(text: str) -> int:
    """Count the whitespace-separated tokens of a text."""
    return len(text.split())


def type_token_ratio(text: str) -> float:
    """Compute the ratio between distinct words and words of a text.

    Words are whitespace-separated tokens, lowercased and stripped of leading
    and trailing punctuation. Tokens made only of punctuation are dropped.

    Raises:
        EmptyTextError: If the text has no words.
    """
    words = [token.lower().strip(string.punctuation) for token in text.split()]
    words = [word for word in words if len(word) > 0]
    if len(words) == 0:
        raise EmptyTextError("Cannot compute the type-token ratio of an empty text.")

    return len(set(words)) / len(words)


def extract(template: PromptTemplate, reference_text: str) -> Phenotype:
    """Measure the phenotype of an individual.

    Args:
        template: The expanded template, providing the structural descriptors.
        reference_text: The prompt of the individual with the task entry left
            blank, providing the word count and the type-token ratio.
    """
    try:
        ttr = type_token_ratio(reference_text)
    except EmptyTextError:
        ttr = 0.0

    return Phenotype(
        shots=template.shots,
        word_count=word_count(reference_text),
        depth=template.depth,
        has_context=template.has_context,
        type_token_ratio=ttr,
    )
