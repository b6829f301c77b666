# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from ._grammar import Placeholder

type Fragment = str | Placeholder
"""Literal text or an unresolved task-specific placeholder."""

type Segment = tuple[Fragment, ...]
"""The fragments produced by one terminal of the derivation."""

SEGMENT_SEPARATOR = "\n"


@dataclass(frozen=True)
class PromptTemplate:
    """The terminal string of a derivation, generic placeholders resolved.

    Attributes:
        segments: One segment per derived terminal, in derivation order.
        depth: The reasoning depth requested by the thought directive, `0`
            when the derivation has none.
        has_context: Whether the derivation includes a context role.
        example_seeds: The seed of each `[[example]]` slot, in order.
    """

    segments: tuple[Segment, ...]
    depth: int
    has_context: bool
    example_seeds: tuple[int, ...]

    @property
    def shots(self) -> int:
        """The number of `[[example]]` placeholders of the template."""
        return len(self.example_seeds)

    def count(self, placeholder: Placeholder) -> int:
        """Count the occurrences of a placeholder in the template."""
        return sum(
            1
            for segment in self.segments
            for fragment in segment
            if fragment is placeholder
        )

    def render(
        self,
        values: Mapping[Placeholder, str],
        examples: Sequence[str],
    ) -> str:
        """Fill the placeholders and join the segments with single newlines.

        Args:
            values: The text of each non-example placeholder.
            examples: The text of each example slot, consumed in order.

        Returns:
            The rendered text.
        """
        if len(examples) != self.shots:
            raise ValueError(
                f"Expected {self.shots} examples, got {len(examples)}."
            )

        next_example = iter(examples)
        lines: list[str] = []
        for segment in self.segments:
            parts: list[str] = []
            for fragment in segment:
                match fragment:
                    case Placeholder.EXAMPLE:
                        parts.append(next(next_example))
                    case Placeholder():
                        parts.append(values[fragment])
                    case str():
                        parts.append(fragment)
            lines.append("".join(parts))

        return SEGMENT_SEPARATOR.join(lines)

    def __str__(self) -> str:
        return SEGMENT_SEPARATOR.join(
            "".join(
                fragment.marker if isinstance(fragment, Placeholder) else fragment
                for fragment in segment
            )
            for segment in self.segments
        )
