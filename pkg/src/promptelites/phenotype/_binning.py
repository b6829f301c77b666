# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import enum
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Self

from promptelites.typing import Configs, Configurable, str_enum

from ._phenotype import Phenotype


@str_enum
class Axis(enum.Enum):
    """An axis of the archive."""

    SHOTS = "shots"
    WORDS = "words"
    DEPTH = "depth"


@dataclass(frozen=True, order=True)
class BinKey:
    """The coordinates of an archive cell."""

    shots_bin: int
    words_bin: int
    depth_bin: int

    def __post_init__(self) -> None:
        if min(self.shots_bin, self.words_bin, self.depth_bin) < 0:
            raise ValueError("Bin indices must be non-negative.")

    def index(self, axis: Axis) -> int:
        match axis:
            case Axis.SHOTS:
                return self.shots_bin
            case Axis.WORDS:
                return self.words_bin
            case Axis.DEPTH:
                return self.depth_bin

    def project(self, axes: Sequence[Axis]) -> tuple[int, ...]:
        """The indices of the key along the given axes."""
        return tuple(self.index(axis) for axis in axes)

    def to_list(self) -> list[int]:
        return [self.shots_bin, self.words_bin, self.depth_bin]

    def __str__(self) -> str:
        return f"({self.shots_bin}, {self.words_bin}, {self.depth_bin})"


@dataclass(frozen=True)
class BinConfig(Configurable):
    """The width of the bins along each axis of the archive."""

    shots_width: int = 2
    words_width: int = 25
    depth_width: int = 2

    def __post_init__(self) -> None:
        if min(self.shots_width, self.words_width, self.depth_width) < 1:
            raise ValueError("Bin widths must be at least 1.")

    @classmethod
    def parse(cls, text: str) -> Self:
        """Parse the comma-separated widths, e.g. `"2,25,2"`."""
        parts = [part.strip() for part in text.split(",")]
        if len(parts) != 3:
            raise ValueError(f"Expected three comma-separated widths, got '{text}'.")
        shots, words, depth = (int(part) for part in parts)
        return cls(shots, words, depth)

    def bin(self, phenotype: Phenotype) -> BinKey:
        """Discretize a phenotype by flooring each value by its bin width."""
        return BinKey(
            shots_bin=phenotype.shots // self.shots_width,
            words_bin=phenotype.word_count // self.words_width,
            depth_bin=phenotype.depth // self.depth_width,
        )

    def to_list(self) -> list[int]:
        return [self.shots_width, self.words_width, self.depth_width]

    def get_configs(self, recursive: bool) -> Configs:
        return {
            "shots_width": self.shots_width,
            "words_width": self.words_width,
            "depth_width": self.depth_width,
        }
