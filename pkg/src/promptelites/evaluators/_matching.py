# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import string
from collections.abc import Sequence

from ._errors import AmbiguousOutputError

_STRIPPED = string.punctuation + string.whitespace


def normalize_answer(text: str) -> str:
    """Lowercase a text and strip its surrounding whitespace and punctuation."""
    return text.lower().strip(_STRIPPED)


def match_answer(
    raw_output: str,
    target: str,
    choices: Sequence[str] | None = None,
) -> bool:
    """Decide whether a model output gives the expected answer.

    The output matches if its normalized form equals the normalized target.
    Otherwise, for tasks with admissible answers, the output is read as the
    choice it equals or, failing that, as the unique choice that is a prefix of
    it or that it is a prefix of (outputs are cut to a few tokens).

    Raises:
        AmbiguousOutputError: If the output could stand for several choices.
    """
    output = normalize_answer(raw_output)
    expected = normalize_answer(target)
    if len(output) == 0:
        return False
    if output == expected:
        return True
    if choices is None:
        return False

    normalized = [normalize_answer(choice) for choice in choices]
    if output in normalized:
        return False

    candidates = [
        choice
        for choice, norm in zip(choices, normalized, strict=True)
        if len(norm) > 0 and (output.startswith(norm) or norm.startswith(output))
    ]
    if len(candidates) > 1:
        raise AmbiguousOutputError(raw_output, candidates)
    return len(candidates) == 1 and normalize_answer(candidates[0]) == expected
