# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import pytest

from promptelites.evaluators import (
    AmbiguousOutputError,
    match_answer,
    normalize_answer,
)


def test_normalize_answer() -> None:
    assert normalize_answer("  Yes.\n") == "yes"
    assert normalize_answer("(B)") == "b"


@pytest.mark.parametrize(
    ("output", "target", "choices", "expected"),
    [
        ("Yes.", "yes", ("yes", "no"), True),
        ("YES", "yes", None, True),
        ("no", "yes", ("yes", "no"), False),
        ("Yes, because", "yes", ("yes", "no"), True),
        ("Yes, because", "yes", None, False),
        ("inva", "invalid", ("valid", "invalid"), True),
        ("inva", "valid", ("valid", "invalid"), False),
        ("valid", "invalid", ("valid", "invalid"), False),
        ("", "yes", ("yes", "no"), False),
        ("...", "yes", ("yes", "no"), False),
        ("maybe", "yes", ("yes", "no"), False),
    ],
)
def test_match_answer(
    output: str, target: str, choices: tuple[str, ...] | None, expected: bool
) -> None:
    assert match_answer(output, target, choices) is expected


def test_match_answer_ambiguous() -> None:
    with pytest.raises(AmbiguousOutputError) as info:
        match_answer("ye", "yes", ("yes", "yesterday"))
    assert info.value.candidates == ("yes", "yesterday")
