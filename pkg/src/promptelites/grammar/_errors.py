# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

from typing import TYPE_CHECKING

from promptelites._errors import PromptElitesError

if TYPE_CHECKING:
    from ._genotype import ValidationFailure


class GrammarError(PromptElitesError, ValueError):
    """Raised when a grammar or a generic table document is malformed."""


class GenotypeError(PromptElitesError, ValueError):
    """Raised when a genotype does not replay against a grammar."""

    def __init__(self, failure: "ValidationFailure") -> None:
        super().__init__(failure.message)
        self.failure = failure
