# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

from promptelites._errors import PromptElitesError


class EmptyTextError(PromptElitesError, ValueError):
    """Raised when a text has no words to measure."""
