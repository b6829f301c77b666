# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

from promptelites._errors import PromptElitesError


class TaskParseError(PromptElitesError, ValueError):
    """Raised when a task file is not valid JSON."""


class NotEnoughInstancesError(PromptElitesError, ValueError):
    """Raised when more evaluation instances are requested than available."""


class InsufficientExamplesError(PromptElitesError, ValueError):
    """Raised when a template asks for more examples than the pool can give."""
