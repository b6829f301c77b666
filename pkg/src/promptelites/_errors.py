# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0


class PromptElitesError(Exception):
    """Base class of all the errors raised by the library."""


class SchemaError(PromptElitesError, ValueError):
    """Raised when a document misses a field or a field has an invalid value.

    Attributes:
        field: The path of the offending field, e.g. `instances[3].target`.
    """

    def __init__(self, field: str, reason: str | None = None) -> None:
        message = f"Invalid or missing field '{field}'"
        super().__init__(message if reason is None else f"{message}: {reason}")
        self.field = field
