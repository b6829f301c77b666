# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

from ._errors import PromptElitesError, SchemaError

__all__ = [
    # _errors
    "PromptElitesError",
    "SchemaError",
]
