# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

from ._callback import Callback

__all__ = [
    # _callback
    "Callback",
]
