# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

from ._decorators import str_enum
from ._protocols import Configurable, Stateful
from ._types import Configs, PathLike, StateDict

__all__ = [
    # _decorators
    "str_enum",
    # _protocols
    "Configurable",
    "Stateful",
    # _types
    "Configs",
    "PathLike",
    "StateDict",
]
