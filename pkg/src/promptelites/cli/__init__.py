# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

from ._commands import cmd_analyze, cmd_compare, cmd_convert, cmd_heatmap, cmd_run
from ._main import main
from ._parser import build_parser

__all__ = [
    # _commands
    "cmd_analyze",
    "cmd_compare",
    "cmd_convert",
    "cmd_heatmap",
    "cmd_run",
    # _main
    "main",
    # _parser
    "build_parser",
]
