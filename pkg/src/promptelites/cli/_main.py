# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import argparse
import logging
from collections.abc import Callable, Sequence

from promptelites import utils
from promptelites._errors import PromptElitesError

from ._commands import cmd_analyze, cmd_compare, cmd_convert, cmd_heatmap, cmd_run
from ._parser import build_parser

_COMMANDS: dict[str, Callable[[argparse.Namespace], int]] = {
    "run": cmd_run,
    "compare": cmd_compare,
    "analyze": cmd_analyze,
    "heatmap": cmd_heatmap,
    "convert": cmd_convert,
}


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point of the command line.

    Returns:
        0 on success, 1 when the command fails, 2 on usage errors.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        needs_model = args.command in ("run", "compare")
        if needs_model and args.mock is None and args.endpoint is None:
            parser.error("one of --mock or --endpoint is required")
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    library_logger = utils.get_library_logger()
    handler = logging.StreamHandler()
    handler.setFormatter(utils.get_formatter())
    library_logger.addHandler(handler)
    library_logger.setLevel(logging.DEBUG if args.verbose else logging.INFO)

    try:
        return _COMMANDS[args.command](args)
    except (PromptElitesError, OSError, ValueError) as e:
        library_logger.error("%s failed: %s: %s", args.command, type(e).__name__, e)
        return 1
    finally:
        library_logger.removeHandler(handler)
        handler.close()
