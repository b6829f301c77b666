# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import argparse

from promptelites.archive import DEFAULT_UNIVERSE
from promptelites.evaluators import DEFAULT_TOKEN_ENV, MOCK_RULES
from promptelites.evolve import Algorithm, RunConfig
from promptelites.grammar import DEFAULT_MAX_SHOTS
from promptelites.phenotype import BinConfig
from promptelites.stats import DEFAULT_THRESHOLD

_DEFAULTS = RunConfig()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="promptelites",
        description="Grammar-based MAP-Elites search over prompt structures.",
    )
    parser.add_argument(
        "--verbose", action="store_true", help="Also log debug messages."
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    run = subparsers.add_parser("run", help="Run one search and export its results.")
    run.add_argument(
        "--algo",
        choices=[str(algorithm) for algorithm in Algorithm],
        default=str(Algorithm.MAP_ELITES),
        help="The search algorithm.",
    )
    run.add_argument("--seed", type=_non_negative_int, default=_DEFAULTS.seed)
    _add_search_arguments(run)

    compare = subparsers.add_parser(
        "compare",
        help="Run both algorithms over paired seeds and compare their coverage.",
    )
    compare.add_argument(
        "--seed", type=_non_negative_int, default=_DEFAULTS.seed, help="The first seed."
    )
    compare.add_argument(
        "--seeds", type=_positive_int, default=10, help="The number of paired seeds."
    )
    _add_search_arguments(compare)

    analyze = subparsers.add_parser(
        "analyze", help="Compute the coverage, correlation and enrichment tables."
    )
    analyze.add_argument(
        "--map", type=str, default=None, help="The MAP-Elites archive export."
    )
    analyze.add_argument(
        "--random", type=str, default=None, help="The random-search archive export."
    )
    analyze.add_argument(
        "--population",
        type=str,
        action="append",
        default=[],
        help="A population (or archive) export. Repeat to pool several runs.",
    )
    analyze.add_argument(
        "--enrichment",
        action="store_true",
        help="Also compare the features of the high performers with the population.",
    )
    analyze.add_argument("--label", type=str, default="analysis")
    analyze.add_argument(
        "--threshold", type=_probability, default=DEFAULT_THRESHOLD
    )
    analyze.add_argument(
        "--universe", type=_universe, default=DEFAULT_UNIVERSE, metavar="SHOTS,DEPTH"
    )
    analyze.add_argument("--out-dir", type=str, default="output")

    heatmap = subparsers.add_parser(
        "heatmap", help="Export the elites of an archive in the shots by depth plane."
    )
    heatmap.add_argument("--archive", type=str, required=True)
    heatmap.add_argument(
        "--out",
        type=str,
        default=None,
        help="The CSV file (default: next to the archive).",
    )
    heatmap.add_argument(
        "--svg", type=str, default=None, help="Also render the scatter to this file."
    )

    convert = subparsers.add_parser(
        "convert", help="Convert a BIG-bench task to the task format."
    )
    convert.add_argument("--input", type=str, required=True)
    convert.add_argument("--output", type=str, required=True)
    convert.add_argument("--name", type=str, default=None)
    convert.add_argument("--task-request", type=str, default=None)
    convert.add_argument("--instruction", type=str, default=None)
    convert.add_argument("--limit", type=_positive_int, default=None)

    return parser


# --------------------------------------------------------------------------- #
# Private Functions
# --------------------------------------------------------------------------- #


def _add_search_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--task", type=str, required=True, help="The task file.")
    parser.add_argument("--grammar", type=str, default=None)
    parser.add_argument("--tables", type=str, default=None)

    model = parser.add_argument_group("model")
    model.add_argument("--endpoint", type=str, default=None)
    model.add_argument("--token-env", type=str, default=DEFAULT_TOKEN_ENV)
    model.add_argument("--mock", choices=MOCK_RULES, default=None)
    model.add_argument("--mock-probability", type=_probability, default=0.5)
    model.add_argument("--model-tag", type=str, default=None)
    model.add_argument("--cache-dir", type=str, default=None)

    search = parser.add_argument_group("search")
    search.add_argument(
        "--population", type=_positive_int, default=_DEFAULTS.population_size
    )
    search.add_argument(
        "--iterations", type=_positive_int, default=_DEFAULTS.num_iterations
    )
    search.add_argument("--mut-rate", type=_probability, default=_DEFAULTS.mut_rate)
    search.add_argument(
        "--mut-chance", type=_probability, default=_DEFAULTS.mut_chance
    )
    search.add_argument(
        "--evaluations", type=_positive_int, default=_DEFAULTS.num_evaluations
    )
    search.add_argument(
        "--resample-eval-instances",
        action="store_true",
        help="Draw new evaluation instances for every individual.",
    )
    search.add_argument(
        "--bin-sizes",
        type=_bin_config,
        default=BinConfig(),
        metavar="SHOTS,WORDS,DEPTH",
    )
    search.add_argument(
        "--max-shots", type=_non_negative_int, default=DEFAULT_MAX_SHOTS
    )
    search.add_argument("--parallelism", type=_positive_int, default=1)
    search.add_argument("--threshold", type=_probability, default=DEFAULT_THRESHOLD)
    search.add_argument(
        "--universe", type=_universe, default=DEFAULT_UNIVERSE, metavar="SHOTS,DEPTH"
    )

    output = parser.add_argument_group("output")
    output.add_argument("--out-dir", type=str, default="output")
    output.add_argument(
        "--log-file",
        type=str,
        default=None,
        help="Append the run logs to this file ('{run_name}' is replaced).",
    )
    output.add_argument("--wandb-project", type=str, default=None)
    output.add_argument("--progress", action="store_true", help="Show progress bars.")


def _positive_int(text: str) -> int:
    value = _int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _non_negative_int(text: str) -> int:
    value = _int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text}") from e


def _probability(text: str) -> float:
    try:
        value = float(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected a number, got {text}") from e
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"expected a value in [0, 1], got {text}")
    return value


def _bin_config(text: str) -> BinConfig:
    try:
        return BinConfig.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _universe(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected two bin counts, got {text}")
    shots, depth = (_positive_int(part.strip()) for part in parts)
    return shots, depth
