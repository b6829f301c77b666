# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import argparse
import math
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from promptelites import utils
from promptelites.archive import Individual, dump_json, load_archive, load_population
from promptelites.evaluators import EvaluatorConfig, EvaluatorKind, build_model
from promptelites.evolve import (
    Algorithm,
    Engine,
    IterationRecord,
    RunConfig,
    SearchResult,
    SearchState,
    write_run_outputs,
)
from promptelites.evolve.callbacks import Callback
from promptelites.evolve.loggers import ProgressBarLogger, TextLogger, WandbLogger
from promptelites.grammar import GenericTables, Grammar
from promptelites.reporting import (
    SIGNIFICANCE_MARKER,
    correlations_to_dict,
    format_p_value,
    render_scatter,
    write_correlation_csv,
    write_coverage_csv,
    write_enrichment_csv,
    write_heatmap_csv,
)
from promptelites.stats import (
    CoverageRow,
    coverage_table,
    effect_magnitude,
    enrichment_report,
    feature_correlations,
)
from promptelites.tasks import (
    DEFAULT_INSTRUCTION,
    TaskDataset,
    convert_bigbench,
    load_task,
)

_logger = utils.get_library_logger().getChild("cli")


def cmd_run(args: argparse.Namespace) -> int:
    config = _run_config(args, Algorithm(args.algo), args.seed)
    evaluator = _evaluator_config(args)
    task = load_task(args.task)

    result = _search(args, config, evaluator, task)
    outputs = write_run_outputs(result, args.out_dir, task.name, evaluator.tag)

    _write_line(f"run {result.run_name} finished: {_summary(result)}")
    if result.log.degraded:
        _write_line(f"degraded: {result.log.total_failures} failed requests")
    _write_line(f"archive: {outputs.archive_json}")
    _write_line(f"log: {outputs.log_json}")
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    evaluator = _evaluator_config(args)
    task = load_task(args.task)

    rows: list[tuple[str, CoverageRow]] = []
    for seed in range(args.seed, args.seed + args.seeds):
        results: dict[Algorithm, SearchResult] = {}
        for algorithm in Algorithm:
            config = _run_config(args, algorithm, seed)
            results[algorithm] = _search(args, config, evaluator, task)
            write_run_outputs(
                results[algorithm], args.out_dir, task.name, evaluator.tag
            )

        row = coverage_table(
            results[Algorithm.MAP_ELITES].archive,
            results[Algorithm.RANDOM].archive,
            args.threshold,
            args.universe,
        )
        rows.append((f"seed{seed}", row))
        _write_line(
            f"seed {seed}: hp coverage map-elites {row.hp_a:.2f} random {row.hp_b:.2f}"
        )

    mean_map = math.fsum(row.hp_a for _, row in rows) / len(rows)
    mean_random = math.fsum(row.hp_b for _, row in rows) / len(rows)
    wins = sum(1 for _, row in rows if row.hp_a >= row.hp_b)
    _write_line(
        f"mean hp coverage: map-elites {mean_map:.3f} random {mean_random:.3f} "
        f"(map-elites >= random in {wins}/{len(rows)} seeds)"
    )

    out_dir = Path(args.out_dir)
    path = out_dir / f"{_prefix(task.name, evaluator)}_compare.coverage.csv"
    write_coverage_csv(rows, path)
    _write_line(f"coverage table: {path}")
    return 0


def cmd_analyze(args: argparse.Namespace) -> int:
    if (args.map is None) != (args.random is None):
        raise ValueError("--map and --random must be given together.")
    if args.map is None and len(args.population) == 0:
        raise ValueError("Nothing to analyze: give --map/--random or --population.")

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    report: dict[str, Any] = {"label": args.label, "threshold": args.threshold}

    if args.map is not None:
        row = coverage_table(
            load_archive(args.map),
            load_archive(args.random),
            args.threshold,
            args.universe,
        )
        write_coverage_csv([(args.label, row)], out_dir / f"{args.label}.coverage.csv")
        report["coverage"] = row.to_dict()

        effect = 0.0 if row.test.effect_size is None else row.test.effect_size
        _write_line(
            f"coverage any: map-elites {100 * row.any_a:.1f}% random "
            f"{100 * row.any_b:.1f}% | hp: map-elites {100 * row.hp_a:.1f}% "
            f"random {100 * row.hp_b:.1f}%"
        )
        _write_line(
            f"chi2 {row.test.statistic:.2f} p {format_p_value(row.test.p_value)} "
            f"V {effect:.3f} ({effect_magnitude(effect)})"
            f"{SIGNIFICANCE_MARKER if row.test.significant else ''}"
        )

    if len(args.population) > 0:
        individuals = _load_individuals(args.population)
        report["population_count"] = len(individuals)
        report["mean_type_token_ratio"] = math.fsum(
            ind.phenotype.type_token_ratio for ind in individuals
        ) / len(individuals)

        correlations = feature_correlations(individuals)
        write_correlation_csv(correlations, out_dir / f"{args.label}.correlations.csv")
        report["correlations"] = correlations_to_dict(correlations)
        for feature, result in correlations.items():
            marker = SIGNIFICANCE_MARKER if result.significant else ""
            _write_line(f"spearman {feature}: {result.statistic:.3f}{marker}")

        if args.enrichment:
            enrichment = enrichment_report(individuals, args.threshold)
            write_enrichment_csv(enrichment, out_dir / f"{args.label}.enrichment.csv")
            report["enrichment"] = enrichment.to_dict()
            for feature in enrichment.features:
                marker = SIGNIFICANCE_MARKER if feature.significant else ""
                _write_line(
                    f"{feature.feature}: "
                    f"overall {100 * feature.overall_proportion:.1f}% "
                    f"high performers {100 * feature.hp_proportion:.1f}%{marker}"
                )

    path = out_dir / f"{args.label}.report.json"
    dump_json(report, path)
    _write_line(f"report: {path}")
    return 0


def cmd_heatmap(args: argparse.Namespace) -> int:
    archive = load_archive(args.archive)

    out = args.out
    if out is None:
        out = str(Path(args.archive).with_suffix("")) + ".heatmap.csv"

    rows = write_heatmap_csv(archive, out)
    _write_line(f"{rows} elites written to {out}")

    if args.svg is not None:
        render_scatter(archive, args.svg, title=Path(args.archive).name)
        _write_line(f"scatter: {args.svg}")
    return 0


def cmd_convert(args: argparse.Namespace) -> int:
    task = convert_bigbench(
        args.input,
        name=args.name,
        task_request=args.task_request,
        llm_instruction=(
            DEFAULT_INSTRUCTION if args.instruction is None else args.instruction
        ),
        limit=args.limit,
    )
    dump_json(task.to_dict(), args.output)
    _write_line(f"{len(task)} instances of '{task.name}' written to {args.output}")
    return 0


# --------------------------------------------------------------------------- #
# Private Functions
# --------------------------------------------------------------------------- #


class _SummaryPrinter(Callback):
    """Writes one line per iteration to the standard output."""

    def on_iteration_end(self, state: SearchState, record: IterationRecord) -> None:
        _write_line(
            f"[{state.config.algorithm} seed {state.config.seed}] "
            f"iteration {record.iteration}/{state.config.num_iterations}: "
            f"mean {record.mean_fitness:.3f} max {record.max_fitness:.3f} "
            f"archive {record.archive_size} best {record.best_fitness:.3f} "
            f"coverage any {record.coverage_any:.2f} hp {record.coverage_hp:.2f} "
            f"failures {record.failures}"
        )


def _search(
    args: argparse.Namespace,
    config: RunConfig,
    evaluator: EvaluatorConfig,
    task: TaskDataset,
) -> SearchResult:
    grammar = Grammar.default()
    if args.grammar is not None:
        grammar = Grammar.from_json(args.grammar)
    tables = GenericTables.default()
    if args.tables is not None:
        tables = GenericTables.from_json(args.tables)

    callbacks: list[Callback] = [_SummaryPrinter()]
    if args.log_file is not None:
        callbacks.append(TextLogger(output_file=args.log_file, console=False))
    if args.progress:
        callbacks.append(ProgressBarLogger())
    if args.wandb_project is not None:
        callbacks.append(WandbLogger(project=args.wandb_project))

    model = build_model(evaluator)
    try:
        return Engine(config, task, model, grammar, tables, callbacks).run()
    finally:
        model.close()


def _run_config(args: argparse.Namespace, algorithm: Algorithm, seed: int) -> RunConfig:
    return RunConfig(
        population_size=args.population,
        num_iterations=args.iterations,
        mut_rate=args.mut_rate,
        mut_chance=args.mut_chance,
        num_evaluations=args.evaluations,
        bin_config=args.bin_sizes,
        max_shots=args.max_shots,
        seed=seed,
        algorithm=algorithm,
        parallelism=args.parallelism,
        hp_threshold=args.threshold,
        universe=args.universe,
        resample_eval_instances=args.resample_eval_instances,
    )


def _evaluator_config(args: argparse.Namespace) -> EvaluatorConfig:
    if args.mock is not None:
        return EvaluatorConfig(
            kind=EvaluatorKind.MOCK,
            mock_rule=args.mock,
            mock_probability=args.mock_probability,
            cache_dir=args.cache_dir,
            model_tag=args.model_tag,
        )

    return EvaluatorConfig(
        kind=EvaluatorKind.REMOTE,
        endpoint=args.endpoint,
        token_env=args.token_env,
        max_in_flight=max(args.parallelism, 1),
        cache_dir=args.cache_dir,
        model_tag=args.model_tag,
    )


def _load_individuals(paths: Sequence[str]) -> list[Individual]:
    individuals: list[Individual] = []
    for path in paths:
        loaded = load_population(path)
        _logger.info("Loaded %d individuals from %s.", len(loaded), path)
        individuals.extend(loaded)
    return individuals


def _prefix(task_name: str, evaluator: EvaluatorConfig) -> str:
    return f"{task_name}_{evaluator.tag}".replace("/", "-").replace(" ", "-")


def _write_line(text: str) -> None:
    sys.stdout.write(text + "\n")


def _summary(result: SearchResult) -> str:
    best = result.archive.best()
    return (
        f"{result.log.total_evaluations} evaluations, "
        f"{len(result.archive)} elites, best fitness "
        f"{0.0 if best is None else best.fitness:.3f}"
    )
