# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import re
from dataclasses import dataclass
from pathlib import Path

from promptelites.archive import (
    dump_json,
    save_archive,
    save_population,
    write_archive_csv,
)
from promptelites.typing import PathLike

from ._config import RunConfig
from ._engine import SearchResult


@dataclass(frozen=True)
class RunOutputs:
    """The files written for a run."""

    archive_json: Path
    archive_csv: Path
    population_json: Path
    log_json: Path


def output_prefix(task_name: str, config: RunConfig, model_tag: str) -> str:
    """The common prefix of the files of a run."""
    parts = (task_name, str(config.algorithm), model_tag)
    return "_".join(_slug(part) for part in parts) + f"_seed{config.seed}"


def write_run_outputs(
    result: SearchResult,
    out_dir: PathLike,
    task_name: str,
    model_tag: str,
) -> RunOutputs:
    """Write the archive, population and log exports of a run.

    Args:
        result: The outcome of the run.
        out_dir: The output directory, created if missing.
        task_name: The name of the task, embedded in the file names.
        model_tag: The tag of the model, embedded in the file names.

    Returns:
        The paths of the written files.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    prefix = output_prefix(task_name, result.config, model_tag)

    outputs = RunOutputs(
        archive_json=out_dir / f"{prefix}.archive.json",
        archive_csv=out_dir / f"{prefix}.archive.csv",
        population_json=out_dir / f"{prefix}.population.json",
        log_json=out_dir / f"{prefix}.log.json",
    )

    save_archive(result.archive, outputs.archive_json)
    write_archive_csv(result.archive, outputs.archive_csv)
    save_population(result.individuals, outputs.population_json)
    dump_json(
        {"config": result.config.get_configs(recursive=True), **result.log.to_dict()},
        outputs.log_json,
    )

    return outputs


# --------------------------------------------------------------------------- #
# Private Functions
# --------------------------------------------------------------------------- #


def _slug(value: str) -> str:
    slug = re.sub(r"[^A-Za-z0-9.-]+", "-", value).strip("-")
    return slug or "unnamed"
