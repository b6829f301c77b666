# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import csv
import json
from collections.abc import Iterable
from pathlib import Path
from typing import Any

from promptelites._errors import SchemaError
from promptelites.typing import PathLike

from ._archive import Archive
from ._individual import Individual

ARCHIVE_CSV_HEADER = (
    "shots_bin",
    "words_bin",
    "depth_bin",
    "fitness",
    "shots",
    "word_count",
    "depth",
    "has_context",
    "type_token_ratio",
    "eval_count",
    "iteration",
    "parent_id",
    "id",
    "genotype",
)


def dump_json(document: Any, path: PathLike) -> None:
    """Write a JSON document with a stable layout (UTF-8, sorted keys)."""
    text = json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False)
    Path(path).write_text(text + "\n", encoding="utf-8")


def read_json(path: PathLike) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise SchemaError(str(path), f"not valid JSON ({e})") from e


def save_archive(archive: Archive, path: PathLike) -> None:
    """Export an archive (cells and insertion log) as JSON."""
    dump_json(archive.state_dict(), path)


def load_archive(path: PathLike) -> Archive:
    """Import an archive exported by `save_archive`."""
    document = read_json(path)
    if not isinstance(document, dict):
        raise SchemaError("<root>", "an archive export must be a JSON object")

    archive = Archive()
    archive.load_state_dict(document)
    return archive


def write_archive_csv(archive: Archive, path: PathLike) -> None:
    """Export one row per elite, ordered by cell key."""
    with open(path, "w", encoding="utf-8", newline="") as file:
        writer = csv.writer(file)
        writer.writerow(ARCHIVE_CSV_HEADER)
        for elite in archive.elites():
            key = archive.key_of(elite)
            phenotype = elite.phenotype
            parent_id = elite.provenance.parent_id
            writer.writerow([
                key.shots_bin,
                key.words_bin,
                key.depth_bin,
                elite.fitness,
                phenotype.shots,
                phenotype.word_count,
                phenotype.depth,
                int(phenotype.has_context),
                phenotype.type_token_ratio,
                elite.eval_count,
                elite.provenance.iteration,
                "" if parent_id is None else parent_id,
                elite.id,
                str(elite.genotype),
            ])


def save_population(individuals: Iterable[Individual], path: PathLike) -> None:
    """Export every evaluated individual of a run as JSON."""
    dump_json(
        {"individuals": [individual.to_dict() for individual in individuals]},
        path,
    )


def load_population(path: PathLike) -> list[Individual]:
    """Import the individuals exported by `save_population`.

    Archive exports are accepted as well, in which case their elites are
    returned.
    """
    document = read_json(path)
    if not isinstance(document, dict):
        raise SchemaError("<root>", "a population export must be a JSON object")

    key = "individuals" if "individuals" in document else "cells"
    records = document.get(key)
    if not isinstance(records, list):
        raise SchemaError("individuals", "must be a list of individuals")

    try:
        return [Individual.from_dict(record) for record in records]
    except (KeyError, TypeError, ValueError) as e:
        raise SchemaError(key, f"malformed individual ({e})") from e
