# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import csv
from pathlib import Path

import pytest

from promptelites import SchemaError
from promptelites.archive import (
    ARCHIVE_CSV_HEADER,
    Archive,
    load_archive,
    load_population,
    save_archive,
    save_population,
    write_archive_csv,
)

from .test_archive import make_individual


@pytest.fixture
def archive() -> Archive:
    archive = Archive()
    archive.try_insert(make_individual(0, 0.5, shots=3, depth=5), 1)
    archive.try_insert(make_individual(1, 0.75, words=60), 2)
    return archive


def test_archive_json(tmp_path: Path, archive: Archive) -> None:
    path = tmp_path / "archive.json"
    save_archive(archive, path)

    restored = load_archive(path)
    assert restored.elites() == archive.elites()

    save_archive(restored, tmp_path / "again.json")
    assert (tmp_path / "again.json").read_bytes() == path.read_bytes()


def test_archive_csv(tmp_path: Path, archive: Archive) -> None:
    path = tmp_path / "archive.csv"
    write_archive_csv(archive, path)

    with open(path, encoding="utf-8", newline="") as file:
        rows = list(csv.reader(file))

    assert tuple(rows[0]) == ARCHIVE_CSV_HEADER
    assert len(rows) == 3
    first = dict(zip(ARCHIVE_CSV_HEADER, rows[1], strict=True))
    bins = (first["shots_bin"], first["words_bin"], first["depth_bin"])
    assert bins == ("0", "2", "0")
    assert first["genotype"] == "P1 S1 R0 E0 I0"
    assert first["parent_id"] == ""
    second = dict(zip(ARCHIVE_CSV_HEADER, rows[2], strict=True))
    assert (second["shots"], second["depth"]) == ("3", "5")


def test_population_json(tmp_path: Path, archive: Archive) -> None:
    individuals = [make_individual(idx, idx / 10) for idx in range(5)]
    path = tmp_path / "population.json"
    save_population(individuals, path)

    assert load_population(path) == individuals


def test_load_population_accepts_an_archive(tmp_path: Path, archive: Archive) -> None:
    path = tmp_path / "archive.json"
    save_archive(archive, path)

    assert load_population(path) == archive.elites()


def test_load_rejects_malformed_documents(tmp_path: Path) -> None:
    path = tmp_path / "broken.json"
    path.write_text("[1, 2]", encoding="utf-8")
    with pytest.raises(SchemaError):
        load_archive(path)
    with pytest.raises(SchemaError):
        load_population(path)

    path.write_text("{oops", encoding="utf-8")
    with pytest.raises(SchemaError):
        load_population(path)
