# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import csv
from pathlib import Path

from promptelites.archive import Archive
from promptelites.reporting import (
    HEATMAP_CSV_HEADER,
    heatmap_points,
    render_scatter,
    write_heatmap_csv,
)
from tests.stats.test_coverage import archive_with


def test_heatmap_csv(tmp_path: Path) -> None:
    archive = archive_with(3)
    path = tmp_path / "heatmap.csv"

    assert write_heatmap_csv(archive, path) == 25
    with open(path, encoding="utf-8", newline="") as file:
        rows = list(csv.reader(file))
    assert tuple(rows[0]) == HEATMAP_CSV_HEADER
    assert len(rows) == 26
    assert rows[1] == ["0", "0", "0.9", "0"]


def test_empty_archive_gives_the_header_only(tmp_path: Path) -> None:
    path = tmp_path / "heatmap.csv"

    assert write_heatmap_csv(Archive(), path) == 0
    assert path.read_text(encoding="utf-8").splitlines() == [
        ",".join(HEATMAP_CSV_HEADER)
    ]


def test_heatmap_points_follow_the_archive() -> None:
    archive = archive_with(0)
    points = heatmap_points(archive)

    assert len(points) == len(archive)
    assert [(point.shots, point.depth) for point in points[:2]] == [(0, 0), (0, 2)]


def test_render_scatter(tmp_path: Path) -> None:
    path = tmp_path / "heatmap.svg"
    render_scatter(archive_with(10), path, title="toy")

    assert path.stat().st_size > 0
    assert "<svg" in path.read_text(encoding="utf-8")


def test_render_scatter_of_an_empty_archive(tmp_path: Path) -> None:
    path = tmp_path / "empty.png"
    render_scatter(Archive(), path)
    assert path.read_bytes().startswith(b"\x89PNG")
