# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import csv
import json
from pathlib import Path

import pytest

from promptelites.archive import load_archive, load_population
from promptelites.cli import main
from promptelites.tasks import load_task

SEARCH = ["--population", "10", "--iterations", "2", "--evaluations", "3"]
PREFIX = "toy_{algo}_mock-zero-shot-only_seed{seed}"


def _run(task_file: Path, out_dir: Path, *extra: str) -> int:
    return main([
        "run",
        "--task",
        str(task_file),
        "--mock",
        "zero-shot-only",
        "--out-dir",
        str(out_dir),
        *SEARCH,
        *extra,
    ])


def test_run(
    task_file: Path, tmp_path: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    assert _run(task_file, tmp_path) == 0

    prefix = PREFIX.format(algo="map-elites", seed=0)
    for suffix in ("archive.json", "archive.csv", "population.json", "log.json"):
        assert (tmp_path / f"{prefix}.{suffix}").is_file()

    assert len(load_population(tmp_path / f"{prefix}.population.json")) == 20
    assert len(load_archive(tmp_path / f"{prefix}.archive.json")) > 0
    log = json.loads((tmp_path / f"{prefix}.log.json").read_text(encoding="utf-8"))
    assert log["total_evaluations"] == 20
    assert log["config"]["algorithm"] == "map-elites"
    assert not log["degraded"]

    out = capsys.readouterr().out
    assert "iteration 1/2" in out
    assert "iteration 2/2" in out
    assert "finished: 20 evaluations" in out


def test_random_runs_are_reproducible(task_file: Path, tmp_path: Path) -> None:
    for name in ("first", "second"):
        assert _run(task_file, tmp_path / name, "--algo", "random", "--seed", "3") == 0

    first = {path.name: path.read_bytes() for path in (tmp_path / "first").iterdir()}
    second = {path.name: path.read_bytes() for path in (tmp_path / "second").iterdir()}
    assert len(first) == 4
    assert first == second
    assert f"{PREFIX.format(algo='random', seed=3)}.archive.json" in first


def test_run_with_log_file(task_file: Path, tmp_path: Path) -> None:
    log_file = tmp_path / "logs" / "{run_name}.log"
    log_file.parent.mkdir()
    assert _run(task_file, tmp_path, "--log-file", str(log_file)) == 0

    logs = list(log_file.parent.iterdir())
    assert len(logs) == 1
    assert "Iteration 2" in logs[0].read_text(encoding="utf-8")


@pytest.mark.parametrize(
    "argv",
    [
        ["run", "--mock", "constant"],
        ["compare", "--task", "task.json"],
        ["run", "--task", "task.json", "--mock", "oracle"],
        ["run", "--task", "task.json", "--mock", "constant", "--mut-rate", "1.5"],
        ["heatmap"],
    ],
)
def test_usage_errors(argv: list[str]) -> None:
    assert main(argv) == 2


def test_missing_task_file(tmp_path: Path) -> None:
    missing = tmp_path / "missing.json"
    assert main(["run", "--task", str(missing), "--mock", "constant"]) == 1


def test_compare(task_file: Path, tmp_path: Path) -> None:
    argv = [
        "compare",
        "--task",
        str(task_file),
        "--mock",
        "zero-shot-only",
        "--seeds",
        "2",
        "--out-dir",
        str(tmp_path),
        *SEARCH,
    ]
    assert main(argv) == 0

    with open(tmp_path / "toy_mock-zero-shot-only_compare.coverage.csv") as file:
        rows = list(csv.DictReader(file))
    assert [row["label"] for row in rows] == ["seed0", "seed1"]
    assert len(list(tmp_path.glob("*.archive.json"))) == 4


def test_analyze(
    task_file: Path, tmp_path: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    for algo in ("map-elites", "random"):
        assert _run(task_file, tmp_path, "--algo", algo) == 0
    map_prefix = tmp_path / PREFIX.format(algo="map-elites", seed=0)
    random_prefix = tmp_path / PREFIX.format(algo="random", seed=0)
    capsys.readouterr()

    argv = [
        "analyze",
        "--map",
        f"{map_prefix}.archive.json",
        "--random",
        f"{random_prefix}.archive.json",
        "--population",
        f"{map_prefix}.population.json",
        "--population",
        f"{random_prefix}.population.json",
        "--enrichment",
        "--label",
        "toy",
        "--out-dir",
        str(tmp_path / "analysis"),
    ]
    assert main(argv) == 0

    for suffix in ("coverage.csv", "correlations.csv", "enrichment.csv", "report.json"):
        assert (tmp_path / "analysis" / f"toy.{suffix}").is_file()
    report = json.loads(
        (tmp_path / "analysis" / "toy.report.json").read_text(encoding="utf-8")
    )
    assert report["population_count"] == 40
    assert report["enrichment"]["high_performer_count"] > 0

    out = capsys.readouterr().out
    assert "chi2" in out
    assert "spearman shots" in out


@pytest.mark.parametrize(
    "argv",
    [["analyze"], ["analyze", "--map", "map.json"]],
)
def test_analyze_needs_inputs(argv: list[str], tmp_path: Path) -> None:
    assert main([*argv, "--out-dir", str(tmp_path)]) == 1


def test_heatmap(task_file: Path, tmp_path: Path) -> None:
    assert _run(task_file, tmp_path) == 0
    archive = tmp_path / f"{PREFIX.format(algo='map-elites', seed=0)}.archive.json"
    svg = tmp_path / "scatter.svg"

    assert main(["heatmap", "--archive", str(archive), "--svg", str(svg)]) == 0

    csv_path = Path(str(archive.with_suffix("")) + ".heatmap.csv")
    rows = csv_path.read_text(encoding="utf-8").splitlines()
    assert len(rows) == len(load_archive(archive)) + 1
    assert svg.stat().st_size > 0


def test_convert(tmp_path: Path) -> None:
    source = tmp_path / "bigbench.json"
    source.write_text(
        json.dumps({
            "name": "winowhy",
            "description": "Decide whether the reason is correct.",
            "examples": [
                {
                    "input": f"Reason {idx}.",
                    "target_scores": {"correct": idx % 2, "incorrect": 1 - idx % 2},
                }
                for idx in range(6)
            ],
        }),
        encoding="utf-8",
    )
    output = tmp_path / "task.json"

    argv = ["convert", "--input", str(source), "--output", str(output)]
    assert main([*argv, "--limit", "4"]) == 0
    task = load_task(output)
    assert task.name == "winowhy"
    assert len(task) == 4
    assert task.choices == ("correct", "incorrect")
