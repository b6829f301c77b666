# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import csv
from dataclasses import dataclass

from matplotlib.figure import Figure

from promptelites import utils
from promptelites.archive import Archive
from promptelites.typing import PathLike

HEATMAP_CSV_HEADER = ("shots", "depth", "fitness", "has_context")
_MARKERS = ((True, "o", "context"), (False, "^", "no context"))


@dataclass(frozen=True)
class HeatmapPoint:
    """An elite placed in the shots by depth feature space."""

    shots: int
    depth: int
    fitness: float
    has_context: bool


def heatmap_points(archive: Archive) -> list[HeatmapPoint]:
    """One point per elite, ordered by cell key."""
    return [
        HeatmapPoint(
            shots=elite.phenotype.shots,
            depth=elite.phenotype.depth,
            fitness=elite.fitness,
            has_context=elite.phenotype.has_context,
        )
        for elite in archive.elites()
    ]


def write_heatmap_csv(archive: Archive, path: PathLike) -> int:
    """Write one row per elite and return the number of rows.

    An empty archive produces a file with the header only.
    """
    points = heatmap_points(archive)
    if len(points) == 0:
        utils.get_library_logger().warning("The archive is empty.")

    with open(path, "w", encoding="utf-8", newline="") as file:
        writer = csv.writer(file)
        writer.writerow(HEATMAP_CSV_HEADER)
        for point in points:
            writer.writerow([
                point.shots,
                point.depth,
                point.fitness,
                int(point.has_context),
            ])

    return len(points)


def render_scatter(archive: Archive, path: PathLike, title: str | None = None) -> None:
    """Draw the elites in the shots by depth plane.

    The color is the fitness on a fixed [0, 1] scale and the marker shape tells
    whether the prompt has a context role (circle) or not (triangle). The file
    format follows the extension of `path`.
    """
    points = heatmap_points(archive)
    fig = Figure(figsize=(6, 4.5))
    ax = fig.subplots()

    scatter = None
    for has_context, marker, label in _MARKERS:
        group = [point for point in points if point.has_context == has_context]
        if len(group) == 0:
            continue
        scatter = ax.scatter(
            [point.shots for point in group],
            [point.depth for point in group],
            c=[point.fitness for point in group],
            cmap="viridis",
            vmin=0.0,
            vmax=1.0,
            marker=marker,
            edgecolors="black",
            linewidths=0.5,
            label=label,
        )

    if scatter is not None:
        fig.colorbar(scatter, ax=ax, label="fitness")
        ax.legend(loc="upper right")

    ax.set_xlabel("number of examples")
    ax.set_ylabel("reasoning depth")
    if title is not None:
        ax.set_title(title)

    fig.tight_layout()
    fig.savefig(path)
