# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import numpy as np

from ._dataset import TaskDataset
from ._errors import NotEnoughInstancesError


def sample_eval_instances(
    task: TaskDataset, n: int, rng: np.random.Generator
) -> list[int]:
    """Draw `n` distinct instance indices uniformly without replacement.

    Raises:
        NotEnoughInstancesError: If the task has fewer than `n` instances.
    """
    if n < 1:
        raise ValueError(f"The number of instances must be positive, got {n}.")
    if n > len(task.instances):
        raise NotEnoughInstancesError(
            f"Cannot sample {n} instances from task '{task.name}', "
            f"which has only {len(task.instances)}."
        )

    return [int(idx) for idx in rng.permutation(len(task.instances))[:n]]
