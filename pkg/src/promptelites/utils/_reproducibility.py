# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import numpy as np

_MAX_SEED = 2**31 - 1


def make_rng(seed: int, *stream: int) -> np.random.Generator:
    """Create a random generator for an independent stream of a run.

    Streams are identified by a sequence of non-negative integers appended to
    the run seed, so that two components of the same run (or the same
    component at two different iterations) never share random numbers and the
    numbers each of them draws do not depend on the order in which they are
    scheduled.

    Args:
        seed: The seed of the run.
        stream: The identifiers of the stream.

    Returns:
        The random generator.
    """
    return np.random.default_rng(np.random.SeedSequence([seed, *stream]))


def draw_seed(rng: np.random.Generator) -> int:
    """Draw a fresh seed from a random generator."""
    return int(rng.integers(0, _MAX_SEED))


def unit_hash(*keys: int) -> float:
    """Map a sequence of integers to a deterministic number in `[0, 1)`.

    This is the building block of all the seeded pseudo-random decisions that
    must be pure functions of their inputs.
    """
    return float(np.random.default_rng(np.random.SeedSequence(list(keys))).random())
