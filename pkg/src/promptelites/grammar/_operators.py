# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

from dataclasses import replace

import numpy as np

from promptelites import utils

from ._errors import GenotypeError
from ._expansion import replay
from ._genotype import Choice, Genotype, ValidationFailure
from ._grammar import Grammar, Nonterminal, Production, Symbol

DEFAULT_MAX_SHOTS = 10


def random_genotype(
    grammar: Grammar,
    rng: np.random.Generator,
    max_shots: int = DEFAULT_MAX_SHOTS,
) -> Genotype:
    """Sample a genotype by expanding the start symbol at random.

    Each expansion step picks uniformly among the productions that keep the
    number of examples within `max_shots`, so the example recursion always
    stops once the running count reaches the cap.

    Args:
        grammar: The grammar.
        rng: The random generator.
        max_shots: The maximum number of examples of the sampled prompt.

    Returns:
        A genotype that always validates against the grammar.
    """
    if max_shots < 0:
        raise ValueError(f"max_shots must be non-negative, got {max_shots}.")

    choices = _derive(grammar, grammar.start_symbol, rng, low=0, high=max_shots)
    return Genotype(tuple(choices))


def mutate(
    genotype: Genotype,
    mut_chance: float,
    rng: np.random.Generator,
    grammar: Grammar,
    max_shots: int = DEFAULT_MAX_SHOTS,
) -> Genotype:
    """Mutate the loci of a genotype independently with probability `mut_chance`.

    The loci are, in order: every context-role choice and every thought choice
    (re-drawn uniformly among their productions), the shot count (the shots
    subtree is re-derived with a count drawn uniformly in `0..max_shots`,
    keeping the existing example seeds for the slots that survive) and the
    seed of every example slot.

    Raises:
        GenotypeError: If the genotype does not replay against the grammar.
    """
    if not 0.0 <= mut_chance <= 1.0:
        raise ValueError(f"mut_chance must be in [0, 1], got {mut_chance}.")
    if max_shots < 0:
        raise ValueError(f"max_shots must be non-negative, got {max_shots}.")

    derivation = replay(genotype, grammar)
    if isinstance(derivation, ValidationFailure):
        raise GenotypeError(derivation)

    choices = list(genotype.choices)
    for position, choice in enumerate(choices):
        if choice.symbol not in (grammar.context_symbol, grammar.thought_symbol):
            continue
        if rng.random() < mut_chance:
            num_rules = len(grammar.productions(choice.symbol))
            choices[position] = replace(choice, index=int(rng.integers(num_rules)))

    start = next(
        (i for i, c in enumerate(choices) if c.symbol == grammar.shots_symbol), None
    )
    if start is not None and rng.random() < mut_chance:
        end = derivation.subtree_ends[start]
        shots = int(rng.integers(0, max_shots + 1))
        old_seeds = [c.seed for c in choices[start:end] if c.seed is not None]
        subtree = _derive(grammar, grammar.shots_symbol, rng, low=shots, high=shots)
        choices[start:end] = _reuse_seeds(subtree, old_seeds)

    for position, choice in enumerate(choices):
        if choice.seed is not None and rng.random() < mut_chance:
            choices[position] = replace(choice, seed=utils.draw_seed(rng))

    return Genotype(tuple(choices))


# --------------------------------------------------------------------------- #
# Private Functions
# --------------------------------------------------------------------------- #


def _derive(
    grammar: Grammar,
    root: str,
    rng: np.random.Generator,
    low: float,
    high: float,
) -> list[Choice]:
    """Derive `root` depth-first with a number of examples in `[low, high]`."""
    stack: list[Symbol] = [Nonterminal(root)]
    choices: list[Choice] = []
    emitted = 0.0

    while stack:
        symbol = stack.pop()
        if isinstance(symbol, str):
            emitted += grammar.min_examples(symbol)
            continue

        pending_min = sum(grammar.min_examples(s) for s in stack)
        pending_max = sum(grammar.max_examples(s) for s in stack)
        productions = grammar.productions(symbol.name)
        feasible = [
            index
            for index, production in enumerate(productions)
            if emitted + _min_bound(grammar, production) + pending_min <= high
            and emitted + _max_bound(grammar, production) + pending_max >= low
        ]
        if len(feasible) == 0:
            # the bounds cannot be honoured: take the cheapest production
            cheapest = min(
                range(len(productions)),
                key=lambda i: _min_bound(grammar, productions[i]),
            )
            feasible = [cheapest]

        index = feasible[int(rng.integers(len(feasible)))]
        production = productions[index]
        emits_example = any(
            isinstance(s, str) and grammar.min_examples(s) > 0 for s in production
        )
        seed = utils.draw_seed(rng) if emits_example else None
        choices.append(Choice(symbol.name, index, seed))
        stack.extend(reversed(production))

    return choices


def _min_bound(grammar: Grammar, production: Production) -> float:
    return sum((grammar.min_examples(s) for s in production), 0.0)


def _max_bound(grammar: Grammar, production: Production) -> float:
    return sum((grammar.max_examples(s) for s in production), 0.0)


def _reuse_seeds(subtree: list[Choice], seeds: list[int]) -> list[Choice]:
    remaining = iter(seeds)
    reused: list[Choice] = []
    for choice in subtree:
        if choice.seed is not None:
            seed = next(remaining, None)
            if seed is not None:
                choice = replace(choice, seed=seed)
        reused.append(choice)
    return reused
