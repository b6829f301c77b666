# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

from dataclasses import dataclass

from ._errors import GenotypeError, GrammarError
from ._genotype import Genotype, ValidationFailure, ValidationIssue
from ._grammar import GenericRef, Grammar, Nonterminal, Placeholder, split_terminal
from ._tables import GenericTables
from ._template import Fragment, PromptTemplate, Segment


@dataclass(frozen=True)
class _SubtreeEnd:
    position: int


@dataclass(frozen=True)
class Derivation:
    """The outcome of replaying a genotype.

    Attributes:
        terminals: The derived terminals with the position of the choice
            whose production emitted them.
        subtree_ends: For each choice position, the exclusive end position of
            the choices belonging to its subtree.
    """

    terminals: tuple[tuple[str, int], ...]
    subtree_ends: tuple[int, ...]


def replay(
    genotype: Genotype, grammar: Grammar
) -> Derivation | ValidationFailure:
    """Replay the choices of a genotype depth-first from the start symbol."""
    choices = genotype.choices
    stack: list[Nonterminal | str | _SubtreeEnd] = [Nonterminal(grammar.start_symbol)]
    owners: list[int] = [-1]
    terminals: list[tuple[str, int]] = []
    ends = [0] * len(choices)
    position = 0

    while stack:
        symbol = stack.pop()
        owner = owners.pop()
        match symbol:
            case _SubtreeEnd(start):
                ends[start] = position
            case str():
                terminals.append((symbol, owner))
            case Nonterminal(name):
                if position >= len(choices):
                    return ValidationFailure(
                        position, name, ValidationIssue.CHOICE_UNDERFLOW
                    )
                choice = choices[position]
                if choice.symbol != name:
                    return ValidationFailure(
                        position, name, ValidationIssue.SYMBOL_MISMATCH
                    )
                productions = grammar.productions(name)
                if not 0 <= choice.index < len(productions):
                    return ValidationFailure(
                        position, name, ValidationIssue.INDEX_OUT_OF_RANGE
                    )

                stack.append(_SubtreeEnd(position))
                owners.append(position)
                production = productions[choice.index]
                stack.extend(reversed(production))
                owners.extend([position] * len(production))
                position += 1

    if position < len(choices):
        return ValidationFailure(position, None, ValidationIssue.CHOICE_OVERFLOW)

    return Derivation(tuple(terminals), tuple(ends))


def validate(genotype: Genotype, grammar: Grammar) -> ValidationFailure | None:
    """Check that a genotype replays exactly against a grammar.

    Returns:
        `None` if the genotype is valid, otherwise where and why it failed.
    """
    result = replay(genotype, grammar)
    return result if isinstance(result, ValidationFailure) else None


def expand(
    genotype: Genotype, grammar: Grammar, tables: GenericTables
) -> PromptTemplate:
    """Expand a genotype into a prompt template.

    Generic placeholders are resolved from the tables; task placeholders are
    left for instantiation.

    Raises:
        GenotypeError: If the genotype does not replay against the grammar.
    """
    result = replay(genotype, grammar)
    if isinstance(result, ValidationFailure):
        raise GenotypeError(result)

    segments: list[Segment] = []
    seeds: list[int] = []
    depth = 0
    has_context = False

    for terminal, position in result.terminals:
        fragments: list[Fragment] = []
        for token in split_terminal(terminal):
            match token:
                case Placeholder.EXAMPLE:
                    seed = genotype.choices[position].seed
                    seeds.append(position if seed is None else seed)
                    fragments.append(token)
                case Placeholder():
                    fragments.append(token)
                case GenericRef("c", number):
                    fragments.append(tables.context(number))
                    has_context = True
                case GenericRef("t", number):
                    fragments.append(tables.thought(number))
                    depth = tables.depth(number)
                case GenericRef(table, number):
                    raise GrammarError(
                        f"Unknown generic table reference '(({table}{number}))'."
                    )
                case str():
                    fragments.append(token)
        segments.append(_merge_text(fragments))

    return PromptTemplate(
        segments=tuple(segments),
        depth=depth,
        has_context=has_context,
        example_seeds=tuple(seeds),
    )


# --------------------------------------------------------------------------- #
# Private Functions
# --------------------------------------------------------------------------- #


def _merge_text(fragments: list[Fragment]) -> Segment:
    merged: list[Fragment] = []
    for fragment in fragments:
        if isinstance(fragment, str) and merged and isinstance(merged[-1], str):
            merged[-1] += fragment
        else:
            merged.append(fragment)
    return tuple(merged)
