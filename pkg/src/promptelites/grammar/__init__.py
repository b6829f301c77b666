# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

from ._errors import GenotypeError, GrammarError
from ._expansion import Derivation, expand, replay, validate
from ._genotype import Choice, Genotype, ValidationFailure, ValidationIssue
from ._grammar import (
    GenericRef,
    Grammar,
    Nonterminal,
    Placeholder,
    Production,
    Symbol,
    split_terminal,
)
from ._operators import DEFAULT_MAX_SHOTS, mutate, random_genotype
from ._tables import DEFAULT_CONTEXTS, DEFAULT_THOUGHTS, TABLE_SIZE, GenericTables
from ._template import SEGMENT_SEPARATOR, Fragment, PromptTemplate, Segment

__all__ = [
    # _errors
    "GenotypeError",
    "GrammarError",
    # _expansion
    "Derivation",
    "expand",
    "replay",
    "validate",
    # _genotype
    "Choice",
    "Genotype",
    "ValidationFailure",
    "ValidationIssue",
    # _grammar
    "GenericRef",
    "Grammar",
    "Nonterminal",
    "Placeholder",
    "Production",
    "Symbol",
    "split_terminal",
    # _operators
    "DEFAULT_MAX_SHOTS",
    "mutate",
    "random_genotype",
    # _tables
    "DEFAULT_CONTEXTS",
    "DEFAULT_THOUGHTS",
    "TABLE_SIZE",
    "GenericTables",
    # _template
    "SEGMENT_SEPARATOR",
    "Fragment",
    "PromptTemplate",
    "Segment",
]
