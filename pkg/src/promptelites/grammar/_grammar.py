# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import enum
import json
import math
import re
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from typing import Any, Self

from promptelites.typing import Configs, Configurable, PathLike, str_enum

from ._errors import GrammarError


@str_enum
class Placeholder(enum.Enum):
    """Task-specific placeholders left unresolved in a prompt template."""

    EXAMPLE = "example"
    TASK_ENTRY = "task_entry"
    LLM_INSTRUCTION = "llm_instruction"
    TASK_REQUEST = "task_request"

    @property
    def marker(self) -> str:
        """The double-square-bracket token used in the grammar text."""
        return _MARKERS[self]

    @classmethod
    def from_marker_name(cls, name: str) -> Self:
        """Look up a placeholder from the text enclosed by `[[` and `]]`."""
        try:
            return cls(name.strip().lower().replace(" ", "_"))
        except ValueError as e:
            raise GrammarError(f"Unknown task placeholder '[[{name}]]'.") from e


_MARKERS = {
    Placeholder.EXAMPLE: "[[example]]",
    Placeholder.TASK_ENTRY: "[[task entry]]",
    Placeholder.LLM_INSTRUCTION: "[[LLM instruction]]",
    Placeholder.TASK_REQUEST: "[[task request]]",
}


@dataclass(frozen=True)
class Nonterminal:
    """A nonterminal symbol of the grammar."""

    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class GenericRef:
    """A reference to an entry of the generic tables, e.g. `((t4))`."""

    table: str
    number: int


type Symbol = Nonterminal | str
"""A grammar symbol: a nonterminal or a terminal text fragment."""

type Production = tuple[Symbol, ...]
"""The right-hand side of a production rule."""

type TerminalToken = str | Placeholder | GenericRef
"""A piece of a terminal once its placeholders have been recognized."""

_TOKEN_PATTERN = re.compile(r"\[\[([^\[\]]+)\]\]|\(\(([a-z]+)(\d+)\)\)")


def split_terminal(text: str) -> tuple[TerminalToken, ...]:
    """Split a terminal into literal text, task placeholders and generic refs."""
    tokens: list[TerminalToken] = []
    last = 0
    for match in _TOKEN_PATTERN.finditer(text):
        if match.start() > last:
            tokens.append(text[last : match.start()])
        if match.group(1) is not None:
            tokens.append(Placeholder.from_marker_name(match.group(1)))
        else:
            tokens.append(GenericRef(match.group(2), int(match.group(3))))
        last = match.end()

    if last < len(text):
        tokens.append(text[last:])

    return tuple(tokens)


class Grammar(Configurable):
    """A context-free grammar generating prompt structures.

    Terminals are plain strings that may contain task placeholders
    (`[[example]]`, `[[task entry]]`, ...) and generic placeholders
    (`((c1))`, `((t1))`, ...). Besides the start symbol, the grammar knows
    which nonterminals hold the shots subtree, the context role and the
    reasoning thought, since those are the loci touched by mutation.
    """

    # ----------------------------------------------------------------------- #
    # Constructor and Factory Methods
    # ----------------------------------------------------------------------- #

    def __init__(
        self,
        rules: Mapping[str, Sequence[Sequence[Symbol]]],
        start_symbol: str = "P",
        shots_symbol: str = "S",
        context_symbol: str = "C",
        thought_symbol: str = "T",
    ) -> None:
        if start_symbol not in rules:
            raise GrammarError(f"The start symbol '{start_symbol}' has no rules.")

        self._rules: dict[str, tuple[Production, ...]] = {}
        for name, productions in rules.items():
            if len(productions) == 0:
                raise GrammarError(f"The nonterminal '{name}' has no productions.")
            self._rules[name] = tuple(tuple(prod) for prod in productions)

        for name, productions in self._rules.items():
            for prod in productions:
                for symbol in prod:
                    if isinstance(symbol, Nonterminal):
                        if symbol.name not in self._rules:
                            raise GrammarError(
                                f"The nonterminal '{symbol.name}' used by '{name}' "
                                "has no rules."
                            )
                    else:
                        # raises on unknown task placeholders
                        split_terminal(symbol)

        for name in (context_symbol, thought_symbol):
            for prod in self._rules.get(name, ()):
                if any(isinstance(symbol, Nonterminal) for symbol in prod):
                    raise GrammarError(
                        f"The productions of '{name}' must only contain terminals."
                    )

        self._start_symbol = start_symbol
        self._shots_symbol = shots_symbol
        self._context_symbol = context_symbol
        self._thought_symbol = thought_symbol

        self._min_examples = _min_examples(self._rules)
        self._max_examples = _max_examples(self._rules)

    @classmethod
    def default(cls) -> Self:
        """The prompt grammar with its four top-level prompt forms."""
        c, s, t, e, i = (Nonterminal(name) for name in "CSTEI")
        r, x, n = Nonterminal("R"), Nonterminal("X"), Nonterminal("N")
        rules: dict[str, list[list[Symbol]]] = {
            "P": [[s, t, e, i], [s, e, i], [c, s, t, e, i], [c, s, e, i]],
            "S": [[r, x], [r]],
            "X": [
                ["Consider this example: [[example]]"],
                ["Consider these examples: [[example]],", n],
            ],
            "N": [["[[example]]"], ["[[example]]", n]],
            "E": [["[[task entry]]"]],
            "I": [["[[LLM instruction]]"]],
            "R": [["[[task request]]"]],
            "C": [[f"((c{k}))"] for k in range(1, 11)],
            "T": [[f"((t{k}))"] for k in range(1, 11)],
        }
        return cls(rules)

    @classmethod
    def from_dict(cls, document: Mapping[str, Any]) -> Self:
        """Build a grammar from its JSON form.

        The document maps `rules` to an object whose keys are nonterminal
        names and whose values are lists of productions. Each production is a
        list of strings: a string naming a key of `rules` is a nonterminal,
        any other string is terminal text.
        """
        raw_rules = document.get("rules")
        if not isinstance(raw_rules, dict) or len(raw_rules) == 0:
            raise GrammarError("The grammar document must define a 'rules' object.")

        names = set(raw_rules)
        rules: dict[str, list[list[Symbol]]] = {}
        for name, productions in raw_rules.items():
            if not isinstance(productions, list):
                raise GrammarError(f"The productions of '{name}' must be a list.")
            rules[name] = []
            for prod in productions:
                if not isinstance(prod, list) or not all(
                    isinstance(symbol, str) for symbol in prod
                ):
                    raise GrammarError(
                        f"Each production of '{name}' must be a list of strings."
                    )
                rules[name].append([
                    Nonterminal(symbol) if symbol in names else symbol
                    for symbol in prod
                ])

        return cls(
            rules,
            start_symbol=document.get("start_symbol", "P"),
            shots_symbol=document.get("shots_symbol", "S"),
            context_symbol=document.get("context_symbol", "C"),
            thought_symbol=document.get("thought_symbol", "T"),
        )

    @classmethod
    def from_json(cls, path: PathLike) -> Self:
        """Load a grammar override from a JSON file."""
        try:
            with open(path, encoding="utf-8") as file:
                document = json.load(file)
        except json.JSONDecodeError as e:
            raise GrammarError(f"Invalid grammar document '{path}': {e}.") from e

        return cls.from_dict(document)

    # ----------------------------------------------------------------------- #
    # Properties
    # ----------------------------------------------------------------------- #

    @property
    def start_symbol(self) -> str:
        return self._start_symbol

    @property
    def shots_symbol(self) -> str:
        return self._shots_symbol

    @property
    def context_symbol(self) -> str:
        return self._context_symbol

    @property
    def thought_symbol(self) -> str:
        return self._thought_symbol

    @property
    def nonterminals(self) -> frozenset[str]:
        return frozenset(self._rules)

    # ----------------------------------------------------------------------- #
    # Public Methods
    # ----------------------------------------------------------------------- #

    def productions(self, nonterminal: str) -> tuple[Production, ...]:
        """The productions of a nonterminal, in rule-index order."""
        return self._rules[nonterminal]

    def min_examples(self, symbol: Symbol) -> float:
        """The fewest `[[example]]` placeholders any derivation of a symbol has."""
        if isinstance(symbol, Nonterminal):
            return self._min_examples[symbol.name]
        return float(_count_examples(symbol))

    def max_examples(self, symbol: Symbol) -> float:
        """The most `[[example]]` placeholders a derivation of a symbol has.

        Symbols whose recursion emits examples have no bound (`math.inf`).
        """
        if isinstance(symbol, Nonterminal):
            return self._max_examples[symbol.name]
        return float(_count_examples(symbol))

    def recursive_nonterminals(self) -> frozenset[str]:
        """The nonterminals that can derive themselves."""
        return frozenset(
            name for name in self._rules if name in _reachable(self._rules, name)
        )

    def to_dict(self) -> dict[str, Any]:
        """The JSON form accepted by `from_dict`."""
        return {
            "start_symbol": self._start_symbol,
            "shots_symbol": self._shots_symbol,
            "context_symbol": self._context_symbol,
            "thought_symbol": self._thought_symbol,
            "rules": {
                name: [[str(symbol) for symbol in prod] for prod in productions]
                for name, productions in self._rules.items()
            },
        }

    def get_configs(self, recursive: bool) -> Configs:
        return self.to_dict()


# --------------------------------------------------------------------------- #
# Private Functions
# --------------------------------------------------------------------------- #


def _count_examples(terminal: str) -> int:
    return sum(
        1 for token in split_terminal(terminal) if token is Placeholder.EXAMPLE
    )


def _production_examples(prod: Production, values: dict[str, float]) -> float:
    total = 0.0
    for symbol in prod:
        if isinstance(symbol, Nonterminal):
            total += values[symbol.name]
        else:
            total += _count_examples(symbol)
    return total


def _min_examples(rules: dict[str, tuple[Production, ...]]) -> dict[str, float]:
    values = dict.fromkeys(rules, math.inf)
    while True:
        updated = {
            name: min(_production_examples(prod, values) for prod in productions)
            for name, productions in rules.items()
        }
        if updated == values:
            return values
        values = updated


def _max_examples(rules: dict[str, tuple[Production, ...]]) -> dict[str, float]:
    values = dict.fromkeys(rules, 0.0)
    # without example-emitting cycles the values settle within |V| rounds
    for _ in range(len(rules) + 1):
        updated = {
            name: max(_production_examples(prod, values) for prod in productions)
            for name, productions in rules.items()
        }
        if updated == values:
            return values
        values = updated

    final = {
        name: max(_production_examples(prod, values) for prod in productions)
        for name, productions in rules.items()
    }
    unbounded = {name for name in rules if final[name] > values[name]}
    changed = True
    while changed:
        changed = False
        for name, productions in rules.items():
            if name not in unbounded and any(
                isinstance(symbol, Nonterminal) and symbol.name in unbounded
                for prod in productions
                for symbol in prod
            ):
                unbounded.add(name)
                changed = True

    return {name: math.inf if name in unbounded else final[name] for name in rules}


def _reachable(rules: dict[str, tuple[Production, ...]], start: str) -> set[str]:
    seen: set[str] = set()
    frontier = [start]
    while frontier:
        name = frontier.pop()
        for prod in rules[name]:
            for symbol in prod:
                if isinstance(symbol, Nonterminal) and symbol.name not in seen:
                    seen.add(symbol.name)
                    frontier.append(symbol.name)
    return seen
