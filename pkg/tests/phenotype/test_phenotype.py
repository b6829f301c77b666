# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import pytest

from promptelites.grammar import GenericTables, Genotype, Grammar, expand
from promptelites.phenotype import (
    EmptyTextError,
    Phenotype,
    extract,
    type_token_ratio,
    word_count,
)
from promptelites.tasks import TaskDataset, render_reference


@pytest.mark.parametrize(
    ("text", "distinct", "total"),
    [
        ("the cat sat on the mat", 5, 6),
        ("A a A.", 1, 3),
        ("one two three", 3, 3),
        ("Why? Why, why!", 1, 3),
        ("Hello hello HELLO", 1, 3),
        ("To be, or not to be: that is the question.", 8, 10),
        ("-- -- word --", 1, 1),
        ("yes. yes! yes? no.", 2, 4),
        ("Step 1: think. Step 2: answer.", 5, 6),
        ("don't don't do not", 3, 4),
        ("(a) (b) (a)", 2, 3),
        ("Q: 2 + 2? A: 4", 4, 5),
        ("e.g. e.g, eg", 2, 3),
        ("\"Quoted\" quoted 'QUOTED'", 1, 3),
        ("Let's think step by step.", 4, 5),
        ("a\tb\nc a", 3, 4),
        ("You are a helpful assistant. You answer questions.", 7, 8),
        ("!!! ok ??? OK ...", 1, 2),
        ("Mixed CASE mixed case MiXeD", 2, 5),
        ("end. end.. end... END!!!", 1, 4),
    ],
)
def test_type_token_ratio(text: str, distinct: int, total: int) -> None:
    assert type_token_ratio(text) == distinct / total


@pytest.mark.parametrize("text", ["", "   ", "... !"])
def test_type_token_ratio_of_empty_text(text: str) -> None:
    with pytest.raises(EmptyTextError):
        type_token_ratio(text)


def test_word_count() -> None:
    assert word_count("Consider this example:\nQ: 2 + 2?\nA: 4") == 9
    assert word_count("") == 0


def test_extract_one_shot(
    one_shot_genotype: Genotype,
    grammar: Grammar,
    tables: GenericTables,
    task: TaskDataset,
) -> None:
    template = expand(one_shot_genotype, grammar, tables)
    reference = render_reference(template, task, (1,))
    phenotype = extract(template, reference)

    assert phenotype.shots == 1
    assert phenotype.depth == 3
    assert phenotype.has_context
    assert phenotype.word_count == len(reference.split())
    assert 0.0 < phenotype.type_token_ratio <= 1.0


def test_extract_does_not_count_the_task_entry(
    zero_shot_genotype: Genotype,
    grammar: Grammar,
    tables: GenericTables,
    task: TaskDataset,
) -> None:
    template = expand(zero_shot_genotype, grammar, tables)
    phenotype = extract(template, render_reference(template, task, ()))

    expected = word_count(task.task_request) + word_count(task.llm_instruction)
    assert phenotype.word_count == expected
    assert phenotype.shots == 0
    assert phenotype.depth == 0
    assert not phenotype.has_context


def test_phenotype_validation() -> None:
    with pytest.raises(ValueError):
        Phenotype(shots=-1, word_count=3, depth=0, has_context=False)
    with pytest.raises(ValueError):
        Phenotype(
            shots=0, word_count=3, depth=0, has_context=False, type_token_ratio=1.5
        )


def test_phenotype_dict_form() -> None:
    phenotype = Phenotype(
        shots=3, word_count=37, depth=5, has_context=True, type_token_ratio=0.5
    )
    assert Phenotype.from_dict(phenotype.to_dict()) == phenotype
