# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import logging
from pathlib import Path

import httpx
import pytest

from promptelites.evaluators import (
    DEFAULT_TOKEN_ENV,
    AuthenticationError,
    CachedModel,
    CallCounter,
    CompletionRequest,
    ConstantRule,
    EvaluatorConfig,
    EvaluatorKind,
    MockModel,
    RemoteModel,
    ZeroShotOnlyRule,
    build_model,
    fitness,
)
from promptelites.grammar import GenericTables, Genotype, Grammar
from promptelites.tasks import TaskDataset
from tests.conftest import TaskFactory


class FirstInstancesModel:
    """Answers correctly the instances whose index is below a bound."""

    def __init__(self, bound: int) -> None:
        self._bound = bound
        self._calls = CallCounter()

    @property
    def num_calls(self) -> int:
        return self._calls.value

    def complete(self, request: CompletionRequest) -> str:
        self._calls.increment()
        if request.instance_index < self._bound:
            return request.instance.target.upper() + "."
        return "no" if request.instance.target == "yes" else "yes"

    def close(self) -> None:
        pass


def _example_inputs(text: str) -> list[str]:
    return [line.split("Q: ", 1)[1] for line in text.split("\n") if "Q: " in line]


def _empty_answer(request: httpx.Request) -> httpx.Response:
    return httpx.Response(200, json={"generated_text": ""})


def _remote(transport: httpx.MockTransport) -> RemoteModel:
    config = EvaluatorConfig(
        kind=EvaluatorKind.REMOTE, endpoint="https://inference.test", backoff=0.0
    )
    return RemoteModel(
        config,
        client=httpx.Client(transport=transport),
        sleep=lambda seconds: None,
        token="t",
    )


def test_fitness_is_the_fraction_of_matches(
    one_shot_genotype: Genotype,
    grammar: Grammar,
    tables: GenericTables,
    task: TaskDataset,
) -> None:
    model = FirstInstancesModel(37)
    result = fitness(one_shot_genotype, task, range(50), model, grammar, tables)

    assert result.fitness == pytest.approx(0.74)
    assert len(result.outcomes) == 50
    assert [outcome.instance_index for outcome in result.outcomes] == list(range(50))
    assert result.failures == 0
    assert result.phenotype.shots == 1
    assert model.num_calls == 50


def test_examples_come_from_outside_the_evaluation_set(
    grammar: Grammar, tables: GenericTables, task: TaskDataset
) -> None:
    seen: list[str] = []

    class Recorder(FirstInstancesModel):
        def complete(self, request: CompletionRequest) -> str:
            seen.append(request.text)
            return super().complete(request)

    genotype = Genotype.parse("P1 S0 R0 X1@1 N0@2 E0 I0")
    fitness(genotype, task, range(10), Recorder(0), grammar, tables)

    examples = _example_inputs(seen[0])
    assert len(examples) == 2
    assert all(_example_inputs(text) == examples for text in seen)
    evaluated = {instance.input for instance in task.instances[:10]}
    assert evaluated.isdisjoint(examples)


def test_small_task_warns_when_examples_may_overlap(
    grammar: Grammar,
    tables: GenericTables,
    make_task: TaskFactory,
    caplog: pytest.LogCaptureFixture,
) -> None:
    task = make_task(4)
    genotype = Genotype.parse("P1 S0 R0 X1@1 N0@2 E0 I0")

    with caplog.at_level(logging.WARNING, logger="promptelites"):
        result = fitness(
            genotype, task, range(3), FirstInstancesModel(3), grammar, tables
        )

    assert result.fitness == 1.0
    assert "may overlap the evaluation set" in caplog.text


def test_large_task_does_not_warn(
    grammar: Grammar,
    tables: GenericTables,
    task: TaskDataset,
    caplog: pytest.LogCaptureFixture,
) -> None:
    genotype = Genotype.parse("P1 S0 R0 X1@1 N0@2 E0 I0")

    with caplog.at_level(logging.WARNING, logger="promptelites"):
        fitness(genotype, task, range(10), FirstInstancesModel(0), grammar, tables)

    assert "may overlap" not in caplog.text

def test_zero_shot_only_mock(
    zero_shot_genotype: Genotype,
    one_shot_genotype: Genotype,
    grammar: Grammar,
    tables: GenericTables,
    task: TaskDataset,
) -> None:
    model = MockModel(ZeroShotOnlyRule())
    zero = fitness(zero_shot_genotype, task, range(20), model, grammar, tables)
    one = fitness(one_shot_genotype, task, range(20), model, grammar, tables)

    assert zero.fitness == 1.0
    assert one.fitness == 0.0


def test_timeouts_are_retried_during_evaluation(
    zero_shot_genotype: Genotype,
    grammar: Grammar,
    tables: GenericTables,
    make_task: TaskFactory,
) -> None:
    task = make_task(num_instances=10, choices=("yes",))
    timed_out: set[bytes] = set()

    def handler(request: httpx.Request) -> httpx.Response:
        if request.content not in timed_out:
            timed_out.add(request.content)
            raise httpx.ReadTimeout("slow", request=request)
        return httpx.Response(200, json={"generated_text": "Yes."})

    model = _remote(httpx.MockTransport(handler))
    result = fitness(zero_shot_genotype, task, range(10), model, grammar, tables)

    assert result.fitness == 1.0
    assert result.failures == 0
    assert model.num_calls == 20


def test_failed_requests_count_as_wrong(
    zero_shot_genotype: Genotype,
    grammar: Grammar,
    tables: GenericTables,
    task: TaskDataset,
) -> None:
    model = _remote(httpx.MockTransport(lambda request: httpx.Response(503)))
    result = fitness(zero_shot_genotype, task, range(5), model, grammar, tables)

    assert result.fitness == 0.0
    assert result.failures == 5
    assert all(outcome.error is not None for outcome in result.outcomes)


def test_rejected_credentials_abort_the_evaluation(
    zero_shot_genotype: Genotype,
    grammar: Grammar,
    tables: GenericTables,
    task: TaskDataset,
) -> None:
    model = _remote(httpx.MockTransport(lambda request: httpx.Response(401)))
    with pytest.raises(AuthenticationError):
        fitness(zero_shot_genotype, task, range(5), model, grammar, tables)


def test_ambiguous_outputs_are_flagged(
    zero_shot_genotype: Genotype,
    grammar: Grammar,
    tables: GenericTables,
    make_task: TaskFactory,
) -> None:
    task = make_task(num_instances=4, choices=("yes", "yesterday"))
    model = _remote(
        httpx.MockTransport(
            lambda request: httpx.Response(200, json={"generated_text": "ye"})
        )
    )
    result = fitness(zero_shot_genotype, task, range(4), model, grammar, tables)

    assert result.fitness == 0.0
    assert all(outcome.ambiguous for outcome in result.outcomes)
    assert result.failures == 0


def test_cache_serves_repeated_prompts(
    zero_shot_genotype: Genotype,
    grammar: Grammar,
    tables: GenericTables,
    task: TaskDataset,
    tmp_path: Path,
) -> None:
    inner = MockModel(ConstantRule(0.5))
    model = CachedModel(inner, tmp_path / "cache", settings="mock")

    first = fitness(zero_shot_genotype, task, range(20), model, grammar, tables)
    assert inner.num_calls == 20
    assert model.num_hits == 0

    second = fitness(zero_shot_genotype, task, range(20), model, grammar, tables)
    assert inner.num_calls == 20
    assert model.num_hits == 20
    assert [outcome.raw_output for outcome in second.outcomes] == [
        outcome.raw_output for outcome in first.outcomes
    ]

    reopened = CachedModel(MockModel(ConstantRule(0.5)), tmp_path / "cache", "mock")
    fitness(zero_shot_genotype, task, range(20), reopened, grammar, tables)
    assert reopened.num_calls == 0


def test_build_model(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    assert isinstance(build_model(EvaluatorConfig()), MockModel)

    cached = build_model(EvaluatorConfig(cache_dir=str(tmp_path)))
    assert isinstance(cached, CachedModel)

    monkeypatch.setenv(DEFAULT_TOKEN_ENV, "t")
    remote = build_model(
        EvaluatorConfig(kind=EvaluatorKind.REMOTE, endpoint="https://inference.test"),
        client=httpx.Client(transport=httpx.MockTransport(_empty_answer)),
    )
    assert isinstance(remote, RemoteModel)


def test_remote_config_needs_an_endpoint() -> None:
    with pytest.raises(ValueError):
        EvaluatorConfig(kind=EvaluatorKind.REMOTE)
