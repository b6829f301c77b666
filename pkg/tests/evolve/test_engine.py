# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import math
from pathlib import Path

import httpx
import numpy as np
import pytest

from promptelites.archive import Archive, Individual
from promptelites.evaluators import (
    ConstantRule,
    EvaluatorConfig,
    EvaluatorKind,
    FitnessResult,
    MockModel,
    NoisyThresholdRule,
    RemoteModel,
    ZeroShotOnlyRule,
)
from promptelites.evolve import (
    Algorithm,
    Engine,
    IterationRecord,
    RunConfig,
    SearchState,
    next_generation,
    run_map_elites,
    run_random_search,
    write_run_outputs,
)
from promptelites.evolve.callbacks import Callback
from promptelites.grammar import GenericTables, Grammar, validate
from promptelites.tasks import TaskDataset
from tests.archive.test_archive import make_individual
from tests.conftest import TaskFactory

SMALL = RunConfig(population_size=10, num_iterations=4, num_evaluations=5)


@pytest.mark.parametrize("algorithm", list(Algorithm))
def test_budget(
    algorithm: Algorithm, task: TaskDataset, grammar: Grammar, tables: GenericTables
) -> None:
    config = RunConfig(
        population_size=8, num_iterations=3, num_evaluations=4, algorithm=algorithm
    )
    result = Engine(config, task, MockModel(ConstantRule()), grammar, tables).run()

    assert len(result.individuals) == config.budget == 24
    assert result.log.total_evaluations == 24
    assert [record.iteration for record in result.log.iterations] == [1, 2, 3]
    assert [individual.id for individual in result.individuals] == list(range(24))
    assert result.log.total_model_calls == 24 * 4
    for individual in result.individuals:
        assert validate(individual.genotype, grammar) is None


def test_random_search_matches_the_first_iteration_of_map_elites(
    task: TaskDataset, grammar: Grammar, tables: GenericTables
) -> None:
    model = MockModel(NoisyThresholdRule())
    map_result = run_map_elites(SMALL, task, grammar, tables, model)
    random_result = run_random_search(SMALL, task, grammar, tables, model)

    assert map_result.config.algorithm is Algorithm.MAP_ELITES
    assert random_result.config.algorithm is Algorithm.RANDOM
    first = slice(0, SMALL.population_size)
    assert map_result.individuals[first] == random_result.individuals[first]
    assert all(
        individual.provenance.parent_id is None
        for individual in random_result.individuals
    )


def test_archive_best_never_decreases(
    task: TaskDataset, grammar: Grammar, tables: GenericTables
) -> None:
    result = run_map_elites(
        SMALL, task, grammar, tables, MockModel(NoisyThresholdRule(seed=4))
    )
    best = [record.best_fitness for record in result.log.iterations]
    assert best == sorted(best)
    qd = [record.qd_score for record in result.log.iterations]
    assert qd == sorted(qd)

    for record in result.log.iterations:
        assert record.min_fitness <= record.mean_fitness <= record.max_fitness
        assert record.inserted + record.replaced + record.rejected == 10
        assert record.coverage_hp <= record.coverage_any


def test_redrawn_elites_keep_count_of_their_evaluations(
    task: TaskDataset, grammar: Grammar, tables: GenericTables
) -> None:
    result = run_map_elites(
        SMALL, task, grammar, tables, MockModel(NoisyThresholdRule(seed=1))
    )
    by_id = {individual.id: individual for individual in result.individuals}

    for individual in result.individuals[SMALL.population_size :]:
        parent_id = individual.provenance.parent_id
        assert parent_id is not None
        parent = by_id[parent_id]
        assert parent.provenance.iteration < individual.provenance.iteration
        if individual.eval_count > 1:
            assert individual.genotype == parent.genotype
            assert individual.eval_count == parent.eval_count + 1


def test_results_do_not_depend_on_parallelism(
    task: TaskDataset, grammar: Grammar, tables: GenericTables, tmp_path: Path
) -> None:
    files: dict[int, dict[str, bytes]] = {}
    for parallelism in (1, 8):
        config = RunConfig(
            population_size=12,
            num_iterations=3,
            num_evaluations=6,
            seed=7,
            parallelism=parallelism,
        )
        model = MockModel(NoisyThresholdRule())
        result = Engine(config, task, model, grammar, tables).run()
        out_dir = tmp_path / str(parallelism)
        write_run_outputs(result, out_dir, task.name, "mock")
        files[parallelism] = {
            path.name: path.read_bytes() for path in sorted(out_dir.iterdir())
        }

    assert len(files[1]) == 4
    assert files[1] == files[8]


def test_same_configuration_same_name(
    task: TaskDataset, grammar: Grammar, tables: GenericTables
) -> None:
    model = MockModel(ConstantRule())
    first = Engine(SMALL, task, model, grammar, tables)
    second = Engine(SMALL, task, model, grammar, tables)
    assert first.state.run_name == second.state.run_name

    named = Engine(SMALL, task, model, grammar, tables, run_name="toy-run")
    assert named.state.run_name == "toy-run"
    with pytest.raises(ValueError):
        Engine(SMALL, task, model, grammar, tables, run_name="")


def test_zero_shot_only_coverage(
    task: TaskDataset, grammar: Grammar, tables: GenericTables
) -> None:
    config = RunConfig(population_size=50, num_iterations=10, num_evaluations=5)
    model = MockModel(ZeroShotOnlyRule())
    result = run_map_elites(config, task, grammar, tables, model)

    coverage = [record.coverage_hp for record in result.log.iterations]
    assert all(value <= 0.20 for value in coverage)
    assert coverage[-1] == pytest.approx(0.20)
    for elite in result.archive:
        assert (elite.fitness == 1.0) == (elite.phenotype.shots == 0)


def test_evaluation_sets(
    task: TaskDataset, grammar: Grammar, tables: GenericTables
) -> None:
    seen: list[tuple[int, ...]] = []

    class Recorder(Callback):
        def on_individual_evaluated(
            self, state: SearchState, individual: Individual, result: FitnessResult
        ) -> None:
            seen.append(tuple(outcome.instance_index for outcome in result.outcomes))

    model = MockModel(ConstantRule())
    Engine(SMALL, task, model, grammar, tables, [Recorder()]).run()
    assert len(set(seen)) == 1
    assert len(seen[0]) == SMALL.num_evaluations

    seen.clear()
    config = RunConfig(
        population_size=10,
        num_iterations=2,
        num_evaluations=5,
        resample_eval_instances=True,
    )
    Engine(config, task, model, grammar, tables, [Recorder()]).run()
    assert len(set(seen)) > 1
    assert all(len(set(indices)) == 5 for indices in seen)


def test_degraded_run(
    task: TaskDataset, grammar: Grammar, tables: GenericTables
) -> None:
    config = EvaluatorConfig(
        kind=EvaluatorKind.REMOTE,
        endpoint="https://inference.test",
        max_retries=1,
        backoff=0.0,
    )
    client = httpx.Client(
        transport=httpx.MockTransport(lambda request: httpx.Response(503))
    )
    model = RemoteModel(config, client=client, sleep=lambda seconds: None, token="t")
    run = RunConfig(population_size=4, num_iterations=2, num_evaluations=3)
    result = Engine(run, task, model, grammar, tables).run()

    assert result.log.degraded
    assert result.log.total_failures == 8 * 3
    assert result.log.total_model_calls == 8 * 3 * 2
    assert all(individual.fitness == 0.0 for individual in result.individuals)
    assert result.log.to_dict()["degraded"] is True


def test_callback_order(
    task: TaskDataset, grammar: Grammar, tables: GenericTables
) -> None:
    events: list[str] = []

    class Recorder(Callback):
        def __init__(self, name: str) -> None:
            self.name = name

        def on_init(self, state: SearchState) -> None:
            events.append(f"{self.name}.init")

        def on_run_start(self, state: SearchState) -> None:
            events.append(f"{self.name}.run_start")

        def on_iteration_start(self, state: SearchState) -> None:
            events.append(f"{self.name}.iteration_start.{state.iteration}")

        def on_iteration_end(self, state: SearchState, record: IterationRecord) -> None:
            events.append(f"{self.name}.iteration_end.{record.iteration}")

        def on_run_end(
            self, state: SearchState, error: Exception | KeyboardInterrupt | None
        ) -> None:
            events.append(f"{self.name}.run_end.{error is None}")

    config = RunConfig(population_size=2, num_iterations=1, num_evaluations=2)
    callbacks = [Recorder("a"), Recorder("b")]
    Engine(config, task, MockModel(ConstantRule()), grammar, tables, callbacks).run()

    assert events == [
        "a.init",
        "b.init",
        "a.run_start",
        "b.run_start",
        "a.iteration_start.1",
        "b.iteration_start.1",
        "b.iteration_end.1",
        "a.iteration_end.1",
        "b.run_end.True",
        "a.run_end.True",
    ]


def test_run_end_sees_the_error(
    task: TaskDataset, grammar: Grammar, tables: GenericTables
) -> None:
    errors: list[BaseException | None] = []

    class Failing(Callback):
        def on_iteration_end(self, state: SearchState, record: IterationRecord) -> None:
            raise RuntimeError("boom")

        def on_run_end(
            self, state: SearchState, error: Exception | KeyboardInterrupt | None
        ) -> None:
            errors.append(error)

    model = MockModel(ConstantRule())
    engine = Engine(SMALL, task, model, grammar, tables, [Failing()])
    with pytest.raises(RuntimeError):
        engine.run()
    assert len(errors) == 1 and isinstance(errors[0], RuntimeError)


@pytest.mark.slow
def test_map_elites_covers_more_high_performers_than_random_search(
    make_task: TaskFactory, grammar: Grammar, tables: GenericTables
) -> None:
    task = make_task(200)
    map_coverage, random_coverage = [], []
    for seed in range(10):
        config = RunConfig(seed=seed)
        model = MockModel(NoisyThresholdRule(seed=seed))
        map_log = run_map_elites(config, task, grammar, tables, model).log
        random_log = run_random_search(config, task, grammar, tables, model).log
        map_coverage.append(map_log.iterations[-1].coverage_hp)
        random_coverage.append(random_log.iterations[-1].coverage_hp)

    assert np.mean(map_coverage) >= np.mean(random_coverage)
    assert sum(coverage > 0.6 for coverage in map_coverage) > 5


def _population(size: int) -> list[Individual]:
    return [make_individual(idx, fitness=idx / size, shots=0) for idx in range(size)]


def _archive(population: list[Individual]) -> Archive:
    archive = Archive()
    for individual in population:
        archive.try_insert(individual, 1)
    return archive


@pytest.mark.parametrize(
    ("mut_rate", "num_offspring"), [(0.4, 20), (0.0, 0), (1.0, 50), (0.25, 13)]
)
def test_next_generation_sizes(
    mut_rate: float, num_offspring: int, grammar: Grammar
) -> None:
    population = _population(50)
    archive = _archive(population)
    config = RunConfig(mut_rate=mut_rate)

    candidates = next_generation(
        population, archive, config, np.random.default_rng(0), grammar
    )

    assert len(candidates) == 50
    offspring, redrawn = candidates[:num_offspring], candidates[num_offspring:]
    parent_ids = [candidate.parent_id for candidate in offspring]
    assert len(set(parent_ids)) == num_offspring
    assert all(candidate.prior_evaluations == 0 for candidate in offspring)
    elite_ids = {elite.id for elite in archive}
    assert all(candidate.parent_id in elite_ids for candidate in redrawn)
    assert all(candidate.prior_evaluations == 1 for candidate in redrawn)
    assert math.isclose(len(redrawn) + len(offspring), config.population_size)


def test_next_generation_needs_elites(grammar: Grammar) -> None:
    population = _population(10)
    config = RunConfig(population_size=10, mut_rate=0.5)

    with pytest.raises(ValueError):
        next_generation(
            population, Archive(), config, np.random.default_rng(0), grammar
        )

    config = RunConfig(population_size=10, mut_rate=1.0)
    candidates = next_generation(
        population, Archive(), config, np.random.default_rng(0), grammar
    )
    assert len(candidates) == 10
