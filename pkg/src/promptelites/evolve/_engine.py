# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import math
import random
import time
from collections import Counter
from collections.abc import Iterable, Iterator, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import TYPE_CHECKING

import coolname
import numpy as np

from promptelites import utils
from promptelites.archive import DEFAULT_AXES, Archive, Individual, Provenance
from promptelites.evaluators import FitnessResult, LanguageModel, fitness
from promptelites.grammar import GenericTables, Grammar, mutate, random_genotype
from promptelites.tasks import TaskDataset, sample_eval_instances

from ._config import Algorithm, RunConfig
from ._log import IterationRecord, RunLog
from ._state import Candidate, SearchState

if TYPE_CHECKING:
    from .callbacks import Callback

# Identifiers of the random streams derived from the seed of a run.
EVAL_STREAM = 0
POPULATION_STREAM = 1
GENERATION_STREAM = 2


@dataclass(frozen=True)
class SearchResult:
    """The outcome of a run."""

    run_name: str
    config: RunConfig
    archive: Archive
    log: RunLog
    individuals: tuple[Individual, ...]


class Engine:
    """Runs MAP-Elites or the random-search baseline on a task.

    Fitness evaluations of an iteration may run concurrently, but their results
    are handled in population order and every random decision is drawn from a
    stream derived from the seed of the run, so the outcome of a run does not
    depend on `RunConfig.parallelism`.
    """

    def __init__(
        self,
        config: RunConfig,
        task: TaskDataset,
        model: LanguageModel,
        grammar: Grammar | None = None,
        tables: GenericTables | None = None,
        callbacks: Iterable["Callback"] | None = None,
        run_name: str | None = None,
    ) -> None:
        grammar = Grammar.default() if grammar is None else grammar
        tables = GenericTables.default() if tables is None else tables
        callbacks = () if callbacks is None else utils.to_tuple(callbacks)

        if run_name is None:
            # Runs with the same configuration get the same name, so the name
            # is drawn from a generator seeded with a digest of the configuration.
            digest = utils.stable_digest({
                "run": config.get_configs(recursive=True),
                "task": utils.get_configs(task, recursive=True),
                "model": utils.get_configs(model, recursive=True),
                "grammar": grammar.get_configs(recursive=True),
                "tables": tables.get_configs(recursive=True),
            })

            random_rng_state = random.getstate()
            random.seed(digest)
            run_name = coolname.generate_slug(2)
            random.setstate(random_rng_state)

        elif len(run_name) == 0:
            raise ValueError("The run name cannot be empty.")

        eval_indices = sample_eval_instances(
            task, config.num_evaluations, utils.make_rng(config.seed, EVAL_STREAM)
        )

        self._state = SearchState(
            run_name=run_name,
            config=config,
            task=task,
            model=model,
            grammar=grammar,
            tables=tables,
            eval_indices=tuple(eval_indices),
            callbacks=callbacks,
        )

        for callback in self._state.callbacks:
            callback.on_init(self._state)

    # ----------------------------------------------------------------------- #
    # Properties
    # ----------------------------------------------------------------------- #

    @property
    def state(self) -> SearchState:
        return self._state

    # ----------------------------------------------------------------------- #
    # Public Methods
    # ----------------------------------------------------------------------- #

    def run(self) -> SearchResult:
        state = self._state
        start = time.perf_counter()

        for callback in state.callbacks:
            callback.on_run_start(state)

        try:
            match state.config.algorithm:
                case Algorithm.MAP_ELITES:
                    self._run_map_elites()
                case Algorithm.RANDOM:
                    self._run_random_search()

            state.log.wall_time = time.perf_counter() - start
            for callback in reversed(state.callbacks):
                callback.on_run_end(state, None)
        except (Exception, KeyboardInterrupt) as e:
            state.log.wall_time = time.perf_counter() - start
            for callback in reversed(state.callbacks):
                callback.on_run_end(state, error=e)
            raise

        return SearchResult(
            run_name=state.run_name,
            config=state.config,
            archive=state.archive,
            log=state.log,
            individuals=tuple(state.individuals),
        )

    # ----------------------------------------------------------------------- #
    # Algorithms
    # ----------------------------------------------------------------------- #

    def _run_map_elites(self) -> None:
        state = self._state
        config = state.config

        rng = utils.make_rng(config.seed, POPULATION_STREAM)
        candidates = [
            Candidate(random_genotype(state.grammar, rng, config.max_shots))
            for _ in range(config.population_size)
        ]

        for iteration in range(1, config.num_iterations + 1):
            self._execute_iteration(candidates)
            if iteration < config.num_iterations:
                candidates = next_generation(
                    state.population,
                    state.archive,
                    config,
                    utils.make_rng(config.seed, GENERATION_STREAM, iteration),
                    state.grammar,
                )

    def _run_random_search(self) -> None:
        state = self._state
        config = state.config

        # One flat batch drawn from the same stream as the initial population
        # of MAP-Elites, evaluated in chunks of the population size.
        rng = utils.make_rng(config.seed, POPULATION_STREAM)
        batch = [
            Candidate(random_genotype(state.grammar, rng, config.max_shots))
            for _ in range(config.budget)
        ]

        for start in range(0, config.budget, config.population_size):
            self._execute_iteration(batch[start : start + config.population_size])

    # ----------------------------------------------------------------------- #
    # Private Methods
    # ----------------------------------------------------------------------- #

    def _execute_iteration(self, candidates: Sequence[Candidate]) -> None:
        state = self._state
        state.next_iteration()

        for callback in state.callbacks:
            callback.on_iteration_start(state)

        calls_before = state.model.num_calls
        first_id = state.next_id
        results: Counter[str] = Counter()
        failures = 0

        for offset, (candidate, result) in enumerate(
            zip(candidates, self._evaluate(first_id, candidates), strict=True)
        ):
            individual = Individual(
                id=first_id + offset,
                genotype=candidate.genotype,
                phenotype=result.phenotype,
                fitness=result.fitness,
                eval_count=candidate.prior_evaluations + 1,
                provenance=Provenance(state.iteration, candidate.parent_id),
            )
            state.add(individual)
            results[str(state.archive.try_insert(individual, state.iteration))] += 1
            failures += result.failures

            for callback in state.callbacks:
                callback.on_individual_evaluated(state, individual, result)

        record = self._summarize(
            inserted=results["inserted"],
            replaced=results["replaced"],
            rejected=results["rejected"],
            failures=failures,
            model_calls=state.model.num_calls - calls_before,
        )
        state.log.append(record)
        state.log.total_evaluations += len(state.population)
        state.log.total_model_calls += record.model_calls
        state.log.total_failures += failures

        for callback in reversed(state.callbacks):
            callback.on_iteration_end(state, record)

    def _evaluate(
        self, first_id: int, candidates: Sequence[Candidate]
    ) -> Iterator[FitnessResult]:
        jobs = list(enumerate(candidates, start=first_id))
        if self._state.config.parallelism == 1:
            yield from map(self._fitness_of, jobs)
            return

        executor = ThreadPoolExecutor(max_workers=self._state.config.parallelism)
        try:
            yield from executor.map(self._fitness_of, jobs)
        finally:
            executor.shutdown(wait=True, cancel_futures=True)

    def _fitness_of(self, job: tuple[int, Candidate]) -> FitnessResult:
        state = self._state
        individual_id, candidate = job

        indices = state.eval_indices
        if state.config.resample_eval_instances:
            rng = utils.make_rng(state.config.seed, EVAL_STREAM, individual_id + 1)
            indices = tuple(
                sample_eval_instances(state.task, state.config.num_evaluations, rng)
            )

        return fitness(
            candidate.genotype,
            state.task,
            indices,
            state.model,
            state.grammar,
            state.tables,
        )

    def _summarize(
        self,
        inserted: int,
        replaced: int,
        rejected: int,
        failures: int,
        model_calls: int,
    ) -> IterationRecord:
        state = self._state
        archive = state.archive
        values = [individual.fitness for individual in state.population]
        best = archive.best()

        return IterationRecord(
            iteration=state.iteration,
            min_fitness=min(values),
            mean_fitness=math.fsum(values) / len(values),
            max_fitness=max(values),
            archive_size=len(archive),
            best_fitness=0.0 if best is None else best.fitness,
            qd_score=archive.qd_score(),
            coverage_any=archive.coverage(DEFAULT_AXES, None, state.config.universe),
            coverage_hp=archive.coverage(
                DEFAULT_AXES, state.config.hp_threshold, state.config.universe
            ),
            inserted=inserted,
            replaced=replaced,
            rejected=rejected,
            failures=failures,
            model_calls=model_calls,
        )


def next_generation(
    population: Sequence[Individual],
    archive: Archive,
    config: RunConfig,
    rng: np.random.Generator,
    grammar: Grammar,
) -> list[Candidate]:
    """Build the population of the next iteration.

    `round(mut_rate * population_size)` members (ties rounded up) are picked
    uniformly without replacement and mutated into offspring. The rest of the
    population is drawn uniformly, with replacement, from the archive elites.

    Raises:
        ValueError: If elites are needed but the archive is empty.
    """
    num_offspring = min(
        utils.round_half_up(config.mut_rate * config.population_size),
        len(population),
    )
    num_redrawn = config.population_size - num_offspring

    parents = rng.choice(len(population), size=num_offspring, replace=False)
    offspring = [
        Candidate(
            genotype=mutate(
                population[idx].genotype,
                config.mut_chance,
                rng,
                grammar,
                config.max_shots,
            ),
            parent_id=population[idx].id,
        )
        for idx in parents
    ]

    if num_redrawn == 0:
        return offspring

    elites = archive.elites()
    if len(elites) == 0:
        raise ValueError("Cannot draw individuals from an empty archive.")

    redrawn: list[Candidate] = []
    for idx in rng.integers(len(elites), size=num_redrawn):
        elite = elites[idx]
        redrawn.append(
            Candidate(
                genotype=elite.genotype,
                parent_id=elite.id,
                prior_evaluations=elite.eval_count,
            )
        )

    return offspring + redrawn


def run_map_elites(
    config: RunConfig,
    task: TaskDataset,
    grammar: Grammar,
    tables: GenericTables,
    model: LanguageModel,
    callbacks: Iterable["Callback"] | None = None,
) -> SearchResult:
    """Run MAP-Elites on a task."""
    config = replace(config, algorithm=Algorithm.MAP_ELITES)
    return Engine(config, task, model, grammar, tables, callbacks).run()


def run_random_search(
    config: RunConfig,
    task: TaskDataset,
    grammar: Grammar,
    tables: GenericTables,
    model: LanguageModel,
    callbacks: Iterable["Callback"] | None = None,
) -> SearchResult:
    """Run the random-search baseline with the same evaluation budget."""
    config = replace(config, algorithm=Algorithm.RANDOM)
    return Engine(config, task, model, grammar, tables, callbacks).run()
