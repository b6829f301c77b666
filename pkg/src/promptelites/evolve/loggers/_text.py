# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import logging
from pathlib import Path

from promptelites import utils
from promptelites.evolve import IterationRecord, SearchState
from promptelites.evolve.callbacks import Callback


class TextLogger(Callback):
    """Logs the progress of a run to the console and/or a file.

    Args:
        level: The logging level.
        output_file: The file to append the logs to, or `None`. The
            `{run_name}` placeholder is replaced with the name of the run.
        console: Whether to log to the console.
        capture_library_logs: Whether to also route the records of the library
            logger (retries, ambiguous answers, cache failures) to the handlers.
    """

    def __init__(
        self,
        level: int = logging.INFO,
        output_file: str | None = None,
        console: bool = True,
        capture_library_logs: bool = True,
    ) -> None:
        super().__init__()

        if not console and output_file is None:
            raise ValueError("At least one of console or output_file must be set.")

        self._level = level
        self._output_file = output_file
        self._capture_library_logs = capture_library_logs

        self._logger = logging.getLogger(self.__class__.__name__)
        self._logger.setLevel(level)
        self._logger.propagate = False

        if console:
            handler = logging.StreamHandler()
            handler.setFormatter(utils.get_formatter())
            self._add_handler(handler)

    def on_init(self, state: SearchState) -> None:
        if self._output_file is not None:
            path = Path(self._output_file.format(run_name=state.run_name))
            path.parent.mkdir(parents=True, exist_ok=True)

            handler = logging.FileHandler(path, mode="a", encoding="utf-8")
            handler.setLevel(self._level)
            handler.setFormatter(utils.get_formatter())
            self._add_handler(handler)

        self._log_start(state)

    def on_run_start(self, state: SearchState) -> None:
        self._logger.info("Starting the search.")

    def on_iteration_start(self, state: SearchState) -> None:
        self._logger.debug("Iteration %d started.", state.iteration)

    def on_iteration_end(self, state: SearchState, record: IterationRecord) -> None:
        self._logger.info(
            "Iteration %d/%d: fitness min %.3f mean %.3f max %.3f | "
            "archive %d (best %.3f, qd-score %.2f) | coverage any %.2f hp %.2f | "
            "inserted %d replaced %d rejected %d | failures %d | model calls %d",
            record.iteration,
            state.config.num_iterations,
            record.min_fitness,
            record.mean_fitness,
            record.max_fitness,
            record.archive_size,
            record.best_fitness,
            record.qd_score,
            record.coverage_any,
            record.coverage_hp,
            record.inserted,
            record.replaced,
            record.rejected,
            record.failures,
            record.model_calls,
        )

    def on_run_end(
        self,
        state: SearchState,
        error: Exception | KeyboardInterrupt | None,
    ) -> None:
        log = state.log
        if error is None:
            self._logger.info(
                "Search finished in %.1fs: %d evaluations, %d model calls.",
                log.wall_time,
                log.total_evaluations,
                log.total_model_calls,
            )
            if log.degraded:
                self._logger.warning(
                    "%d requests failed and were counted as wrong answers.",
                    log.total_failures,
                )
        elif isinstance(error, KeyboardInterrupt):
            self._logger.info("Search interrupted.")
        else:
            self._logger.error("Search failed.")
            self._logger.exception(error)

        library_logger = utils.get_library_logger()
        for handler in list(self._logger.handlers):
            library_logger.removeHandler(handler)
            self._logger.removeHandler(handler)
            handler.close()

    # ----------------------------------------------------------------------- #
    # Private Methods
    # ----------------------------------------------------------------------- #

    def _add_handler(self, handler: logging.Handler) -> None:
        self._logger.addHandler(handler)
        if self._capture_library_logs:
            utils.get_library_logger().addHandler(handler)

    def _log_start(self, state: SearchState) -> None:
        config = state.config
        self._logger.info("Run name: %s", state.run_name)
        self._logger.info(
            "Task: %s (%d instances)", state.task.name, len(state.task.instances)
        )
        self._logger.info("Algorithm: %s", config.algorithm)
        self._logger.info("Configuration:")
        for name, value in config.get_configs(recursive=True).items():
            self._logger.info("\t%s: %s", name, value)
        self._logger.info("Parallelism: %d", config.parallelism)
