# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

from collections.abc import Sequence

from promptelites._errors import PromptElitesError


class EvaluatorError(PromptElitesError):
    """Base class of the errors raised while querying a model."""


class EndpointTimeoutError(EvaluatorError, RuntimeError):
    """Raised when the endpoint does not answer within the request timeout."""


class ConnectionFailedError(EvaluatorError, RuntimeError):
    """Raised when the endpoint cannot be reached."""


class HttpStatusError(EvaluatorError, RuntimeError):
    """Raised when the endpoint answers with an error status.

    Attributes:
        status: The HTTP status code.
    """

    def __init__(self, status: int, detail: str = "") -> None:
        message = f"The endpoint answered with status {status}"
        super().__init__(f"{message}: {detail}" if detail else f"{message}.")
        self.status = status


class AuthenticationError(EvaluatorError, RuntimeError):
    """Raised when the endpoint rejects the credentials or none are available."""


class AmbiguousOutputError(EvaluatorError, ValueError):
    """Raised when a model output could be read as more than one choice.

    Attributes:
        output: The raw model output.
        candidates: The choices the output could stand for.
    """

    def __init__(self, output: str, candidates: Sequence[str]) -> None:
        super().__init__(
            f"The output '{output}' matches more than one choice: {list(candidates)}."
        )
        self.output = output
        self.candidates = tuple(candidates)
