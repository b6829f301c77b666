# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import os
import threading
import time
from collections.abc import Callable
from typing import Any

import httpx

from promptelites import utils

from ._config import EvaluatorConfig
from ._errors import (
    AuthenticationError,
    ConnectionFailedError,
    EndpointTimeoutError,
    EvaluatorError,
    HttpStatusError,
)
from ._model import CallCounter, CompletionRequest, LanguageModel, truncate_tokens

RETRYABLE_STATUSES = frozenset({408, 425, 429, 500, 502, 503, 504})


class RemoteModel(LanguageModel):
    """A model served by an HTTP inference endpoint.

    The prompt is posted as `{"inputs": ..., "parameters": {"max_new_tokens":
    ..., "temperature": ...}}` with a bearer token, and the completion is read
    from the `generated_text` field of the answer. Timeouts, connection
    failures and the statuses in `RETRYABLE_STATUSES` are retried with
    exponential backoff; rejected credentials are not.
    """

    def __init__(
        self,
        config: EvaluatorConfig,
        client: httpx.Client | None = None,
        sleep: Callable[[float], None] = time.sleep,
        token: str | None = None,
    ) -> None:
        if config.endpoint is None:
            raise ValueError("A remote model needs an endpoint.")

        token = os.environ.get(config.token_env) if token is None else token
        if not token:
            raise AuthenticationError(
                f"No API token: the environment variable '{config.token_env}' "
                "is not set."
            )

        self._config = config
        self._endpoint = config.endpoint
        self._headers = {
            "Authorization": f"Bearer {token}",
            "Content-Type": "application/json",
        }
        self._owns_client = client is None
        self._client = client or httpx.Client(timeout=config.timeout)
        self._sleep = sleep
        self._in_flight = threading.BoundedSemaphore(config.max_in_flight)
        self._calls = CallCounter()

    # ----------------------------------------------------------------------- #
    # Properties
    # ----------------------------------------------------------------------- #

    @property
    def num_calls(self) -> int:
        return self._calls.value

    # ----------------------------------------------------------------------- #
    # Public Methods
    # ----------------------------------------------------------------------- #

    def complete(self, request: CompletionRequest) -> str:
        payload = {
            "inputs": request.text,
            "parameters": {
                "max_new_tokens": self._config.max_output_tokens,
                "temperature": self._config.temperature,
            },
        }

        error: EvaluatorError | None = None
        for attempt in range(self._config.max_retries + 1):
            if attempt > 0:
                delay = self._config.backoff * 2 ** (attempt - 1)
                utils.get_library_logger().warning(
                    "Request for instance %d failed (%s), retrying in %.1fs "
                    "(attempt %d/%d).",
                    request.instance_index,
                    error,
                    delay,
                    attempt,
                    self._config.max_retries,
                )
                self._sleep(delay)

            try:
                response = self._post(payload)
            except httpx.TimeoutException as e:
                error = EndpointTimeoutError(f"The request timed out: {e}.")
                continue
            except httpx.TransportError as e:
                error = ConnectionFailedError(f"Cannot reach the endpoint: {e}.")
                continue

            status = response.status_code
            if status in (401, 403):
                raise AuthenticationError(
                    f"The endpoint rejected the credentials (status {status})."
                )
            if response.is_success:
                text = _generated_text(response)
                if text.startswith(request.text):
                    text = text[len(request.text) :]
                return truncate_tokens(text, self._config.max_output_tokens)

            error = HttpStatusError(status, response.text[:200])
            if status not in RETRYABLE_STATUSES:
                raise error

        assert error is not None
        raise error

    def close(self) -> None:
        if self._owns_client:
            self._client.close()

    # ----------------------------------------------------------------------- #
    # Private Methods
    # ----------------------------------------------------------------------- #

    def _post(self, payload: dict[str, Any]) -> httpx.Response:
        with self._in_flight:
            self._calls.increment()
            return self._client.post(
                self._endpoint, json=payload, headers=self._headers
            )


# --------------------------------------------------------------------------- #
# Private Functions
# --------------------------------------------------------------------------- #


def _generated_text(response: httpx.Response) -> str:
    try:
        document = response.json()
    except ValueError as e:
        raise HttpStatusError(response.status_code, "the answer is not JSON") from e

    match document:
        case [{"generated_text": str(text)}, *_]:
            return text
        case {"generated_text": str(text)}:
            return text
        case _:
            raise HttpStatusError(
                response.status_code, "the answer has no 'generated_text' field"
            )
