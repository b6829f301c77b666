# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import enum
from dataclasses import asdict, dataclass

from promptelites import utils
from promptelites.typing import Configs, Configurable, str_enum

DEFAULT_TOKEN_ENV = "PROMPT_ELITES_API_TOKEN"


@str_enum
class EvaluatorKind(enum.Enum):
    REMOTE = "remote"
    MOCK = "mock"


@dataclass(frozen=True)
class EvaluatorConfig(Configurable):
    """How the model answering the prompts is reached.

    Attributes:
        kind: Whether prompts go to a remote endpoint or to a mock model.
        endpoint: The URL of the inference endpoint (remote only).
        token_env: The environment variable holding the bearer token.
        max_output_tokens: The completions are cut to this many tokens.
        temperature: The sampling temperature sent to the endpoint.
        timeout: The timeout of a single request, in seconds.
        max_retries: How many times a failed request is retried.
        backoff: The delay before the first retry, in seconds. Each further
            retry doubles it.
        max_in_flight: The maximum number of concurrent requests.
        cache_dir: The directory of the response cache. No caching if `None`.
        mock_rule: The name of the rule deciding the answers of the mock model.
        mock_probability: The match probability of the `constant` rule.
        mock_seed: The seed of the mock rules.
        model_tag: The name of the model in the output file names.
    """

    kind: EvaluatorKind = EvaluatorKind.MOCK
    endpoint: str | None = None
    token_env: str = DEFAULT_TOKEN_ENV
    max_output_tokens: int = 3
    temperature: float = 0.0
    timeout: float = 60.0
    max_retries: int = 3
    backoff: float = 1.0
    max_in_flight: int = 8
    cache_dir: str | None = None
    mock_rule: str = "constant"
    mock_probability: float = 0.5
    mock_seed: int = 0
    model_tag: str | None = None

    def __post_init__(self) -> None:
        if self.max_output_tokens < 1:
            raise ValueError("max_output_tokens must be at least 1.")
        if self.temperature < 0:
            raise ValueError("temperature must be non-negative.")
        if self.timeout <= 0:
            raise ValueError("timeout must be positive.")
        if self.max_retries < 0:
            raise ValueError("max_retries must be non-negative.")
        if self.backoff < 0:
            raise ValueError("backoff must be non-negative.")
        if self.max_in_flight < 1:
            raise ValueError("max_in_flight must be at least 1.")
        if not 0.0 <= self.mock_probability <= 1.0:
            raise ValueError("mock_probability must be in [0, 1].")
        if self.kind == EvaluatorKind.REMOTE and not self.endpoint:
            raise ValueError("A remote evaluator needs an endpoint.")

    @property
    def tag(self) -> str:
        """The model name used in the output file names."""
        if self.model_tag is not None:
            return self.model_tag
        match self.kind:
            case EvaluatorKind.MOCK:
                return f"mock-{self.mock_rule}"
            case EvaluatorKind.REMOTE:
                return "remote"

    def digest(self) -> str:
        """A digest of the settings that can change the output of the model."""
        return utils.stable_digest({
            "kind": str(self.kind),
            "endpoint": self.endpoint,
            "max_output_tokens": self.max_output_tokens,
            "temperature": self.temperature,
            "mock_rule": self.mock_rule,
            "mock_probability": self.mock_probability,
            "mock_seed": self.mock_seed,
        })

    def get_configs(self, recursive: bool) -> Configs:
        configs = asdict(self)
        configs["kind"] = str(self.kind)
        return configs
