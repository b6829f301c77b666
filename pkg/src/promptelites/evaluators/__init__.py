# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

from ._cache import CachedModel
from ._config import DEFAULT_TOKEN_ENV, EvaluatorConfig, EvaluatorKind
from ._errors import (
    AmbiguousOutputError,
    AuthenticationError,
    ConnectionFailedError,
    EndpointTimeoutError,
    EvaluatorError,
    HttpStatusError,
)
from ._factory import build_model
from ._fitness import EvalOutcome, FitnessResult, fitness
from ._matching import match_answer, normalize_answer
from ._mock import (
    FALLBACK_ANSWER,
    MOCK_RULES,
    ConstantRule,
    MockModel,
    MockRule,
    NoisyThresholdRule,
    ShotsRewardRule,
    ZeroShotOnlyRule,
    make_rule,
)
from ._model import CallCounter, CompletionRequest, LanguageModel, truncate_tokens
from ._remote import RETRYABLE_STATUSES, RemoteModel

__all__ = [
    # _cache
    "CachedModel",
    # _config
    "DEFAULT_TOKEN_ENV",
    "EvaluatorConfig",
    "EvaluatorKind",
    # _errors
    "AmbiguousOutputError",
    "AuthenticationError",
    "ConnectionFailedError",
    "EndpointTimeoutError",
    "EvaluatorError",
    "HttpStatusError",
    # _factory
    "build_model",
    # _fitness
    "EvalOutcome",
    "FitnessResult",
    "fitness",
    # _matching
    "match_answer",
    "normalize_answer",
    # _mock
    "FALLBACK_ANSWER",
    "MOCK_RULES",
    "ConstantRule",
    "MockModel",
    "MockRule",
    "NoisyThresholdRule",
    "ShotsRewardRule",
    "ZeroShotOnlyRule",
    "make_rule",
    # _model
    "CallCounter",
    "CompletionRequest",
    "LanguageModel",
    "truncate_tokens",
    # _remote
    "RETRYABLE_STATUSES",
    "RemoteModel",
]
