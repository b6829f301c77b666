# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import httpx

from ._cache import CachedModel
from ._config import EvaluatorConfig, EvaluatorKind
from ._mock import MockModel, make_rule
from ._model import LanguageModel
from ._remote import RemoteModel


def build_model(
    config: EvaluatorConfig,
    client: httpx.Client | None = None,
) -> LanguageModel:
    """Build the model described by an evaluator configuration.

    Args:
        config: The configuration.
        client: The HTTP client used by remote models. A new one is created if
            not given.

    Returns:
        The model, wrapped in the response cache when a cache directory is
        configured.
    """
    model: LanguageModel
    match config.kind:
        case EvaluatorKind.MOCK:
            model = MockModel(make_rule(config))
        case EvaluatorKind.REMOTE:
            model = RemoteModel(config, client=client)

    if config.cache_dir is not None:
        model = CachedModel(model, config.cache_dir, config.digest())

    return model
