# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import decimal
import hashlib
import json
from collections.abc import Iterable
from typing import Any

from promptelites.typing import Configs, Configurable


def to_tuple[T](value: T | Iterable[T]) -> tuple[T, ...]:
    """Convert a value to a tuple."""
    if isinstance(value, tuple):
        return value  # type: ignore
    elif isinstance(value, Iterable) and not isinstance(value, str):
        return tuple(value)  # type: ignore
    else:
        return (value,)  # type: ignore


def full_class_name(obj: object) -> str:
    """Get the full class name of an object."""
    return f"{obj.__class__.__module__}.{obj.__class__.__name__}"


def get_configs(obj: object, recursive: bool = True) -> Configs:
    """Get the configuration of an object.

    The generated configuration is a dictionary that contains the class name of
    the object and its configuration if it is configurable.

    Args:
        obj: The object.
        recursive: Whether to recursively get the configurations of the
            sub-objects.
    """
    configs: Configs = {"__class__": full_class_name(obj)}
    if isinstance(obj, Configurable):
        configs.update(obj.get_configs(recursive))

    return configs


def stable_digest(value: Any) -> str:
    """Return the SHA-256 hex digest of the canonical JSON encoding of a value.

    Keys are sorted and non-JSON values fall back to their `str` form, so the
    digest only depends on the content of the value.
    """
    encoded = json.dumps(value, sort_keys=True, default=str, separators=(",", ":"))
    return hashlib.sha256(encoded.encode("utf-8")).hexdigest()


def round_half_up(value: float) -> int:
    """Round a non-negative value to the nearest integer, ties going up."""
    rounded = decimal.Decimal(repr(value)).quantize(
        decimal.Decimal(1), rounding=decimal.ROUND_HALF_UP
    )
    return int(rounded)
