# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

import hashlib
import json
import os
import tempfile
from pathlib import Path

from promptelites import utils
from promptelites.typing import PathLike

from ._model import CallCounter, CompletionRequest, LanguageModel


class CachedModel(LanguageModel):
    """Wrap a model with an on-disk cache of its completions.

    Each completion is stored in its own file, named after the SHA-256 digest
    of the prompt text and of the digest of the model settings. Files are
    written to a temporary name and then renamed, so concurrent readers only
    ever see complete entries.
    """

    def __init__(
        self, model: LanguageModel, cache_dir: PathLike, settings: str
    ) -> None:
        self._model = model
        self._root = Path(cache_dir)
        self._root.mkdir(parents=True, exist_ok=True)
        self._settings = settings
        self._hits = CallCounter()

    @property
    def num_calls(self) -> int:
        return self._model.num_calls

    @property
    def num_hits(self) -> int:
        return self._hits.value

    def path_of(self, request: CompletionRequest) -> Path:
        """The file caching the completion of a request."""
        digest = hashlib.sha256(
            f"{self._settings}\n{request.text}".encode()
        ).hexdigest()
        return self._root / digest[:2] / f"{digest}.json"

    def complete(self, request: CompletionRequest) -> str:
        path = self.path_of(request)
        try:
            output = json.loads(path.read_text(encoding="utf-8"))["output"]
        except (OSError, ValueError, KeyError):
            pass
        else:
            self._hits.increment()
            return str(output)

        output = self._model.complete(request)
        try:
            self._write(path, output)
        except OSError as e:
            utils.get_library_logger().warning(
                "Cannot write the cache entry '%s': %s", path, e
            )
        return output

    def close(self) -> None:
        self._model.close()

    def _write(self, path: Path, output: str) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as file:
                json.dump({"output": output}, file)
            os.replace(tmp, path)
        except BaseException:
            Path(tmp).unlink(missing_ok=True)
            raise
