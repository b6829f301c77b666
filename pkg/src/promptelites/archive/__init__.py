# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

from ._archive import (
    DEFAULT_AXES,
    DEFAULT_UNIVERSE,
    Archive,
    InsertionRecord,
    InsertionResult,
)
from ._individual import Individual, Provenance
from ._io import (
    ARCHIVE_CSV_HEADER,
    dump_json,
    load_archive,
    load_population,
    read_json,
    save_archive,
    save_population,
    write_archive_csv,
)

__all__ = [
    # _archive
    "DEFAULT_AXES",
    "DEFAULT_UNIVERSE",
    "Archive",
    "InsertionRecord",
    "InsertionResult",
    # _individual
    "Individual",
    "Provenance",
    # _io
    "ARCHIVE_CSV_HEADER",
    "dump_json",
    "load_archive",
    "load_population",
    "read_json",
    "save_archive",
    "save_population",
    "write_archive_csv",
]
