# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0

from promptelites.cli import main

raise SystemExit(main())
