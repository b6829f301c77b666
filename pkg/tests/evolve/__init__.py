# Copyright 2024 The PromptElites Team.
# SPDX-License-Identifier: Apache-2.0
