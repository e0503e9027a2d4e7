# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause

from . import config, errors
from .reports import (
    JSON_SCHEMA_VERSION,
    CheckReport,
    CommandReport,
    PipelineReport,
    StageResult,
    Witness,
)


__all__ = [
    "config",
    "errors",
    "JSON_SCHEMA_VERSION",
    "CheckReport",
    "CommandReport",
    "PipelineReport",
    "StageResult",
    "Witness",
]
