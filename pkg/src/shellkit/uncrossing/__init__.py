# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
"""Uncrossing posets of perfect matchings and their dual labeling."""

from .pipeline import STAGES, verify_uncrossing_pipeline
from .poset import (
    BOTTOM,
    build_uncrossing,
    uncrossing_alphabet,
    uncrossing_label_rank,
)
from .words import (
    StrandWord,
    UncrossLabel,
    canonicalize,
    crosses,
    crossing_number,
    crossing_pairs,
    enumerate_matchings,
    matching_count,
    noncrossing_count,
    uncross,
)


__all__ = [
    "BOTTOM",
    "STAGES",
    "StrandWord",
    "UncrossLabel",
    "build_uncrossing",
    "canonicalize",
    "crosses",
    "crossing_number",
    "crossing_pairs",
    "enumerate_matchings",
    "matching_count",
    "noncrossing_count",
    "uncross",
    "uncrossing_alphabet",
    "uncrossing_label_rank",
    "verify_uncrossing_pipeline",
]
