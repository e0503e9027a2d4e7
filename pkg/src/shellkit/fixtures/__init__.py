# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
"""Posets with known check verdicts: transcribed drawings and classic lattices."""

from ._base import NamedFixture, mismatches, run_expectations
from .figures import (
    DATA_DIR,
    FIGURES,
    figure_fixtures,
    fixture_names,
    fixture_path,
    load_fixture,
)
from .lattices import boolean_lattice, distributive_from_poset, partition_lattice


__all__ = [
    "DATA_DIR",
    "FIGURES",
    "NamedFixture",
    "boolean_lattice",
    "distributive_from_poset",
    "figure_fixtures",
    "fixture_names",
    "fixture_path",
    "load_fixture",
    "mismatches",
    "partition_lattice",
    "run_expectations",
]
