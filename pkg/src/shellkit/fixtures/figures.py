# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
"""Fixtures shipped as record files in ``shellkit/fixtures/data``.

The files are plain :py:mod:`shellkit.io` records, so the command line reads
them like any user input. Element names follow the drawings they transcribe.
"""
from pathlib import Path
from typing import List

from ..io import (
    labeling_from_records,
    ordering_from_records,
    parse_records,
    poset_from_records,
)
from ._base import NamedFixture


DATA_DIR = Path(__file__).parent / "data"

#: the transcribed drawings, pairs before and after a change of ordering or
#: labeling
FIGURES = (
    "graoex-left",
    "graoex-right",
    "graotorao-left",
    "graotorao-right",
    "nonue-left",
    "nonue-middle",
    "nonue-right",
)


def fixture_names() -> List[str]:
    """Names of every fixture file."""
    return sorted(path.stem for path in DATA_DIR.glob("*.txt"))


def fixture_path(name: str) -> Path:
    path = DATA_DIR / f"{name}.txt"
    if not path.is_file():
        raise ValueError(
            f"unknown fixture {name!r}, expected one of {', '.join(fixture_names())}"
        )
    return path


def load_fixture(name: str) -> NamedFixture:
    """Read the fixture ``name``; its leading comment becomes the description."""
    path = fixture_path(name)
    text = path.read_text(encoding="utf-8")
    records = parse_records(text, source=str(path))
    poset = poset_from_records(records)

    description = []
    for line in text.splitlines():
        if not line.startswith("#"):
            break
        description.append(line.lstrip("# ").strip())

    fixture = NamedFixture(
        name=name,
        poset=poset,
        expected=dict(records.expect),
        description=" ".join(description),
    )
    if records.labels or records.chain_labels:
        fixture.labelings[name] = labeling_from_records(poset, records)
    if records.atoms or records.element_atoms or records.default_element_order:
        fixture.orderings[name] = ordering_from_records(poset, records)
    return fixture


def figure_fixtures() -> List[NamedFixture]:
    return [load_fixture(name) for name in FIGURES]
