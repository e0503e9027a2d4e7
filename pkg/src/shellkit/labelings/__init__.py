# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
"""Chain-edge and edge labelings and their lexicographic checks."""

from ._base import (
    ChainEdgeLabeling,
    ChainFlags,
    EdgeLabeling,
    LabelAlphabet,
    chain_comparator,
    classify_chain,
    geometric_lattice_labeling,
    is_topological_ascent,
    is_topologically_ascending,
    label_sequence,
    lex_chain_order,
    lex_compare,
    validate_ce,
)
from .checks import (
    CCCheck,
    CLCheck,
    ECCheck,
    ELCheck,
    SelfConsistencyCheck,
    TopologicalCLCheck,
    UECheck,
    check_cc,
    check_cl,
    check_ec,
    check_el,
    check_self_consistency,
    check_topological_cl,
    check_ue,
)


__all__ = [
    "CCCheck",
    "CLCheck",
    "ChainEdgeLabeling",
    "ChainFlags",
    "ECCheck",
    "ELCheck",
    "EdgeLabeling",
    "LabelAlphabet",
    "SelfConsistencyCheck",
    "TopologicalCLCheck",
    "UECheck",
    "chain_comparator",
    "check_cc",
    "check_cl",
    "check_ec",
    "check_el",
    "check_self_consistency",
    "check_topological_cl",
    "check_ue",
    "classify_chain",
    "geometric_lattice_labeling",
    "is_topological_ascent",
    "is_topologically_ascending",
    "label_sequence",
    "lex_chain_order",
    "lex_compare",
    "validate_ce",
]
