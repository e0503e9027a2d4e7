# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
"""Chain-atom orderings: recursive and generalized recursive atom orderings,
the reordering process and the conversions to and from labelings."""

from ._base import (
    ChainAtomOrdering,
    FGPartition,
    cao_chain_order,
    check_compatible,
    fg_sets,
    restrict_cao,
)
from .checks import (
    FirstAtomCheck,
    GRAOCheck,
    RAOCheck,
    check_first_atom_consistency,
    check_grao,
    check_rao,
    condition_ii_holds,
)
from .convert import grao_to_cc, labeling_to_grao, rao_to_cc, rao_to_cl
from .reorder import legal_swaps, reorder, swap_atoms
from .search import search_rao


__all__ = [
    "ChainAtomOrdering",
    "FGPartition",
    "FirstAtomCheck",
    "GRAOCheck",
    "RAOCheck",
    "cao_chain_order",
    "check_compatible",
    "check_first_atom_consistency",
    "check_grao",
    "check_rao",
    "condition_ii_holds",
    "fg_sets",
    "grao_to_cc",
    "labeling_to_grao",
    "legal_swaps",
    "rao_to_cc",
    "rao_to_cl",
    "reorder",
    "restrict_cao",
    "search_rao",
    "swap_atoms",
]
