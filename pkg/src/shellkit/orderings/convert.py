# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
"""Constructions between atom orderings and labelings."""
import logging
from typing import Dict, Tuple

from ..labelings import (
    ChainEdgeLabeling,
    check_self_consistency,
    check_topological_cl,
)
from ..poset import RootPath
from ..utils.errors import (
    NotGRAOError,
    NotRAOError,
    NotSelfConsistentTopologicalCLError,
)
from ._base import ChainAtomOrdering, fg_sets
from .checks import check_grao, check_rao


logger = logging.getLogger(__name__)


def _position_labels(C: ChainAtomOrdering) -> ChainEdgeLabeling:
    labels = {}
    for root, atoms in C.items():
        for i, a in enumerate(atoms):
            labels[(root, a)] = i + 1
    return ChainEdgeLabeling(C.poset, labels)


def grao_to_cc(C: ChainAtomOrdering, check: bool = True) -> ChainEdgeLabeling:
    """Label every cover ``u < a`` under a root by the position of ``a``.

    The labeling is a CC-labeling with the UE property that orders maximal
    chains like ``C``.

    :param check: refuse orderings failing :py:func:`check_grao`.
    :raises NotGRAOError: if ``check`` is set and ``C`` is not a GRAO.
    """
    if check:
        report = check_grao(C)
        if not report.verdict:
            raise NotGRAOError("the ordering is not a GRAO", report)
    return _position_labels(C)


def rao_to_cc(C: ChainAtomOrdering, check: bool = True) -> ChainEdgeLabeling:
    """Position labels of a recursive atom ordering.

    :raises NotRAOError: if ``check`` is set and ``C`` is not an RAO.
    """
    if check:
        report = check_rao(C)
        if not report.verdict:
            raise NotRAOError("the ordering is not a recursive atom ordering", report)
    return _position_labels(C)


def rao_to_cl(C: ChainAtomOrdering, check: bool = True) -> ChainEdgeLabeling:
    """CL-labeling built from a recursive atom ordering.

    Atoms of the whole poset get labels ``1, 2, ...``. Under a longer root
    with incoming label ``l`` and ``j`` atoms in ``F``, the ``i``-th atom
    gets ``i - j + l - 1`` when it is in ``F`` and ``i - j + l + 1``
    otherwise, so that exactly the ``F`` atoms continue with a descent.

    :raises NotRAOError: if ``check`` is set and ``C`` is not an RAO.
    """
    if check:
        report = check_rao(C)
        if not report.verdict:
            raise NotRAOError("the ordering is not a recursive atom ordering", report)

    labels: Dict[Tuple[RootPath, str], int] = {}
    for root, atoms in C.items():
        if len(root) == 1:
            for i, a in enumerate(atoms, start=1):
                labels[(root, a)] = i
            continue

        incoming = labels[(root[:-1], root[-1])]
        j = len(fg_sets(C, root).F)
        for i, a in enumerate(atoms, start=1):
            if i <= j:
                labels[(root, a)] = i - j + incoming - 1
            else:
                labels[(root, a)] = i - j + incoming + 1

    return ChainEdgeLabeling(C.poset, labels)


def labeling_to_grao(
    labeling: ChainEdgeLabeling, check: bool = True
) -> ChainAtomOrdering:
    """Order the atoms of each ``[u, top]_r`` greedily by lexicographic order.

    The first atom lies on the lexicographically first chain, the next on
    the first chain avoiding the atoms already placed, and so on; equal
    sequences fall back to ElementOrder.

    :param check: require a self-consistent topological CL-labeling.
    :raises NotSelfConsistentTopologicalCLError: if ``check`` is set and
        ``labeling`` fails either check.
    """
    if check:
        gates = (check_topological_cl(labeling), check_self_consistency(labeling))
        for report in gates:
            if not report.verdict:
                raise NotSelfConsistentTopologicalCLError(
                    f"the labeling fails the {report.check} check", report
                )

    poset = labeling.poset
    orders = {}
    for root in poset.rooted_elements():
        best = {}
        for chain, _, key in labeling.chain_data(root, poset.top):
            candidate = (key, poset.chain_key(chain))
            atom = chain[1]
            if atom not in best or candidate < best[atom]:
                best[atom] = candidate
        orders[root] = sorted(best, key=best.__getitem__)

    logger.debug("ordered the atoms under %d roots", len(orders))
    return ChainAtomOrdering(poset, orders)
