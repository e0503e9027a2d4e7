# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
"""Recursive and generalized recursive atom ordering checks.

Every root ``r`` of every element ``u`` below the top is visited once; the
conditions on ``[u, top]_r`` are checked for the atom order under ``r``. Visiting
all roots covers the recursion into the upper intervals.
"""
import logging
from typing import Iterator, List, Optional

import numpy as np

from ..module import _Check
from ..poset import RootPath
from ..utils.errors import BudgetExceededError
from ..utils.reports import CheckReport, Witness
from ._base import ChainAtomOrdering, fg_sets


logger = logging.getLogger(__name__)


def _strict_order(poset) -> np.ndarray:
    leq = poset.leq_matrix
    return leq & ~np.eye(len(leq), dtype=bool)


def _condition_ii_failure(
    C: ChainAtomOrdering, root: RootPath, j: int, rephrased: bool = False
) -> Optional[str]:
    """An element ``y`` violating condition (ii) for the ``j``-th atom, or ``None``.

    Literal form: every ``y`` above ``a_j`` and above some earlier atom must
    lie above some ``z`` covering ``a_j`` that is itself above an earlier
    atom. The rephrased form asks instead for ``a_j < z <= y`` such that
    ``a_j`` is not the first atom of ``[u, z]_r``.
    """
    poset = C.poset
    atoms = C.order(root)
    aj = atoms[j]
    if j == 0:
        return None

    lt = _strict_order(poset)
    earlier = [poset.position(a) for a in atoms[:j]]
    above_earlier = lt[earlier].any(axis=0)
    candidates = lt[poset.position(aj)] & above_earlier

    covers = list(poset.upper_covers(aj))
    if rephrased:
        covers = [z for z in covers if C.first_atom(root, z) != aj]
    else:
        covers = [z for z in covers if above_earlier[poset.position(z)]]

    leq = poset.leq_matrix
    if covers:
        reached = leq[[poset.position(z) for z in covers]].any(axis=0)
    else:
        reached = np.zeros(len(leq), dtype=bool)

    missing = np.flatnonzero(candidates & ~reached)
    if len(missing) == 0:
        return None
    return poset.elements[missing[0]]


def condition_ii_holds(
    C: ChainAtomOrdering, root: RootPath, j: int, rephrased: bool = False
) -> bool:
    """Condition (ii) for the ``j``-th atom (0-based) of ``[root[-1], top]_root``."""
    return _condition_ii_failure(C, tuple(root), j, rephrased) is None


class _OrderingCheck(_Check):
    def units(self, C: ChainAtomOrdering) -> Iterator[RootPath]:
        count = 0
        for root in C.poset.rooted_elements():
            count += 1
            if count > self.budget:
                raise BudgetExceededError(
                    f"more than {self.budget} roots; raise the budget with "
                    f"SHELLKIT_BUDGET"
                )
            yield root

    def unit_of(self, witness: Witness):
        return witness.root

    def _condition_ii(self, C, root) -> List[Witness]:
        atoms = C.order(root)
        rephrased = len(root) == 1
        for j in range(1, len(atoms)):
            y = _condition_ii_failure(C, root, j, rephrased=rephrased)
            if y is not None:
                earlier = [a for a in atoms[:j] if C.poset.lt(a, y)]
                return [
                    Witness(
                        reason="no-connecting-cover",
                        root=root,
                        upper=y,
                        atoms=(earlier[0], atoms[j]),
                        detail=f"no z covering {atoms[j]} below {y} lies above "
                        f"an earlier atom",
                    )
                ]
        return []


class GRAOCheck(_OrderingCheck):
    """Generalized recursive atom ordering.

    For each atom ``a_j`` under a root and each ``a_j < x < w`` (all ``w >
    a_j`` when ``extended``), either the first atom of ``[a_j, w]`` lies above
    an earlier atom ``a_i`` or no atom of ``[a_j, w]`` does. Condition (ii)
    must hold for every ``a_j``.
    """

    name = "grao"

    def __init__(self, extended: bool = False, **kwargs) -> None:
        super().__init__(**kwargs)
        self.extended = extended
        if extended:
            self.name = "grao-extended"

    def visit(self, C, root):
        poset = C.poset
        atoms = C.order(root)
        witnesses = []

        for j, aj in enumerate(atoms):
            if j == 0 or aj == poset.top:
                continue
            earlier = atoms[:j]
            child = root + (aj,)

            if self.extended:
                uppers = poset.above(aj)
            else:
                two_up = {
                    w
                    for x in poset.upper_covers(aj)
                    for w in poset.upper_covers(x)
                }
                uppers = [w for w in poset.linear_extension() if w in two_up]

            for w in uppers:
                inside = C.atoms_in(child, w)
                above = [x for x in inside if any(poset.lt(e, x) for e in earlier)]
                if len(above) > 0 and inside[0] not in above:
                    witnesses.append(
                        Witness(
                            reason="first-atom-not-above-earlier",
                            root=root,
                            upper=w,
                            atoms=(aj, inside[0], above[0]),
                            detail=f"{above[0]} lies above an atom before {aj} "
                            f"but the first atom {inside[0]} does not",
                        )
                    )
                    break

        return witnesses + self._condition_ii(C, root)


class RAOCheck(_OrderingCheck):
    """Recursive atom ordering: F before G under every root, and (ii)."""

    name = "rao"

    def visit(self, C, root):
        witnesses = []
        if len(root) >= 2:
            F, G = fg_sets(C, root)
            seen_g = None
            for a in C.order(root):
                if a in G and seen_g is None:
                    seen_g = a
                elif a in F and seen_g is not None:
                    witnesses.append(
                        Witness(
                            reason="f-after-g",
                            root=root,
                            atoms=(a, seen_g),
                            detail=f"{a} lies above an earlier atom but comes "
                            f"after {seen_g}",
                        )
                    )
                    break
        return witnesses + self._condition_ii(C, root)


class FirstAtomCheck(_OrderingCheck):
    """For ``t < u < v`` with ``u`` covering ``t``: either ``u`` is the first
    atom of ``[t, v]_r`` or the first atom of ``[u, v]_{r+u}`` lies above an
    atom of ``[t, v]_r`` coming before ``u``."""

    name = "first-atom"

    def visit(self, C, root):
        poset = C.poset
        for u in C.order(root):
            if u == poset.top:
                continue
            for v in poset.above(u):
                inside = C.atoms_in(root, v)
                if inside[0] == u:
                    continue
                earlier = inside[: inside.index(u)]
                first = C.first_atom(root + (u,), v)
                if not any(poset.lt(e, first) for e in earlier):
                    return [
                        Witness(
                            reason="first-atom-property",
                            root=root,
                            upper=v,
                            atoms=(u, first),
                            detail=f"the first atom {first} of [{u}, {v}] is "
                            f"not above an atom before {u}",
                        )
                    ]
        return []


def check_grao(C: ChainAtomOrdering, extended: bool = False, **kwargs) -> CheckReport:
    """GRAO check; ``extended`` quantifies (i)(b) over every ``w > a_j``."""
    return GRAOCheck(extended=extended, **kwargs).check(C)


def check_rao(C: ChainAtomOrdering, **kwargs) -> CheckReport:
    return RAOCheck(**kwargs).check(C)


def check_first_atom_consistency(C: ChainAtomOrdering, **kwargs) -> CheckReport:
    return FirstAtomCheck(**kwargs).check(C)
