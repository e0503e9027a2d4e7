# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
"""The atom-reordering process and atom swaps."""
import logging
from typing import List, Optional, Sequence, Tuple

from ..poset import RootPath
from ..utils.errors import InvalidOrderingError, PreconditionViolatedError
from ._base import ChainAtomOrdering, _partition


logger = logging.getLogger(__name__)


def _check_linear_extension(poset, elements: Sequence[str]) -> Tuple[str, ...]:
    elements = tuple(elements)
    if sorted(elements) != sorted(poset.elements):
        raise InvalidOrderingError("a linear extension lists every element once")
    position = {x: i for i, x in enumerate(elements)}
    for lo, hi in poset.covers:
        if position[lo] > position[hi]:
            raise InvalidOrderingError(
                f"{hi} comes before {lo} although it covers it; not a linear extension"
            )
    return elements


def reorder(
    C: ChainAtomOrdering, linear_extension: Optional[Sequence[str]] = None
) -> ChainAtomOrdering:
    """Move the atoms of ``F`` ahead of those of ``G`` in every rooted interval.

    Elements are processed along a linear extension. The atom order of the
    whole poset is kept. For every later element ``u`` and root ``r`` the
    atoms of ``[u, top]_r`` are stably partitioned into ``F`` then ``G``,
    with ``F`` computed against the already reordered parent root.

    Applied to a GRAO this yields a recursive atom ordering with the same
    first atoms.

    :param linear_extension: processing order, by default
        :py:meth:`Poset.linear_extension`.
    """
    poset = C.poset
    if linear_extension is None:
        linear_extension = poset.linear_extension()
    else:
        linear_extension = _check_linear_extension(poset, linear_extension)

    orders = {}
    moved = 0
    for u in linear_extension:
        if u == poset.top:
            continue
        for root in poset.roots(u):
            if u == poset.bottom:
                orders[root] = C.order(root)
                continue
            atoms = C.order(root)
            F, G = _partition(poset, orders[root[:-1]], root, atoms, poset.top)
            orders[root] = F + G
            if orders[root] != atoms:
                moved += 1

    logger.debug("reorder changed the atom order under %d roots", moved)
    return ChainAtomOrdering(poset, orders)


def _swap_violation(C: ChainAtomOrdering, root: RootPath, i: int) -> Optional[str]:
    poset = C.poset
    atoms = C.order(root)
    pair = (atoms[i], atoms[i + 1])
    for w in poset.above(root[-1]):
        if poset.leq(pair[0], w) and poset.leq(pair[1], w):
            if C.first_atom(root, w) in pair:
                return w
    return None


def swap_atoms(C: ChainAtomOrdering, root: RootPath, i: int) -> ChainAtomOrdering:
    """Transpose the atoms at positions ``i`` and ``i + 1`` under ``root``.

    Neither atom may be the first atom of an interval ``[u, w]_root``
    containing both. A swap meeting this condition keeps a GRAO a GRAO and
    leaves every F/G partition unchanged.

    :raises PreconditionViolatedError: naming the offending ``w``.
    :raises InvalidOrderingError: if ``i`` is out of range.
    """
    root = C.poset.check_root(root)
    atoms = list(C.order(root))
    if not 0 <= i < len(atoms) - 1:
        raise InvalidOrderingError(
            f"cannot swap positions {i} and {i + 1} of {len(atoms)} atoms"
        )
    w = _swap_violation(C, root, i)
    if w is not None:
        raise PreconditionViolatedError(
            f"{C.first_atom(root, w)} is the first atom "
            f"of [{root[-1]}, {w}] which contains both {atoms[i]} and {atoms[i + 1]}",
            upper=w,
        )
    atoms[i], atoms[i + 1] = atoms[i + 1], atoms[i]
    return C.with_order(root, atoms)


def legal_swaps(C: ChainAtomOrdering) -> List[Tuple[RootPath, int]]:
    """All ``(root, i)`` accepted by :py:func:`swap_atoms`, bottom-up."""
    swaps = []
    for root, atoms in C.items():
        for i in range(len(atoms) - 1):
            if _swap_violation(C, root, i) is None:
                swaps.append((root, i))
    return swaps
