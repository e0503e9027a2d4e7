# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
"""Backtracking search for a recursive atom ordering."""
import logging
import time
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

import numpy as np

from ..poset import Poset, RootPath
from ..utils.errors import TimeBudgetExceededError
from ._base import ChainAtomOrdering, _partition
from .checks import _strict_order


logger = logging.getLogger(__name__)

_Solution = Optional[Dict[RootPath, Tuple[str, ...]]]


class _RAOSearch:
    def __init__(self, poset: Poset, time_budget: Optional[float]) -> None:
        self.poset = poset
        self.lt = _strict_order(poset)
        self.leq = poset.leq_matrix
        self.deadline = None if time_budget is None else time.monotonic() + time_budget
        self.memo: Dict[Tuple[RootPath, FrozenSet[str]], _Solution] = {}
        self.tried = 0

    def _tick(self) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise TimeBudgetExceededError(
                f"no recursive atom ordering decided after {self.tried} candidate "
                f"orders"
            )

    def _above(self, placed: List[str]) -> np.ndarray:
        if len(placed) == 0:
            return np.zeros(len(self.leq), dtype=bool)
        return self.lt[[self.poset.position(a) for a in placed]].any(axis=0)

    def _condition_ii(self, placed: List[str], a: str) -> bool:
        # (ii) for a placed after ``placed`` depends on the set only
        if len(placed) == 0:
            return True
        above = self._above(placed)
        targets = self.lt[self.poset.position(a)] & above
        covers = [
            self.poset.position(z)
            for z in self.poset.upper_covers(a)
            if above[self.poset.position(z)]
        ]
        reached = self.leq[covers].any(axis=0) if covers else np.zeros_like(targets)
        return not np.any(targets & ~reached)

    def _orders(self, root: RootPath, F: FrozenSet[str]) -> Iterator[Tuple[str, ...]]:
        poset = self.poset
        atoms = poset.upper_covers(root[-1])
        placed: List[str] = []

        def extend() -> Iterator[Tuple[str, ...]]:
            self._tick()
            if len(placed) == len(atoms):
                yield tuple(placed)
                return
            remaining = [a for a in atoms if a not in placed]
            pool = [a for a in remaining if a in F] or remaining
            above = self._above(placed)

            def connected_first(a: str):
                linked = any(above[poset.position(z)] for z in poset.upper_covers(a))
                return (not linked, poset.position(a))

            for a in sorted(pool, key=connected_first):
                if self._condition_ii(placed, a):
                    placed.append(a)
                    yield from extend()
                    placed.pop()

        yield from extend()

    def solve(self, root: RootPath, F: FrozenSet[str]) -> _Solution:
        key = (root, F)
        if key in self.memo:
            return self.memo[key]

        poset = self.poset
        result: _Solution = None
        for order in self._orders(root, F):
            self.tried += 1
            found = {root: order}
            for a in order:
                if a == poset.top:
                    continue
                child = root + (a,)
                part = _partition(poset, order, child, poset.upper_covers(a), poset.top)
                sub = self.solve(child, frozenset(part.F))
                if sub is None:
                    found = None
                    break
                found.update(sub)
            if found is not None:
                result = found
                break

        self.memo[key] = result
        return result


def search_rao(
    poset: Poset, time_budget: Optional[float] = None
) -> Optional[ChainAtomOrdering]:
    """Find a recursive atom ordering of ``poset`` by backtracking.

    Atom orders are built one atom at a time under every root, keeping the
    atoms of ``F`` ahead of the others and pruning as soon as condition (ii)
    fails. Atoms with an upper cover above an already placed atom are tried
    first. Sub-problems are memoized on the root and its ``F`` set.

    :param time_budget: wall-clock limit in seconds, unlimited by default.
    :return: an ordering passing :py:func:`check_rao`, or ``None`` if none
        exists.
    :raises TimeBudgetExceededError: if the search runs out of time.
    """
    search = _RAOSearch(poset, time_budget)
    found = search.solve((poset.bottom,), frozenset())
    logger.info(
        "search for a recursive atom ordering tried %d orders over %d sub-problems: %s",
        search.tried,
        len(search.memo),
        "found" if found is not None else "none exists",
    )
    if found is None:
        return None
    return ChainAtomOrdering(poset, found)
