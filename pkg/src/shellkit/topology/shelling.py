# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
"""Order complexes, shelling orders and reduced Euler characteristics."""
from itertools import combinations
from typing import FrozenSet, Iterable, List, Optional, Sequence

from ..module import _Check
from ..poset import Poset
from ..utils.errors import NotPermutationError
from ..utils.reports import CheckReport, Witness


#: Facets of a simplicial complex as vertex sets.
FacetList = List[FrozenSet[str]]


def order_complex_facets(poset: Poset, mode: str = "full") -> FacetList:
    """Facets of the order complex, one per maximal chain.

    :param mode: ``"full"`` keeps the bottom and top elements, ``"proper"``
        drops them. The proper part of a single cover is the complex whose only
        face is the empty one.
    """
    if mode not in ("full", "proper"):
        raise ValueError(f"mode must be 'full' or 'proper', got {mode!r}")
    if mode == "full":
        return [frozenset(chain) for chain in poset.maximal_chains()]
    return [frozenset(chain[1:-1]) for chain in poset.maximal_chains()]


def proper_part_facets(poset: Poset, u: str, v: str) -> FacetList:
    """Facets of the order complex of the open interval ``(u, v)``."""
    return order_complex_facets(poset.interval(u, v), mode="proper")


def facet_order_from_chains(
    facets: Sequence[FrozenSet[str]],
    chains: Iterable[Sequence[str]],
    proper: bool = False,
) -> List[int]:
    """Positions of ``chains`` in ``facets``, e.g. to shell along a chain order.

    :param proper: drop the end points of every chain first.
    :raises NotPermutationError: if the chains do not match the facets one to one.
    """
    index = {facet: i for i, facet in enumerate(facets)}
    order = []
    for chain in chains:
        chain = tuple(chain)
        vertices = frozenset(chain[1:-1] if proper else chain)
        if vertices not in index:
            raise NotPermutationError(f"{'<'.join(chain)} is not a facet")
        order.append(index[vertices])
    _check_permutation(order, len(facets))
    return order


def _check_permutation(order: Sequence[int], size: int) -> None:
    if sorted(order) != list(range(size)):
        raise NotPermutationError(
            f"the order must list each of the {size} facets exactly once"
        )


class ShellingCheck(_Check):
    """Pairwise shelling criterion.

    A facet ``F_j`` may follow ``F_1, ..., F_{j-1}`` if every intersection
    ``F_i & F_j`` with ``i < j`` lies inside some ``F_k & F_j`` with ``k < j``
    of size ``|F_j| - 1``. The checked object is the list of facets already
    in shelling order.
    """

    name = "shelling"

    def units(self, facets: Sequence[FrozenSet[str]]) -> Iterable[int]:
        return range(1, len(facets))

    def unit_of(self, witness: Witness) -> int:
        return witness.positions[1]

    def visit(self, facets, j: int) -> List[Witness]:
        current = facets[j]
        ridges = [
            facets[k] & current
            for k in range(j)
            if len(facets[k] & current) == len(current) - 1
        ]
        for i in range(j):
            shared = facets[i] & current
            if not any(shared <= ridge for ridge in ridges):
                return [
                    Witness(
                        reason="not-codimension-one",
                        chains=(tuple(sorted(facets[i])), tuple(sorted(current))),
                        positions=(i, j),
                        detail=f"facet {j} meets facet {i} outside a "
                        f"codimension-one face of earlier facets",
                    )
                ]
        return []


def is_shelling(
    facets: Sequence[FrozenSet[str]], order: Optional[Sequence[int]] = None, **kwargs
) -> CheckReport:
    """Check whether ``order`` (identity by default) shells ``facets``.

    Witness positions refer to the ordered facet list.

    :raises NotPermutationError: if ``order`` is not a permutation of the facets.
    """
    facets = [frozenset(f) for f in facets]
    if order is None:
        order = list(range(len(facets)))
    _check_permutation(list(order), len(facets))
    return ShellingCheck(**kwargs).check([facets[i] for i in order])


def reduced_euler(facets: Iterable[Iterable[str]]) -> int:
    """Reduced Euler characteristic, the empty face included.

    ``sum((-1) ** (len(f) - 1) for every face f)``, so a point gives 0, two
    points give 1 and the complex with only the empty face gives -1.
    """
    faces = set()
    for facet in facets:
        facet = sorted(facet)
        for size in range(len(facet) + 1):
            faces.update(frozenset(f) for f in combinations(facet, size))
    return sum(-1 if len(f) % 2 == 0 else 1 for f in faces)
