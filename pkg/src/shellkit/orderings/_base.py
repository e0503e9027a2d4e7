# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
"""Chain-atom orderings and the F/G partition of rooted intervals."""
from typing import Dict, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from ..labelings import ChainEdgeLabeling, lex_chain_order
from ..poset import Poset, RootPath
from ..utils.errors import BottomHasNoParentError, InvalidOrderingError


Chain = Tuple[str, ...]


class ChainAtomOrdering:
    """An order on the atoms of every rooted interval ``[u, top]_r``.

    ``orders[r]`` lists the upper covers of ``r[-1]``. Roots missing from
    ``orders`` fall back to ElementOrder on the upper covers when
    ``default_element_order`` is set and are an error otherwise.

    :param poset: the ordered poset.
    :param orders: map ``root -> atoms`` of ``[root[-1], top]_root``.
    :param default_element_order: order unlisted roots by ElementOrder.

    :raises InvalidOrderingError: if an order is not a permutation of the
        upper covers, or a root is missing.
    """

    def __init__(
        self,
        poset: Poset,
        orders: Mapping[RootPath, Sequence[str]],
        default_element_order: bool = False,
    ) -> None:
        self.poset = poset
        self.default_element_order = default_element_order
        self._orders: Dict[RootPath, Tuple[str, ...]] = {}

        for root, atoms in orders.items():
            root = poset.check_root(root)
            atoms = tuple(atoms)
            covers = poset.upper_covers(root[-1])
            if len(atoms) != len(covers) or set(atoms) != set(covers):
                raise InvalidOrderingError(
                    f"order {list(atoms)} under root {'<'.join(root)} is not a "
                    f"permutation of the upper covers {list(covers)}"
                )
            self._orders[root] = atoms

        if not default_element_order:
            for root in poset.rooted_elements():
                if root not in self._orders:
                    raise InvalidOrderingError(
                        f"no atom order for the root {'<'.join(root)}"
                    )

    @classmethod
    def from_element_orders(
        cls, poset: Poset, element_orders: Mapping[str, Sequence[str]]
    ) -> "ChainAtomOrdering":
        """A root-independent ordering: every root ending at ``u`` gets
        ``element_orders[u]``; unlisted elements use ElementOrder."""
        orders = {}
        for u, atoms in element_orders.items():
            for root in poset.roots(u):
                orders[root] = atoms
        return cls(poset, orders, default_element_order=True)

    def order(self, root: RootPath) -> Tuple[str, ...]:
        """Atoms of ``[root[-1], top]_root`` in order."""
        root = tuple(root)
        atoms = self._orders.get(root)
        if atoms is not None:
            return atoms
        if self.default_element_order:
            return self.poset.upper_covers(self.poset.check_root(root)[-1])
        raise InvalidOrderingError(f"no atom order for the root {'<'.join(root)}")

    def atoms_in(self, root: RootPath, v: str) -> Tuple[str, ...]:
        """Atoms of ``[root[-1], v]_root`` in order."""
        return tuple(a for a in self.order(root) if self.poset.leq(a, v))

    def first_atom(self, root: RootPath, v: str) -> str:
        return self.atoms_in(root, v)[0]

    def index(self, root: RootPath, atom: str) -> int:
        return self.order(root).index(atom)

    def items(self) -> Iterator[Tuple[RootPath, Tuple[str, ...]]]:
        """Every root with its order, bottom-up."""
        for root in self.poset.rooted_elements():
            yield root, self.order(root)

    def with_order(self, root: RootPath, atoms: Sequence[str]) -> "ChainAtomOrdering":
        """A copy with the order under ``root`` replaced."""
        orders = dict(self._orders)
        orders[tuple(root)] = tuple(atoms)
        return ChainAtomOrdering(
            self.poset, orders, default_element_order=self.default_element_order
        )

    def element_orders(self) -> Optional[Dict[str, Tuple[str, ...]]]:
        """The per-element orders if the ordering ignores roots, else ``None``."""
        orders: Dict[str, Tuple[str, ...]] = {}
        for root, atoms in self.items():
            if orders.setdefault(root[-1], atoms) != atoms:
                return None
        return orders

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChainAtomOrdering):
            return NotImplemented
        return self.poset == other.poset and dict(self.items()) == dict(other.items())

    def __repr__(self) -> str:
        return f"ChainAtomOrdering({self.poset!r}, {len(self._orders)} explicit roots)"


class FGPartition(NamedTuple):
    """Atoms above an earlier atom one level down (F) and the rest (G)."""

    F: Tuple[str, ...]
    G: Tuple[str, ...]


def _partition(
    poset: Poset,
    parent_order: Sequence[str],
    root: RootPath,
    atoms: Sequence[str],
    v: str,
) -> FGPartition:
    u = root[-1]
    position = list(parent_order).index(u)
    earlier = [e for e in parent_order[:position] if poset.leq(e, v)]

    F, G = [], []
    for a in atoms:
        if not poset.leq(a, v):
            continue
        if any(poset.lt(e, a) for e in earlier):
            F.append(a)
        else:
            G.append(a)
    return FGPartition(tuple(F), tuple(G))


def fg_sets(
    C: ChainAtomOrdering, root: RootPath, v: Optional[str] = None
) -> FGPartition:
    """F/G partition of the atoms of ``[u, v]_root`` with ``u = root[-1]``.

    ``F`` holds the atoms lying above some atom of ``[u', v]`` that comes
    before ``u`` under the parent root, where ``u'`` is the element of the
    root below ``u``. Both parts keep the order of ``C``.

    :param v: upper end, the top element by default.
    :raises BottomHasNoParentError: if ``root`` ends at the bottom element.
    """
    poset = C.poset
    root = poset.check_root(root)
    if len(root) < 2:
        raise BottomHasNoParentError("the bottom element has no parent root")
    v = poset.top if v is None else v
    poset.require_leq(root[-1], v)
    return _partition(poset, C.order(root[:-1]), root, C.order(root), v)


def restrict_cao(C: ChainAtomOrdering, root: RootPath, v: str) -> ChainAtomOrdering:
    """Restriction of ``C`` to the interval ``[root[-1], v]``.

    A root ``s`` of the interval inherits the order of the root
    ``root + s[1:]`` of the whole poset, keeping the atoms below ``v``.

    :raises NotComparableError: if ``root[-1]`` is not below ``v``.
    """
    poset = C.poset
    root = poset.check_root(root)
    interval = poset.interval(root[-1], v)
    orders = {
        s: C.atoms_in(root + s[1:], v) for s in interval.rooted_elements()
    }
    return ChainAtomOrdering(interval, orders)


def cao_chain_key(C: ChainAtomOrdering, chain: Chain) -> Tuple[int, ...]:
    """Positions of the atoms taken along a maximal chain."""
    return tuple(C.index(chain[: i + 1], chain[i + 1]) for i in range(len(chain) - 1))


def cao_chain_order(C: ChainAtomOrdering) -> List[Chain]:
    """Maximal chains sorted at their first divergence by the atom order there."""
    return sorted(C.poset.maximal_chains(), key=lambda c: cao_chain_key(C, c))


def check_compatible(C: ChainAtomOrdering, labeling: ChainEdgeLabeling) -> bool:
    """Whether ``C`` and ``labeling`` order the maximal chains the same way."""
    if C.poset != labeling.poset:
        raise ValueError("the ordering and the labeling live on different posets")
    return cao_chain_order(C) == lex_chain_order(labeling)
