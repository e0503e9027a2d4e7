# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
"""Finite bounded posets given by their cover relations."""
import logging
import threading
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from ..utils.config import interval_budget
from ..utils.errors import (
    BudgetExceededError,
    ChainNotInPosetError,
    CycleError,
    InvalidRootError,
    NotBoundedError,
    NotComparableError,
    NotReducedError,
    UnknownElementError,
)


logger = logging.getLogger(__name__)

#: A saturated chain ``(bottom, e_1, ..., u)`` from the bottom element to
#: ``u``. The root of the bottom element itself is ``(bottom,)``.
RootPath = Tuple[str, ...]

#: Position of every element in the canonical order (input order).
ElementOrder = Dict[str, int]

Chain = Tuple[str, ...]


class Poset:
    """A finite bounded poset.

    The cover relations are the source of truth; the order relation is
    derived from them once and cached as a boolean matrix. Instances are
    immutable. Chain and root enumerations are memoized behind a lock, so a
    poset can be shared between threads.

    :param elements: element identifiers; their order is the
        :py:data:`ElementOrder` used for every deterministic tie-break.
    :param covers: pairs ``(lower, upper)`` with ``lower`` covered by
        ``upper``.

    :raises CycleError: if the covers contain a directed cycle.
    :raises NotBoundedError: if there is not exactly one minimal and one
        maximal element.
    :raises NotReducedError: if a listed pair has an element strictly between.
    """

    def __init__(
        self, elements: Sequence[str], covers: Iterable[Tuple[str, str]]
    ) -> None:
        elements = tuple(elements)
        if len(elements) == 0:
            raise NotBoundedError("a poset needs at least one element")
        for x in elements:
            if not isinstance(x, str) or x == "" or any(c.isspace() for c in x):
                raise ValueError(
                    f"element identifiers must be non-empty strings without "
                    f"whitespace, got {x!r}"
                )
        if len(set(elements)) != len(elements):
            raise ValueError("element identifiers must be distinct")

        self._elements = elements
        self._position = {x: i for i, x in enumerate(elements)}

        covers = frozenset((str(lo), str(hi)) for lo, hi in covers)
        for lo, hi in covers:
            for x in (lo, hi):
                if x not in self._position:
                    raise UnknownElementError(f"cover ({lo}, {hi}) names unknown {x!r}")

        graph = nx.DiGraph()
        graph.add_nodes_from(elements)
        graph.add_edges_from(covers)
        try:
            cycle = nx.find_cycle(graph)
        except nx.NetworkXNoCycle:
            cycle = None
        if cycle is not None:
            path = " -> ".join([edge[0] for edge in cycle] + [cycle[-1][1]])
            raise CycleError(f"cover relations contain the cycle {path}")

        minimal = [x for x in elements if graph.in_degree(x) == 0]
        maximal = [x for x in elements if graph.out_degree(x) == 0]
        if len(minimal) != 1 or len(maximal) != 1:
            raise NotBoundedError(
                f"expected one minimal and one maximal element, found minimal "
                f"{minimal} and maximal {maximal}"
            )

        self._bottom = minimal[0]
        self._top = maximal[0]
        self._graph = graph
        self._covers = covers

        key = self._position.__getitem__
        self._upper = {x: tuple(sorted(graph.successors(x), key=key)) for x in elements}
        self._lower = {
            x: tuple(sorted(graph.predecessors(x), key=key)) for x in elements
        }

        topological = list(nx.topological_sort(graph))
        rank = {}
        for x in topological:
            rank[x] = max((rank[y] + 1 for y in self._lower[x]), default=0)
        self._rank = rank

        leq = np.eye(len(elements), dtype=bool)
        for x in reversed(topological):
            i = self._position[x]
            for y in self._upper[x]:
                leq[i] |= leq[self._position[y]]
        leq.setflags(write=False)
        self._leq = leq

        for lo, hi in sorted(covers, key=lambda c: (key(c[0]), key(c[1]))):
            between = leq[key(lo)] & leq[:, key(hi)]
            if np.count_nonzero(between) > 2:
                middle = [
                    elements[k]
                    for k in np.flatnonzero(between)
                    if elements[k] not in (lo, hi)
                ]
                raise NotReducedError(
                    f"({lo}, {hi}) is not a cover relation: {middle[0]} lies "
                    f"strictly between"
                )

        self._linear_extension = tuple(
            sorted(elements, key=lambda x: (self._rank[x], self._position[x]))
        )

        self._lock = threading.RLock()
        self._chains: Dict[Tuple[str, str], List[Chain]] = {}
        self._roots: Dict[str, List[RootPath]] = {}
        self._mobius: Dict[str, Dict[str, int]] = {}

    # basic data

    @property
    def elements(self) -> Tuple[str, ...]:
        """Elements in :py:data:`ElementOrder`."""
        return self._elements

    @property
    def covers(self) -> frozenset:
        """Cover pairs ``(lower, upper)``."""
        return self._covers

    @property
    def bottom(self) -> str:
        return self._bottom

    @property
    def top(self) -> str:
        return self._top

    @property
    def element_order(self) -> ElementOrder:
        return dict(self._position)

    @property
    def cover_graph(self) -> nx.DiGraph:
        """A frozen copy of the Hasse diagram as a directed graph."""
        return nx.freeze(self._graph.copy())

    @property
    def leq_matrix(self) -> np.ndarray:
        """Read-only boolean matrix ``M[i, j] = elements[i] <= elements[j]``."""
        return self._leq

    @property
    def length(self) -> int:
        """Length of the longest maximal chain."""
        return self._rank[self._top]

    def __len__(self) -> int:
        return len(self._elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self._elements)

    def __contains__(self, x) -> bool:
        return x in self._position

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self._elements == other._elements and self._covers == other._covers

    def __hash__(self) -> int:
        return hash((self._elements, self._covers))

    def __repr__(self) -> str:
        return (
            f"Poset({len(self)} elements, {len(self._covers)} covers, "
            f"bottom={self._bottom!r}, top={self._top!r})"
        )

    def position(self, x: str) -> int:
        """Position of ``x`` in the :py:data:`ElementOrder`."""
        try:
            return self._position[x]
        except KeyError:
            raise UnknownElementError(f"unknown element {x!r}") from None

    def chain_key(self, chain: Sequence[str]) -> Tuple[int, ...]:
        """Sort key comparing chains element by element in ElementOrder."""
        return tuple(self.position(x) for x in chain)

    # order relation

    def leq(self, x: str, y: str) -> bool:
        return bool(self._leq[self.position(x), self.position(y)])

    def lt(self, x: str, y: str) -> bool:
        return x != y and self.leq(x, y)

    def covered_by(self, x: str, y: str) -> bool:
        return (x, y) in self._covers

    def upper_covers(self, x: str) -> Tuple[str, ...]:
        """Elements covering ``x``, in ElementOrder."""
        self.position(x)
        return self._upper[x]

    def lower_covers(self, x: str) -> Tuple[str, ...]:
        """Elements covered by ``x``, in ElementOrder."""
        self.position(x)
        return self._lower[x]

    def rank(self, x: str) -> int:
        """Length of the longest chain from the bottom element to ``x``."""
        self.position(x)
        return self._rank[x]

    def is_graded(self) -> bool:
        """Whether all maximal chains have the same length."""
        return all(
            self._rank[hi] == self._rank[lo] + 1 for lo, hi in self._covers
        )

    def require_leq(self, u: str, v: str) -> None:
        if not self.leq(u, v):
            raise NotComparableError(f"{u!r} is not below {v!r}")

    def above(self, u: str, strict: bool = True) -> Tuple[str, ...]:
        """Elements ``>= u`` (``> u`` if ``strict``) in linear-extension order."""
        row = self._leq[self.position(u)]
        return tuple(
            x
            for x in self._linear_extension
            if row[self._position[x]] and not (strict and x == u)
        )

    def elements_between(self, u: str, v: str) -> Tuple[str, ...]:
        """Elements of ``[u, v]`` in ElementOrder."""
        self.require_leq(u, v)
        mask = self._leq[self.position(u)] & self._leq[:, self.position(v)]
        return tuple(self._elements[k] for k in np.flatnonzero(mask))

    def linear_extension(self) -> Tuple[str, ...]:
        """Elements sorted by (longest chain from the bottom, ElementOrder)."""
        return self._linear_extension

    # sub-posets

    def interval(self, u: str, v: str) -> "Poset":
        """The closed interval ``[u, v]`` with the induced cover relations."""
        members = self.elements_between(u, v)
        inside = set(members)
        covers = [(lo, hi) for lo, hi in self._covers if lo in inside and hi in inside]
        return Poset(members, covers)

    def dual(self) -> "Poset":
        """The poset with every cover relation reversed."""
        return Poset(self._elements, [(hi, lo) for lo, hi in self._covers])

    # chains

    def saturated_chains(self, u: str, v: str) -> List[Chain]:
        """All maximal chains of ``[u, v]``, sorted in ElementOrder.

        :raises NotComparableError: if ``u`` is not below ``v``.
        """
        self.require_leq(u, v)
        return list(self._saturated_chains(u, v))

    def _saturated_chains(self, u: str, v: str) -> List[Chain]:
        key = (u, v)
        with self._lock:
            cached = self._chains.get(key)
        if cached is not None:
            return cached

        if u == v:
            chains = [(u,)]
        else:
            vi = self._position[v]
            chains = []
            for a in self._upper[u]:
                if self._leq[self._position[a], vi]:
                    chains.extend((u,) + c for c in self._saturated_chains(a, v))

        with self._lock:
            self._chains[key] = chains
        return chains

    def maximal_chains(self) -> List[Chain]:
        """Maximal chains of the whole poset (the facets of its order complex)."""
        return self.saturated_chains(self._bottom, self._top)

    def roots(self, u: str) -> List[RootPath]:
        """All saturated chains from the bottom element to ``u``.

        Built by walking down the cover relations, independently of
        :py:meth:`saturated_chains`.
        """
        self.position(u)
        return list(self._roots_of(u))

    def _roots_of(self, u: str) -> List[RootPath]:
        with self._lock:
            cached = self._roots.get(u)
        if cached is not None:
            return cached

        if u == self._bottom:
            roots = [(u,)]
        else:
            roots = [r + (u,) for lo in self._lower[u] for r in self._roots_of(lo)]
            roots.sort(key=self.chain_key)

        with self._lock:
            self._roots[u] = roots
        return roots

    def check_root(self, root: Sequence[str]) -> RootPath:
        """Validate a root and return it as a tuple.

        :raises InvalidRootError: if ``root`` does not start at the bottom
            element or skips a cover relation.
        """
        root = tuple(root)
        if len(root) == 0 or root[0] != self._bottom:
            raise InvalidRootError(f"root {root} does not start at {self._bottom!r}")
        for lo, hi in zip(root, root[1:]):
            if (lo, hi) not in self._covers:
                raise InvalidRootError(f"root {root} skips the cover {lo} < {hi}")
        return root

    def check_chain(self, chain: Sequence[str]) -> Chain:
        """Validate a saturated chain ``u = c_0 < c_1 < ... < c_k``.

        :raises ChainNotInPosetError: if some consecutive pair is not a cover.
        """
        chain = tuple(chain)
        if len(chain) == 0:
            raise ChainNotInPosetError("a saturated chain has at least one element")
        for x in chain:
            if x not in self._position:
                raise ChainNotInPosetError(f"chain {chain} names unknown {x!r}")
        for lo, hi in zip(chain, chain[1:]):
            if (lo, hi) not in self._covers:
                raise ChainNotInPosetError(f"{lo} < {hi} in {chain} is not a cover")
        return chain

    def rooted_intervals(
        self, all_roots: bool = True, budget: Optional[int] = None
    ) -> Iterator[Tuple[RootPath, str]]:
        """Rooted intervals ``[u, v]_r`` with ``u < v``, as pairs ``(r, v)``.

        Elements ``u`` are visited in linear-extension order, their roots in
        ElementOrder and the upper ends ``v`` in linear-extension order.

        :param all_roots: visit every root of ``u``; otherwise only its first
            root (enough for edge labelings).
        :param budget: maximal number of rooted intervals, ``None`` reads
            :py:func:`shellkit.utils.config.interval_budget`.
        :raises BudgetExceededError: once more than ``budget`` pairs are needed.
        """
        budget = interval_budget(budget)
        count = 0
        for u in self._linear_extension:
            if u == self._top:
                continue
            uppers = self.above(u)
            roots = self._roots_of(u) if all_roots else self._roots_of(u)[:1]
            for r in roots:
                count += len(uppers)
                if count > budget:
                    raise BudgetExceededError(
                        f"more than {budget} rooted intervals; raise the budget "
                        f"with SHELLKIT_BUDGET"
                    )
                for v in uppers:
                    yield r, v
        logger.debug("visited %d rooted intervals", count)

    def rooted_elements(self) -> Iterator[RootPath]:
        """Every root of every element except the top, bottom-up."""
        for u in self._linear_extension:
            if u != self._top:
                yield from self._roots_of(u)

    # Möbius function

    def mobius(self, u: str, v: str) -> int:
        """Möbius function ``mu(u, v)`` by the defining recursion.

        ``mu(u, u) = 1`` and ``sum(mu(u, z) for u <= z <= v) = 0`` for
        ``u < v``. Rows ``mu(u, .)`` are memoized.
        """
        self.require_leq(u, v)
        return self._mobius_row(u)[v]

    def _mobius_row(self, u: str) -> Dict[str, int]:
        with self._lock:
            cached = self._mobius.get(u)
        if cached is not None:
            return cached

        row: Dict[str, int] = {}
        for z in self.above(u, strict=False):
            if z == u:
                row[z] = 1
            else:
                zi = self._position[z]
                row[z] = -sum(
                    value
                    for w, value in row.items()
                    if self._leq[self._position[w], zi]
                )

        with self._lock:
            self._mobius[u] = row
        return row


def build_poset(
    cover_pairs: Iterable[Tuple[str, str]], elements: Optional[Sequence[str]] = None
) -> Poset:
    """Build and validate a :py:class:`Poset` from its cover relations.

    :param cover_pairs: pairs ``(lower, upper)``.
    :param elements: optional element order. By default elements are ordered
        by first appearance in ``cover_pairs``.
    :return: the validated poset.
    """
    pairs = [(str(lo), str(hi)) for lo, hi in cover_pairs]
    if len(pairs) == 0 and not elements:
        raise ValueError("the list of cover pairs is empty")

    if elements is None:
        elements = list(dict.fromkeys(x for pair in pairs for x in pair))

    return Poset(elements, pairs)
