# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
"""Classic lattices with EL-labelings that have the UE property."""
import itertools
import logging
from typing import Iterable, Iterator, List, Sequence, Tuple

import networkx as nx

from ..labelings import EdgeLabeling, LabelAlphabet, geometric_lattice_labeling
from ..poset import build_poset
from ..utils.errors import BudgetExceededError, CycleError
from ._base import NamedFixture


logger = logging.getLogger(__name__)

MAX_BOOLEAN = 5
MAX_PARTITION = 5
MAX_DISTRIBUTIVE = 6

Block = Tuple[int, ...]


def _require_size(n: int, largest: int, what: str, smallest: int = 1) -> None:
    if n < smallest:
        raise ValueError(f"{what} needs n >= {smallest}, got {n}")
    if n > largest:
        raise BudgetExceededError(f"{what} is only built up to n = {largest}, got {n}")


def _ideal_id(ideal: Iterable[str]) -> str:
    return "{" + ",".join(ideal) + "}"


def distributive_from_poset(
    elements: Sequence[str],
    relations: Iterable[Tuple[str, str]] = (),
    name: str = "distributive",
) -> NamedFixture:
    """Lattice of order ideals of a finite poset ``Q``.

    ``I < I + {x}`` is labeled ``x``, and the labels are ordered by a linear
    extension of ``Q``. Ideals are written ``{}`` and ``{a,b}`` with members
    in that linear extension.

    :param elements: elements of ``Q``
    :param relations: pairs ``(x, y)`` with ``x < y`` in ``Q``; any relations
        generating the order will do
    :param name: fixture name
    :raises CycleError: if ``relations`` contain a cycle
    :raises BudgetExceededError: for ``|Q| > 6``
    """
    elements = [str(x) for x in elements]
    _require_size(len(elements), MAX_DISTRIBUTIVE, "distributive_from_poset")

    Q = nx.DiGraph()
    Q.add_nodes_from(elements)
    Q.add_edges_from((str(x), str(y)) for x, y in relations)
    if Q.number_of_nodes() != len(elements):
        raise ValueError("relations mention elements outside of 'elements'")
    if not nx.is_directed_acyclic_graph(Q):
        raise CycleError("the relations of Q contain a cycle")

    extension = list(nx.lexicographical_topological_sort(Q))
    position = {x: i for i, x in enumerate(extension)}
    below = {x: nx.ancestors(Q, x) for x in extension}

    ideals = []
    for size in range(len(extension) + 1):
        for subset in itertools.combinations(extension, size):
            members = set(subset)
            if all(below[x] <= members for x in subset):
                ideals.append(subset)

    covers = []
    labels = {}
    for ideal in ideals:
        members = set(ideal)
        for x in extension:
            if x in members or not below[x] <= members:
                continue
            larger = tuple(sorted(members | {x}, key=position.__getitem__))
            cover = (_ideal_id(ideal), _ideal_id(larger))
            covers.append(cover)
            labels[cover] = x

    poset = build_poset(covers, elements=[_ideal_id(ideal) for ideal in ideals])
    labeling = EdgeLabeling(poset, labels, alphabet=LabelAlphabet(extension))
    logger.debug("J(Q) for |Q| = %d has %d ideals", len(extension), len(ideals))

    return NamedFixture(
        name=name,
        poset=poset,
        labelings={"linear-extension": labeling},
        expected={"el": True, "ue": True},
        description="order ideals by containment, labeled by the added element",
    )


def boolean_lattice(n: int) -> NamedFixture:
    """Subsets of ``{1, ..., n}``, ``I < I + {x}`` labeled ``x``.

    >>> boolean_lattice(2).labeling.edge_label("{}", "{2}")
    '2'
    """
    _require_size(n, MAX_BOOLEAN, "boolean_lattice")
    fixture = distributive_from_poset(
        [str(i) for i in range(1, n + 1)], name=f"boolean-{n}"
    )
    fixture.description = f"Boolean lattice of rank {n}"
    return fixture


def _set_partitions(collection: List[int]) -> Iterator[List[List[int]]]:
    # add the last element to every block of a smaller partition, or alone
    if not collection:
        yield []
        return

    rest, last = collection[:-1], collection[-1]
    for smaller in _set_partitions(rest):
        for i, block in enumerate(smaller):
            yield smaller[:i] + [block + [last]] + smaller[i + 1 :]
        yield smaller + [[last]]


def _canonical(blocks: Iterable[Iterable[int]]) -> Tuple[Block, ...]:
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


def _partition_id(blocks: Tuple[Block, ...]) -> str:
    return "|".join("".join(str(i) for i in block) for block in blocks)


def partition_lattice(n: int, labeling: str = "max-min") -> NamedFixture:
    """Set partitions of ``{1, ..., n}`` ordered by refinement.

    Partitions are written as blocks joined by ``|``, e.g. ``12|3``; the
    bottom is ``1|2|...|n``.

    :param labeling: ``"max-min"`` labels the merge of two blocks by the
        larger of their minima; ``"atom"`` labels ``u < v`` by the first atom
        below ``v`` but not below ``u``
    :raises BudgetExceededError: for ``n > 5``
    """
    _require_size(n, MAX_PARTITION, "partition_lattice", smallest=2)
    if labeling not in ("max-min", "atom"):
        raise ValueError(f"labeling must be 'max-min' or 'atom', got {labeling!r}")

    partitions = sorted(
        {_canonical(p) for p in _set_partitions(list(range(1, n + 1)))},
        key=lambda blocks: (-len(blocks), blocks),
    )

    covers = []
    max_min = {}
    for blocks in partitions:
        for i, j in itertools.combinations(range(len(blocks)), 2):
            rest = [b for k, b in enumerate(blocks) if k not in (i, j)]
            merged = _canonical(rest + [blocks[i] + blocks[j]])
            cover = (_partition_id(blocks), _partition_id(merged))
            covers.append(cover)
            max_min[cover] = max(blocks[i][0], blocks[j][0])

    poset = build_poset(covers, elements=[_partition_id(b) for b in partitions])
    if labeling == "max-min":
        edge_labeling = EdgeLabeling(poset, max_min)
    else:
        edge_labeling = geometric_lattice_labeling(poset)

    return NamedFixture(
        name=f"partition-{n}",
        poset=poset,
        labelings={labeling: edge_labeling},
        expected={"el": True, "ue": True},
        description=f"partition lattice of {{1, ..., {n}}}, {labeling} labeling",
    )
