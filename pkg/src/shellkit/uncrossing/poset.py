# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
"""The uncrossing poset ``P_n`` and the edge labeling of its dual."""
import logging
from itertools import combinations
from typing import Dict, Tuple, Union

from ..labelings import EdgeLabeling, LabelAlphabet
from ..poset import Poset
from ..utils.errors import BudgetExceededError, InvalidLabelError
from .words import (
    UncrossLabel,
    crossing_number,
    crossing_pairs,
    enumerate_matchings,
    matching_count,
    noncrossing_count,
    uncross,
)


logger = logging.getLogger(__name__)

#: Identifier of the bottom element of ``P_n``.
BOTTOM = "0"

#: Largest ``n`` built without ``allow_large``.
MAX_DEFAULT_STRANDS = 4


def uncrossing_label_rank(label: Union[UncrossLabel, str], n: int) -> int:
    """Position of ``label`` in the label order on ``n`` strands.

    Ascending pairs ``(i, j)`` come first in lexicographic order, then ``L``,
    then the descending pairs ``(j, i)``: larger ``j`` first, then larger ``i``.

    :raises InvalidLabelError: if a strand exceeds ``n``.
    """
    if isinstance(label, str):
        label = UncrossLabel.parse(label)
    pairs = list(combinations(range(1, n + 1), 2))
    if label.kind == "L":
        return len(pairs)
    if max(label.first, label.second) > n:
        raise InvalidLabelError(f"{label} names a strand above {n}")
    if label.kind == "a":
        return pairs.index((label.first, label.second))

    descending = sorted(((j, i) for i, j in pairs), key=lambda p: (-p[0], -p[1]))
    return len(pairs) + 1 + descending.index((label.first, label.second))


def uncrossing_alphabet(n: int) -> LabelAlphabet:
    """All labels on ``n`` strands in label order."""
    pairs = list(combinations(range(1, n + 1), 2))
    labels = [UncrossLabel("a", i, j) for i, j in pairs]
    labels.append(UncrossLabel("L"))
    labels.extend(UncrossLabel("d", j, i) for i, j in pairs)
    labels.sort(key=lambda label: uncrossing_label_rank(label, n))
    return LabelAlphabet(label.token for label in labels)


def build_uncrossing(n: int, allow_large: bool = False) -> Tuple[Poset, EdgeLabeling]:
    """Build ``P_n`` and the edge labeling of its dual.

    Elements are the bottom ``"0"`` and the canonical strand words, ranked by
    crossing number plus one. ``u`` is covered by ``v`` when uncrossing one
    pair of strands of ``v`` gives ``u`` with one crossing less; crossingless
    words cover the bottom. Elements are ordered by rank, then by word.

    The labeling lives on the dual: the cover ``v > u`` gets the label of the
    resolution producing ``u``, with strands numbered in ``v``, and covers down
    to the bottom get ``L``.

    :param allow_large: allow ``n = 5``.
    :raises BudgetExceededError: for ``n > 4`` without ``allow_large`` or
        ``n > 5``.
    """
    if n > MAX_DEFAULT_STRANDS:
        if not allow_large:
            raise BudgetExceededError(
                f"P_{n} is too large by default; pass allow_large for n = 5"
            )
        logger.warning("building P_%d, expect long running checks", n)

    words = enumerate_matchings(n)
    crossings = {w: crossing_number(w) for w in words}
    words.sort(key=lambda w: (crossings[w], w))
    logger.debug(
        "P_%d from %d of %d matchings, %d of %d crossingless",
        n,
        len(words),
        matching_count(n),
        sum(1 for w in words if crossings[w] == 0),
        noncrossing_count(n),
    )

    covers = []
    labels: Dict[Tuple[str, str], str] = {}
    for v in words:
        if crossings[v] == 0:
            covers.append((BOTTOM, str(v)))
            labels[(str(v), BOTTOM)] = "L"
            continue
        for i, j in crossing_pairs(v):
            for u, label in uncross(v, i, j):
                if crossings[u] != crossings[v] - 1:
                    continue
                key = (str(v), str(u))
                if key in labels:
                    logger.warning(
                        "%s reaches %s twice; keeping label %s, dropping %s",
                        v,
                        u,
                        labels[key],
                        label,
                    )
                    continue
                labels[key] = label.token
                covers.append((str(u), str(v)))

    poset = Poset([BOTTOM] + [str(w) for w in words], covers)
    logger.debug("P_%d has %d elements and %d covers", n, len(poset), len(covers))

    labeling = EdgeLabeling(poset.dual(), labels, alphabet=uncrossing_alphabet(n))
    return poset, labeling
