# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
"""Strand words: perfect matchings of ``2n`` boundary nodes.

Node ``k`` of the circle gets the number of the strand ending there. Strands
are numbered by their first endpoint, so every matching has one canonical
word, e.g. ``123312``.
"""
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Tuple

from scipy.special import comb, factorial2

from ..utils.errors import (
    BudgetExceededError,
    InvalidLabelError,
    InvalidStrandWordError,
    NotCrossingError,
)


#: Largest ``n`` accepted by :py:func:`enumerate_matchings`.
MAX_STRANDS = 5


@dataclass(frozen=True, order=True)
class StrandWord:
    """A canonical strand word.

    :param letters: ``2n`` strand numbers, each of ``1..n`` twice, first
        occurrences increasing.

    :raises InvalidStrandWordError: if the word is not canonical.
    """

    letters: Tuple[int, ...]

    def __post_init__(self):
        try:
            letters = tuple(int(x) for x in self.letters)
        except (TypeError, ValueError):
            raise InvalidStrandWordError(
                f"{self.letters!r} is not a word of strand numbers"
            ) from None
        object.__setattr__(self, "letters", letters)
        n = len(letters) // 2
        expected = sorted(2 * list(range(1, n + 1)))
        if n == 0 or len(letters) % 2 != 0 or sorted(letters) != expected:
            raise InvalidStrandWordError(
                f"{self} does not use each strand of 1..{n} exactly twice"
            )
        if _relabel(letters) != letters:
            raise InvalidStrandWordError(
                f"{self} is not canonical; use canonicalize() first"
            )

    @classmethod
    def parse(cls, text: str) -> "StrandWord":
        """Parse a word such as ``"123312"`` (one digit per node)."""
        if not text.isdigit():
            raise InvalidStrandWordError(f"{text!r} is not a word of strand digits")
        return cls(tuple(int(c) for c in text))

    @property
    def n(self) -> int:
        return len(self.letters) // 2

    def positions(self, strand: int) -> Tuple[int, int]:
        """Both endpoints of ``strand``, smaller first."""
        found = tuple(k for k, x in enumerate(self.letters) if x == strand)
        if len(found) != 2:
            raise InvalidStrandWordError(f"{self} has no strand {strand}")
        return found

    def __str__(self) -> str:
        return "".join(str(x) for x in self.letters)


def _relabel(letters: Iterable[int]) -> Tuple[int, ...]:
    names = {}
    for x in letters:
        names.setdefault(x, len(names) + 1)
    return tuple(names[x] for x in letters)


def canonicalize(letters: Iterable[int]) -> StrandWord:
    """Renumber strands by first occurrence."""
    return StrandWord(_relabel(letters))


def matching_count(n: int) -> int:
    """Number ``(2n - 1)!!`` of perfect matchings on ``2n`` nodes."""
    return int(factorial2(2 * n - 1, exact=True))


def noncrossing_count(n: int) -> int:
    """Catalan number of crossingless matchings on ``2n`` nodes."""
    return int(comb(2 * n, n, exact=True)) // (n + 1)


def enumerate_matchings(n: int) -> List[StrandWord]:
    """All ``(2n - 1)!!`` canonical words on ``n`` strands, sorted.

    :raises BudgetExceededError: for ``n`` above :py:data:`MAX_STRANDS`.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if n > MAX_STRANDS:
        raise BudgetExceededError(
            f"n = {n} gives too many matchings; at most {MAX_STRANDS} strands"
        )

    words = []
    letters = [0] * (2 * n)

    def fill(strand: int) -> None:
        if strand > n:
            words.append(StrandWord(tuple(letters)))
            return
        start = letters.index(0)
        letters[start] = strand
        for end in range(start + 1, 2 * n):
            if letters[end] == 0:
                letters[end] = strand
                fill(strand + 1)
                letters[end] = 0
        letters[start] = 0

    fill(1)
    return sorted(words)


def crosses(w: StrandWord, i: int, j: int) -> bool:
    """Whether the endpoints of strands ``i`` and ``j`` interleave."""
    (p1, p2), (q1, q2) = w.positions(i), w.positions(j)
    return p1 < q1 < p2 < q2 or q1 < p1 < q2 < p2


def crossing_pairs(w: StrandWord) -> List[Tuple[int, int]]:
    """Pairs ``i < j`` of crossing strands, in lexicographic order."""
    return [(i, j) for i, j in combinations(range(1, w.n + 1), 2) if crosses(w, i, j)]


def crossing_number(w: StrandWord) -> int:
    """Number of crossing strand pairs, the minimal number of crossings."""
    return len(crossing_pairs(w))


@dataclass(frozen=True)
class UncrossLabel:
    """Label of a cover read downward in the uncrossing poset.

    ``kind`` is ``"a"`` for the ascending pair ``(i, j)`` of an ``ijji``
    resolution, ``"d"`` for the descending pair ``(j, i)`` of an ``iijj``
    resolution and ``"L"`` for covers down to the bottom element.
    """

    kind: str
    first: int = 0
    second: int = 0

    def __post_init__(self):
        if self.kind == "L":
            if (self.first, self.second) != (0, 0):
                raise InvalidLabelError("the label L carries no strands")
        elif self.kind == "a":
            if not 1 <= self.first < self.second:
                raise InvalidLabelError(f"ascending label needs i < j, got {self}")
        elif self.kind == "d":
            if not 1 <= self.second < self.first:
                raise InvalidLabelError(f"descending label needs j > i, got {self}")
        else:
            raise InvalidLabelError(f"unknown label kind {self.kind!r}")

    @classmethod
    def parse(cls, token: str) -> "UncrossLabel":
        """Parse ``a:i,j``, ``d:j,i`` or ``L``."""
        if token == "L":
            return cls("L")
        try:
            kind, pair = token.split(":")
            first, second = (int(x) for x in pair.split(","))
        except ValueError:
            raise InvalidLabelError(f"{token!r} is not an uncrossing label") from None
        return cls(kind, first, second)

    @property
    def token(self) -> str:
        if self.kind == "L":
            return "L"
        return f"{self.kind}:{self.first},{self.second}"

    def __str__(self) -> str:
        return self.token


def uncross(
    w: StrandWord, i: int, j: int
) -> Tuple[Tuple[StrandWord, UncrossLabel], Tuple[StrandWord, UncrossLabel]]:
    """The two ways of removing the crossing of strands ``i < j``.

    With endpoints ``p1 < q1 < p2 < q2`` of the pattern ``ijij``, the
    ``ijji`` resolution joins ``p1, q2`` and ``q1, p2`` and is labeled
    ``(i, j)``; the ``iijj`` resolution joins ``p1, q1`` and ``p2, q2`` and is
    labeled ``(j, i)``. Both words are re-canonicalized.

    :raises NotCrossingError: if the strands do not cross.
    """
    if not i < j:
        raise NotCrossingError(f"strands must be given as i < j, got ({i}, {j})")
    if not crosses(w, i, j):
        raise NotCrossingError(f"strands {i} and {j} of {w} do not cross")

    (p1, p2), (q1, q2) = w.positions(i), w.positions(j)
    if q1 < p1:
        (p1, p2), (q1, q2) = (q1, q2), (p1, p2)

    nested = list(w.letters)
    nested[p1], nested[q1], nested[p2], nested[q2] = i, j, j, i
    parallel = list(w.letters)
    parallel[p1], parallel[q1], parallel[p2], parallel[q2] = i, i, j, j

    return (
        (canonicalize(nested), UncrossLabel("a", i, j)),
        (canonicalize(parallel), UncrossLabel("d", j, i)),
    )
