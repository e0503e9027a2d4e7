# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
"""Label alphabets, chain-edge and edge labelings, chain classification."""
import logging
import threading
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from ..poset import Poset, RootPath
from ..utils.config import DEFAULT_MAX_WITNESSES
from ..utils.errors import (
    ChainNotInPosetError,
    ExtraChainError,
    IncompleteLabelingError,
    IncomparableLabelsError,
    InvalidLabelError,
    InvalidRootError,
    MissingChainError,
)
from ..utils.reports import CheckReport, Witness


logger = logging.getLogger(__name__)

Token = Union[str, int]
Chain = Tuple[str, ...]
LabelSequence = Tuple[str, ...]

#: ``(chain, label sequence, rank sequence)`` of one saturated chain.
ChainData = Tuple[Chain, LabelSequence, Tuple[int, ...]]


class LabelAlphabet:
    """A totally ordered set of label tokens.

    :param tokens: tokens from smallest to largest.
    """

    def __init__(self, tokens: Iterable[Token]) -> None:
        tokens = tuple(str(t) for t in tokens)
        if len(set(tokens)) != len(tokens):
            raise InvalidLabelError("alphabet tokens must be distinct")
        self._tokens = tokens
        self._rank = {t: i for i, t in enumerate(tokens)}

    @classmethod
    def numeric(cls, tokens: Iterable[Token]) -> "LabelAlphabet":
        """Alphabet of integer tokens in numeric order.

        :raises IncomparableLabelsError: if a token is not an integer.
        """
        tokens = set(str(t) for t in tokens)
        values = {}
        for token in tokens:
            try:
                values[token] = int(token)
            except ValueError:
                raise IncomparableLabelsError(
                    f"label {token!r} is not an integer and no alphabet declares "
                    f"its rank"
                ) from None
        if len(set(values.values())) != len(values):
            raise InvalidLabelError("two tokens denote the same integer")
        return cls(sorted(tokens, key=values.__getitem__))

    @property
    def tokens(self) -> Tuple[str, ...]:
        return self._tokens

    def rank(self, token: Token) -> int:
        try:
            return self._rank[str(token)]
        except KeyError:
            raise InvalidLabelError(f"label {token!r} is not in the alphabet") from None

    def key(self, sequence: Iterable[Token]) -> Tuple[int, ...]:
        """Rank sequence; comparing keys compares sequences lexicographically."""
        return tuple(self.rank(t) for t in sequence)

    def __contains__(self, token) -> bool:
        return str(token) in self._rank

    def __len__(self) -> int:
        return len(self._tokens)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LabelAlphabet):
            return NotImplemented
        return self._tokens == other._tokens

    def __hash__(self) -> int:
        return hash(self._tokens)

    def __repr__(self) -> str:
        return f"LabelAlphabet({list(self._tokens)})"


def lex_compare(s1: Sequence, s2: Sequence, alphabet: LabelAlphabet = None) -> int:
    """Dictionary order of two label sequences.

    A proper prefix is smaller than the sequence it starts.

    :param alphabet: ranks the tokens; without it tokens are compared directly.
    :return: ``-1``, ``0`` or ``1`` for less, equal and greater.
    """
    if alphabet is not None:
        s1, s2 = alphabet.key(s1), alphabet.key(s2)
    s1, s2 = tuple(s1), tuple(s2)
    return (s1 > s2) - (s1 < s2)


class ChainEdgeLabeling:
    """Labels on cover relations that may depend on the root.

    ``labels[(r, v)]`` is the label of the cover ``r[-1] < v`` reached through
    the root ``r``. Keying on the root makes the chain-edge condition hold by
    construction.

    :param poset: the labeled poset.
    :param labels: map ``(root, upper cover) -> token``.
    :param alphabet: rank of the tokens; by default integer tokens in numeric
        order.
    :param check: verify that every cover under every root is labeled.

    :raises IncompleteLabelingError: if a cover under some root has no label.
    :raises InvalidRootError: if a key does not start with a valid root.
    """

    is_edge_labeling = False

    def __init__(
        self,
        poset: Poset,
        labels: Mapping[Tuple[RootPath, str], Token],
        alphabet: Optional[LabelAlphabet] = None,
        check: bool = True,
    ) -> None:
        self.poset = poset
        self._labels = {(tuple(r), v): str(t) for (r, v), t in labels.items()}
        if alphabet is None:
            alphabet = LabelAlphabet.numeric(self._labels.values())
        self.alphabet = alphabet
        self._lock = threading.RLock()
        self._chain_data: Dict[Tuple[RootPath, str], List[ChainData]] = {}

        if check:
            self._check_keys()
            self._check_total()

    def _check_keys(self) -> None:
        for root, v in self._labels:
            self.poset.check_root(root)
            if not self.poset.covered_by(root[-1], v):
                raise InvalidRootError(f"{root[-1]} < {v} is not a cover relation")
        for token in self._labels.values():
            self.alphabet.rank(token)

    def _check_total(self) -> None:
        for root in self.poset.rooted_elements():
            for v in self.poset.upper_covers(root[-1]):
                if (root, v) not in self._labels:
                    raise IncompleteLabelingError(
                        f"no label on {root[-1]} < {v} under root {'<'.join(root)}"
                    )

    def label(self, root: RootPath, v: str) -> str:
        """Label of the cover ``root[-1] < v`` under ``root``."""
        try:
            return self._labels[(tuple(root), v)]
        except KeyError:
            raise IncompleteLabelingError(
                f"no label on {root[-1]} < {v} under root {'<'.join(root)}"
            ) from None

    def items(self) -> Iterable[Tuple[Tuple[RootPath, str], str]]:
        return self._labels.items()

    def sequence(self, root: RootPath, chain: Sequence[str]) -> LabelSequence:
        """Labels along ``chain``, extending the root one cover at a time."""
        chain = self.poset.check_chain(chain)
        root = tuple(root)
        if chain[0] != root[-1]:
            raise ChainNotInPosetError(
                f"chain {chain} does not start at the end {root[-1]!r} of the root"
            )
        labels = []
        for i in range(1, len(chain)):
            labels.append(self.label(root + chain[1:i], chain[i]))
        return tuple(labels)

    def _cache_key(self, root: RootPath, v: str) -> Tuple[RootPath, str]:
        return (root, v)

    def chain_data(self, root: RootPath, v: str) -> List[ChainData]:
        """Saturated chains of ``[root[-1], v]_root`` with their labels.

        Chains come in ElementOrder; the result is memoized.
        """
        root = tuple(root)
        key = self._cache_key(root, v)
        with self._lock:
            cached = self._chain_data.get(key)
        if cached is not None:
            return cached

        data = []
        for chain in self.poset.saturated_chains(root[-1], v):
            labels = self.sequence(root, chain)
            data.append((chain, labels, self.alphabet.key(labels)))

        with self._lock:
            self._chain_data[key] = data
        return data

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.poset!r}, {len(self._labels)} labels)"


class EdgeLabeling(ChainEdgeLabeling):
    """Labels on cover relations that ignore the root.

    :param poset: the labeled poset.
    :param labels: map ``(lower, upper) -> token`` over all covers.
    :param alphabet: see :py:class:`ChainEdgeLabeling`.

    :raises IncompleteLabelingError: if a cover has no label.
    :raises InvalidLabelError: if a key is not a cover relation.
    """

    is_edge_labeling = True

    def __init__(
        self,
        poset: Poset,
        labels: Mapping[Tuple[str, str], Token],
        alphabet: Optional[LabelAlphabet] = None,
    ) -> None:
        self._edges = {(u, v): str(t) for (u, v), t in labels.items()}
        for cover in self._edges:
            if cover not in poset.covers:
                raise InvalidLabelError(
                    f"{cover[0]} < {cover[1]} is not a cover relation"
                )
        for u, v in sorted(poset.covers):
            if (u, v) not in self._edges:
                raise IncompleteLabelingError(f"no label on {u} < {v}")

        if alphabet is None:
            alphabet = LabelAlphabet.numeric(self._edges.values())
        super().__init__(poset, {}, alphabet=alphabet, check=False)
        for token in self._edges.values():
            self.alphabet.rank(token)

    def edge_label(self, u: str, v: str) -> str:
        try:
            return self._edges[(u, v)]
        except KeyError:
            raise IncompleteLabelingError(f"no label on {u} < {v}") from None

    def label(self, root: RootPath, v: str) -> str:
        return self.edge_label(root[-1], v)

    def items(self) -> Iterable[Tuple[Tuple[str, str], str]]:
        return self._edges.items()

    def _cache_key(self, root: RootPath, v: str) -> Tuple[RootPath, str]:
        return ((root[-1],), v)

    def as_chain_edge_labeling(self) -> ChainEdgeLabeling:
        """The same labels keyed by every root."""
        labels = {}
        for root in self.poset.rooted_elements():
            for v in self.poset.upper_covers(root[-1]):
                labels[(root, v)] = self._edges[(root[-1], v)]
        return ChainEdgeLabeling(self.poset, labels, alphabet=self.alphabet)


def label_sequence(
    labeling: ChainEdgeLabeling, root: RootPath, chain: Sequence[str]
) -> LabelSequence:
    """Label sequence of ``chain`` under ``root``; empty for a single element."""
    return labeling.sequence(root, chain)


def is_topological_ascent(
    labeling: ChainEdgeLabeling, root: RootPath, v: str, w: str
) -> bool:
    """Whether ``u < v < w`` is a topological ascent under ``root``.

    ``u`` is the end of ``root``. The pair of labels on ``u < v < w`` must be
    strictly smaller than the label sequence of every other saturated chain
    of ``[u, w]_root``.
    """
    root = tuple(root)
    u = root[-1]
    pair = labeling.alphabet.key(
        (labeling.label(root, v), labeling.label(root + (v,), w))
    )
    return all(
        pair < key
        for chain, _, key in labeling.chain_data(root, w)
        if chain != (u, v, w)
    )


@dataclass(frozen=True)
class ChainFlags:
    ascending: bool
    descending: bool
    topologically_ascending: bool
    topologically_descending: bool


def _is_ascending(key: Tuple[int, ...]) -> bool:
    return all(a < b for a, b in zip(key, key[1:]))


def _is_descending(key: Tuple[int, ...]) -> bool:
    return all(a >= b for a, b in zip(key, key[1:]))


def is_topologically_ascending(
    labeling: ChainEdgeLabeling, root: RootPath, chain: Chain
) -> bool:
    root = tuple(root)
    return all(
        is_topological_ascent(labeling, root + chain[1:i], chain[i], chain[i + 1])
        for i in range(1, len(chain) - 1)
    )


def classify_chain(
    labeling: ChainEdgeLabeling, root: RootPath, chain: Sequence[str]
) -> ChainFlags:
    """Ascent and topological ascent flags of a saturated chain.

    Chains with a single cover get all four flags.
    """
    chain = tuple(chain)
    key = labeling.alphabet.key(labeling.sequence(root, chain))
    root = tuple(root)
    ascents = [
        is_topological_ascent(labeling, root + chain[1:i], chain[i], chain[i + 1])
        for i in range(1, len(chain) - 1)
    ]
    return ChainFlags(
        ascending=_is_ascending(key),
        descending=_is_descending(key),
        topologically_ascending=all(ascents),
        topologically_descending=not any(ascents),
    )


def lex_chain_order(labeling: ChainEdgeLabeling) -> List[Chain]:
    """Maximal chains sorted by label sequence, ties in ElementOrder."""
    poset = labeling.poset
    data = labeling.chain_data((poset.bottom,), poset.top)
    data = sorted(data, key=lambda d: (d[2], poset.chain_key(d[0])))
    return [chain for chain, _, _ in data]


def chain_comparator(labeling: ChainEdgeLabeling):
    """``cmp``-style comparison of maximal chains under :py:func:`lex_chain_order`."""
    poset = labeling.poset
    root = (poset.bottom,)

    def compare(c1: Chain, c2: Chain) -> int:
        result = lex_compare(
            labeling.sequence(root, c1), labeling.sequence(root, c2), labeling.alphabet
        )
        if result != 0:
            return result
        k1, k2 = poset.chain_key(c1), poset.chain_key(c2)
        return (k1 > k2) - (k1 < k2)

    return cmp_to_key(compare)


def validate_ce(
    poset: Poset,
    per_chain_labels: Mapping[Sequence[str], Sequence[Token]],
    alphabet: Optional[LabelAlphabet] = None,
    max_witnesses: int = DEFAULT_MAX_WITNESSES,
) -> Tuple[CheckReport, Optional[ChainEdgeLabeling]]:
    """Turn labels given per maximal chain into a :py:class:`ChainEdgeLabeling`.

    Two maximal chains agreeing on their first ``d`` covers must agree on
    their first ``d`` labels.

    :return: the report and, on a pass, the prefix-keyed labeling.
    :raises ExtraChainError: if a key is not a maximal chain.
    :raises MissingChainError: if a maximal chain has no labels.
    """
    chains = set(poset.maximal_chains())
    given = {
        tuple(chain): tuple(str(t) for t in seq)
        for chain, seq in per_chain_labels.items()
    }

    for chain in given:
        if chain not in chains:
            raise ExtraChainError(f"{'<'.join(chain)} is not a maximal chain")
    for chain in poset.maximal_chains():
        if chain not in given:
            raise MissingChainError(
                f"no labels for the maximal chain {'<'.join(chain)}"
            )

    labels: Dict[Tuple[RootPath, str], str] = {}
    source: Dict[Tuple[RootPath, str], Chain] = {}
    witnesses: List[Witness] = []
    for chain in poset.maximal_chains():
        sequence = given[chain]
        if len(sequence) != len(chain) - 1:
            raise InvalidLabelError(
                f"{'<'.join(chain)} has {len(chain) - 1} covers but "
                f"{len(sequence)} labels"
            )
        for i in range(len(sequence)):
            key = (chain[: i + 1], chain[i + 1])
            if key not in labels:
                labels[key] = sequence[i]
                source[key] = chain
            elif labels[key] != sequence[i]:
                other = source[key]
                witnesses.append(
                    Witness(
                        reason="inconsistent-prefix",
                        root=chain[: i + 1],
                        upper=chain[i + 1],
                        chains=(other, chain),
                        labels=(given[other], sequence),
                    )
                )
                break

    truncated = len(witnesses) > max_witnesses
    report = CheckReport.from_witnesses("ce", witnesses[:max_witnesses], truncated)
    if not report.verdict:
        return report, None
    return report, ChainEdgeLabeling(poset, labels, alphabet=alphabet)


def geometric_lattice_labeling(
    poset: Poset, atom_order: Optional[Sequence[str]] = None
) -> EdgeLabeling:
    """Label ``u < v`` by the first atom below ``v`` but not below ``u``.

    On a geometric lattice this is an EL-labeling with the UE property. Labels
    are 1-based positions in ``atom_order`` (ElementOrder by default).
    """
    atoms = list(poset.upper_covers(poset.bottom))
    if atom_order is not None:
        atom_order = list(atom_order)
        if sorted(atom_order) != sorted(atoms):
            raise InvalidLabelError("atom_order must list every atom exactly once")
        atoms = atom_order

    labels = {}
    for u, v in poset.covers:
        new = [
            i
            for i, a in enumerate(atoms)
            if poset.leq(a, v) and not poset.leq(a, u)
        ]
        if len(new) == 0:
            raise InvalidLabelError(
                f"no atom lies below {v} but not below {u}; the poset is not atomic"
            )
        labels[(u, v)] = new[0] + 1
    return EdgeLabeling(poset, labels)
