# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
"""Checkers for labelings.

Every checker scans rooted intervals ``[u, v]_r`` bottom-up. Edge labelings
are scanned with a single root per element since their labels ignore it.
"""
from typing import Iterable, List, Optional

from ..module import _Check
from ..poset import RootPath
from ..utils.config import DEFAULT_MAX_WITNESSES
from ..utils.reports import CheckReport, Witness
from ._base import (
    ChainEdgeLabeling,
    EdgeLabeling,
    _is_ascending,
    is_topologically_ascending,
)


class _LabelingCheck(_Check):
    def units(self, labeling: ChainEdgeLabeling) -> Iterable:
        return labeling.poset.rooted_intervals(
            all_roots=not labeling.is_edge_labeling, budget=self.budget
        )

    def visit(self, labeling: ChainEdgeLabeling, unit) -> List[Witness]:
        root, v = unit
        return self.visit_interval(labeling, root, v)

    def visit_interval(
        self, labeling: ChainEdgeLabeling, root: RootPath, v: str
    ) -> List[Witness]:
        raise NotImplementedError


def _require_edge_labeling(labeling, name: str) -> None:
    if not isinstance(labeling, EdgeLabeling):
        raise TypeError(
            f"{name} needs an EdgeLabeling, got {type(labeling).__name__}; use "
            f"the chain-edge variant of the check instead"
        )


class CLCheck(_LabelingCheck):
    """Unique ascending chain per rooted interval, strictly lexicographically first."""

    name = "cl"

    def visit_interval(self, labeling, root, v):
        data = labeling.chain_data(root, v)
        ascending = [d for d in data if _is_ascending(d[2])]

        if len(ascending) == 0:
            return [Witness(reason="no-ascending-chain", root=root, upper=v)]
        if len(ascending) > 1:
            return [
                Witness(
                    reason="multiple-ascending-chains",
                    root=root,
                    upper=v,
                    chains=tuple(d[0] for d in ascending),
                    labels=tuple(d[1] for d in ascending),
                )
            ]

        chain, labels, key = ascending[0]
        for other, other_labels, other_key in data:
            if other != chain and other_key <= key:
                return [
                    Witness(
                        reason="ascending-not-lex-first",
                        root=root,
                        upper=v,
                        chains=(chain, other),
                        labels=(labels, other_labels),
                    )
                ]
        return []


class ELCheck(CLCheck):
    name = "el"

    def check(self, labeling: EdgeLabeling) -> CheckReport:
        _require_edge_labeling(labeling, "check_el")
        return super().check(labeling)


class CCCheck(_LabelingCheck):
    """Unique topologically ascending chain, distinct and prefix-free sequences."""

    name = "cc"

    def visit_interval(self, labeling, root, v):
        witnesses = []
        data = labeling.chain_data(root, v)

        rising = [d for d in data if is_topologically_ascending(labeling, root, d[0])]
        if len(rising) == 0:
            witnesses.append(
                Witness(reason="no-topologically-ascending-chain", root=root, upper=v)
            )
        elif len(rising) > 1:
            witnesses.append(
                Witness(
                    reason="multiple-topologically-ascending-chains",
                    root=root,
                    upper=v,
                    chains=tuple(d[0] for d in rising),
                    labels=tuple(d[1] for d in rising),
                )
            )

        ordered = sorted(data, key=lambda d: d[2])
        for first, second in zip(ordered, ordered[1:]):
            if first[2] == second[2]:
                reason = "repeated-label-sequence"
            elif second[2][: len(first[2])] == first[2]:
                reason = "prefix-label-sequence"
            else:
                continue
            witnesses.append(
                Witness(
                    reason=reason,
                    root=root,
                    upper=v,
                    chains=(first[0], second[0]),
                    labels=(first[1], second[1]),
                )
            )
            break

        return witnesses


class ECCheck(CCCheck):
    name = "ec"

    def check(self, labeling: EdgeLabeling) -> CheckReport:
        _require_edge_labeling(labeling, "check_ec")
        return super().check(labeling)


class TopologicalCLCheck(_LabelingCheck):
    """Unique lex-first chain; every other chain has a topological descent."""

    name = "topological-cl"

    def visit_interval(self, labeling, root, v):
        data = labeling.chain_data(root, v)
        smallest = min(d[2] for d in data)
        first = [d for d in data if d[2] == smallest]
        if len(first) > 1:
            return [
                Witness(
                    reason="no-unique-lex-first",
                    root=root,
                    upper=v,
                    chains=tuple(d[0] for d in first),
                    labels=tuple(d[1] for d in first),
                )
            ]

        for chain, labels, _ in data:
            if chain == first[0][0]:
                continue
            if is_topologically_ascending(labeling, root, chain):
                return [
                    Witness(
                        reason="topologically-ascending-not-lex-first",
                        root=root,
                        upper=v,
                        chains=(first[0][0], chain),
                        labels=(first[0][1], labels),
                    )
                ]
        return []


class UECheck(_LabelingCheck):
    """The smallest label upward from ``u`` inside ``[u, v]_r`` occurs once."""

    name = "ue"

    def visit_interval(self, labeling, root, v):
        poset = labeling.poset
        atoms = [a for a in poset.upper_covers(root[-1]) if poset.leq(a, v)]
        ranks = [labeling.alphabet.rank(labeling.label(root, a)) for a in atoms]
        smallest = min(ranks)
        achieving = tuple(a for a, rank in zip(atoms, ranks) if rank == smallest)
        if len(achieving) > 1:
            return [
                Witness(
                    reason="repeated-minimum-label",
                    root=root,
                    upper=v,
                    atoms=achieving,
                    detail=f"label {labeling.alphabet.tokens[smallest]}",
                )
            ]
        return []


class SelfConsistencyCheck(_LabelingCheck):
    """Self-consistency of the lexicographically first atoms.

    Let ``a`` be the atom on the lexicographically first chain of
    ``[u, v]_r`` and ``b`` another atom of ``[u, v]``. In every ``[u, v']_r``
    with ``v' >= a, b`` the chains through ``b`` must come after the chains
    through ``a``. By default the first chain through ``a`` is compared with
    the first chain through ``b``; with ``strict=True`` every chain through
    ``a`` must precede every chain through ``b``.

    Every rooted interval must have a unique lexicographically first chain;
    otherwise the check fails with ``no-unique-lex-first`` witnesses only.
    """

    name = "self-consistency"

    def __init__(
        self,
        strict: bool = False,
        max_witnesses: int = DEFAULT_MAX_WITNESSES,
        jobs: int = 1,
        budget: Optional[int] = None,
    ) -> None:
        super().__init__(max_witnesses=max_witnesses, jobs=jobs, budget=budget)
        self.strict = strict
        if strict:
            self.name = "self-consistency-strict"

    def prepare(self, labeling):
        report = self._scan(labeling, self.units(labeling), self._visit_unique)
        if not report.verdict:
            return report
        return None

    def recheck(self, labeling, witness):
        if witness.reason == "no-unique-lex-first":
            found = self._visit_unique(labeling, self.unit_of(witness))
            return len(found) > 0
        return super().recheck(labeling, witness)

    def _visit_unique(self, labeling, unit) -> List[Witness]:
        root, v = unit
        data = labeling.chain_data(root, v)
        smallest = min(d[2] for d in data)
        first = [d for d in data if d[2] == smallest]
        if len(first) > 1:
            return [
                Witness(
                    reason="no-unique-lex-first",
                    root=root,
                    upper=v,
                    chains=tuple(d[0] for d in first),
                    labels=tuple(d[1] for d in first),
                )
            ]
        return []

    def visit_interval(self, labeling, root, v):
        poset = labeling.poset
        u = root[-1]
        data = labeling.chain_data(root, v)
        a = min(data, key=lambda d: d[2])[0][1]

        for b in poset.upper_covers(u):
            if b == a or not poset.leq(b, v):
                continue
            for upper in poset.above(u):
                if not (poset.leq(a, upper) and poset.leq(b, upper)):
                    continue
                chains = labeling.chain_data(root, upper)
                through_a = [d for d in chains if d[0][1] == a]
                through_b = [d for d in chains if d[0][1] == b]
                first_b = min(through_b, key=lambda d: d[2])
                if self.strict:
                    last_a = max(through_a, key=lambda d: d[2])
                    broken = not last_a[2] < first_b[2]
                    shown = last_a
                else:
                    first_a = min(through_a, key=lambda d: d[2])
                    broken = not first_a[2] < first_b[2]
                    shown = first_a
                if broken:
                    return [
                        Witness(
                            reason="b-chain-before-a-chain",
                            root=root,
                            upper=v,
                            atoms=(a, b),
                            chains=(shown[0], first_b[0]),
                            labels=(shown[1], first_b[1]),
                            detail=f"in the interval up to {upper}",
                        )
                    ]
        return []


def check_el(labeling: EdgeLabeling, **kwargs) -> CheckReport:
    """EL check of an edge labeling; keyword arguments go to :py:class:`ELCheck`."""
    return ELCheck(**kwargs).check(labeling)


def check_cl(labeling: ChainEdgeLabeling, **kwargs) -> CheckReport:
    return CLCheck(**kwargs).check(labeling)


def check_ec(labeling: EdgeLabeling, **kwargs) -> CheckReport:
    return ECCheck(**kwargs).check(labeling)


def check_cc(labeling: ChainEdgeLabeling, **kwargs) -> CheckReport:
    return CCCheck(**kwargs).check(labeling)


def check_topological_cl(labeling: ChainEdgeLabeling, **kwargs) -> CheckReport:
    return TopologicalCLCheck(**kwargs).check(labeling)


def check_ue(labeling: ChainEdgeLabeling, **kwargs) -> CheckReport:
    return UECheck(**kwargs).check(labeling)


def check_self_consistency(
    labeling: ChainEdgeLabeling, strict: bool = False, **kwargs
) -> CheckReport:
    return SelfConsistencyCheck(strict=strict, **kwargs).check(labeling)
