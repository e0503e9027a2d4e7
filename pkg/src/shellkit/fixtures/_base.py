# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from ..labelings import ChainEdgeLabeling
from ..orderings import ChainAtomOrdering
from ..poset import Poset
from ..registry import check_kind, get_checker
from ..utils.reports import CheckReport


@dataclass
class NamedFixture:
    """A poset with labelings and orderings whose check verdicts are known.

    :param name: fixture name, also the stem of its data file if it has one
    :param poset: the bounded poset
    :param labelings: labelings by name; the first one is checked against
        ``expected``
    :param orderings: chain-atom orderings by name; the first one is checked
        against ``expected``
    :param expected: check name (see :py:data:`shellkit.registry.CHECKS`)
        mapped to the expected verdict
    :param description: one line of prose
    """

    name: str
    poset: Poset
    labelings: Dict[str, ChainEdgeLabeling] = field(default_factory=dict)
    orderings: Dict[str, ChainAtomOrdering] = field(default_factory=dict)
    expected: Dict[str, bool] = field(default_factory=dict)
    description: str = ""

    @property
    def labeling(self) -> Optional[ChainEdgeLabeling]:
        return next(iter(self.labelings.values()), None)

    @property
    def ordering(self) -> Optional[ChainAtomOrdering]:
        return next(iter(self.orderings.values()), None)

    def target(self, check: str):
        """The labeling or ordering the check ``check`` runs on."""
        kind = check_kind(check)
        obj = self.labeling if kind == "labeling" else self.ordering
        if obj is None:
            raise ValueError(f"fixture {self.name!r} has no {kind} for {check!r}")
        return obj


def run_expectations(fixture: NamedFixture, **kwargs) -> Dict[str, CheckReport]:
    """Run every check named in ``fixture.expected``.

    :param kwargs: passed to each checker, e.g. ``max_witnesses`` or ``jobs``
    """
    return {
        check: get_checker(check, **kwargs).check(fixture.target(check))
        for check in fixture.expected
    }


def mismatches(fixture: NamedFixture, **kwargs) -> List[str]:
    """Names of the checks whose verdict differs from the expected one."""
    reports = run_expectations(fixture, **kwargs)
    return [
        check
        for check, verdict in fixture.expected.items()
        if reports[check].verdict != verdict
    ]
