# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
from abc import ABCMeta, abstractmethod
from collections import deque
from concurrent.futures import Future, ThreadPoolExecutor
from typing import Any, Callable, Deque, Generator, Iterable, List, Optional

from .utils.config import DEFAULT_MAX_WITNESSES, check_jobs, interval_budget
from .utils.reports import CheckReport, Witness


class _Check(metaclass=ABCMeta):
    """Common driver of every checker.

    Subclasses enumerate units of work (rooted intervals, roots or facet
    indices) with :py:meth:`units` and inspect one unit at a time with
    :py:meth:`visit`. The driver collects witnesses in scan order and stops
    once ``max_witnesses`` are found.

    :param max_witnesses: number of witnesses kept in the report.
    :param jobs: worker threads used to visit units; the report does not
        depend on it.
    :param budget: maximal number of rooted intervals visited, ``None`` reads
        :py:func:`shellkit.utils.config.interval_budget`.
    """

    name: str = "check"

    def __init__(
        self,
        max_witnesses: int = DEFAULT_MAX_WITNESSES,
        jobs: int = 1,
        budget: Optional[int] = None,
    ) -> None:
        if max_witnesses < 1:
            raise ValueError(f"max_witnesses must be positive, got {max_witnesses}")
        self.max_witnesses = max_witnesses
        self.jobs = check_jobs(jobs)
        self.budget = interval_budget(budget)

    @abstractmethod
    def units(self, obj) -> Iterable[Any]:
        return

    @abstractmethod
    def visit(self, obj, unit) -> List[Witness]:
        return

    def prepare(self, obj) -> Optional[CheckReport]:
        """Hook run before the scan; a returned report short-circuits it."""
        return None

    def check(self, obj) -> CheckReport:
        early = self.prepare(obj)
        if early is not None:
            return early

        return self._scan(obj, self.units(obj), self.visit)

    def recheck(self, obj, witness: Witness) -> bool:
        """Re-run the unit a witness names; ``True`` if the violation persists."""
        found = self.visit(obj, self.unit_of(witness))
        return any(w.reason == witness.reason for w in found)

    def unit_of(self, witness: Witness):
        return (witness.root, witness.upper)

    def __call__(self, obj) -> CheckReport:
        return self.check(obj)

    def _scan(
        self,
        obj,
        units: Iterable[Any],
        visit: Callable[[Any, Any], List[Witness]],
    ) -> CheckReport:
        witnesses: List[Witness] = []

        if self.jobs == 1:
            results = (visit(obj, unit) for unit in units)
        else:
            results = self._visit_threaded(obj, units, visit)

        # one witness past the cap tells that the report is truncated
        try:
            for found in results:
                witnesses.extend(found)
                if len(witnesses) > self.max_witnesses:
                    break
        finally:
            results.close()

        return CheckReport.from_witnesses(
            self.name,
            witnesses[: self.max_witnesses],
            truncated=len(witnesses) > self.max_witnesses,
        )

    def _visit_threaded(
        self,
        obj,
        units: Iterable[Any],
        visit: Callable[[Any, Any], List[Witness]],
    ) -> Generator[List[Witness], None, None]:
        """Visit units on ``jobs`` threads, yielding results in scan order.

        At most ``2 * jobs`` units are in flight; units not started when the
        consumer stops are cancelled.
        """
        pending: Deque[Future] = deque()
        with ThreadPoolExecutor(max_workers=self.jobs) as executor:
            try:
                for unit in units:
                    pending.append(executor.submit(visit, obj, unit))
                    if len(pending) >= 2 * self.jobs:
                        yield pending.popleft().result()
                while pending:
                    yield pending.popleft().result()
            finally:
                for future in pending:
                    future.cancel()
