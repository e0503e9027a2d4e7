# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
"""Runtime limits shared by the checkers and the command line."""
import os
from typing import Optional


#: Environment variable overriding :py:data:`DEFAULT_INTERVAL_BUDGET`.
BUDGET_ENV = "SHELLKIT_BUDGET"

#: Maximal number of rooted intervals a single scan may visit.
DEFAULT_INTERVAL_BUDGET = 10**6

#: Number of witnesses kept in a :py:class:`shellkit.utils.CheckReport`.
DEFAULT_MAX_WITNESSES = 10


def interval_budget(budget: Optional[int] = None) -> int:
    """Resolve the rooted-interval budget.

    An explicit ``budget`` wins, then the ``SHELLKIT_BUDGET`` environment
    variable, then :py:data:`DEFAULT_INTERVAL_BUDGET`.

    :param budget: explicit budget, or ``None``.
    :return: a positive integer.
    """
    if budget is None:
        value = os.environ.get(BUDGET_ENV)
        if value is None or value.strip() == "":
            return DEFAULT_INTERVAL_BUDGET
        try:
            budget = int(value)
        except ValueError:
            raise ValueError(
                f"{BUDGET_ENV} must be a positive integer, got {value!r}"
            ) from None

    if budget <= 0:
        raise ValueError(f"interval budget must be positive, got {budget}")

    return budget


def check_jobs(jobs: int) -> int:
    if not isinstance(jobs, int) or isinstance(jobs, bool):
        raise TypeError(f"jobs must be an int, got {type(jobs).__name__}")
    if jobs < 1:
        raise ValueError(f"jobs must be at least 1, got {jobs}")
    return jobs
