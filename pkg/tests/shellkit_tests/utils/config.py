# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
import pytest

from shellkit.utils.config import (
    BUDGET_ENV,
    DEFAULT_INTERVAL_BUDGET,
    check_jobs,
    interval_budget,
)


class TestIntervalBudget:
    def test_default(self, monkeypatch):
        monkeypatch.delenv(BUDGET_ENV, raising=False)
        assert interval_budget() == DEFAULT_INTERVAL_BUDGET

    def test_environment(self, monkeypatch):
        monkeypatch.setenv(BUDGET_ENV, "25")
        assert interval_budget() == 25
        assert interval_budget(7) == 7

    def test_blank_environment(self, monkeypatch):
        monkeypatch.setenv(BUDGET_ENV, " ")
        assert interval_budget() == DEFAULT_INTERVAL_BUDGET

    def test_invalid(self, monkeypatch):
        monkeypatch.setenv(BUDGET_ENV, "many")
        with pytest.raises(ValueError, match=BUDGET_ENV):
            interval_budget()
        with pytest.raises(ValueError):
            interval_budget(0)


class TestJobs:
    def test_valid(self):
        assert check_jobs(4) == 4

    @pytest.mark.parametrize("jobs", [1.0, "2", True])
    def test_type(self, jobs):
        with pytest.raises(TypeError):
            check_jobs(jobs)

    def test_value(self):
        with pytest.raises(ValueError):
            check_jobs(0)
