# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
import pytest

from shellkit.labelings import SelfConsistencyCheck
from shellkit.orderings import GRAOCheck
from shellkit.registry import CHECKS, check_kind, get_checker


class TestRegistry:
    def test_kinds(self):
        assert check_kind("el") == "labeling"
        assert check_kind("first-atom") == "ordering"
        assert {kind for kind, _ in CHECKS.values()} == {"labeling", "ordering"}

    def test_names_match(self):
        for name in CHECKS:
            assert get_checker(name).name == name

    def test_variants(self):
        strict = get_checker("self-consistency-strict")
        assert isinstance(strict, SelfConsistencyCheck)
        assert strict.strict
        extended = get_checker("grao-extended", max_witnesses=3)
        assert isinstance(extended, GRAOCheck)
        assert extended.extended
        assert extended.max_witnesses == 3

    def test_unknown(self):
        with pytest.raises(ValueError, match="unknown check"):
            get_checker("lexicographic")
