# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
import networkx as nx
import pytest
from hypothesis import given, settings

from shellkit import Poset, build_poset
from shellkit.utils.errors import (
    BudgetExceededError,
    ChainNotInPosetError,
    CycleError,
    InvalidRootError,
    NotBoundedError,
    NotComparableError,
    NotReducedError,
    UnknownElementError,
)

from ..utilities import chain, diamond, graded_posets


class TestPosetValidation:
    def test_cycle(self):
        covers = [("0", "a"), ("a", "b"), ("b", "a"), ("b", "1")]
        with pytest.raises(CycleError, match="cycle"):
            Poset(["0", "a", "b", "1"], covers)

    def test_two_minimal_elements(self):
        with pytest.raises(NotBoundedError):
            Poset(["a", "b", "1"], [("a", "1"), ("b", "1")])

    def test_two_maximal_elements(self):
        with pytest.raises(NotBoundedError):
            Poset(["0", "a", "b"], [("0", "a"), ("0", "b")])

    def test_not_reduced(self):
        covers = [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1"), ("0", "1")]
        with pytest.raises(NotReducedError, match="strictly between"):
            Poset(["0", "a", "b", "1"], covers)

    def test_unknown_element(self):
        with pytest.raises(UnknownElementError):
            Poset(["0", "1"], [("0", "2")])

    @pytest.mark.parametrize("name", ["", "a b", "x\t"])
    def test_bad_identifier(self, name):
        with pytest.raises(ValueError, match="whitespace"):
            Poset(["0", name, "1"], [("0", name), (name, "1")])

    def test_duplicate_identifier(self):
        with pytest.raises(ValueError, match="distinct"):
            Poset(["0", "0", "1"], [("0", "1")])

    def test_build_poset_empty(self):
        with pytest.raises(ValueError):
            build_poset([])


class TestPoset:
    @pytest.fixture
    def poset(self):
        return diamond()

    def test_bounds(self, poset):
        assert poset.bottom == "0"
        assert poset.top == "1"
        assert poset.length == 2
        assert len(poset) == 4

    def test_first_appearance_order(self, poset):
        assert poset.elements == ("0", "a", "b", "1")
        assert poset.element_order == {"0": 0, "a": 1, "b": 2, "1": 3}

    def test_covers(self, poset):
        assert poset.upper_covers("0") == ("a", "b")
        assert poset.lower_covers("1") == ("a", "b")
        assert poset.covered_by("a", "1")
        assert not poset.covered_by("0", "1")

    def test_order(self, poset):
        assert poset.leq("0", "1")
        assert poset.leq("a", "a")
        assert not poset.lt("a", "a")
        assert not poset.leq("a", "b")
        with pytest.raises(NotComparableError):
            poset.require_leq("a", "b")
        with pytest.raises(UnknownElementError):
            poset.leq("a", "z")

    def test_rank(self, poset):
        assert [poset.rank(x) for x in poset] == [0, 1, 1, 2]
        assert poset.is_graded()

    def test_not_graded(self):
        poset = build_poset(
            [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")]
        )
        assert not poset.is_graded()
        assert poset.rank("1") == 3
        assert poset.linear_extension() == ("0", "a", "c", "b", "1")

    def test_above(self, poset):
        assert poset.above("0") == ("a", "b", "1")
        assert poset.above("a", strict=False) == ("a", "1")

    def test_chains(self, poset):
        assert poset.maximal_chains() == [("0", "a", "1"), ("0", "b", "1")]
        assert poset.saturated_chains("a", "1") == [("a", "1")]
        assert poset.saturated_chains("a", "a") == [("a",)]
        with pytest.raises(NotComparableError):
            poset.saturated_chains("a", "b")

    def test_roots(self, poset):
        assert poset.roots("0") == [("0",)]
        assert poset.roots("1") == [("0", "a", "1"), ("0", "b", "1")]
        assert list(poset.rooted_elements()) == [("0",), ("0", "a"), ("0", "b")]

    def test_check_root(self, poset):
        assert poset.check_root(["0", "a"]) == ("0", "a")
        with pytest.raises(InvalidRootError):
            poset.check_root(("a", "1"))
        with pytest.raises(InvalidRootError):
            poset.check_root(("0", "1"))

    def test_check_chain(self, poset):
        with pytest.raises(ChainNotInPosetError):
            poset.check_chain(("0", "1"))
        with pytest.raises(ChainNotInPosetError):
            poset.check_chain(("0", "z"))

    def test_rooted_intervals(self, poset):
        intervals = list(poset.rooted_intervals())
        assert intervals == [
            (("0",), "a"),
            (("0",), "b"),
            (("0",), "1"),
            (("0", "a"), "1"),
            (("0", "b"), "1"),
        ]

    def test_rooted_intervals_budget(self, poset):
        with pytest.raises(BudgetExceededError, match="SHELLKIT_BUDGET"):
            list(poset.rooted_intervals(budget=4))

    def test_rooted_intervals_budget_from_environment(self, poset, monkeypatch):
        monkeypatch.setenv("SHELLKIT_BUDGET", "2")
        with pytest.raises(BudgetExceededError):
            list(poset.rooted_intervals())

    def test_interval_and_dual(self, poset):
        interval = poset.interval("0", "a")
        assert interval.elements == ("0", "a")
        assert interval.bottom == "0" and interval.top == "a"

        dual = poset.dual()
        assert dual.bottom == "1"
        assert dual.top == "0"
        assert dual.dual() == poset

    def test_cover_graph_is_frozen(self, poset):
        graph = poset.cover_graph
        assert nx.is_frozen(graph)
        assert set(graph.edges) == set(poset.covers)

    def test_leq_matrix_read_only(self, poset):
        with pytest.raises(ValueError):
            poset.leq_matrix[0, 3] = False

    def test_mobius_chain(self):
        poset = chain(3)
        assert poset.mobius("0", "c1") == -1
        assert poset.mobius("0", "c2") == 0
        assert poset.mobius("0", "0") == 1

    def test_mobius_diamond(self, poset):
        assert poset.mobius("0", "1") == 1
        assert poset.mobius("a", "1") == -1

    def test_equality(self, poset):
        assert poset == diamond()
        assert hash(poset) == hash(diamond())
        assert poset != chain(2)


class TestPosetProperties:
    @given(graded_posets())
    @settings(max_examples=50, deadline=None)
    def test_roots_of_top_are_maximal_chains(self, poset):
        assert poset.roots(poset.top) == sorted(
            poset.maximal_chains(), key=poset.chain_key
        )

    @given(graded_posets())
    @settings(max_examples=50, deadline=None)
    def test_maximal_chains_are_paths(self, poset):
        paths = nx.all_simple_paths(poset.cover_graph, poset.bottom, poset.top)
        assert sorted(tuple(p) for p in paths) == sorted(poset.maximal_chains())

    @given(graded_posets())
    @settings(max_examples=50, deadline=None)
    def test_leq_is_reachability(self, poset):
        graph = poset.cover_graph
        for x in poset:
            reachable = nx.descendants(graph, x) | {x}
            assert set(poset.above(x, strict=False)) == reachable

    @given(graded_posets())
    @settings(max_examples=50, deadline=None)
    def test_mobius_sums_to_zero(self, poset):
        for v in poset.above(poset.bottom):
            total = sum(
                poset.mobius(poset.bottom, z)
                for z in poset.elements_between(poset.bottom, v)
            )
            assert total == 0
