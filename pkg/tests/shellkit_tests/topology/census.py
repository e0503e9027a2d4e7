# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
import pytest
from hypothesis import HealthCheck, assume, given, settings

from shellkit.fixtures import boolean_lattice, load_fixture, partition_lattice
from shellkit.labelings import EdgeLabeling, check_cl, check_el
from shellkit.orderings import rao_to_cl
from shellkit.topology import (
    descend_census,
    lex_first_root,
    mobius_via_descents,
    proper_part_facets,
    reduced_euler,
    sphere_vector,
)
from shellkit.utils.errors import CheckerPreconditionFailedError

from ..utilities import diamond, diamond_el, edge_labelings, graded_posets


def constant_labeling(poset):
    return EdgeLabeling(poset, {cover: 1 for cover in poset.covers})


class TestCensus:
    def test_diamond(self):
        assert descend_census(diamond_el(), ("0",), "1") == {2: 1}
        assert descend_census(diamond_el(), ("0", "a"), "1") == {1: 1}

    def test_topological(self):
        labeling = load_fixture("nonue-right").labeling
        assert descend_census(labeling, ("0",), "1", topological=True) == {3: 1}

    def test_empty_chain(self):
        assert descend_census(diamond_el(), ("0", "a"), "a") == {0: 1}

    def test_lex_first_root(self):
        assert lex_first_root(diamond_el(), "1") == ("0", "a", "1")
        assert lex_first_root(diamond_el(), "b") == ("0", "b")


class TestMobius:
    def test_diamond(self):
        assert mobius_via_descents(diamond_el(), "0", "1") == 1
        assert mobius_via_descents(diamond_el(), "a", "a") == 1

    def test_topological_cl(self):
        labeling = load_fixture("nonue-right").labeling
        assert mobius_via_descents(labeling, "0", "1", topological=True) == -1

    @pytest.mark.parametrize(
        "fixture, expected",
        [
            (boolean_lattice(3), -1),
            (partition_lattice(3), 2),
            (partition_lattice(4), -6),
        ],
    )
    def test_lattices(self, fixture, expected):
        poset = fixture.poset
        value = mobius_via_descents(fixture.labeling, poset.bottom, poset.top)
        assert value == expected == poset.mobius(poset.bottom, poset.top)

    def test_requires_cl(self):
        labeling = constant_labeling(diamond())
        with pytest.raises(CheckerPreconditionFailedError) as info:
            mobius_via_descents(labeling, "0", "1")
        assert info.value.report.check == "cl"
        assert mobius_via_descents(labeling, "0", "1", check=False) == 2

    @given(edge_labelings(graded_posets(max_levels=2, max_width=2), max_label=4))
    @settings(
        max_examples=40,
        deadline=None,
        suppress_health_check=[HealthCheck.filter_too_much],
    )
    def test_el_labelings(self, labeling):
        assume(check_el(labeling).verdict)
        poset = labeling.poset
        for v in poset.elements:
            expected = poset.mobius(poset.bottom, v)
            assert mobius_via_descents(labeling, poset.bottom, v) == expected


CL_LABELINGS = {
    "diamond": diamond_el,
    "boolean-3": lambda: boolean_lattice(3).labeling,
    "partition-3": lambda: partition_lattice(3).labeling,
    "partition-4": lambda: partition_lattice(4).labeling,
    "graoex": lambda: rao_to_cl(load_fixture("graoex-right").ordering),
    "graotorao": lambda: rao_to_cl(load_fixture("graotorao-right").ordering),
}


class TestMobiusOnEveryInterval:
    @pytest.mark.parametrize("name", sorted(CL_LABELINGS))
    def test_descents_oracle_and_euler_agree(self, name):
        labeling = CL_LABELINGS[name]()
        assert check_cl(labeling).verdict
        poset = labeling.poset
        for u in poset.elements:
            assert mobius_via_descents(labeling, u, u, check=False) == 1
            for v in poset.above(u):
                expected = poset.mobius(u, v)
                assert mobius_via_descents(labeling, u, v, check=False) == expected
                assert reduced_euler(proper_part_facets(poset, u, v)) == expected


class TestSphereVector:
    def test_diamond(self):
        assert sphere_vector(diamond_el()) == {0: 1}

    def test_boolean(self):
        assert sphere_vector(boolean_lattice(3).labeling) == {1: 1}

    def test_partition(self):
        assert sphere_vector(partition_lattice(4).labeling) == {1: 6}
