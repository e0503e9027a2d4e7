# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
import numpy as np
import pytest
from hypothesis import given, settings
from numpy.testing import assert_equal

from shellkit import build_poset
from shellkit.fixtures import boolean_lattice, partition_lattice
from shellkit.poset import is_eulerian, mobius_matrix, zeta_matrix

from ..utilities import chain, diamond, graded_posets


class TestZetaMatrix:
    def test_diamond(self):
        zeta, order = zeta_matrix(diamond())
        assert order == ("0", "a", "b", "1")
        expected = np.array(
            [[1, 1, 1, 1], [0, 1, 0, 1], [0, 0, 1, 1], [0, 0, 0, 1]], dtype=float
        )
        assert_equal(zeta, expected)

    @given(graded_posets())
    @settings(max_examples=30, deadline=None)
    def test_unitriangular(self, poset):
        zeta, _ = zeta_matrix(poset)
        assert_equal(np.tril(zeta, k=-1), 0)
        assert_equal(np.diag(zeta), 1)


class TestMobiusMatrix:
    def test_inverse_of_zeta(self):
        zeta, _ = zeta_matrix(diamond())
        mobius, _ = mobius_matrix(diamond())
        assert_equal(mobius @ zeta, np.eye(4))

    @given(graded_posets())
    @settings(max_examples=50, deadline=None)
    def test_agrees_with_recursion(self, poset):
        matrix, order = mobius_matrix(poset)
        for i, u in enumerate(order):
            for j, v in enumerate(order):
                if poset.leq(u, v):
                    assert matrix[i, j] == poset.mobius(u, v)
                else:
                    assert matrix[i, j] == 0

    @pytest.mark.parametrize(
        "fixture, value",
        [
            (boolean_lattice(3), -1),
            (partition_lattice(3), 2),
            (partition_lattice(4), -6),
        ],
    )
    def test_lattices(self, fixture, value):
        poset = fixture.poset
        matrix, order = mobius_matrix(poset)
        assert matrix[order.index(poset.bottom), order.index(poset.top)] == value
        assert poset.mobius(poset.bottom, poset.top) == value


class TestEulerian:
    def test_boolean_lattices(self):
        assert is_eulerian(diamond())
        assert is_eulerian(boolean_lattice(3).poset)

    def test_chain(self):
        assert not is_eulerian(chain(2))

    def test_partition_lattice(self):
        assert not is_eulerian(partition_lattice(3).poset)

    def test_single_cover(self):
        assert is_eulerian(chain(1))

    def test_not_graded(self):
        poset = build_poset(
            [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")]
        )
        assert not is_eulerian(poset)
