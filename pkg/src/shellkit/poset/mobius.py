# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
"""Matrix form of the incidence algebra: zeta and Möbius matrices."""
from typing import Tuple

import numpy as np
from scipy.linalg import solve_triangular

from ._base import Poset


def zeta_matrix(poset: Poset) -> Tuple[np.ndarray, Tuple[str, ...]]:
    """Zeta matrix of ``poset`` in linear-extension order.

    :return: the upper unitriangular float matrix ``Z[i, j] = order[i] <=
        order[j]`` and ``order``, the linear extension indexing it.
    """
    order = poset.linear_extension()
    index = [poset.position(x) for x in order]
    zeta = poset.leq_matrix[np.ix_(index, index)].astype(float)
    return zeta, order


def mobius_matrix(poset: Poset) -> Tuple[np.ndarray, Tuple[str, ...]]:
    """Möbius matrix as the inverse of the zeta matrix.

    This is an independent computation of :py:meth:`Poset.mobius`, used to
    cross-check it.

    :return: integer matrix ``M[i, j] = mu(order[i], order[j])`` (zero where
        the elements are not comparable) and ``order``.
    """
    zeta, order = zeta_matrix(poset)
    inverse = solve_triangular(
        zeta, np.eye(len(order)), lower=False, unit_diagonal=True
    )
    return np.rint(inverse).astype(int), order


def is_eulerian(poset: Poset) -> bool:
    """Whether ``mu(u, v) = (-1) ** (rank(v) - rank(u))`` for all ``u <= v``.

    Non-graded posets are never Eulerian.
    """
    if not poset.is_graded():
        return False
    matrix, order = mobius_matrix(poset)
    ranks = np.array([poset.rank(x) for x in order])
    signs = (-1) ** np.abs(ranks[None, :] - ranks[:, None])
    index = [poset.position(x) for x in order]
    comparable = poset.leq_matrix[np.ix_(index, index)]
    return bool(np.all(matrix[comparable] == signs[comparable]))
