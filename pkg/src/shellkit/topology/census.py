# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
"""Descending chain counts and the Möbius function they compute."""
from collections import Counter
from typing import Dict

from ..labelings import (
    ChainEdgeLabeling,
    check_cl,
    check_topological_cl,
    is_topological_ascent,
)
from ..poset import RootPath
from ..utils.errors import CheckerPreconditionFailedError


#: Number of descending maximal chains by length.
DescendCensus = Dict[int, int]


def descend_census(
    labeling: ChainEdgeLabeling, root: RootPath, v: str, topological: bool = False
) -> DescendCensus:
    """Count the descending maximal chains of ``[root[-1], v]_root`` by length.

    A chain is descending if no two consecutive labels increase; with
    ``topological`` it must consist of topological descents only. Chains
    with at most one cover are descending.

    :raises NotComparableError: if ``root[-1]`` is not below ``v``.
    """
    poset = labeling.poset
    root = poset.check_root(root)
    poset.require_leq(root[-1], v)

    census: Counter = Counter()
    for chain, _, key in labeling.chain_data(root, v):
        if topological:
            descending = not any(
                is_topological_ascent(
                    labeling, root + chain[1:i], chain[i], chain[i + 1]
                )
                for i in range(1, len(chain) - 1)
            )
        else:
            descending = all(a >= b for a, b in zip(key, key[1:]))
        if descending:
            census[len(chain) - 1] += 1
    return dict(sorted(census.items()))


def _require_shellable(labeling: ChainEdgeLabeling, topological: bool) -> None:
    report = check_topological_cl(labeling) if topological else check_cl(labeling)
    if not report.verdict:
        raise CheckerPreconditionFailedError(
            f"descending chains only compute the Möbius function of a labeling "
            f"passing the {report.check} check",
            report,
        )


def lex_first_root(labeling: ChainEdgeLabeling, u: str) -> RootPath:
    """The lexicographically first saturated chain from the bottom to ``u``."""
    poset = labeling.poset
    data = labeling.chain_data((poset.bottom,), u)
    return min(data, key=lambda d: (d[2], poset.chain_key(d[0])))[0]


def mobius_via_descents(
    labeling: ChainEdgeLabeling,
    u: str,
    v: str,
    topological: bool = False,
    check: bool = True,
) -> int:
    """``mu(u, v)`` as the alternating sum of descending chain counts.

    The root of ``u`` is :py:func:`lex_first_root`.

    :param check: require a CL-labeling (topological CL-labeling when
        ``topological``) first.
    :raises CheckerPreconditionFailedError: if the check fails.
    """
    if check:
        _require_shellable(labeling, topological)
    root = lex_first_root(labeling, u)
    census = descend_census(labeling, root, v, topological=topological)
    return sum((-1) ** length * count for length, count in census.items())


def sphere_vector(
    labeling: ChainEdgeLabeling, topological: bool = False, check: bool = True
) -> Dict[int, int]:
    """Number of spheres by dimension in the proper part of the poset.

    A descending maximal chain of length ``l`` contributes a sphere of
    dimension ``l - 2``.
    """
    if check:
        _require_shellable(labeling, topological)
    poset = labeling.poset
    census = descend_census(
        labeling, (poset.bottom,), poset.top, topological=topological
    )
    return {length - 2: count for length, count in census.items()}
