# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
"""Bounded posets, their chains, roots and Möbius function."""

from ._base import ElementOrder, Poset, RootPath, build_poset
from .mobius import is_eulerian, mobius_matrix, zeta_matrix


__all__ = [
    "ElementOrder",
    "Poset",
    "RootPath",
    "build_poset",
    "is_eulerian",
    "mobius_matrix",
    "zeta_matrix",
]
