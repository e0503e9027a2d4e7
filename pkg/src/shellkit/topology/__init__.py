# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
"""Shellings of order complexes and the topology read off labelings."""

from .census import (
    DescendCensus,
    descend_census,
    lex_first_root,
    mobius_via_descents,
    sphere_vector,
)
from .shelling import (
    FacetList,
    ShellingCheck,
    facet_order_from_chains,
    is_shelling,
    order_complex_facets,
    proper_part_facets,
    reduced_euler,
)


__all__ = [
    "DescendCensus",
    "FacetList",
    "ShellingCheck",
    "descend_census",
    "facet_order_from_chains",
    "is_shelling",
    "lex_first_root",
    "mobius_via_descents",
    "order_complex_facets",
    "proper_part_facets",
    "reduced_euler",
    "sphere_vector",
]
