# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause

__version__ = "0.0.0-dev"
__authors__ = "the shellkit development team"

from . import fixtures, labelings, orderings, poset, topology, uncrossing, utils  # noqa
from .poset import Poset, build_poset  # noqa


__all__ = [
    "fixtures",
    "labelings",
    "orderings",
    "poset",
    "topology",
    "uncrossing",
    "utils",
    "Poset",
    "build_poset",
]
