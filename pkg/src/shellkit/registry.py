# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
"""Checkers by name, as used by fixture expectations and the command line."""
from functools import partial
from typing import Callable, Dict, Tuple

from .labelings import (
    CCCheck,
    CLCheck,
    ECCheck,
    ELCheck,
    SelfConsistencyCheck,
    TopologicalCLCheck,
    UECheck,
)
from .module import _Check
from .orderings import FirstAtomCheck, GRAOCheck, RAOCheck


#: name -> (``"labeling"`` or ``"ordering"``, checker factory)
CHECKS: Dict[str, Tuple[str, Callable[..., _Check]]] = {
    "el": ("labeling", ELCheck),
    "cl": ("labeling", CLCheck),
    "ec": ("labeling", ECCheck),
    "cc": ("labeling", CCCheck),
    "topological-cl": ("labeling", TopologicalCLCheck),
    "ue": ("labeling", UECheck),
    "self-consistency": ("labeling", SelfConsistencyCheck),
    "self-consistency-strict": (
        "labeling",
        partial(SelfConsistencyCheck, strict=True),
    ),
    "grao": ("ordering", GRAOCheck),
    "grao-extended": ("ordering", partial(GRAOCheck, extended=True)),
    "rao": ("ordering", RAOCheck),
    "first-atom": ("ordering", FirstAtomCheck),
}


def check_kind(name: str) -> str:
    """Whether the check ``name`` runs on labelings or on orderings."""
    try:
        return CHECKS[name][0]
    except KeyError:
        raise ValueError(
            f"unknown check {name!r}, expected one of {', '.join(CHECKS)}"
        ) from None


def get_checker(name: str, **kwargs) -> _Check:
    """A configured checker; ``kwargs`` go to its constructor."""
    check_kind(name)
    return CHECKS[name][1](**kwargs)
