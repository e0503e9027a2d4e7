# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
"""From the dual EC-labeling of ``P_n`` to a shelling of its order complex."""
import logging
import time
from typing import Callable, Optional, Tuple

from ..labelings import (
    check_cl,
    check_ec,
    check_self_consistency,
    check_ue,
    lex_chain_order,
)
from ..orderings import (
    check_grao,
    check_rao,
    labeling_to_grao,
    rao_to_cl,
    reorder,
)
from ..topology import facet_order_from_chains, is_shelling, order_complex_facets
from ..utils.errors import PipelineStageError
from ..utils.reports import CheckReport, PipelineReport, StageResult
from .poset import build_uncrossing


logger = logging.getLogger(__name__)

STAGES = ("ec", "ue", "sc", "grao", "rao", "cl", "shelling")


def verify_uncrossing_pipeline(
    n: int, allow_large: bool = False, **kwargs
) -> PipelineReport:
    """Run the dual labeling of ``P_n`` through every construction.

    Stages: the EC check, UE, self-consistency, the greedy GRAO from the
    labeling, the reordered RAO, the CL-labeling built from it, and the
    shelling of the full order complex of the dual along that labeling's
    lexicographic order.

    Keyword arguments (``max_witnesses``, ``jobs``, ``budget``) go to every
    checker.

    :raises PipelineStageError: at the first failing stage, carrying its
        report and the stages run so far.
    """
    _, labeling = build_uncrossing(n, allow_large=allow_large)
    dual = labeling.poset
    pipeline = PipelineReport(n=n)
    state = {"labeling": labeling}

    def run(name: str, stage: Callable[[], Tuple[CheckReport, Optional[dict]]]):
        start = time.perf_counter()
        report, produced = stage()
        seconds = time.perf_counter() - start
        pipeline.stages.append(
            StageResult(
                name=name, verdict=report.verdict, seconds=seconds, report=report
            )
        )
        logger.info("stage %s: %s in %.3f s", name, report.verdict, seconds)
        if not report.verdict:
            raise PipelineStageError(name, report, pipeline)
        if produced:
            state.update(produced)

    run("ec", lambda: (check_ec(labeling, **kwargs), None))
    run("ue", lambda: (check_ue(labeling, **kwargs), None))
    run("sc", lambda: (check_self_consistency(labeling, **kwargs), None))

    def grao():
        # the EC and self-consistency stages already cover the gate
        ordering = labeling_to_grao(labeling, check=False)
        return check_grao(ordering, **kwargs), {"grao": ordering}

    def rao():
        ordering = reorder(state["grao"])
        return check_rao(ordering, **kwargs), {"rao": ordering}

    def cl():
        cl_labeling = rao_to_cl(state["rao"], check=False)
        return check_cl(cl_labeling, **kwargs), {"cl": cl_labeling}

    def shelling():
        facets = order_complex_facets(dual, mode="full")
        order = facet_order_from_chains(facets, lex_chain_order(state["cl"]))
        return is_shelling(facets, order, **kwargs), None

    run("grao", grao)
    run("rao", rao)
    run("cl", cl)
    run("shelling", shelling)
    return pipeline
