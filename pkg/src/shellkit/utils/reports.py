# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
"""Verdicts and witnesses returned by the checkers."""
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Witness(BaseModel):
    """A single violation found by a checker.

    Which fields are filled depends on the check. Labeling checks name the
    rooted interval ``[root[-1], upper]_root`` and the offending chains with
    their label sequences; ordering checks name the root and the atoms
    involved; shelling checks give the positions of two facets in the order.
    """

    model_config = ConfigDict(frozen=True)

    reason: str
    root: Tuple[str, ...] = ()
    upper: Optional[str] = None
    atoms: Tuple[str, ...] = ()
    chains: Tuple[Tuple[str, ...], ...] = ()
    labels: Tuple[Tuple[str, ...], ...] = ()
    positions: Tuple[int, ...] = ()
    detail: str = ""

    def describe(self) -> str:
        parts = [self.reason]
        if self.root:
            parts.append("root=" + "<".join(self.root))
        if self.upper is not None:
            parts.append(f"upper={self.upper}")
        if self.atoms:
            parts.append("atoms=" + ",".join(self.atoms))
        for chain, labels in zip(self.chains, self.labels):
            parts.append("chain=" + "<".join(chain) + " labels=" + ",".join(labels))
        for chain in self.chains[len(self.labels) :]:
            parts.append("chain=" + "<".join(chain))
        if self.positions:
            parts.append("positions=" + ",".join(str(p) for p in self.positions))
        if self.detail:
            parts.append(self.detail)
        return " ".join(parts)


class CheckReport(BaseModel):
    """Outcome of a checker.

    ``witnesses`` holds at most the configured number of violations, in scan
    order. A failing report always has at least one witness.
    """

    check: str
    verdict: bool
    witnesses: List[Witness] = Field(default_factory=list)
    #: the scan stopped once the witness cap was reached
    truncated: bool = False

    @model_validator(mode="after")
    def _fail_has_witness(self):
        if not self.verdict and len(self.witnesses) == 0:
            raise ValueError("a failing report needs at least one witness")
        if self.verdict and len(self.witnesses) != 0:
            raise ValueError("a passing report cannot carry witnesses")
        return self

    @classmethod
    def from_witnesses(
        cls, check: str, witnesses: List[Witness], truncated: bool = False
    ) -> "CheckReport":
        return cls(
            check=check,
            verdict=len(witnesses) == 0,
            witnesses=list(witnesses),
            truncated=truncated,
        )

    def format(self) -> str:
        """Line-oriented text form used by the command line."""
        lines = [f"{self.check}: {'pass' if self.verdict else 'fail'}"]
        for witness in self.witnesses:
            lines.append("  " + witness.describe())
        if self.truncated:
            lines.append("  ... (scan stopped at the witness cap)")
        return "\n".join(lines)


class StageResult(BaseModel):
    name: str
    verdict: bool
    seconds: float
    report: Optional[CheckReport] = None


class PipelineReport(BaseModel):
    """Stage-by-stage record of the uncrossing pipeline."""

    n: int
    stages: List[StageResult] = Field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return len(self.stages) > 0 and all(stage.verdict for stage in self.stages)

    def format(self) -> str:
        verdict = "pass" if self.verdict else "fail"
        lines = [f"uncrossing pipeline n={self.n}: {verdict}"]
        for stage in self.stages:
            status = "pass" if stage.verdict else "fail"
            lines.append(f"  {stage.name}: {status} ({stage.seconds:.3f} s)")
            if stage.report is not None and not stage.report.verdict:
                for witness in stage.report.witnesses:
                    lines.append("    " + witness.describe())
        return "\n".join(lines)


#: version of the JSON document written by ``shellkit --json``
JSON_SCHEMA_VERSION = 1


class CommandReport(BaseModel):
    """JSON form of a command line run."""

    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(JSON_SCHEMA_VERSION, alias="schema")
    command: str
    verdict: Optional[bool] = None
    witnesses: List[Witness] = Field(default_factory=list)
    timings: Dict[str, float] = Field(default_factory=dict)
    #: command specific values, e.g. the Möbius value or emitted records
    result: Dict[str, Any] = Field(default_factory=dict)

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)
