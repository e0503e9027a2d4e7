# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
"""Command line front end of shellkit.

Exit codes: 0 when the check passes or the command succeeds, 1 when a check
fails, 2 on usage errors and unreadable input.
"""
import argparse
import logging
import re
import sys
import time
from pathlib import Path
from typing import List, Optional, Tuple

from . import __version__
from .fixtures import (
    NamedFixture,
    boolean_lattice,
    fixture_names,
    fixture_path,
    load_fixture,
    partition_lattice,
    run_expectations,
)
from .io import (
    facets_from_records,
    format_expect,
    format_labeling,
    format_ordering,
    format_poset,
    labeling_from_records,
    ordering_from_records,
    poset_from_records,
    read_records,
    to_dot,
)
from .labelings import EdgeLabeling, lex_chain_order
from .orderings import grao_to_cc, labeling_to_grao, rao_to_cc, rao_to_cl, reorder
from .registry import CHECKS, check_kind, get_checker
from .topology import (
    facet_order_from_chains,
    is_shelling,
    mobius_via_descents,
    order_complex_facets,
)
from .uncrossing import build_uncrossing, verify_uncrossing_pipeline
from .utils.errors import PipelineStageError, ShellkitError
from .utils.reports import CheckReport, CommandReport


logger = logging.getLogger(__name__)

#: short check names accepted on the command line
CHECK_ALIASES = {"tcl": "topological-cl", "sc": "self-consistency"}

CONVERSIONS = ("grao-cc", "rao-cc", "rao-cl", "tcl-grao")

_LATTICE_NAME = re.compile(r"^(boolean|partition)-(\d+)$")

Outcome = Tuple[str, CommandReport]


def _checker_kwargs(args) -> dict:
    return {
        "max_witnesses": args.max_witnesses,
        "jobs": args.jobs,
        "budget": args.budget,
    }


def _check_outcome(command: str, report: CheckReport, seconds: float) -> Outcome:
    return report.format(), CommandReport(
        command=command,
        verdict=report.verdict,
        witnesses=report.witnesses,
        timings={report.check: seconds},
    )


def _shelling_report(records, **kwargs) -> CheckReport:
    if records.facets:
        facets, order = facets_from_records(records)
        return is_shelling(facets, order, **kwargs)

    poset = poset_from_records(records)
    facets = order_complex_facets(poset)
    order = None
    if records.labels or records.chain_labels:
        labeling = labeling_from_records(poset, records)
        order = facet_order_from_chains(facets, lex_chain_order(labeling))
    return is_shelling(facets, order, **kwargs)


def _cmd_check(args) -> Outcome:
    name = CHECK_ALIASES.get(args.kind, args.kind)
    if name == "self-consistency" and args.strict:
        name = "self-consistency-strict"
    records = read_records(args.file)

    start = time.perf_counter()
    if name == "shelling":
        report = _shelling_report(records, **_checker_kwargs(args))
    else:
        poset = poset_from_records(records)
        if check_kind(name) == "labeling":
            obj = labeling_from_records(poset, records)
        else:
            obj = ordering_from_records(poset, records)
        report = get_checker(name, **_checker_kwargs(args)).check(obj)
    seconds = time.perf_counter() - start

    return _check_outcome(f"check {name}", report, seconds)


def _records_outcome(command: str, text: str) -> Outcome:
    return text, CommandReport(command=command, result={"records": text})


def _cmd_reorder(args) -> Outcome:
    records = read_records(args.file)
    poset = poset_from_records(records)
    ordering = reorder(ordering_from_records(poset, records))
    return _records_outcome("reorder", format_poset(poset) + format_ordering(ordering))


def _cmd_convert(args) -> Outcome:
    records = read_records(args.file)
    poset = poset_from_records(records)

    if args.conversion == "tcl-grao":
        labeling = labeling_from_records(poset, records)
        text = format_ordering(labeling_to_grao(labeling))
    else:
        ordering = ordering_from_records(poset, records)
        convert = {"grao-cc": grao_to_cc, "rao-cc": rao_to_cc, "rao-cl": rao_to_cl}
        text = format_labeling(convert[args.conversion](ordering))

    return _records_outcome(f"convert {args.conversion}", format_poset(poset) + text)


def _cmd_mobius(args) -> Outcome:
    records = read_records(args.file)
    poset = poset_from_records(records)
    u = poset.bottom if args.lower is None else args.lower
    v = poset.top if args.upper is None else args.upper

    start = time.perf_counter()
    if args.via_descents:
        labeling = labeling_from_records(poset, records)
        value = mobius_via_descents(labeling, u, v, topological=args.topological)
    else:
        value = poset.mobius(u, v)
    seconds = time.perf_counter() - start

    return f"mu({u}, {v}) = {value}", CommandReport(
        command="mobius",
        timings={"mobius": seconds},
        result={"lower": u, "upper": v, "mobius": value},
    )


def _cmd_uncrossing(args) -> Outcome:
    if args.emit or args.dot:
        _, labeling = build_uncrossing(args.n, allow_large=args.allow_large)
        dual = labeling.poset
        if args.dot:
            return _records_outcome("uncrossing", to_dot(dual, labeling))
        text = format_poset(dual) + format_labeling(labeling)
        return _records_outcome("uncrossing", text)

    try:
        pipeline = verify_uncrossing_pipeline(
            args.n, allow_large=args.allow_large, **_checker_kwargs(args)
        )
    except PipelineStageError as err:
        pipeline = err.pipeline

    witnesses = []
    for stage in pipeline.stages:
        if stage.report is not None:
            witnesses.extend(stage.report.witnesses)

    return pipeline.format(), CommandReport(
        command="uncrossing",
        verdict=pipeline.verdict,
        witnesses=witnesses,
        timings={stage.name: stage.seconds for stage in pipeline.stages},
        result={"n": pipeline.n, "stages": [s.name for s in pipeline.stages]},
    )


def _named_fixture(name: str) -> NamedFixture:
    match = _LATTICE_NAME.match(name)
    if match is None:
        return load_fixture(name)
    kind, n = match.group(1), int(match.group(2))
    return boolean_lattice(n) if kind == "boolean" else partition_lattice(n)


def _format_fixture(fixture: NamedFixture) -> str:
    text = format_poset(fixture.poset)
    if fixture.labeling is not None:
        text += format_labeling(fixture.labeling)
    if fixture.ordering is not None:
        text += format_ordering(fixture.ordering)
    return text + format_expect(fixture.expected)


def _cmd_fixtures(args) -> Outcome:
    if args.list:
        names = fixture_names()
        return "\n".join(names), CommandReport(
            command="fixtures", result={"names": names}
        )

    if args.name is None:
        raise ValueError("'fixtures' needs --list or --name")

    if args.emit:
        if _LATTICE_NAME.match(args.name):
            text = _format_fixture(_named_fixture(args.name))
        else:
            text = fixture_path(args.name).read_text(encoding="utf-8")
        return _records_outcome("fixtures", text)

    fixture = _named_fixture(args.name)
    start = time.perf_counter()
    reports = run_expectations(fixture, **_checker_kwargs(args))
    seconds = time.perf_counter() - start

    lines = [f"fixture {fixture.name}"]
    witnesses = []
    verdict = True
    for check, expected in fixture.expected.items():
        report = reports[check]
        agrees = report.verdict == expected
        verdict = verdict and agrees
        got = "pass" if report.verdict else "fail"
        want = "pass" if expected else "fail"
        lines.append(f"  {check}: {got} (expected {want})")
        if not agrees:
            witnesses.extend(report.witnesses)

    return "\n".join(lines), CommandReport(
        command="fixtures",
        verdict=verdict,
        witnesses=witnesses,
        timings={"expectations": seconds},
        result={"name": fixture.name},
    )


def _cmd_dual(args) -> Outcome:
    poset = poset_from_records(read_records(args.file))
    return _records_outcome("dual", format_poset(poset.dual()))


def _cmd_dot(args) -> Outcome:
    records = read_records(args.file)
    poset = poset_from_records(records)
    labeling = None
    if records.labels:
        labeling = labeling_from_records(poset, records)
        if not isinstance(labeling, EdgeLabeling):
            labeling = None
    return _records_outcome("dot", to_dot(poset, labeling))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", help="write a JSON report instead of text"
    )
    common.add_argument(
        "--jobs", type=int, default=1, help="threads scanning rooted intervals"
    )
    common.add_argument(
        "--max-witnesses", type=int, default=10, help="witnesses kept per check"
    )
    common.add_argument(
        "--budget",
        type=int,
        default=None,
        help="maximal number of rooted intervals per scan (default: "
        "$SHELLKIT_BUDGET or 10**6)",
    )
    common.add_argument(
        "-o", "--output", type=Path, default=None, help="write to this file"
    )
    common.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log INFO (-v) or DEBUG (-vv) messages to stderr",
    )

    parser = argparse.ArgumentParser(
        prog="shellkit",
        description="Check and convert lexicographic shellings, chain-edge "
        "labelings and recursive atom orderings of finite bounded posets.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser(
        "check", parents=[common], help="run a checker on a record file"
    )
    kinds = sorted(set(CHECKS) | set(CHECK_ALIASES) | {"shelling"})
    check.add_argument("kind", choices=kinds)
    check.add_argument("file", type=Path)
    check.add_argument(
        "--strict",
        action="store_true",
        help="compare every pair of chains in the self-consistency check",
    )
    check.set_defaults(handler=_cmd_check)

    reorder_ = commands.add_parser(
        "reorder", parents=[common], help="run the atom reordering process"
    )
    reorder_.add_argument("file", type=Path)
    reorder_.set_defaults(handler=_cmd_reorder)

    convert = commands.add_parser(
        "convert",
        parents=[common],
        help="turn atom orderings into labelings and back",
    )
    convert.add_argument("conversion", choices=CONVERSIONS)
    convert.add_argument("file", type=Path)
    convert.set_defaults(handler=_cmd_convert)

    mobius = commands.add_parser(
        "mobius", parents=[common], help="Möbius function of an interval"
    )
    mobius.add_argument("file", type=Path)
    mobius.add_argument("--lower", default=None, help="default: the bottom")
    mobius.add_argument("--upper", default=None, help="default: the top")
    mobius.add_argument(
        "--via-descents",
        action="store_true",
        help="count descending chains of the file's labeling",
    )
    mobius.add_argument(
        "--topological",
        action="store_true",
        help="with --via-descents, count topologically descending chains",
    )
    mobius.set_defaults(handler=_cmd_mobius)

    uncrossing = commands.add_parser(
        "uncrossing",
        parents=[common],
        help="build the uncrossing poset or verify its labeling",
    )
    uncrossing.add_argument("--n", type=int, required=True, help="number of strands")
    uncrossing.add_argument(
        "--pipeline", action="store_true", help="run every stage (the default)"
    )
    uncrossing.add_argument(
        "--emit", action="store_true", help="write the labeled dual as records"
    )
    uncrossing.add_argument(
        "--dot", action="store_true", help="write the labeled dual as DOT"
    )
    uncrossing.add_argument(
        "--allow-large", action="store_true", help="allow n = 5"
    )
    uncrossing.set_defaults(handler=_cmd_uncrossing)

    fixtures = commands.add_parser(
        "fixtures",
        parents=[common],
        help="list, emit or verify fixtures",
        description="Fixture names are the shipped files (see --list) and "
        "boolean-N or partition-N for the lattices.",
    )
    fixtures.add_argument("--name", default=None)
    fixtures.add_argument("--list", action="store_true")
    fixtures.add_argument("--emit", action="store_true")
    fixtures.set_defaults(handler=_cmd_fixtures)

    dual = commands.add_parser(
        "dual", parents=[common], help="reverse the order of a poset file"
    )
    dual.add_argument("file", type=Path)
    dual.set_defaults(handler=_cmd_dual)

    dot = commands.add_parser(
        "dot", parents=[common], help="Hasse diagram of a poset file as DOT"
    )
    dot.add_argument("file", type=Path)
    dot.set_defaults(handler=_cmd_dot)

    return parser


def _configure_logging(verbose: int) -> None:
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )


def _write(text: str, output: Optional[Path]) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_text(text, encoding="utf-8")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)

    try:
        text, report = args.handler(args)
    except (ShellkitError, ValueError, TypeError, OSError) as err:
        message = str(err)
        failed = getattr(err, "report", None)
        if isinstance(failed, CheckReport):
            message += "\n" + failed.format()
        sys.stderr.write(f"shellkit: error: {message}\n")
        logger.debug("command %s failed", args.command, exc_info=True)
        return 2

    _write(report.to_json() if args.json else text, args.output)
    return 1 if report.verdict is False else 0


if __name__ == "__main__":
    sys.exit(main())
