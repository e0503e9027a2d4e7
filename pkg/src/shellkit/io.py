# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
"""Line-oriented text formats for posets, labelings, orderings and facets.

One record per line, blank lines and ``#`` comments ignored::

    element <id> ...                      # optional, fixes ElementOrder
    cover <lower> <upper>
    label <lower> <upper> <token>
    chainlabel <e0> <e1> ... <ek> : <t1> ... <tk>
    alphabet <t1> <t2> ...
    default element-order
    atoms <e0> ... <ek> : <a1> ... <at>
    elementatoms <u> : <a1> ... <at>
    facet <v1> <v2> ...
    order <i1> <i2> ...                   # 1-based facet positions
    expect <check> pass|fail

Without ``element`` records, elements are ordered by first appearance in the
``cover`` records.
"""
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple, Union

from .labelings import ChainEdgeLabeling, EdgeLabeling, LabelAlphabet, validate_ce
from .orderings import ChainAtomOrdering
from .poset import Poset, build_poset
from .utils.errors import ParseError


@dataclass
class Records:
    """Everything read from one text source."""

    source: str = "<string>"
    elements: List[str] = field(default_factory=list)
    covers: List[Tuple[str, str]] = field(default_factory=list)
    labels: Dict[Tuple[str, str], str] = field(default_factory=dict)
    chain_labels: Dict[Tuple[str, ...], Tuple[str, ...]] = field(default_factory=dict)
    alphabet: Optional[List[str]] = None
    default_element_order: bool = False
    atoms: Dict[Tuple[str, ...], Tuple[str, ...]] = field(default_factory=dict)
    element_atoms: Dict[str, Tuple[str, ...]] = field(default_factory=dict)
    facets: List[Tuple[str, ...]] = field(default_factory=list)
    order: Optional[List[int]] = None
    expect: Dict[str, bool] = field(default_factory=dict)


def _split_colon(args: List[str], keyword: str, source: str, line: int):
    if args.count(":") != 1:
        raise ParseError(f"'{keyword}' needs exactly one ':' separator", source, line)
    k = args.index(":")
    return args[:k], args[k + 1 :]


def parse_records(text: str, source: str = "<string>") -> Records:
    """Parse the records of ``text``.

    :raises ParseError: on unknown keywords, wrong arity and duplicates.
    """
    records = Records(source=source)
    seen_covers = set()

    for line, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].split()
        if len(content) == 0:
            continue
        keyword, args = content[0], content[1:]

        if keyword == "element":
            if len(args) == 0:
                raise ParseError("'element' needs at least one id", source, line)
            for x in args:
                if x in records.elements:
                    raise ParseError(f"element {x} declared twice", source, line)
                records.elements.append(x)

        elif keyword == "cover":
            if len(args) != 2:
                raise ParseError("'cover' takes <lower> <upper>", source, line)
            pair = (args[0], args[1])
            if pair in seen_covers:
                raise ParseError(
                    f"cover {pair[0]} {pair[1]} listed twice", source, line
                )
            seen_covers.add(pair)
            records.covers.append(pair)

        elif keyword == "label":
            if len(args) != 3:
                raise ParseError("'label' takes <lower> <upper> <token>", source, line)
            pair = (args[0], args[1])
            if pair in records.labels:
                raise ParseError(f"{pair[0]} {pair[1]} labeled twice", source, line)
            records.labels[pair] = args[2]

        elif keyword == "chainlabel":
            chain, tokens = _split_colon(args, keyword, source, line)
            chain = tuple(chain)
            if chain in records.chain_labels:
                raise ParseError(f"chain {' '.join(chain)} labeled twice", source, line)
            if len(tokens) != len(chain) - 1:
                raise ParseError(
                    f"a chain of {len(chain)} elements needs {len(chain) - 1} labels",
                    source,
                    line,
                )
            records.chain_labels[chain] = tuple(tokens)

        elif keyword == "alphabet":
            if records.alphabet is not None:
                raise ParseError("only one 'alphabet' record is allowed", source, line)
            if len(args) == 0 or len(set(args)) != len(args):
                raise ParseError("'alphabet' needs distinct tokens", source, line)
            records.alphabet = list(args)

        elif keyword == "default":
            if args != ["element-order"]:
                raise ParseError("only 'default element-order' is known", source, line)
            records.default_element_order = True

        elif keyword == "atoms":
            root, atoms = _split_colon(args, keyword, source, line)
            if len(root) == 0:
                raise ParseError("'atoms' needs a root before ':'", source, line)
            records.atoms[tuple(root)] = tuple(atoms)

        elif keyword == "elementatoms":
            u, atoms = _split_colon(args, keyword, source, line)
            if len(u) != 1:
                raise ParseError(
                    "'elementatoms' takes one element before ':'", source, line
                )
            records.element_atoms[u[0]] = tuple(atoms)

        elif keyword == "facet":
            records.facets.append(tuple(args))

        elif keyword == "order":
            try:
                records.order = [int(i) - 1 for i in args]
            except ValueError:
                raise ParseError(
                    "'order' takes facet positions", source, line
                ) from None

        elif keyword == "expect":
            if len(args) != 2 or args[1] not in ("pass", "fail"):
                raise ParseError("'expect' takes <check> pass|fail", source, line)
            records.expect[args[0]] = args[1] == "pass"

        else:
            raise ParseError(f"unknown record {keyword!r}", source, line)

    return records


def read_records(path: Union[str, Path]) -> Records:
    path = Path(path)
    return parse_records(path.read_text(encoding="utf-8"), source=str(path))


def poset_from_records(records: Records) -> Poset:
    """The poset of the ``element`` and ``cover`` records."""
    if len(records.covers) == 0 and len(records.elements) == 0:
        raise ParseError("no 'cover' records", records.source)
    elements = list(records.elements)
    for pair in records.covers:
        for x in pair:
            if x not in elements:
                elements.append(x)
    return build_poset(records.covers, elements=elements)


def labeling_from_records(poset: Poset, records: Records) -> ChainEdgeLabeling:
    """The edge labeling of the ``label`` records, or the chain-edge labeling
    of the ``chainlabel`` records after checking the chain-edge condition."""
    alphabet = None if records.alphabet is None else LabelAlphabet(records.alphabet)
    if records.labels and records.chain_labels:
        raise ParseError("mix of 'label' and 'chainlabel' records", records.source)

    if records.labels:
        return EdgeLabeling(poset, records.labels, alphabet=alphabet)

    if records.chain_labels:
        report, labeling = validate_ce(poset, records.chain_labels, alphabet=alphabet)
        if labeling is None:
            raise ParseError(
                "chain labels break the chain-edge condition: "
                + report.witnesses[0].describe(),
                records.source,
            )
        return labeling

    raise ParseError("no 'label' or 'chainlabel' records", records.source)


def ordering_from_records(poset: Poset, records: Records) -> ChainAtomOrdering:
    """The chain-atom ordering of the ``elementatoms`` and ``atoms`` records.

    ``atoms`` records override ``elementatoms`` for their root.
    """
    if not (records.atoms or records.element_atoms or records.default_element_order):
        raise ParseError("no 'atoms' or 'elementatoms' records", records.source)

    orders = {}
    for u, atoms in records.element_atoms.items():
        for root in poset.roots(u):
            orders[root] = atoms
    orders.update(records.atoms)
    return ChainAtomOrdering(
        poset, orders, default_element_order=records.default_element_order
    )


def facets_from_records(
    records: Records,
) -> Tuple[List[FrozenSet[str]], Optional[List[int]]]:
    """Facets and the optional 0-based order of the ``facet``/``order`` records."""
    if len(records.facets) == 0:
        raise ParseError("no 'facet' records", records.source)
    return [frozenset(f) for f in records.facets], records.order


def format_poset(poset: Poset) -> str:
    lines = ["element " + " ".join(poset.elements)]
    for lo, hi in sorted(poset.covers, key=lambda c: poset.chain_key(c)):
        lines.append(f"cover {lo} {hi}")
    return "\n".join(lines) + "\n"


def format_labeling(labeling: ChainEdgeLabeling) -> str:
    """``alphabet`` plus ``label`` records, or ``chainlabel`` records per
    maximal chain for labelings depending on the root."""
    poset = labeling.poset
    lines = ["alphabet " + " ".join(labeling.alphabet.tokens)]
    if isinstance(labeling, EdgeLabeling):
        for (lo, hi), token in sorted(
            labeling.items(), key=lambda item: poset.chain_key(item[0])
        ):
            lines.append(f"label {lo} {hi} {token}")
    else:
        for chain in poset.maximal_chains():
            labels = labeling.sequence((poset.bottom,), chain)
            lines.append(f"chainlabel {' '.join(chain)} : {' '.join(labels)}")
    return "\n".join(lines) + "\n"


def format_ordering(C: ChainAtomOrdering) -> str:
    """``elementatoms`` records if the ordering ignores roots, else ``atoms``."""
    per_element = C.element_orders()
    lines = []
    if per_element is not None:
        for u, atoms in per_element.items():
            lines.append(f"elementatoms {u} : {' '.join(atoms)}")
    else:
        for root, atoms in C.items():
            lines.append(f"atoms {' '.join(root)} : {' '.join(atoms)}")
    return "\n".join(lines) + "\n"


def format_facets(
    facets: Sequence[FrozenSet[str]], order: Optional[Sequence[int]] = None
) -> str:
    lines = [f"facet {' '.join(sorted(f))}".rstrip() for f in facets]
    if order is not None:
        lines.append("order " + " ".join(str(i + 1) for i in order))
    return "\n".join(lines) + "\n"


def format_expect(expected: Dict[str, bool]) -> str:
    return "".join(
        f"expect {check} {'pass' if verdict else 'fail'}\n"
        for check, verdict in expected.items()
    )


def to_dot(poset: Poset, labeling: Optional[EdgeLabeling] = None) -> str:
    """Hasse diagram in Graphviz DOT, edges pointing upward."""
    lines = ["digraph {", "  rankdir=BT;"]
    for x in poset.elements:
        lines.append(f'  "{x}";')
    for lo, hi in sorted(poset.covers, key=lambda c: poset.chain_key(c)):
        if labeling is None:
            lines.append(f'  "{lo}" -> "{hi}";')
        else:
            lines.append(f'  "{lo}" -> "{hi}" [label="{labeling.edge_label(lo, hi)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
