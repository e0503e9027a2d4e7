# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
import pytest

from shellkit.fixtures import load_fixture
from shellkit.io import (
    facets_from_records,
    format_expect,
    format_facets,
    format_labeling,
    format_ordering,
    format_poset,
    labeling_from_records,
    ordering_from_records,
    parse_records,
    poset_from_records,
    read_records,
    to_dot,
)
from shellkit.labelings import ChainEdgeLabeling, EdgeLabeling
from shellkit.utils.errors import ParseError

from .utilities import diamond, diamond_el


DIAMOND = """\
# the Boolean lattice of rank two
element 0 a b 1
cover 0 a
cover 0 b   # trailing comment
cover a 1
cover b 1

label 0 a 1
label a 1 2
label 0 b 2
label b 1 1
expect el pass
"""


class TestParse:
    def test_records(self):
        records = parse_records(DIAMOND)
        assert records.elements == ["0", "a", "b", "1"]
        assert records.covers[1] == ("0", "b")
        assert records.labels[("a", "1")] == "2"
        assert records.expect == {"el": True}

    def test_objects(self):
        records = parse_records(DIAMOND)
        poset = poset_from_records(records)
        assert poset == diamond()
        labeling = labeling_from_records(poset, records)
        assert isinstance(labeling, EdgeLabeling)
        assert labeling.edge_label("0", "b") == "2"

    @pytest.mark.parametrize(
        "text, line, message",
        [
            ("cover a\n", 1, "'cover' takes"),
            ("\n# comment\nnode a b\n", 3, "unknown record"),
            ("cover 0 a\ncover 0 a\n", 2, "listed twice"),
            ("label 0 a 1\nlabel 0 a 2\n", 2, "labeled twice"),
            ("element a\nelement a\n", 2, "declared twice"),
            ("expect el maybe\n", 1, "pass|fail"),
            ("order 1 x\n", 1, "facet positions"),
            ("default order\n", 1, "element-order"),
            ("atoms : a b\n", 1, "needs a root"),
            ("elementatoms a b : c\n", 1, "one element"),
            ("chainlabel 0 a 1 : 1\n", 1, "needs 2 labels"),
            ("chainlabel 0 a 1 1 2\n", 1, "':' separator"),
            ("alphabet 1 2\nalphabet 3\n", 2, "only one"),
            ("alphabet 1 1\n", 1, "distinct tokens"),
        ],
    )
    def test_errors(self, text, line, message):
        with pytest.raises(ParseError, match=message) as info:
            parse_records(text, source="input.txt")
        assert info.value.line == line
        assert str(info.value).startswith(f"input.txt:{line}: ")

    def test_read_file(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("cover 0\n")
        with pytest.raises(ParseError) as info:
            read_records(path)
        assert info.value.source == str(path)


class TestBuild:
    def test_no_covers(self):
        with pytest.raises(ParseError, match="no 'cover'"):
            poset_from_records(parse_records("expect el pass\n"))

    def test_chain_labels(self):
        text = (
            "cover 0 a\ncover 0 b\ncover a 1\ncover b 1\n"
            "chainlabel 0 a 1 : 1 2\nchainlabel 0 b 1 : 2 1\n"
        )
        records = parse_records(text)
        labeling = labeling_from_records(poset_from_records(records), records)
        assert type(labeling) is ChainEdgeLabeling
        assert labeling.label(("0", "b"), "1") == "1"

    def test_chain_labels_inconsistent(self):
        text = (
            "cover 0 a\ncover a x\ncover a y\ncover x 1\ncover y 1\n"
            "chainlabel 0 a x 1 : 1 1 1\nchainlabel 0 a y 1 : 2 1 1\n"
        )
        records = parse_records(text)
        with pytest.raises(ParseError, match="chain-edge condition"):
            labeling_from_records(poset_from_records(records), records)

    def test_mixed_labels(self):
        text = "cover 0 1\nlabel 0 1 1\nchainlabel 0 1 : 1\n"
        records = parse_records(text)
        with pytest.raises(ParseError, match="mix"):
            labeling_from_records(poset_from_records(records), records)

    def test_atoms_override(self):
        text = DIAMOND + "elementatoms 0 : a b\natoms 0 : b a\n"
        records = parse_records(text)
        C = ordering_from_records(poset_from_records(records), records)
        assert C.order(("0",)) == ("b", "a")

    def test_no_ordering(self):
        records = parse_records(DIAMOND)
        with pytest.raises(ParseError, match="no 'atoms'"):
            ordering_from_records(poset_from_records(records), records)

    def test_facets(self):
        records = parse_records("facet a b\nfacet b c\norder 2 1\n")
        facets, order = facets_from_records(records)
        assert facets == [frozenset("ab"), frozenset("bc")]
        assert order == [1, 0]

    def test_no_facets(self):
        with pytest.raises(ParseError, match="no 'facet'"):
            facets_from_records(parse_records(DIAMOND))


class TestWrite:
    def test_poset(self):
        assert format_poset(diamond()) == (
            "element 0 a b 1\ncover 0 a\ncover 0 b\ncover a 1\ncover b 1\n"
        )

    def test_labeling(self):
        text = format_labeling(diamond_el())
        assert text.splitlines()[0] == "alphabet 1 2"
        assert "label a 1 2" in text.splitlines()

    def test_root_dependent_ordering(self):
        C = load_fixture("graotorao-right").ordering
        C = C.with_order(("0", "p", "r4"), ("s1", "s4", "s7"))
        text = format_ordering(C)
        assert "atoms 0 p r4 : s1 s4 s7" in text.splitlines()

        records = parse_records(format_poset(C.poset) + text)
        assert ordering_from_records(poset_from_records(records), records) == C

    def test_element_ordering(self):
        text = format_ordering(load_fixture("graoex-left").ordering)
        assert "elementatoms a : c1 c4 c3" in text.splitlines()

    def test_facets(self):
        facets = [frozenset("ba"), frozenset("bc")]
        assert format_facets(facets, [1, 0]) == "facet a b\nfacet b c\norder 2 1\n"
        assert format_facets([frozenset()]) == "facet\n"

    def test_expect(self):
        expected = {"el": True, "ue": False}
        assert format_expect(expected) == "expect el pass\nexpect ue fail\n"

    def test_dot(self):
        lines = to_dot(diamond()).splitlines()
        assert lines[:2] == ["digraph {", "  rankdir=BT;"]
        assert '  "0" -> "a";' in lines
        assert lines[-1] == "}"
        assert '  "b" -> "1" [label="1"];' in to_dot(diamond(), diamond_el())
