# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
import json

import pytest

from shellkit import __version__
from shellkit.cli import main
from shellkit.fixtures import fixture_names, fixture_path, load_fixture
from shellkit.io import ordering_from_records, poset_from_records, read_records


DIAMOND = """\
cover 0 a
cover 0 b
cover a 1
cover b 1
label 0 a 1
label a 1 2
label 0 b 2
label b 1 1
"""


@pytest.fixture
def diamond_file(tmp_path):
    path = tmp_path / "diamond.txt"
    path.write_text(DIAMOND)
    return str(path)


def fixture_file(name):
    return str(fixture_path(name))


class TestCheck:
    def test_pass(self, diamond_file, capsys):
        assert main(["check", "el", diamond_file]) == 0
        assert capsys.readouterr().out == "el: pass\n"

    def test_fail(self, capsys):
        assert main(["check", "ue", fixture_file("nonue-left")]) == 1
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "ue: fail"
        assert lines[1].startswith("  repeated-minimum-label root=0")

    def test_aliases(self, capsys):
        assert main(["check", "sc", fixture_file("nonue-left")]) == 1
        assert capsys.readouterr().out.startswith("self-consistency: fail")
        assert main(["check", "tcl", fixture_file("nonue-left")]) == 0
        assert capsys.readouterr().out.startswith("topological-cl: pass")

    def test_strict(self, capsys):
        path = fixture_file("nonue-middle")
        assert main(["check", "sc", path]) == 0
        assert main(["check", "sc", "--strict", path]) == 1
        assert "self-consistency-strict: fail" in capsys.readouterr().out

    def test_json(self, capsys):
        assert main(["check", "rao", fixture_file("graoex-left"), "--json"]) == 1
        report = json.loads(capsys.readouterr().out)
        assert report["schema"] == 1
        assert report["command"] == "check rao"
        assert report["verdict"] is False
        assert report["witnesses"][0]["root"] == ["0", "a"]
        assert "rao" in report["timings"]

    def test_max_witnesses(self, capsys):
        path = fixture_file("graotorao-left")
        assert main(["check", "grao", path, "--max-witnesses", "1"]) == 1
        lines = capsys.readouterr().out.splitlines()
        assert lines[-1] == "  ... (scan stopped at the witness cap)"

    def test_shelling_facets(self, tmp_path, capsys):
        path = tmp_path / "edges.txt"
        path.write_text("facet a b\nfacet c d\n")
        assert main(["check", "shelling", str(path)]) == 1
        path.write_text("facet a b\nfacet c d\nfacet b c\norder 1 3 2\n")
        assert main(["check", "shelling", str(path)]) == 0

    def test_shelling_lexicographic(self, diamond_file):
        assert main(["check", "shelling", diamond_file]) == 0

    def test_missing_file(self, tmp_path, capsys):
        assert main(["check", "el", str(tmp_path / "missing.txt")]) == 2
        assert capsys.readouterr().err.startswith("shellkit: error:")

    def test_wrong_input(self, capsys):
        assert main(["check", "el", fixture_file("two-chains")]) == 2
        assert "no 'label'" in capsys.readouterr().err

    def test_unknown_kind(self, diamond_file):
        with pytest.raises(SystemExit) as info:
            main(["check", "lex", diamond_file])
        assert info.value.code == 2


class TestOrderings:
    def test_reorder(self, tmp_path, capsys):
        output = tmp_path / "reordered.txt"
        assert main(["reorder", fixture_file("graoex-left"), "-o", str(output)]) == 0
        assert capsys.readouterr().out == ""

        records = read_records(output)
        C = ordering_from_records(poset_from_records(records), records)
        assert C == load_fixture("graoex-right").ordering

    def test_convert(self, capsys):
        assert main(["convert", "grao-cc", fixture_file("graoex-left")]) == 0
        out = capsys.readouterr().out.splitlines()
        assert "chainlabel 0 a c3 1 : 3 3 1" in out

    def test_convert_refused(self, capsys):
        assert main(["convert", "grao-cc", fixture_file("graotorao-left")]) == 2
        err = capsys.readouterr().err
        assert "not a GRAO" in err
        assert "grao: fail" in err

    def test_labeling_to_ordering(self, capsys):
        assert main(["convert", "tcl-grao", fixture_file("nonue-middle")]) == 0
        assert "elementatoms a : x y" in capsys.readouterr().out.splitlines()


class TestMobius:
    def test_diamond(self, diamond_file, capsys):
        assert main(["mobius", diamond_file]) == 0
        assert capsys.readouterr().out == "mu(0, 1) = 1\n"
        assert main(["mobius", diamond_file, "--via-descents", "--lower", "a"]) == 0
        assert capsys.readouterr().out == "mu(a, 1) = -1\n"

    def test_json(self, capsys):
        path = fixture_file("nonue-right")
        argv = ["mobius", path, "--via-descents", "--topological", "--json"]
        assert main(argv) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["verdict"] is None
        assert report["result"] == {"lower": "0", "upper": "1", "mobius": -1}


class TestUncrossing:
    def test_pipeline(self, capsys):
        assert main(["uncrossing", "--n", "2"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "uncrossing pipeline n=2: pass"

    def test_emit(self, capsys):
        assert main(["uncrossing", "--n", "2", "--emit"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert "label 1212 1221 a:1,2" in lines
        assert "alphabet a:1,2 L d:2,1" in lines

    def test_too_large(self, capsys):
        assert main(["uncrossing", "--n", "5"]) == 2
        assert "allow_large" in capsys.readouterr().err


class TestFixtures:
    def test_list(self, capsys):
        assert main(["fixtures", "--list"]) == 0
        assert capsys.readouterr().out.splitlines() == fixture_names()

    def test_verify(self, capsys):
        assert main(["fixtures", "--name", "graoex-left"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "fixture graoex-left"
        assert "  rao: fail (expected fail)" in lines

    def test_lattice(self, capsys):
        assert main(["fixtures", "--name", "partition-3", "--json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["verdict"] is True
        assert report["result"] == {"name": "partition-3"}

    def test_emit(self, capsys):
        assert main(["fixtures", "--name", "two-chains", "--emit"]) == 0
        assert capsys.readouterr().out == fixture_path("two-chains").read_text()

    def test_emit_lattice(self, capsys):
        assert main(["fixtures", "--name", "boolean-2", "--emit"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "element {} {1} {2} {1,2}"
        assert "expect el pass" in lines

    def test_needs_name(self, capsys):
        assert main(["fixtures"]) == 2
        assert "--list or --name" in capsys.readouterr().err


class TestOther:
    def test_dual(self, diamond_file, capsys):
        assert main(["dual", diamond_file]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert "cover 1 a" in lines
        assert "cover a 0" in lines

    def test_dot(self, diamond_file, capsys):
        assert main(["dot", diamond_file]) == 0
        out = capsys.readouterr().out
        assert out.startswith("digraph {")
        assert '"0" -> "a" [label="1"];' in out

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["--version"])
        assert info.value.code == 0
        assert __version__ in capsys.readouterr().out
