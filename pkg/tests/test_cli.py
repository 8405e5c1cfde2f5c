"""Command-line interface."""

import json

import pytest

from knotmut.cli import format_table1, main
from knotmut.diagram import parse_knot_spec
from knotmut.laurent import LaurentPoly2


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestPolynomialCommands:
    def test_jones(self, capsys):
        code, out, _ = run(capsys, "jones", "trefoil_mirror")
        assert code == 0
        assert out.strip() == "trefoil_mirror: -t^-4 + t^-3 + t^-1"

    def test_alexander(self, capsys):
        code, out, _ = run(capsys, "alexander", "figure8")
        assert code == 0
        assert "-t^-1 + 3 - t" in out

    def test_homfly_json(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "homfly", "trefoil")
        assert code == 0
        doc = json.loads(out)
        assert doc["name"] == "trefoil"
        assert sorted(doc["polynomial"]["terms"]) == \
            [[-4, 0, -1], [-2, 0, -2], [-2, 2, 1]]

    def test_kauffman(self, capsys):
        code, out, _ = run(capsys, "kauffman", "unknot")
        assert code == 0
        assert out.strip().endswith("1")

    def test_cjones(self, capsys):
        code, out, _ = run(capsys, "cjones", "--color", "1", "figure8")
        assert code == 0
        assert out.strip() == "figure8: 1"

    def test_braid_literal(self, capsys):
        code, out, _ = run(capsys, "jones", "braid: 2 | -1 -1 -1")
        assert code == 0
        assert "-t^-4 + t^-3 + t^-1" in out

    def test_unknown_knot_fails(self, capsys):
        code, _, err = run(capsys, "jones", "no_such_knot")
        assert code == 1
        assert "error" in err


class TestDiagramCommands:
    def test_cable_emits_parseable_pd(self, capsys):
        code, out, _ = run(capsys, "cable", "--strands", "2",
                           "--twists", "-1", "trefoil")
        assert code == 0
        name, d, braid = parse_knot_spec(out.strip())
        assert braid is None
        assert len(d.crossings) == 13

    def test_double(self, capsys):
        code, out, _ = run(capsys, "double", "figure8")
        assert code == 0
        _, d, _ = parse_knot_spec(out.strip())
        d.validate()
        assert d.component_count() == 1

    def test_mutate(self, capsys):
        code, out, _ = run(capsys, "mutate", "--inner", "1,1",
                           "--outer", "2", "--axis", "vertical")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 2
        for line in lines:
            _, d, _ = parse_knot_spec(line)
            d.validate()


class TestCoverCommands:
    def test_abelian(self, capsys):
        code, out, _ = run(capsys, "cover", "abelian", "trefoil")
        assert code == 0
        assert "[3]" in out

    def test_group(self, capsys):
        code, out, _ = run(capsys, "cover", "group", "trefoil")
        assert code == 0
        assert out.startswith("generators: 1")

    def test_lowindex(self, capsys):
        code, out, _ = run(capsys, "cover", "lowindex", "--max", "3",
                           "figure8")
        assert code == 0
        assert "index 1: [5]" in out

    def test_quotients(self, capsys):
        code, out, _ = run(capsys, "cover", "quotients", "--target", "C5",
                           "figure8")
        assert code == 0
        assert "delta_C5 = 1" in out

    def test_kernel_abelian(self, capsys):
        code, out, _ = run(capsys, "cover", "kernel-abelian", "--target",
                           "C3", "trefoil")
        assert code == 0
        assert "kernel 1 abelianization []" in out


class TestCompare:
    def test_mirror_pair(self, capsys):
        code, out, _ = run(capsys, "compare", "trefoil", "trefoil_mirror")
        assert code == 0
        assert "jones: DIFFERENT" in out
        assert "verdict: mutation excluded" in out

    def test_same_knot(self, capsys):
        code, out, _ = run(capsys, "compare", "figure8", "figure8")
        assert code == 0
        assert "verdict: consistent with mutation (inconclusive)" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "compare",
                           "trefoil", "trefoil")
        assert code == 0
        doc = json.loads(out)
        assert doc["verdict"].startswith("consistent")


class TestFileInput:
    def test_knot_file(self, capsys, tmp_path):
        path = tmp_path / "knots.txt"
        path.write_text("# comment\n"
                        "name=a braid: 2 | 1 1 1\n"
                        "\n"
                        "name=b braid: 3 | 1 -2 1 -2\n")
        code, out, _ = run(capsys, "alexander", str(path))
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].startswith("a:")
        assert lines[1].startswith("b:")


class TestTable1Format:
    def test_grid_layout(self):
        p = LaurentPoly2({(0, 0): 1, (2, 0): -2, (0, 2): 3})
        text = format_table1("k", p)
        lines = text.splitlines()
        assert lines[0] == "k:"
        assert lines[1] == "0 2"
        assert lines[2].split() == ["0", "2", "1", "-2"]
        assert lines[3].split() == ["0", "0", "3"]

    def test_cli_table1(self, capsys):
        code, out, _ = run(capsys, "--format", "table1", "homfly", "trefoil")
        assert code == 0
        assert out.startswith("trefoil:")
