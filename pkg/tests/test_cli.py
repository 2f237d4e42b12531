import json

import pytest
from click.testing import CliRunner

from recmat.cli import main
from recmat.polyring import parse_poly
from recmat.triangles import FAMILIES, build_triangle


@pytest.fixture
def runner():
    return CliRunner()


class TestTriangle:
    def test_shapiro_csv(self, runner):
        res = runner.invoke(main, ["triangle", "--family", "shapiro",
                                   "--depth", "5", "--format", "csv"])
        assert res.exit_code == 0
        assert res.output.splitlines()[5] == "132,165,110,44,10,1"

    def test_narayana_cell(self, runner):
        res = runner.invoke(main, ["triangle", "--family", "narayana",
                                   "--depth", "4", "--format", "csv"])
        assert res.exit_code == 0
        row4 = res.output.splitlines()[4].split(",")
        assert row4[1] == "4z^3+20z^2+20z+4"

    def test_pascal_row(self, runner):
        res = runner.invoke(main, ["triangle", "--family", "pascal",
                                   "--depth", "3"])
        assert res.output.splitlines()[3] == "1,3,3,1"

    def test_unknown_family(self, runner):
        res = runner.invoke(main, ["triangle", "--family", "nosuch"])
        assert res.exit_code == 2

    def test_json_round_trip(self, runner):
        res = runner.invoke(main, ["triangle", "--family", "generic",
                                   "--depth", "4", "--format", "json"])
        assert res.exit_code == 0
        doc = json.loads(res.output)
        assert doc["family"] == "generic"
        tri = build_triangle(FAMILIES["generic"], 4)
        for n, row in enumerate(doc["rows"]):
            for k, cell in enumerate(row):
                assert parse_poly(cell) == tri.entry(n, k)

    def test_csv_round_trip(self, runner):
        res = runner.invoke(main, ["triangle", "--family", "narayana",
                                   "--depth", "5", "--format", "csv"])
        tri = build_triangle(FAMILIES["narayana"], 5)
        for n, line in enumerate(res.output.splitlines()):
            for k, cell in enumerate(line.split(",")):
                assert parse_poly(cell) == tri.entry(n, k)

    def test_explicit_spec(self, runner):
        res = runner.invoke(main, ["triangle", "--sigma0", "x", "--sigma", "y",
                                   "--tau", "z", "--depth", "2"])
        assert res.exit_code == 0
        assert res.output.splitlines()[2].split(",")[0] == "x^2+z"

    def test_deterministic_output(self, runner):
        args = ["triangle", "--family", "narayana", "--depth", "6",
                "--format", "json"]
        assert runner.invoke(main, args).output == \
            runner.invoke(main, args).output

    def test_out_file(self, runner, tmp_path):
        path = tmp_path / "tri.csv"
        res = runner.invoke(main, ["triangle", "--family", "shapiro",
                                   "--depth", "2", "--out", str(path)])
        assert res.exit_code == 0
        assert path.read_text().splitlines()[2] == "5,4,1"


class TestEntry:
    def test_single_cell(self, runner):
        res = runner.invoke(main, ["entry", "--family", "narayana", "3", "1"])
        assert res.exit_code == 0
        assert res.output.strip() == "3z^2+8z+3"

    def test_bad_indices(self, runner):
        res = runner.invoke(main, ["entry", "--family", "narayana", "1", "2"])
        assert res.exit_code == 2


class TestVerify:
    def test_small_thm1(self, runner):
        res = runner.invoke(main, ["verify", "--suite", "thm1",
                                   "--nmax", "3", "--mmax", "3",
                                   "--rmax", "1", "--lmax", "1"])
        assert res.exit_code == 0
        assert "failed=0" in res.output

    def test_record_stream(self, runner):
        res = runner.invoke(main, ["verify", "--suite", "ballot",
                                   "--nmax", "3"])
        lines = res.output.splitlines()
        records = [json.loads(line) for line in lines[:-1]]
        assert len(records) == 4
        assert all(r["equal"] for r in records)
        assert {"identity", "parameters", "lhs", "rhs", "equal"} <= \
            set(records[0])

    def test_exit_status_reflects_equality(self, runner):
        res = runner.invoke(main, ["verify", "--suite", "catalan",
                                   "--mmax", "4"])
        assert res.exit_code == 0

    def test_jobs_deterministic(self, runner):
        args = ["verify", "--suite", "f-closed", "--mmax", "6"]
        serial = runner.invoke(main, args).output
        parallel = runner.invoke(main, args + ["--jobs", "4"]).output
        assert serial == parallel

    def test_unknown_suite(self, runner):
        res = runner.invoke(main, ["verify", "--suite", "nosuch"])
        assert res.exit_code == 2

    def test_csv_format(self, runner):
        res = runner.invoke(main, ["verify", "--suite", "ballot",
                                   "--nmax", "2", "--format", "csv"])
        assert res.exit_code == 0
        assert res.output.splitlines()[0].startswith("ballot,")

    def test_ore_suite(self, runner):
        res = runner.invoke(main, ["verify", "--suite", "ore"])
        assert res.exit_code == 0
        assert "failed=0" in res.output


class TestSeqcheck:
    def test_passes(self, runner):
        res = runner.invoke(main, ["seqcheck", "--depth", "5"])
        assert res.exit_code == 0
        assert "ok: schroder column 0" in res.output
        assert "1,3,11,45,197,903" in res.output
        assert "1,2,5,14,42,132" in res.output


class TestGamma:
    def test_f_2_1(self, runner):
        res = runner.invoke(main, ["gamma", "2", "1"])
        assert res.exit_code == 0
        doc = json.loads(res.output)
        assert doc["coefficients"] == ["1", "-2"]

    def test_invalid(self, runner):
        res = runner.invoke(main, ["gamma", "1", "1"])
        assert res.exit_code == 2
