"""Command line behavior: exit codes, deterministic output, JSON shape,
and the fixture round-trip."""

import json

import pytest

from bsfloer.alexander import CompareReport
from bsfloer.cli import main
from bsfloer.diagram import loads
from bsfloer.fixtures import fixture_library
from bsfloer.selftest import CriterionResult


@pytest.fixture(scope="module")
def fxdir(tmp_path_factory):
    d = tmp_path_factory.mktemp("fixtures")
    assert main(["fixtures", "--output", str(d)]) == 0
    return d


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExitCodes:
    def test_validate_ok(self, capsys, fxdir):
        code, out, _ = run(capsys, ["validate", str(fxdir / "identity_n2.json")])
        assert code == 0
        assert out.rstrip().endswith("ok")

    def test_malformed_json_is_input_failure(self, capsys, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text('{"alpha": [1,')
        code, _, err = run(capsys, ["validate", str(p)])
        assert code == 1
        assert "line" in err

    def test_wrong_field_is_input_failure(self, capsys, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text('{"alpha": 3}')
        code, _, err = run(capsys, ["validate", str(p)])
        assert code == 1
        assert "error" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, ["bsda", "/nonexistent/x.json"])
        assert code == 1
        assert "cannot read" in err

    def test_unknown_verb_is_usage_error(self, capsys):
        code, _, err = run(capsys, ["frobnicate"])
        assert code == 64
        assert "usage error" in err

    def test_bad_ring_is_usage_error(self, capsys, fxdir):
        code, _, _ = run(capsys, ["bsda", str(fxdir / "identity_n1.json"),
                                  "--ring", "zz"])
        assert code == 64

    def test_bad_subset_is_usage_error(self, capsys, fxdir):
        code, _, _ = run(capsys, ["cap", str(fxdir / "identity_n1.json"),
                                  "--in", "a,b"])
        assert code == 64

    def test_no_verb_is_usage_error(self, capsys):
        code, _, _ = run(capsys, [])
        assert code == 64

    def test_compare_fail_exits_2(self, capsys, fxdir, monkeypatch):
        import bsfloer.cli as cli

        def fake(h, tag):
            return CompareReport(tag, False, None, None, None)

        monkeypatch.setattr(cli, "compare_bsda_alexander", fake)
        code, out, _ = run(capsys, ["alexander",
                                    str(fxdir / "identity_n1.json"),
                                    "--compare"])
        assert code == 2
        assert "FAIL" in out

    def test_selftest_fail_exits_2(self, capsys, monkeypatch):
        import bsfloer.cli as cli

        monkeypatch.setattr(
            cli, "run_all",
            lambda seed: [CriterionResult(1, "t", False, "d", 0.0)])
        code, out, _ = run(capsys, ["selftest"])
        assert code == 2
        assert "0/1 passed" in out


class TestOutput:
    def test_bsda_text_byte_stable(self, capsys, fxdir):
        path = str(fxdir / "bordered_mixed.json")
        _, out1, _ = run(capsys, ["bsda", path, "--ring", "zh"])
        _, out2, _ = run(capsys, ["bsda", path, "--ring", "zh"])
        assert out1 == out2
        assert "degree: 0" in out1

    def test_bsda_json_shape(self, capsys, fxdir):
        code, out, _ = run(capsys, ["bsda", str(fxdir / "identity_n2.json"),
                                    "--json"])
        assert code == 0
        doc = json.loads(out)
        assert sorted(doc) == ["degree", "entries"]
        assert doc["degree"] == 0
        for entry in doc["entries"]:
            assert sorted(entry) == ["in", "out", "value"]
        assert {"in": [1, 2], "out": [1, 2], "value": "1"} in doc["entries"]

    def test_alexander_compare_unit_line(self, capsys, fxdir):
        code, out, _ = run(capsys, ["alexander",
                                    str(fxdir / "annulus_n3_weighted.json"),
                                    "--ring", "zg", "--compare"])
        assert code == 0
        assert "unit: +1" in out
        assert "1 + t1 + t1^2" in out

    def test_generators_listing(self, capsys, fxdir):
        code, out, _ = run(capsys, ["generators",
                                    str(fxdir / "bordered_mixed.json")])
        assert code == 0
        assert out.startswith("generators: 2")
        assert "parity" in out

    def test_fn_reports_pass(self, capsys, fxdir):
        code, out, _ = run(capsys, ["fn", str(fxdir / "mixed_2x2.json")])
        assert code == 0
        assert "PASS" in out
        assert "torsion prefactor: 2" in out

    def test_fn_on_vanishing_fixture(self, capsys, fxdir):
        code, out, _ = run(capsys, ["fn", str(fxdir / "zero_matrix.json")])
        assert code == 0
        assert "zero map" in out
        assert "kernel element: 0" in out

    def test_selftest_summary(self, capsys):
        code, out, _ = run(capsys, ["selftest", "--seed", "3"])
        assert code == 0
        assert "selftest: 12/12 passed (seed 3)" in out

    def test_fixtures_listing_sorted(self, capsys):
        code, out, _ = run(capsys, ["fixtures"])
        assert code == 0
        names = [line.split(":", 1)[0] for line in out.strip().splitlines()]
        assert names == sorted(names)
        assert len(names) == len(fixture_library())


class TestFileFlow:
    def test_glue_then_bsda(self, capsys, fxdir, tmp_path):
        out_path = tmp_path / "glued.json"
        code, _, _ = run(capsys, ["glue", str(fxdir / "identity_n1.json"),
                                  str(fxdir / "identity_n1.json"),
                                  "--output", str(out_path)])
        assert code == 0
        code, out, _ = run(capsys, ["bsda", str(out_path)])
        assert code == 0
        assert "out{1} <- in{1}: 1" in out

    def test_glue_mismatch_is_input_failure(self, capsys, fxdir):
        code, _, err = run(capsys, ["glue", str(fxdir / "identity_n1.json"),
                                    str(fxdir / "identity_n2.json")])
        assert code == 1
        assert "interface" in err

    def test_disjoint_roundtrip(self, capsys, fxdir, tmp_path):
        out_path = tmp_path / "pair.json"
        code, _, _ = run(capsys, ["disjoint",
                                  str(fxdir / "identity_n1.json"),
                                  str(fxdir / "mixed_2x2.json"),
                                  "--output", str(out_path)])
        assert code == 0
        h = loads(out_path.read_text())
        assert h.n0 == 1 and h.n1 == 1

    def test_normalize_stdout_parses(self, capsys, fxdir):
        code, out, _ = run(capsys, ["normalize",
                                    str(fxdir / "bordered_mixed.json")])
        assert code == 0
        h = loads(out)
        assert all(role for _, role in h.beta_circles)

    def test_cap_auto_normalizes(self, capsys, fxdir, tmp_path):
        out_path = tmp_path / "capped.json"
        code, _, _ = run(capsys, ["cap", str(fxdir / "identity_n1.json"),
                                  "--in", "1", "--out", "1",
                                  "--output", str(out_path)])
        assert code == 0
        h = loads(out_path.read_text())
        assert h.n0 == 0 and h.n1 == 0

    def test_fixture_files_round_trip(self, fxdir):
        lib = fixture_library()
        for name, (h, _) in lib.items():
            text = (fxdir / f"{name}.json").read_text()
            assert loads(text) == h, name
