"""CLI surface: JSON shapes, exit codes, determinism, fixture verification."""

import json
import os

from unisecant.cli import main
from conftest import fixture_path


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestNk:
    def test_table_shape(self, capsys, tmp_path):
        cache = os.fspath(tmp_path / "cache.json")
        code, out, _ = run_cli(capsys, "nk", "--max", "4", "--cache", cache)
        assert code == 0
        assert json.loads(out) == {
            "entries": [["1", "1"], ["2", "1"], ["3", "12"], ["4", "620"]]}

    def test_byte_identical_reruns(self, capsys, tmp_path):
        cache = os.fspath(tmp_path / "cache.json")
        _, first, _ = run_cli(capsys, "nk", "--max", "6", "--cache", cache)
        _, second, _ = run_cli(capsys, "nk", "--max", "6", "--cache", cache)
        assert first == second


class TestTorsion:
    def test_census(self, capsys):
        code, out, _ = run_cli(capsys, "torsion", "--k", "2")
        assert code == 0
        assert json.loads(out) == {
            "k": "2", "total": "36", "by_level": {"1": "9", "2": "27"}}

    def test_enumerate_length(self, capsys):
        code, out, _ = run_cli(capsys, "torsion", "--k", "2", "--enumerate")
        assert len(json.loads(out)["classes"]) == 36


class TestCurveCommands:
    def test_flexes_byte_identical(self, capsys):
        _, first, _ = run_cli(capsys, "flexes", "--cubic", fixture_path("fermat.json"))
        _, second, _ = run_cli(capsys, "flexes", "--cubic", fixture_path("fermat.json"))
        assert first == second

    def test_flexes(self, capsys):
        code, out, _ = run_cli(capsys, "flexes", "--cubic", fixture_path("fermat.json"))
        assert code == 0
        data = json.loads(out)
        assert data["count_with_multiplicity"] == "9"
        assert data["eliminant_squarefree"] is True
        assert ["1", "-1", "0"] in data["rational_flexes"]

    def test_jinv(self, capsys):
        code, out, _ = run_cli(capsys, "jinv", "--cubic",
                               fixture_path("weier_a-4_b0.json"))
        assert code == 0
        data = json.loads(out)
        assert data["alpha"] == "-4" and data["j"] == "1728"

    def test_genus(self, capsys):
        code, out, _ = run_cli(capsys, "genus", "--curve",
                               fixture_path("tricuspidal_quartic.json"))
        data = json.loads(out)
        assert data["genus"] == "0" and data["delta"] == "3"
        assert len(data["profiles"]) == 3

    def test_resolve(self, capsys):
        code, out, _ = run_cli(capsys, "resolve", "--curve",
                               fixture_path("nodal_cubic.json"), "--point", "0,0,1")
        data = json.loads(out)
        assert data["multiplicities"] == ["2"] and data["delta"] == "1"

    def test_intersect_local(self, capsys):
        code, out, _ = run_cli(
            capsys, "intersect", "--f", fixture_path("nodal_cubic.json"),
            "--g", fixture_path("cuspidal_cubic.json"), "--point", "0,0,1")
        assert code == 0
        assert int(json.loads(out)["multiplicity"]) >= 1

    def test_unisecant_totals(self, capsys):
        code, out, _ = run_cli(capsys, "unisecant", "--cubic",
                               fixture_path("fermat.json"), "--k", "3")
        assert code == 0
        assert json.loads(out)["total"] == "297"
        code, out, _ = run_cli(capsys, "unisecant", "--cubic",
                               fixture_path("weier_a-4_b0.json"), "--k", "3")
        assert json.loads(out)["total"] == "306"

    def test_pencil_disc_z9(self, capsys):
        code, out, _ = run_cli(capsys, "pencil-disc", "--cubic",
                               fixture_path("z9_d2.json"), "--point", "1,0,0")
        assert code == 0
        data = json.loads(out)
        assert data["multiplicities"] == ["9", "1", "1", "1"]

    def test_conic(self, capsys):
        code, out, _ = run_cli(capsys, "conic", "--cubic",
                               fixture_path("z6_c1.json"), "--point", "1,0,0")
        assert json.loads(out)["kind"] == "irreducible-conic"

    def test_bounds_with_certificate(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "--deg-c", "3", "--deg-a", "5",
                               "--certificate", "9,2,9")
        data = json.loads(out)
        assert data["contact_bound"] == "1"
        assert data["certificate"]["inequality_holds"] is False

    def test_check_family(self, capsys):
        code, out, _ = run_cli(capsys, "check-family", "--family",
                               fixture_path("family_translated_node.json"),
                               "--t0", "0")
        assert code == 0
        assert json.loads(out)["derivative_meets_weak_type"] is True


class TestVerificationAndErrors:
    def test_claims_verified_on_load(self, capsys):
        code, out, _ = run_cli(capsys, "flexes", "--cubic", fixture_path("z9_d2.json"))
        assert code == 0  # the order-9 claim re-verified silently

    def test_false_claim_aborts(self, capsys, tmp_path):
        with open(fixture_path("z9_d2.json")) as fh:
            data = json.load(fh)
        data["torsion_points"][0]["order"] = "7"
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(data))
        code, _, err = run_cli(capsys, "flexes", "--cubic", os.fspath(bad))
        assert code == 1 and "order" in err

    def test_malformed_file_exit_2(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{broken")
        code, _, _ = run_cli(capsys, "genus", "--curve", os.fspath(bad))
        assert code == 2

    def test_unknown_subcommand_exit_2(self, capsys):
        code, _, _ = run_cli(capsys, "frobnicate")
        assert code == 2

    def test_domain_error_exit_1(self, capsys):
        code, _, _ = run_cli(capsys, "unisecant", "--cubic",
                             fixture_path("nodal_cubic.json"), "--k", "3")
        assert code == 1

    def test_selftest(self, capsys):
        code, out, _ = run_cli(capsys, "selftest", "--seed", "7", "--rounds", "8")
        assert code == 0
        assert json.loads(out)["ok"] is True
