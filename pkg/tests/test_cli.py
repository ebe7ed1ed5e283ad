import json
import subprocess
import sys

import pytest

from rainbowdom import (
    gen_cycle,
    gen_path,
    is_isomorphic,
    parse_graph6,
    parse_labeling,
    path_upper_bound,
    to_graph6,
)
from rainbowdom.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


class TestInvariant:
    def test_gamma(self, capsys):
        rc, out, _ = run(capsys, "invariant", "P7", "--type", "gamma")
        assert rc == 0
        assert "gamma = 3" in out
        assert "witness: {" in out

    def test_gammat(self, capsys):
        rc, out, _ = run(capsys, "invariant", "P7", "--type", "gammat")
        assert rc == 0
        assert "gamma_t = 4" in out

    def test_rdk(self, capsys):
        rc, out, _ = run(capsys, "invariant", "P4", "--type", "rdk", "--k", "2")
        assert rc == 0
        assert "rd_2 = 3" in out
        assert "1: {1,2}" in out or "{1,2}" in out

    def test_rdk_k3(self, capsys):
        rc, out, _ = run(capsys, "invariant", "P7", "--type", "rdk", "--k", "3")
        assert rc == 0
        assert "rd_3 = 6" in out

    def test_graph6_file(self, capsys, tmp_path):
        p = tmp_path / "c5.g6"
        p.write_text(to_graph6(gen_cycle(5)) + "\n")
        rc, out, _ = run(capsys, "invariant", str(p), "--type", "gamma")
        assert rc == 0 and "gamma = 2" in out

    def test_edge_file_with_format_override(self, capsys, tmp_path):
        p = tmp_path / "graph.txt"
        p.write_text("3 2\n0 1\n1 2\n")
        rc, out, _ = run(capsys, "invariant", str(p), "--type", "gamma",
                         "--format", "edges")
        assert rc == 0 and "gamma = 1" in out

    def test_named_glued(self, capsys):
        rc, out, _ = run(capsys, "invariant", "GLUED1_0", "--type", "gamma")
        assert rc == 0 and "gamma = 2" in out

    def test_exit_codes(self, capsys):
        assert run(capsys, "invariant", "Q4", "--type", "gamma")[0] == 2
        assert run(capsys, "invariant", "P65", "--type", "gamma")[0] == 3
        assert run(capsys, "invariant", "P20", "--type", "rdk",
                   "--budget", "5")[0] == 4
        assert run(capsys, "invariant", "P4", "--type", "rdk", "--k", "0")[0] == 5
        # gamma_t undefined with an isolated vertex
        assert run(capsys, "invariant", "P1", "--type", "gammat")[0] == 5


class TestProduct:
    def test_lex_k2_k2(self, capsys):
        rc, out, _ = run(capsys, "product", "P2", "P2")
        assert rc == 0 and out.strip() == "C~"

    def test_cart_k2_k2(self, capsys):
        rc, out, _ = run(capsys, "product", "P2", "P2", "--kind", "cart")
        assert rc == 0
        assert is_isomorphic(parse_graph6(out.strip()), gen_cycle(4))

    def test_deterministic(self, capsys):
        a = run(capsys, "product", "P3", "C5")
        b = run(capsys, "product", "P3", "C5")
        assert a == b


class TestCertify:
    def test_exact_case(self, capsys):
        rc, out, _ = run(capsys, "certify", "P7", "DC4")
        assert rc == 0
        assert "certificate: exact 7, case RdH3NoPair" in out
        assert "lower witness: couple = 7" in out
        assert "A={4, 5} B={1}" in out
        assert "upper labeling weight: 7" in out
        assert "citations:" in out

    def test_interval_refined(self, capsys):
        rc, out, _ = run(capsys, "certify", "P5", "P4")
        assert rc == 0
        assert "certificate: interval [4,5], case RdH3Pair; refined exact 5" in out

    def test_no_refine(self, capsys):
        rc, out, _ = run(capsys, "certify", "P5", "P4", "--no-refine")
        assert rc == 0
        assert "certificate: interval [4,5], case RdH3Pair" in out
        assert "refined" not in out

    def test_labeling_out(self, capsys, tmp_path):
        dest = tmp_path / "lab.txt"
        rc, out, _ = run(capsys, "certify", "P5", "P4",
                         "--labeling-out", str(dest))
        assert rc == 0
        f = parse_labeling(dest.read_text(), 2)
        assert f.weight == 5

    def test_disconnected_h(self, capsys, tmp_path):
        p = tmp_path / "twok2.txt"
        p.write_text("4 2\n0 1\n2 3\n")
        rc, out, _ = run(capsys, "certify", "P3", str(p))
        assert rc == 0 and "ComponentSum-NA" in out
        rc, _, err = run(capsys, "certify", "P3", str(p), "--strict")
        assert rc == 5

    def test_component_sum(self, capsys, tmp_path):
        p = tmp_path / "p3_c4.txt"
        p.write_text("7 6\n0 1\n1 2\n3 4\n4 5\n5 6\n6 3\n")
        rc, out, _ = run(capsys, "certify", str(p), "P6")
        assert rc == 0
        assert "case ComponentSum" in out
        assert "components:" in out

    def test_deterministic(self, capsys):
        a = run(capsys, "certify", "P6", "DC4")
        b = run(capsys, "certify", "P6", "DC4")
        assert a == b


class TestConstruct:
    def test_tiles_auto_pair(self, capsys):
        rc, out, _ = run(capsys, "construct", "tiles", "--h", "P4", "--n", "9")
        assert rc == 0
        f = parse_labeling(out, 2)
        assert f.weight == path_upper_bound(9)

    def test_tiles_explicit_pair_matches(self, capsys):
        a = run(capsys, "construct", "tiles", "--h", "P4", "--n", "9",
                "--u", "1", "--v", "3")
        b = run(capsys, "construct", "tiles", "--h", "P4", "--n", "9")
        assert a == b

    def test_glued(self, capsys):
        rc, out, _ = run(capsys, "construct", "glued", "--h", "P4",
                         "--m", "2", "--p2", "1")
        assert rc == 0
        assert parse_labeling(out, 2).weight == 10

    def test_totaldom(self, capsys):
        rc, out, _ = run(capsys, "construct", "totaldom", "--g", "P3",
                         "--h", "P6")
        assert rc == 0
        assert parse_labeling(out, 2).weight == 4

    def test_couple(self, capsys):
        rc, out, _ = run(capsys, "construct", "couple", "--g", "P7",
                         "--h", "DC4")
        assert rc == 0
        assert parse_labeling(out, 2).weight == 7

    def test_out_file(self, capsys, tmp_path):
        dest = tmp_path / "lab.txt"
        rc, out, _ = run(capsys, "construct", "tiles", "--h", "P4", "--n", "5",
                         "--out", str(dest))
        assert rc == 0
        assert f"wrote {dest}" in out
        assert parse_labeling(dest.read_text(), 2).weight == 5

    def test_missing_args(self, capsys):
        assert run(capsys, "construct", "tiles", "--h", "P4")[0] == 2
        assert run(capsys, "construct", "glued", "--h", "P4")[0] == 2
        assert run(capsys, "construct", "totaldom", "--h", "P4")[0] == 2
        assert run(capsys, "construct", "couple", "--h", "P4")[0] == 2

    def test_no_pair_witness(self, capsys):
        assert run(capsys, "construct", "tiles", "--h", "P5", "--n", "5")[0] == 5


class TestValidateRoundTrip:
    def test_valid_then_tampered(self, capsys, tmp_path):
        prod_rc, prod_out, _ = run(capsys, "product", "P9", "P4")
        gfile = tmp_path / "prod.g6"
        gfile.write_text(prod_out)
        lab = tmp_path / "lab.txt"
        rc, out, _ = run(capsys, "construct", "tiles", "--h", "P4", "--n", "9",
                         "--out", str(lab))
        assert rc == 0
        rc, out, _ = run(capsys, "validate", str(lab), "--graph", str(gfile))
        assert rc == 0
        assert "valid: weight 9" in out
        # blank the first full label and watch it fail
        text = lab.read_text()
        assert "{1,2}" in text
        lab.write_text(text.replace("{1,2}", "-", 1))
        rc, out, _ = run(capsys, "validate", str(lab), "--graph", str(gfile))
        assert rc == 1
        assert "invalid: violator vertex" in out

    def test_size_mismatch(self, capsys, tmp_path):
        lab = tmp_path / "lab.txt"
        lab.write_text("0: {1}\n1: {2}\n")
        assert run(capsys, "validate", str(lab), "--graph", "P3")[0] == 5

    def test_garbage_labeling(self, capsys, tmp_path):
        lab = tmp_path / "lab.txt"
        lab.write_text("0: {9}\n")
        assert run(capsys, "validate", str(lab), "--graph", "P1")[0] == 2


class TestEnumerate:
    def test_rdfs_k2(self, capsys):
        rc, out, _ = run(capsys, "enumerate", "rdfs", "K2")
        assert rc == 0
        assert out.count("--") == 6
        assert "count: 6" in out

    def test_rdfs_cap_exceeded(self, capsys):
        rc, out, _ = run(capsys, "enumerate", "rdfs", "K2", "--cap", "3")
        assert rc == 3

    def test_graphs(self, capsys):
        rc, out, _ = run(capsys, "enumerate", "graphs", "--n", "4")
        assert rc == 0
        lines = out.strip().splitlines()
        assert len(lines) == 6
        assert all(parse_graph6(ln).n == 4 for ln in lines)

    def test_missing_args(self, capsys):
        assert run(capsys, "enumerate", "graphs")[0] == 2
        assert run(capsys, "enumerate", "rdfs")[0] == 2


class TestVerify:
    def test_small_corpus(self, capsys, tmp_path):
        dest = tmp_path / "report.json"
        rc, out, _ = run(capsys, "verify", "--ng", "2", "--h", "P4,C4",
                         "--cap", "10", "--json", str(dest))
        assert rc == 0
        assert "violations: 0" in out
        data = json.loads(dest.read_text())
        assert data["tasks"] == 4
        assert data["violations"] == []
        assert data["wall_seconds"] > 0


class TestConsoleScript:
    def test_installed_entry_point(self):
        import shutil
        exe = shutil.which("rainbowdom")
        if exe is None:
            pytest.skip("console script not on PATH")
        proc = subprocess.run(
            [exe, "invariant", "P4", "--type", "rdk"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert "rd_2 = 3" in proc.stdout

    def test_entry_function_exits(self, capsys, monkeypatch):
        from rainbowdom.cli import entry
        monkeypatch.setattr(sys, "argv",
                            ["rainbowdom", "invariant", "P4", "--type", "gamma"])
        with pytest.raises(SystemExit) as exc:
            entry()
        assert exc.value.code == 0
