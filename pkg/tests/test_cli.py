import csv
import io
import json

import pytest

from resolvability.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCompute:
    def test_complete_5(self, capsys):
        code, out, _ = run(capsys, "compute", "--gen", "complete:5",
                           "--format", "json")
        assert code == 0
        record = json.loads(out)[0]
        assert record["psi"] == 4
        assert record["mhs_weak"] == 2
        assert record["mhs_strict"] == 5

    def test_tprime_9(self, capsys):
        code, out, _ = run(capsys, "compute", "--gen", "tprime:9",
                           "--format", "json")
        record = json.loads(out)[0]
        assert code == 0
        assert record["psi"] == 5
        assert record["beta_E"] == 2

    def test_graph6_k4(self, capsys):
        code, out, _ = run(capsys, "compute", "--graph6", "C~",
                           "--format", "json")
        record = json.loads(out)[0]
        assert code == 0
        assert record["beta"] == 3

    def test_edges_file(self, capsys, tmp_path):
        p = tmp_path / "p4.txt"
        p.write_text("4 3\n1 2\n2 3\n3 4\n")
        code, out, _ = run(capsys, "compute", "--edges", str(p))
        assert code == 0
        assert "beta" in out

    def test_invariant_selection(self, capsys):
        code, out, _ = run(capsys, "compute", "--gen", "path:5",
                           "--invariants", "psi,mhs_weak")
        assert code == 0
        assert "psi" in out and "mhs_weak" in out and "beta_M" not in out

    def test_witnesses_one_based(self, capsys):
        code, out, _ = run(capsys, "compute", "--gen", "path:4",
                           "--invariants", "mhs_strict")
        assert code == 0
        assert "v1 v4" in out

    def test_disconnected_input(self, capsys, tmp_path):
        p = tmp_path / "disc.txt"
        p.write_text("4 2\n1 2\n3 4\n")
        code, _, err = run(capsys, "compute", "--edges", str(p))
        assert code == 1
        assert "disconnected" in err

    def test_parse_failure(self, capsys):
        code, _, err = run(capsys, "compute", "--graph6", "~zz")
        assert code == 1
        assert "error" in err

    def test_exactly_one_source(self, capsys):
        code, _, err = run(capsys, "compute", "--gen", "path:3",
                           "--graph6", "C~")
        assert code == 1

    def test_deterministic_output(self, capsys):
        _, out1, _ = run(capsys, "compute", "--gen", "cycle:6")
        _, out2, _ = run(capsys, "compute", "--gen", "cycle:6")
        assert out1 == out2


class TestFamilies:
    def test_paths(self, capsys):
        code, out, _ = run(capsys, "families", "path", "2..10",
                           "--format", "csv")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        mhs_rows = [r for r in rows if r["invariant"].startswith("mhs")]
        assert mhs_rows and all(r["computed"] == "2" for r in mhs_rows)
        assert all(r["status"] == "ok" for r in rows)

    def test_stars(self, capsys):
        code, out, _ = run(capsys, "families", "star", "3..9",
                           "--format", "csv")
        assert code == 0
        for row in csv.DictReader(io.StringIO(out)):
            if row["invariant"].startswith("mhs"):
                assert int(row["computed"]) == int(row["param"]) - 1

    def test_cycles_psi_alternates(self, capsys):
        code, out, _ = run(capsys, "families", "cycle", "3..10",
                           "--format", "csv")
        assert code == 0
        psi = [int(r["computed"]) for r in csv.DictReader(io.StringIO(out))
               if r["invariant"] == "psi"]
        assert psi == [2 if n % 2 else 3 for n in range(3, 11)]

    def test_below_minimum(self, capsys):
        code, _, err = run(capsys, "families", "cycle", "2..4")
        assert code == 1


class TestExtremal:
    def test_psi_weak_sweep(self, capsys):
        code, out, _ = run(capsys, "extremal", "psi", "mhs_weak", "4..6",
                           "--format", "csv")
        assert code == 0
        diffs = [int(r["max_diff"]) for r in csv.DictReader(io.StringIO(out))]
        assert diffs == [1, 2, 3]

    def test_stream_required_above_7(self, capsys):
        code, _, err = run(capsys, "extremal", "psi", "beta_E", "8")
        assert code == 1
        assert "stream" in err

    def test_json_csv_same_values(self, capsys):
        code, out_csv, _ = run(capsys, "extremal", "mhs_strict", "mhs_weak",
                               "4..5", "--format", "csv")
        code2, out_json, _ = run(capsys, "extremal", "mhs_strict", "mhs_weak",
                                 "4..5", "--format", "json")
        assert code == code2 == 0
        csv_rows = list(csv.DictReader(io.StringIO(out_csv)))
        json_rows = json.loads(out_json)
        for a, b in zip(csv_rows, json_rows):
            for key, value in b.items():
                assert str(value) == a[key]

    def test_out_file(self, capsys, tmp_path):
        p = tmp_path / "report.json"
        code, out, _ = run(capsys, "extremal", "psi", "mhs_weak", "4",
                           "--format", "json", "--out", str(p))
        assert code == 0 and out == ""
        assert json.loads(p.read_text())[0]["max_diff"] == 1


class TestVerify:
    def test_pass_range(self, capsys):
        code, out, err = run(capsys, "verify", "3..4")
        assert code == 0
        assert "[PASS]" in out and "[FAIL]" not in out
        assert "checks passed" in err

    def test_stream_argument(self, capsys, tmp_path):
        from resolvability import enumerate_connected, write_graph6
        p = tmp_path / "n4.g6"
        with open(p, "w") as fh:
            for g in enumerate_connected(4):
                fh.write(write_graph6(g) + "\n")
        code, out, _ = run(capsys, "verify", "3..4", "--stream",
                           f"4:{p}")
        assert code == 0

    def test_missing_stream_for_large_n(self, capsys):
        code, _, err = run(capsys, "verify", "8..8")
        assert code == 1
        assert "stream" in err
