import json
import subprocess
import sys

import pytest

from youngquiver.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestQuiverCommand:
    def test_text_counts(self, capsys):
        code, out, _ = run_cli(capsys, "quiver", "--max-size", "4")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "nodes: 12"
        assert lines[1] == "arrows: 14"

    def test_single_node(self, capsys):
        code, out, _ = run_cli(capsys, "quiver", "--max-size", "0")
        assert code == 0
        assert out.splitlines()[0] == "nodes: 1"

    def test_dot_output(self, capsys):
        code, out, _ = run_cli(capsys, "quiver", "--max-size", "4", "--format", "dot")
        assert code == 0
        assert out.startswith("digraph")
        assert out.count(" -> ") == 14

    def test_signed_dot(self, capsys):
        code, out, _ = run_cli(
            capsys, "quiver", "--max-size", "4", "--format", "dot", "--signs"
        )
        assert code == 0
        assert '"1" -> "1,1" [label="-1"];' in out
        assert '"2,1" -> "2,1,1" [label="-1"];' in out

    def test_json_output(self, capsys):
        code, out, _ = run_cli(
            capsys, "quiver", "--max-size", "2", "--format", "json", "--signs"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["nodes"] == ["0", "1", "2", "1,1"]
        assert ["1", "1,1", -1] in payload["arrows"]

    def test_bounds_error_exit_code(self, capsys):
        code, _, err = run_cli(capsys, "quiver", "--max-size", "99")
        assert code == 2
        assert "exceeds" in err


class TestVerifyCommand:
    def test_signs_pass(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "signs", "--max-size", "6")
        assert code == 0
        certificate = json.loads(out)
        assert certificate["verdict"] == "pass"
        assert certificate["counts"]["diamonds_checked"] > 0
        assert certificate["schema_version"] == 1

    def test_resolution_pass(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "resolution", "--xi", "2,1", "--depth", "4"
        )
        assert code == 0
        certificate = json.loads(out)
        assert certificate["verdict"] == "pass"
        assert certificate["parameters"] == {"xi": "2,1", "depth": 4}
        assert certificate["details"]["linear"] is True

    def test_resolution_matrix_dump(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "verify",
            "resolution",
            "--xi",
            "1",
            "--depth",
            "2",
            "--dump-matrices",
        )
        assert code == 0
        assert "matrices" in json.loads(out)["details"]

    def test_qdual_pass(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "qdual", "--max-size", "4")
        assert code == 0
        assert json.loads(out)["verdict"] == "pass"

    def test_morita_pass(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "morita", "--n", "2", "--format", "text")
        assert code == 0
        assert out.startswith("verify morita: pass")

    def test_idempotents_pass(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "idempotents", "--n", "3")
        assert code == 0
        assert json.loads(out)["verdict"] == "pass"

    def test_missing_flag_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "verify", "resolution", "--depth", "3")
        assert code == 2
        assert "requires" in err

    def test_bad_partition_is_usage_error(self, capsys):
        code, _, err = run_cli(
            capsys, "verify", "resolution", "--xi", "1,2", "--depth", "3"
        )
        assert code == 2

    def test_certificates_byte_stable(self, capsys):
        outputs = []
        for _ in range(2):
            _, out, _ = run_cli(capsys, "verify", "signs", "--max-size", "5")
            payload = json.loads(out)
            payload["elapsed_ms"] = 0  # timing is the one nondeterministic field
            outputs.append(json.dumps(payload, sort_keys=False))
        assert outputs[0] == outputs[1]

    def test_threads_option_matches_sequential(self, capsys):
        argv = ["verify", "resolution", "--xi", "1", "--depth", "3"]
        code, sequential, _ = run_cli(capsys, *argv)
        assert code == 0
        try:
            code, parallel, _ = run_cli(capsys, *argv, "--threads", "2")
        except (OSError, PermissionError):
            pytest.skip("multiprocessing unavailable in this environment")
        assert code == 0
        normalize = lambda text: dict(json.loads(text), elapsed_ms=0)
        assert normalize(parallel) == normalize(sequential)


class TestTableCommand:
    def test_pieri_rows(self, capsys):
        code, out, _ = run_cli(capsys, "table", "pieri", "--mu", "2", "--m", "2")
        assert code == 0
        assert out.splitlines() == ["4: 1", "3,1: 1", "2,2: 1", "2,1,1: 0"]

    def test_betti_single_column(self, capsys):
        code, out, _ = run_cli(
            capsys, "table", "betti", "--xi", "0", "--depth", "3", "--format", "json"
        )
        assert code == 0
        rows = json.loads(out)["rows"]
        positive = [key for key, flag in rows if flag]
        assert positive == ["0:0", "-1:1", "-2:1,1", "-3:1,1,1"]

    def test_dualdims_vertical_strip_indicator(self, capsys):
        code, out, _ = run_cli(capsys, "table", "dualdims", "--max-size", "3")
        assert code == 0
        table = dict(line.split(": ") for line in out.splitlines())
        assert table["1->1,1,1"] == "1"
        assert table["1->3"] == "0"
        assert table["1->2,1"] == "1"

    def test_missing_flags(self, capsys):
        code, _, err = run_cli(capsys, "table", "pieri", "--mu", "2")
        assert code == 2


class TestOutputFile:
    def test_out_writes_file(self, tmp_path, capsys):
        target = tmp_path / "certificate.json"
        code, out, _ = run_cli(
            capsys, "verify", "signs", "--max-size", "4", "--out", str(target)
        )
        assert code == 0
        assert out == ""
        assert json.loads(target.read_text())["verdict"] == "pass"


class TestModuleEntryPoint:
    def test_python_dash_m(self):
        result = subprocess.run(
            [sys.executable, "-m", "youngquiver", "quiver", "--max-size", "1"],
            capture_output=True,
            text=True,
        )
        assert result.returncode == 0
        assert result.stdout.splitlines()[0] == "nodes: 2"
