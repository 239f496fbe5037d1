from __future__ import annotations

import json
import subprocess
import sys

import pytest

from qcgirth import import_alist, save_matrix
from qcgirth.cli import run

from conftest import REFERENCE_SEED


@pytest.fixture
def seed_path(seed_fixture_path):
    return str(seed_fixture_path)


class TestVerify:
    def test_reference_seed_all_pass(self, seed_path):
        outcome = run(["verify", "--matrix", seed_path, "--q", "393"])
        assert outcome.exit_code == 0
        report = json.loads(outcome.stdout_payload)
        assert report == {
            "cond1_girth12": True,
            "cond2_elementwise": True,
            "cond3_gap": True,
            "p2_max": 224,
            "p2_second": 170,
            "p1_max": 26,
            "min_P": 449,
        }

    def test_failing_seed_exits_one(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(
            json.dumps(
                {
                    "rows": 3,
                    "cols": 3,
                    "entries": [[0, 0, 0], [0, 5, 2], [0, 3, 6]],
                }
            )
        )
        outcome = run(["verify", "--matrix", str(path), "--q", "9"])
        assert outcome.exit_code == 1
        report = json.loads(outcome.stdout_payload)
        assert not report["cond2_elementwise"]


class TestGirth:
    def test_girth_at_448(self, seed_path):
        outcome = run(["girth", "--matrix", seed_path, "--p", "448"])
        assert outcome.exit_code == 0
        report = json.loads(outcome.stdout_payload)
        assert report["girth"] == 8
        assert report["method"] == "EXPONENT_CHECK"
        assert report["witness"]["cols"] == [0, 5, 0, 5]

    def test_oracle_flag(self, seed_path):
        outcome = run(["girth", "--matrix", seed_path, "--p", "393", "--oracle"])
        report = json.loads(outcome.stdout_payload)
        assert report == {"girth": 12, "method": "GRAPH_BFS", "witness": None}

    def test_oracle_budget_exit(self, seed_path):
        outcome = run(["girth", "--matrix", seed_path, "--p", "99991", "--oracle"])
        assert outcome.exit_code == 3


class TestExtend:
    def test_thirty_member_manifest(self, seed_path):
        outcome = run(
            ["extend", "--matrix", seed_path, "--q", "393", "--from", "449", "--to", "478"]
        )
        assert outcome.exit_code == 0
        manifest = json.loads(outcome.stdout_payload)
        assert manifest["min_P"] == 449
        assert len(manifest["members"]) == 30
        assert manifest["members"][-1] == {"P": 478, "N": 2868, "girth": 12}

    def test_below_bound_is_input_error(self, seed_path):
        outcome = run(
            ["extend", "--matrix", seed_path, "--q", "393", "--from", "448", "--to", "478"]
        )
        assert outcome.exit_code == 2

    def test_no_verify_flag(self, seed_path):
        outcome = run(
            [
                "extend", "--matrix", seed_path, "--q", "393",
                "--from", "449", "--to", "452", "--no-verify",
            ]
        )
        assert outcome.exit_code == 0
        assert len(json.loads(outcome.stdout_payload)["members"]) == 4


class TestSearch:
    def test_small_search(self):
        outcome = run(
            [
                "search", "--cols", "3", "--q-cap", "200", "--seed", "0",
                "--steps", "400", "--restarts", "2",
            ]
        )
        assert outcome.exit_code == 0
        payload = json.loads(outcome.stdout_payload)
        assert payload["report"]["cond1_girth12"]
        assert payload["seed"]["rows"] == 3
        assert payload["Q"] <= 200

    def test_budget_exhaustion_exit(self):
        outcome = run(
            ["search", "--cols", "3", "--q-cap", "2", "--seed", "0", "--steps", "10"]
        )
        assert outcome.exit_code == 3


class TestExport:
    def test_alist_round_trip_via_stdout(self, seed_path):
        outcome = run(["export", "--matrix", seed_path, "--p", "7", "--format", "alist"])
        assert outcome.exit_code == 0
        h = import_alist(outcome.stdout_payload + "\n")
        assert h.n_rows == 21 and h.n_cols == 42

    def test_json_format(self, seed_path):
        outcome = run(["export", "--matrix", seed_path, "--p", "5", "--format", "json"])
        payload = json.loads(outcome.stdout_payload)
        assert payload["n_rows"] == 15
        assert len(payload["row_supports"]) == 15

    def test_out_file(self, seed_path, tmp_path):
        target = tmp_path / "h.alist"
        outcome = run(
            [
                "export", "--matrix", seed_path, "--p", "7",
                "--format", "alist", "--out", str(target),
            ]
        )
        assert outcome.exit_code == 0
        assert json.loads(outcome.stdout_payload)["written"] == str(target)
        assert import_alist(target.read_text()).n_cols == 42


class TestSimulate:
    def test_csv_output(self, seed_path):
        outcome = run(
            [
                "simulate", "--matrix", seed_path, "--p", "29",
                "--ebn0", "3.0,5.0", "--max-iter", "10",
                "--min-error-frames", "2", "--frame-cap", "20", "--seed", "5",
            ]
        )
        assert outcome.exit_code == 0
        lines = outcome.stdout_payload.split("\n")
        assert lines[0] == "ebn0_db,frames,bit_errors,frame_errors,ber,fer,cap_hit"
        assert len(lines) == 3
        assert lines[1].startswith("3.0,")

    def test_bad_ebn0_list(self, seed_path):
        outcome = run(
            [
                "simulate", "--matrix", seed_path, "--p", "29",
                "--ebn0", "abc", "--max-iter", "10",
                "--min-error-frames", "2", "--frame-cap", "5", "--seed", "5",
            ]
        )
        assert outcome.exit_code == 2


class TestErrorPaths:
    def test_unknown_command(self):
        assert run(["bogus"]).exit_code == 2

    def test_missing_required_flag(self):
        assert run(["girth", "--p", "5"]).exit_code == 2

    def test_missing_file(self):
        outcome = run(["girth", "--matrix", "/nonexistent.json", "--p", "5"])
        assert outcome.exit_code == 2

    def test_invalid_json_file(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        assert run(["girth", "--matrix", str(path), "--p", "5"]).exit_code == 2

    def test_wrong_schema_file(self, tmp_path):
        path = tmp_path / "wrong.json"
        path.write_text(json.dumps({"rows": 1}))
        assert run(["girth", "--matrix", str(path), "--p", "5"]).exit_code == 2


class TestConsoleEntry:
    def test_module_invocation(self, tmp_path):
        path = tmp_path / "seed.json"
        save_matrix(path, REFERENCE_SEED)
        proc = subprocess.run(
            [
                sys.executable, "-m", "qcgirth.cli",
                "girth", "--matrix", str(path), "--p", "393",
            ],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["girth"] == 12
