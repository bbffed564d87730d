import json
from fractions import Fraction

import pytest

from conftest import GOLDEN_TRANSCRIPTS, run_cli
from spernerfix.rationals import parse_rational


class TestGoldenTranscripts:
    @pytest.mark.parametrize(
        "argv,expected_code,expected_stdout",
        GOLDEN_TRANSCRIPTS,
        ids=[" ".join(argv) for argv, _, _ in GOLDEN_TRANSCRIPTS],
    )
    def test_byte_identical(self, argv, expected_code, expected_stdout):
        code, stdout, stderr = run_cli(argv)
        assert stdout == expected_stdout
        assert code == expected_code
        if expected_code in (1, 2):
            assert stderr  # diagnostics go to stderr


class TestSperner:
    def test_csv(self):
        code, stdout, _ = run_cli(["sperner", "0,0,1,1", "--format", "csv"])
        assert code == 0
        assert stdout == "scan,bisect\n2,2\n"

    def test_vertices_shown(self):
        code, stdout, _ = run_cli(
            ["sperner", "0,0,1,1", "--vertices", "0,1/4,3/4,1", "--format", "json"]
        )
        assert code == 0
        doc = json.loads(stdout)
        assert doc == {
            "scan": 2,
            "bisect": 2,
            "scan_edge": ["1/4", "3/4"],
            "bisect_edge": ["1/4", "3/4"],
        }

    def test_vertices_csv_columns(self):
        code, stdout, _ = run_cli(
            ["sperner", "0,1", "--vertices", "0,1", "--format", "csv"]
        )
        assert code == 0
        assert stdout == "scan,bisect,scan_lo,scan_hi,bisect_lo,bisect_hi\n1,1,0,1,0,1\n"

    def test_vertex_count_mismatch(self):
        code, stdout, stderr = run_cli(["sperner", "0,1", "--vertices", "0,1,2"])
        assert code == 1
        assert stdout == ""
        assert "match" in stderr

    def test_malformed_labels(self):
        code, _, stderr = run_cli(["sperner", "0,2,1"])
        assert code == 1
        assert "label" in stderr


class TestSolve:
    def test_json_bracket_round_trips(self):
        code, stdout, _ = run_cli(
            [
                "solve",
                "(x*x + 2)/4",
                "0",
                "1",
                "--epsilon",
                "1/1000000",
                "--lipschitz",
                "1/2",
                "--format",
                "json",
            ]
        )
        assert code == 0
        doc = json.loads(stdout)
        assert doc["result"] == "bracket"
        assert doc["converged"] is True
        lo, hi = parse_rational(doc["lo"]), parse_rational(doc["hi"])
        g_lo, g_hi = parse_rational(doc["g_lo"]), parse_rational(doc["g_hi"])
        width = parse_rational(doc["width"])
        assert width == hi - lo == Fraction(1, 2**doc["rounds_used"])
        assert g_lo > 0 > g_hi
        # bracket encloses 2 - sqrt(2), by exact squaring
        assert (2 - lo) ** 2 > 2 > (2 - hi) ** 2

    def test_stdin_expression(self):
        code, stdout, _ = run_cli(["solve", "-", "0", "1"], stdin_text="1 - x\n")
        assert code == 0
        assert stdout == "exact fixed point: 1/2 (0.500000000000)\n"

    def test_unconverged_exit_3_report_still_emitted(self):
        code, stdout, _ = run_cli(
            [
                "solve",
                "(x*x + 2)/4",
                "0",
                "1",
                "--epsilon",
                "1/1000000",
                "--lipschitz",
                "1/2",
                "--max-rounds",
                "3",
                "--format",
                "json",
            ]
        )
        assert code == 3
        doc = json.loads(stdout)
        assert doc["converged"] is False
        assert doc["rounds_used"] == 3

    def test_parse_error_exit_1(self):
        code, stdout, stderr = run_cli(["solve", "1 +", "0", "1"])
        assert code == 1
        assert stdout == ""
        assert "position" in stderr

    def test_bad_endpoint_literal(self):
        code, _, stderr = run_cli(["solve", "x", "0", "1.5"])
        assert code == 1
        assert "literal" in stderr

    def test_single_grid_mode(self):
        code, stdout, _ = run_cli(
            [
                "solve",
                "(x+1)/2",
                "0",
                "2",
                "--mode",
                "single_grid",
                "--epsilon",
                "1/100",
                "--lipschitz",
                "1/2",
                "--format",
                "csv",
            ]
        )
        assert code == 0
        header, row = stdout.splitlines()
        assert header == "result,mode,rounds_used,converged,x,lo,hi,g_lo,g_hi,width"
        fields = row.split(",")
        assert fields[0] == "bracket"
        assert fields[1] == "single_grid"
        assert fields[3] == "true"
        lo, hi = parse_rational(fields[5]), parse_rational(fields[6])
        assert lo < 1 < hi

    def test_single_grid_requires_lipschitz(self):
        code, _, stderr = run_cli(["solve", "1 - x", "0", "1", "--mode", "single_grid"])
        assert code == 1
        assert "Lipschitz" in stderr

    def test_exact_csv(self):
        code, stdout, _ = run_cli(["solve", "1 - x", "0", "1", "--format", "csv"])
        assert code == 0
        assert stdout == (
            "result,mode,rounds_used,converged,x,lo,hi,g_lo,g_hi,width\n"
            "exact,refine,,,1/2,,,,,\n"
        )


class TestPlmap:
    def test_eval_json(self):
        code, stdout, _ = run_cli(
            ["plmap", "0,1", "--vertices", "0,1", "eval", "1/4", "--format", "json"]
        )
        assert code == 0
        assert json.loads(stdout) == {
            "x": "1/4",
            "value": "3/4",
            "value_decimal": "0.750000000000",
        }

    def test_fixed_points_json_is_a_rational_literal_array(self):
        code, stdout, _ = run_cli(
            ["plmap", "0,1,0,1", "--vertices", "0,1,2,3", "fixed-points", "--format", "json"]
        )
        assert code == 0
        assert stdout == '["1/2","3/2","5/2"]\n'

    def test_trace_csv(self):
        code, stdout, _ = run_cli(
            [
                "plmap",
                "0,1",
                "--vertices",
                "0,1",
                "trace",
                "--resolution",
                "2",
                "--format",
                "csv",
            ]
        )
        assert code == 0
        assert stdout == "x,value\n0,1\n1/2,1/2\n1,0\n"

    def test_eval_requires_point(self):
        code, _, stderr = run_cli(["plmap", "0,1", "--vertices", "0,1", "eval"])
        assert code == 1
        assert "point" in stderr

    def test_eval_out_of_domain(self):
        code, _, stderr = run_cli(["plmap", "0,1", "--vertices", "0,1", "eval", "3"])
        assert code == 1
        assert "domain" in stderr

    def test_boundary_violation_exit_2(self):
        code, _, stderr = run_cli(["plmap", "1,0", "--vertices", "0,1", "fixed-points"])
        assert code == 2
        assert "boundary" in stderr

    def test_grid_label_size_mismatch(self):
        code, _, _ = run_cli(["plmap", "0,1", "--vertices", "0,1,2", "fixed-points"])
        assert code == 1


class TestCounterexample:
    def test_json_records(self):
        code, stdout, _ = run_cli(["counterexample", "--depth", "2", "--format", "json"])
        assert code == 0
        docs = json.loads(stdout)
        assert [d["depth"] for d in docs] == [1, 2]
        for d in docs:
            assert d["residual_floor_check"] is True
            assert d["contains_sqrt2"] is True
            lo, hi = parse_rational(d["lo"]), parse_rational(d["hi"])
            assert lo**2 < 2 < hi**2
            assert parse_rational(d["width"]) == hi - lo
            assert abs(parse_rational(d["midpoint_residual"])) >= Fraction(2, 5)

    def test_json_decimal_fields_present(self):
        code, stdout, _ = run_cli(["counterexample", "--depth", "1", "--format", "json"])
        assert code == 0
        (doc,) = json.loads(stdout)
        for key in ("lo", "hi", "g_lo", "g_hi", "width", "midpoint", "midpoint_residual"):
            assert key in doc and f"{key}_decimal" in doc
        assert doc["width_decimal"] == "0.500000000000"


class TestArgumentHandling:
    def test_env_var_sets_default_format(self, monkeypatch):
        monkeypatch.setenv("SPERNERFIX_FORMAT", "json")
        code, stdout, _ = run_cli(["sperner", "0,0,1,1"])
        assert code == 0
        assert stdout == '{"scan":2,"bisect":2}\n'

    def test_invalid_env_var_falls_back_to_human(self, monkeypatch):
        monkeypatch.setenv("SPERNERFIX_FORMAT", "xml")
        code, stdout, _ = run_cli(["sperner", "0,1"])
        assert code == 0
        assert stdout == "scan edge: 1\nbisect edge: 1\n"

    def test_explicit_format_overrides_env(self, monkeypatch):
        monkeypatch.setenv("SPERNERFIX_FORMAT", "json")
        code, stdout, _ = run_cli(["sperner", "0,1", "--format", "csv"])
        assert code == 0
        assert stdout == "scan,bisect\n1,1\n"

    def test_unknown_subcommand_exit_1(self):
        code, _, _ = run_cli(["frobnicate"])
        assert code == 1

    def test_missing_required_flag_exit_1(self):
        code, _, _ = run_cli(["counterexample"])
        assert code == 1

    def test_help_exits_0(self):
        code, stdout, _ = run_cli(["--help"])
        assert code == 0
        assert "spernerfix" in stdout
