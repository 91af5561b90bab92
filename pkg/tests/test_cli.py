"""Command-line contract: values, formats, determinism, exit codes."""

import csv
import io
import json

import pytest
from click.testing import CliRunner

from sqtotient.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def run(runner, *args):
    return runner.invoke(main, list(args), catch_exceptions=False)


class TestPhiCommand:
    def test_single_value_plain(self, runner):
        result = run(runner, "phi", "-k", "1", "-n", "10")
        assert result.exit_code == 0
        assert result.output.strip() == "4"

    def test_single_value_known(self, runner):
        result = run(runner, "phi", "-k", "2", "-n", "15")
        assert result.output.strip() == "128"

    def test_range_csv(self, runner):
        result = run(runner, "phi", "-k", "3", "--range", "5", "--format", "csv", "--no-meta")
        rows = list(csv.reader(io.StringIO(result.output)))
        assert rows[0] == ["k", "n", "phi"]
        assert len(rows) == 6
        # odd k: n^2 phi(n)
        assert [int(r[2]) for r in rows[1:]] == [1, 4, 18, 32, 100]

    def test_requires_exactly_one_target(self, runner):
        assert run(runner, "phi", "-k", "2").exit_code == 2
        assert run(runner, "phi", "-k", "2", "-n", "3", "--range", "5").exit_code == 2

    def test_rejects_out_of_range_inputs(self, runner):
        assert run(runner, "phi", "-k", "0", "-n", "5").exit_code == 2
        assert run(runner, "phi", "-k", "1", "-n", str(2**63)).exit_code == 2


class TestRhoCommand:
    def test_formula_path(self, runner):
        result = run(runner, "rho", "-k", "2", "-l", "1", "-n", "4")
        assert result.exit_code == 0
        assert result.output.strip() == "8 (formula)"

    def test_oracle_path(self, runner):
        result = run(runner, "rho", "-k", "2", "-l", "0", "-n", "5", "--max-enum", "1000")
        assert result.output.strip() == "9 (oracle)"

    def test_budget_exit_code(self, runner):
        result = run(runner, "rho", "-k", "2", "-l", "0", "-n", "5", "--max-enum", "10")
        assert result.exit_code == 3
        assert "budget" in result.output

    def test_json_fields(self, runner):
        result = run(runner, "rho", "-k", "1", "-l", "1", "-n", "8", "--format", "json", "--no-meta")
        document = json.loads(result.output)
        assert document["rows"] == [
            {"k": "1", "lambda": "1", "n": "8", "rho": "4", "path": "formula"}
        ]


class TestVerifyCommand:
    def test_small_pass(self, runner):
        result = run(runner, "verify", "rho", "--limit", "1", "--no-meta")
        assert result.exit_code == 0

    def test_menon_classic(self, runner):
        result = run(runner, "verify", "menon-classic", "--limit", "300", "--no-meta")
        assert result.exit_code == 0
        assert "true" in result.output

    def test_unknown_suite_is_usage_error(self, runner):
        assert run(runner, "verify", "nonsense").exit_code == 2

    def test_failing_suite_exits_one(self, runner, monkeypatch):
        from sqtotient.verify import Check, SuiteResult

        def always_failing(suite, limit, guard=0):
            failing = Check(name="stub", ok=False, detail="first counterexample: n=7")
            return SuiteResult(suite=suite, limit=limit, checks=[failing])

        monkeypatch.setattr("sqtotient.verify.run_suite", always_failing)
        result = runner.invoke(main, ["verify", "phi", "--limit", "5", "--no-meta"])
        assert result.exit_code == 1
        assert "n=7" in result.output


class TestReportCommand:
    def test_average_csv_header(self, runner):
        result = run(
            runner, "report", "average", "-k", "1", "--xs", "100,1000",
            "--format", "csv", "--no-meta",
        )
        lines = result.output.splitlines()
        assert lines[0] == "x,partial_sum,main_term,rel_error,error_ratio"
        assert lines[1].split(",")[1] == "3044"

    def test_average_needs_xs(self, runner):
        assert run(runner, "report", "average", "-k", "1").exit_code == 2

    def test_constants(self, runner):
        result = run(runner, "report", "constants", "-k", "2", "--tol", "1e-9", "--no-meta")
        assert result.exit_code == 0
        assert "euler_product" in result.output
        assert "corollary_product" in result.output
        assert "0.64980275" in result.output

    def test_minimal_order_even_k_guarded(self, runner):
        assert run(runner, "report", "minimal-order", "-k", "2").exit_code == 2
        ok = run(runner, "report", "minimal-order", "-k", "2", "--experimental", "--no-meta")
        assert ok.exit_code == 0

    def test_menon_table(self, runner):
        result = run(runner, "report", "menon", "-k", "2", "--nmax", "6", "--format", "csv", "--no-meta")
        rows = list(csv.reader(io.StringIO(result.output)))
        assert rows[0] == ["k", "n", "lhs", "phi_k", "psi", "integral"]
        assert rows[3] == ["2", "3", "16", "8", "2", "true"]

    def test_menon_mult_scan(self, runner):
        result = run(runner, "report", "menon-mult", "-k", "2", "--bound", "20", "--format", "json", "--no-meta")
        document = json.loads(result.output)
        assert all(set(row) == {"m", "n", "psi_m_psi_n", "psi_mn", "equal"} for row in document["rows"])


class TestOutputContract:
    def test_csv_json_round_trip(self, runner):
        shared = ["report", "menon", "-k", "2", "--nmax", "8", "--no-meta"]
        as_csv = run(runner, *shared, "--format", "csv").output
        as_json = run(runner, *shared, "--format", "json").output
        csv_rows = list(csv.reader(io.StringIO(as_csv)))
        header, csv_rows = csv_rows[0], csv_rows[1:]
        json_rows = json.loads(as_json)["rows"]
        assert len(csv_rows) == len(json_rows)
        for line, record in zip(csv_rows, json_rows):
            for column, cell in zip(header, line):
                value = record[column]
                if isinstance(value, bool):
                    value = "true" if value else "false"
                assert str(value) == cell

    def test_no_meta_is_byte_deterministic(self, runner):
        args = ["report", "average", "-k", "2", "--xs", "50,500", "--format", "json", "--no-meta"]
        first = run(runner, *args).output
        second = run(runner, *args).output
        assert first == second

    def test_meta_header_present_by_default(self, runner):
        output = run(runner, "report", "constants", "-k", "1").output
        assert output.startswith("# generated: ")

    def test_out_writes_file(self, runner, tmp_path):
        target = tmp_path / "report.csv"
        result = run(
            runner, "report", "constants", "-k", "1", "--format", "csv",
            "--no-meta", "--out", str(target),
        )
        assert result.exit_code == 0
        assert target.read_text().startswith("form,k,value")

    def test_out_failure_is_nonzero(self, runner, tmp_path):
        missing_dir = tmp_path / "absent" / "report.csv"
        result = run(runner, "phi", "-k", "1", "-n", "3", "--out", str(missing_dir))
        assert result.exit_code == 1
