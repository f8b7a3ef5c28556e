"""Tests for the command-line interface: formats, values, exit codes."""

from __future__ import annotations

import json
import math
import shutil
import subprocess

import pytest

import imbessel.cli as cli
from imbessel import (BracketingError, EnumerationError, RunConfig,
                      coefficient_set, correction_coefficients, leading_xi,
                      main)

from golden import NS, TABLE_ASYMPTOTIC, TABLE_KINDS, TABLE_ZERO, dp6, fnum

_RECORD_KEYS = {"kind", "n", "x", "nu_asymptotic", "nu_refined",
                "discrepancy", "residual_mantissa", "residual_log_scale"}


def _run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _table_row(out: str, n: int) -> list[str]:
    for line in out.splitlines()[2:]:
        tokens = line.split()
        if tokens and tokens[0] == str(n):
            return tokens
    raise AssertionError(f"no row for n = {n} in output:\n{out}")


def test_run_config_defaults():
    config = RunConfig(command="eval")
    assert (config.kind, config.nu, config.n) == (None, None, None)
    assert (config.x, config.n_max, config.order) == (1.0, 5, 3)
    assert (config.tol, config.format, config.table) == (1e-12, "text", 1)


def test_table1_text_layout_and_zero_columns(capsys):
    code, out, err = _run(capsys, ["table"])
    assert code == 0
    assert err == ""
    lines = out.splitlines()
    assert lines[0] == "Table 1 (x = 1.0)"
    assert lines[1].split() == ["n", "L", "zero", "L", "asymptotic",
                                "K", "zero", "K", "asymptotic"]
    assert len(lines) == 2 + len(NS)
    row = _table_row(out, 5)
    assert row[1] == dp6(TABLE_ZERO["L"][NS.index(5)])
    assert row[3] == dp6(TABLE_ZERO["K"][NS.index(5)])


def test_table1_estimate_columns_match_the_reference_table(capsys):
    code, out, _ = _run(capsys, ["table"])
    assert code == 0
    row = _table_row(out, 5)
    want_l = dp6(TABLE_ASYMPTOTIC["L"][NS.index(5)])
    want_k = dp6(TABLE_ASYMPTOTIC["K"][NS.index(5)])
    assert (row[2], row[4]) == (want_l, want_k), (
        f"computed estimate cells {(row[2], row[4])} differ from the "
        f"tabulated {(want_l, want_k)}; the tabulated estimate column "
        f"cannot be reproduced from the stated expansion (see README, "
        f"Known discrepancies)")


def test_table2_text_zero_columns(capsys):
    code, out, _ = _run(capsys, ["table", "--table", "2"])
    assert code == 0
    assert out.splitlines()[0] == "Table 2 (x = 1.0)"
    row = _table_row(out, 20)
    assert row[1] == dp6(TABLE_ZERO["F"][NS.index(20)])
    assert row[3] == dp6(TABLE_ZERO["G"][NS.index(20)])


def test_table2_estimate_columns_match_the_reference_table(capsys):
    code, out, _ = _run(capsys, ["table", "--table", "2"])
    assert code == 0
    row = _table_row(out, 20)
    want_f = dp6(TABLE_ASYMPTOTIC["F"][NS.index(20)])
    want_g = dp6(TABLE_ASYMPTOTIC["G"][NS.index(20)])
    assert (row[2], row[4]) == (want_f, want_g), (
        f"computed estimate cells {(row[2], row[4])} differ from the "
        f"tabulated {(want_f, want_g)}; the tabulated estimate column "
        f"cannot be reproduced from the stated expansion (see README, "
        f"Known discrepancies)")


@pytest.mark.parametrize("table", [1, 2])
def test_table_csv_parses_and_covers_both_kinds(capsys, table):
    code, out, _ = _run(capsys, ["table", "--table", str(table),
                                 "--format", "csv"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == cli.CSV_HEADER
    assert len(lines) == 1 + 2 * len(NS)
    for line in lines[1:]:
        kind, n, x, zero, asym, disc = line.split(",")
        assert kind in TABLE_KINDS[table]
        assert int(n) in NS
        assert float(x) == 1.0
        assert abs(float(zero) - float(asym)) == pytest.approx(
            float(disc), rel=1e-12)


def test_table_json_rows_carry_the_record_keys(capsys):
    code, out, _ = _run(capsys, ["table", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert len(payload) == 2 * len(NS)
    for entry in payload:
        assert set(entry) == _RECORD_KEYS
        assert entry["kind"] in ("L", "K")
    zero_by_key = {(e["kind"], e["n"]): e["nu_refined"] for e in payload}
    for kind in ("L", "K"):
        for i, n in enumerate(NS):
            assert dp6(zero_by_key[kind, n]) == dp6(TABLE_ZERO[kind][i])


def test_zeros_text_header_and_refined_column(capsys):
    code, out, _ = _run(capsys, ["zeros", "--kind", "K", "--n-max", "3"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "zeros of K at x = 1.0, order = 3"
    assert lines[1].split() == ["n", "partial0", "partial1", "partial2",
                                "partial3", "refined", "discrepancy",
                                "width", "res_mantissa", "res_log"]
    assert len(lines) == 2 + 3
    for i in range(3):
        tokens = lines[2 + i].split()
        assert len(tokens) == 10
        assert int(tokens[0]) == i + 1
        assert dp6(float(tokens[5])) == dp6(TABLE_ZERO["K"][i])


def test_zeros_text_estimate_column_matches_the_reference_table(capsys):
    code, out, _ = _run(capsys, ["zeros", "--kind", "K", "--n-max", "3"])
    assert code == 0
    tokens = out.splitlines()[2].split()
    got = dp6(float(tokens[4]))
    want = dp6(TABLE_ASYMPTOTIC["K"][0])
    assert got == want, (
        f"computed three-correction estimate {got} differs from the "
        f"tabulated {want}; the tabulated estimate column cannot be "
        f"reproduced from the stated expansion (see README, Known "
        f"discrepancies)")


def test_zeros_csv_single_n(capsys):
    code, out, _ = _run(capsys, ["zeros", "--kind", "G", "--n", "1",
                                 "--format", "csv"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == cli.CSV_HEADER
    assert len(lines) == 2
    kind, n, x, zero, asym, disc = lines[1].split(",")
    assert (kind, n, x) == ("G", "1", "1.0")
    assert dp6(float(zero)) == dp6(TABLE_ZERO["G"][0])
    assert float(disc) == pytest.approx(abs(float(zero) - float(asym)),
                                        rel=1e-12)


def test_zeros_json_single_n_record(capsys, reference):
    code, out, _ = _run(capsys, ["zeros", "--kind", "K", "--n", "10",
                                 "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert isinstance(payload, list) and len(payload) == 1
    record = payload[0]
    assert set(record) == _RECORD_KEYS
    assert (record["kind"], record["n"], record["x"]) == ("K", 10, 1.0)
    true = fnum(reference["true_zeros_x1"]["K"][NS.index(10)])
    assert record["nu_refined"] == pytest.approx(true, rel=1e-12)
    assert record["discrepancy"] == pytest.approx(
        abs(record["nu_asymptotic"] - record["nu_refined"]), rel=1e-9)


def test_zeros_lower_order_estimates_are_coarser(capsys):
    _, out0, _ = _run(capsys, ["zeros", "--kind", "K", "--n", "10",
                               "--order", "0", "--format", "json"])
    _, out3, _ = _run(capsys, ["zeros", "--kind", "K", "--n", "10",
                               "--order", "3", "--format", "json"])
    disc0 = json.loads(out0)[0]["discrepancy"]
    disc3 = json.loads(out3)[0]["discrepancy"]
    assert disc3 < disc0


def test_identical_invocations_are_byte_identical(capsys):
    argv = ["table", "--table", "2", "--format", "json"]
    _, first, _ = _run(capsys, argv)
    _, second, _ = _run(capsys, argv)
    assert first == second


def test_eval_text_reports_scaled_and_plain_forms(capsys):
    code, out, err = _run(capsys, ["eval", "--kind", "L", "--nu", "1.0"])
    assert code == 0
    assert err == ""
    assert out.startswith("L(nu=1.0, x=1.0): mantissa=")
    value = float(out.split("value=")[1])
    assert value > 0.0
    assert value == pytest.approx(0.517072739523502, rel=1e-12)


def test_eval_value_is_tiny_at_the_tabulated_first_k_zero(capsys):
    # At the 6-dp tabulated zero the function value should vanish to within
    # the rounding of the tabulated abscissa.
    code, out, _ = _run(capsys, ["eval", "--kind", "K", "--nu", "2.962549"])
    assert code == 0
    value = float(out.split("value=")[1])
    assert abs(value) < 1e-9, (
        f"K at the tabulated zero evaluates to {value:.6e}; the 6-dp "
        f"rounding of the abscissa alone leaves a residual near 1e-8, so "
        f"a 1e-9 bound on the plain value is not reachable from the "
        f"tabulated digits (see README, Known discrepancies)")


def test_eval_json_matches_the_integral_reference(capsys, reference):
    code, out, _ = _run(capsys, ["eval", "--kind", "K", "--nu", "1.0",
                                 "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {"kind", "nu", "x", "mantissa", "log_scale",
                            "value"}
    want = fnum(reference["k_integral_values"]["nu=1,x=1.0"])
    assert payload["value"] == pytest.approx(want, rel=1e-10)


def test_eval_domain_error_exits_2(capsys):
    code, out, err = _run(capsys, ["eval", "--kind", "L", "--nu", "0.0001"])
    assert code == 2
    assert out == ""
    assert err == "error: eval_function requires nu >= 0.001, got 0.0001\n"


def test_zeros_outside_validity_exits_2(capsys):
    code, out, err = _run(capsys, ["zeros", "--kind", "L", "--x", "0.05"])
    assert code == 2
    assert out == ""
    assert err.startswith("error: enumeration of L zeros aborted at n = 1:")


def test_zeros_bracketing_failure_exits_3(capsys, monkeypatch):
    def fake(kind, x, n_max, order, tol):
        try:
            raise BracketingError("synthetic stall", (1.0, 2.0))
        except BracketingError as exc:
            raise EnumerationError("aborted at n = 2", 2,
                                   ("stub",)) from exc

    monkeypatch.setattr(cli, "enumerate_zeros", fake)
    code, out, err = _run(capsys, ["zeros", "--kind", "K"])
    assert code == 3
    assert out == ""
    assert err.splitlines()[0] == "error: aborted at n = 2"
    assert err.splitlines()[1] == "completed 1 record(s) before the failure"


def test_argparse_rejects_unknown_kind(capsys):
    with pytest.raises(SystemExit):
        main(["zeros", "--kind", "Q"])
    with pytest.raises(SystemExit):
        main([])


def test_coeffs_dump_matches_the_library(capsys):
    code, out, _ = _run(capsys, ["coeffs", "--kind", "K", "--n", "10"])
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {"kind", "x", "family", "chi", "C", "a", "A",
                            "per_n"}
    coeffs = coefficient_set(1.0, "modified")
    assert payload["family"] == "modified"
    assert payload["chi"] == coeffs.chi
    assert payload["C"] == list(coeffs.C)
    assert payload["a"] == list(coeffs.a)
    assert payload["A"] == list(coeffs.A)
    assert len(payload["per_n"]) == 1
    entry = payload["per_n"][0]
    assert set(entry) == {"n", "m", "xi", "b", "B"}
    assert entry["n"] == 10
    assert entry["m"] == 9.75 * math.pi
    assert entry["xi"] == leading_xi(entry["m"], 2.0 / math.e)
    correction = correction_coefficients(list(coeffs.A), entry["xi"],
                                         entry["m"])
    assert entry["b"] == list(correction.b)
    assert entry["B"] == list(correction.B)


def test_console_script_is_installed():
    path = shutil.which("imbessel")
    assert path is not None, "console script not on PATH; install the package"
    result = subprocess.run([path, "eval", "--kind", "L", "--nu", "1.0"],
                            capture_output=True, text=True)
    assert result.returncode == 0
    assert result.stdout.startswith("L(nu=1.0, x=1.0):")
