"""CLI surface: flags, formats, exit codes, rendering, determinism."""

import json
import math

import pytest

from rhs.cli import main, parse_ladder
from rhs.errors import LadderSpecError
from rhs.report import render_number, render_value


# ---------------------------------------------------------------------------
# rendering


def test_render_number_format():
    assert render_number(0.28867513459481287) == "2.886751345948e-01"
    assert render_number(1.0) == "1.000000000000e+00"
    assert render_number(-2.5e-11) == "-2.500000000000e-11"
    assert render_number(0.0) == "0.000000000000e+00"
    assert render_number(-0.0) == "0.000000000000e+00"


def test_render_value_kinds():
    assert render_value(True) == "true"
    assert render_value(False) == "false"
    assert render_value(7) == "7"
    assert render_value(None) == ""
    assert render_value("basis") == "basis"


def test_parse_ladder():
    assert parse_ladder("identity").dim(5) == 5
    assert parse_ladder("even").dim(5) == 10
    assert parse_ladder("1,3,7").dim(3) == 7
    with pytest.raises(LadderSpecError):
        parse_ladder("3,3,4")
    with pytest.raises(LadderSpecError):
        parse_ladder("fibonacci")


# ---------------------------------------------------------------------------
# subcommands, in process


def run_cli(args, capsys):
    code = main(args)
    return code, capsys.readouterr().out


def test_converge_geometric_csv(capsys):
    code, out = run_cli(["converge", "--geometric", "0.5", "--levels", "20"], capsys)
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "n,tail_norm,closed_form,abs_gap"
    assert len(lines) == 21
    row2 = lines[2].split(",")
    assert row2[0] == "2"
    assert row2[1] == "2.886751345948e-01"
    # monotone decreasing tail column
    tails = [float(line.split(",")[1]) for line in lines[1:]]
    assert all(a > b for a, b in zip(tails, tails[1:]))


def test_converge_power_monotone(capsys):
    code, out = run_cli(["converge", "--power", "1.0", "--levels", "10"], capsys)
    assert code == 0
    tails = [float(line.split(",")[1]) for line in out.strip().split("\n")[1:]]
    assert all(a >= b for a, b in zip(tails, tails[1:]))


def test_converge_usage_errors(capsys):
    code = main(["converge", "--geometric", "1.5"])
    err = capsys.readouterr().err
    assert code == 2
    assert "square summability" in err
    assert main(["converge", "--power", "0.5"]) == 2
    with pytest.raises(SystemExit):
        main(["converge"])  # family flag required


def test_converge_json_matches_csv_numbers(capsys):
    code, out_csv = run_cli(
        ["converge", "--geometric", "0.5", "--levels", "5"], capsys)
    assert code == 0
    code, out_json = run_cli(
        ["converge", "--geometric", "0.5", "--levels", "5", "--format", "json"],
        capsys)
    assert code == 0
    payload = json.loads(out_json)
    assert payload["pass"] is True
    assert payload["config"]["family"] == "geometric"
    csv_rows = [line.split(",") for line in out_csv.strip().split("\n")[1:]]
    for row, jrow in zip(csv_rows, payload["rows"]):
        assert jrow["tail_norm"] == row[1]
        assert jrow["closed_form"] == row[2]


def test_axioms_passes_and_reports_residuals(capsys):
    code, out = run_cli(["axioms", "--cases", "40", "--seed", "7"], capsys)
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "property,cases,failures,max_residual"
    assert len(lines) > 10
    for line in lines[1:]:
        prop, cases, failures, resid = line.split(",")
        assert failures == "0"
        assert float(resid) < 1e-12


def test_axioms_even_and_explicit_ladders(capsys):
    assert run_cli(["axioms", "--cases", "25", "--ladder", "even"], capsys)[0] == 0
    assert run_cli(["axioms", "--cases", "25", "--ladder", "2,3,5,8,13,21,34,55"],
                   capsys)[0] == 0


def test_axioms_injected_fault_fails(capsys):
    code, out = run_cli(["axioms", "--cases", "30", "--inject-cocone-fault"], capsys)
    assert code == 1
    fault_rows = [line for line in out.strip().split("\n")
                  if line.startswith("injected_cocone_fault")]
    assert len(fault_rows) == 1
    assert fault_rows[0].split(",")[2] == "1"


def test_axioms_deterministic(capsys):
    _, first = run_cli(["axioms", "--cases", "30", "--seed", "9"], capsys)
    _, second = run_cli(["axioms", "--cases", "30", "--seed", "9"], capsys)
    assert first == second
    _, other = run_cli(["axioms", "--cases", "30", "--seed", "10"], capsys)
    assert other != first


def test_seminorm_geometric_stabilizes(capsys):
    code, out = run_cli(["seminorm", "--family", "geometric", "--k", "1"], capsys)
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "k,N,partial_qk,stabilized"
    assert lines[-1].split(",")[3] == "true"


def test_seminorm_power_does_not_stabilize(capsys):
    code, out = run_cli(
        ["seminorm", "--family", "power", "--exponent", "1.0", "--k", "1"], capsys)
    assert code == 0
    assert out.strip().split("\n")[-1].split(",")[3] == "false"


def test_seminorm_k0_row_is_running_l2_norm(capsys):
    _, out = run_cli(
        ["seminorm", "--family", "geometric", "--ratio", "0.5", "--k", "0",
         "--n-max", "4"], capsys)
    rows = [line.split(",") for line in out.strip().split("\n")[1:]]
    running = 0.0
    for i, row in enumerate(rows, start=1):
        running += 0.25 ** (i - 1)
        assert math.isclose(float(row[2]), math.sqrt(running), rel_tol=1e-12)


def test_seminorm_fourier_family(capsys):
    code, out = run_cli(
        ["seminorm", "--family", "fourier", "--function", "cosine",
         "--grid", "64", "--k", "1"], capsys)
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 64  # header + 63 interleaved coefficients
    assert lines[-1].split(",")[3] == "true"


def test_seminorm_usage_errors(capsys):
    with pytest.raises(SystemExit):
        main(["seminorm", "--family", "cauchy"])
    assert main(["seminorm", "--family", "geometric", "--ratio", "1.0"]) == 2
    assert main(["seminorm", "--family", "geometric", "--k", "1,-2"]) == 2


def test_hermite_report(capsys):
    code, out = run_cli(["hermite", "--degree", "4", "--target", "weight"], capsys)
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "section,n,m,exact,value"
    body = [line.split(",") for line in lines[1:]]
    he2 = {row[2]: row[3] for row in body
           if row[0] == "basis" and row[1] == "2"}
    assert he2 == {"0": "-1", "1": "0", "2": "1"}
    residuals = [float(row[4]) for row in body if row[0] == "orthonormality"]
    assert residuals and max(residuals) < 1e-8
    density = [float(row[4]) for row in body if row[0] == "density"]
    assert density[0] < 1e-8


def test_hermite_exact_cap_and_usage(capsys):
    code, out = run_cli(["hermite", "--degree", "10"], capsys)
    assert code == 0
    basis_degrees = {row.split(",")[1] for row in out.strip().split("\n")[1:]
                     if row.startswith("basis,")}
    assert max(int(d) for d in basis_degrees) == 8  # exact table capped
    assert main(["hermite", "--degree", "17"]) == 2


def test_fourier_report_expcos(capsys):
    code, out = run_cli(["fourier", "--function", "expcos", "--grid", "256"], capsys)
    assert code == 0
    lines = out.strip().split("\n")
    parseval = [line for line in lines if line.startswith("parseval")]
    assert len(parseval) == 1
    gap = float(parseval[0].split(",")[9])
    assert gap < 1e-10
    decays = [line.split(",") for line in lines if line.startswith("decay")]
    assert all(row[11] == "true" for row in decays)


def test_fourier_sawtooth_reports_divergence_without_failing(capsys):
    code, out = run_cli(["fourier", "--function", "sawtooth", "--grid", "64"],
                        capsys)
    assert code == 0  # nothing asserted for square-integrable-only samplers
    decays = [line.split(",") for line in out.strip().split("\n")
              if line.startswith("decay")]
    assert all(row[11] == "false" for row in decays)


def test_fourier_grid_validation(capsys):
    assert main(["fourier", "--grid", "100"]) == 2
    assert main(["fourier", "--grid", "32"]) == 2


def test_out_file_and_lf_endings(tmp_path, capsys):
    target = tmp_path / "report.csv"
    code = main(["converge", "--geometric", "0.5", "--levels", "3",
                 "--out", str(target)])
    assert code == 0
    raw = target.read_bytes()
    assert b"\r" not in raw
    assert raw.endswith(b"\n")
    assert raw.decode().startswith("n,tail_norm")
