import math

import numpy as np
import pytest

from cellbounds import cli

A_HEX = 4 / math.sqrt(3.0)


def run(tmp_path, name, *argv):
    out = tmp_path / name
    code = cli.main([*argv, "--out", str(out)])
    return code, out


def parse_csv(path):
    lines = path.read_text().splitlines()
    comments = [ln for ln in lines if ln.startswith("#")]
    data = [ln for ln in lines if not ln.startswith("#")]
    header = data[0].split(",")
    rows = [ln.split(",") for ln in data[1:]]
    return comments, header, rows


def test_bound_compare_output(tmp_path):
    code, out = run(tmp_path, "fig1.csv", "bound-compare",
                    "--t-max", "5", "--t-step", "0.5")
    assert code == 0
    comments, header, rows = parse_csv(out)
    assert header == ["t", "alpha", "new_bound", "legacy_bound"]
    assert any("command = bound-compare" in c for c in comments)
    for t, alpha, new, legacy in ((float(a), float(b), float(c), float(d))
                                  for a, b, c, d in rows):
        if t == 1.0:
            assert new == pytest.approx(legacy, abs=1e-9)
        else:
            assert new < legacy
    # per-exponent monotonicity in t
    by_alpha = {}
    for t, alpha, new, _ in ((float(a), float(b), float(c), float(d))
                             for a, b, c, d in rows):
        by_alpha.setdefault(alpha, []).append((t, new))
    for series in by_alpha.values():
        vals = [v for _, v in sorted(series)]
        assert all(x >= y for x, y in zip(vals, vals[1:]))


def test_bound_compare_rejects_bad_range(tmp_path):
    code, _ = run(tmp_path, "x.csv", "bound-compare", "--t-min", "5",
                  "--t-max", "1")
    assert code == 1


def test_rate_vs_hk_crossing(tmp_path):
    code, out = run(tmp_path, "fig2.csv", "rate-vs-hk", "--k", "3",
                    "--hk-step", "0.05")
    assert code == 0
    _, header, rows = parse_csv(out)
    assert header == ["H_K", "rate_scheduled", "rate_aa", "H_K_star"]
    h_star = float(rows[0][3])
    assert 3.00 <= h_star <= 3.25
    diffs = [float(r[1]) - float(r[2]) for r in rows]
    hks = [float(r[0]) for r in rows]
    # the scheduled curve crosses the flat AA guarantee exactly at h*
    for h_k, diff in zip(hks, diffs):
        if h_k < h_star - 0.05:
            assert diff < 0
        elif h_k > h_star + 0.05:
            assert diff > 0


def test_rate_vs_hk_low_snr_footer(tmp_path):
    code, out = run(tmp_path, "fig3.csv", "rate-vs-hk", "--k", "3",
                    "--snr-db", "-5")
    assert code == 0
    comments, header, rows = parse_csv(out)
    assert any("criticality infeasible" in c for c in comments)
    assert all(r[3] == "" for r in rows)
    assert all(float(r[1]) < float(r[2]) for r in rows)


def test_critical_power_reference_points(tmp_path):
    h3 = 2 * math.sqrt(3.0)
    code, out = run(tmp_path, "fig4a.csv", "critical-power", "--k", "3",
                    "--hk-min", repr(h3), "--hk-max", repr(h3),
                    "--hk-step", "1")
    assert code == 0
    _, _, rows = parse_csv(out)
    assert float(rows[0][2]) == pytest.approx(0.7315, abs=2e-3)
    assert rows[0][3] == "true"
    code, out = run(tmp_path, "fig4b.csv", "critical-power", "--k", "4",
                    "--hk-min", "4", "--hk-max", "4", "--hk-step", "1")
    assert code == 0
    _, _, rows = parse_csv(out)
    assert float(rows[0][2]) == pytest.approx(0.9698, abs=2e-3)


def test_critical_power_marks_infeasible_rows(tmp_path):
    code, out = run(tmp_path, "fig4c.csv", "critical-power", "--k", "3",
                    "--hk-min", "2", "--hk-max", "2.5", "--hk-step", "0.25")
    assert code == 0
    _, _, rows = parse_csv(out)
    assert all(r[2] == "" and r[3] == "false" for r in rows)


def test_hex_sweep_regimes(tmp_path):
    code, out = run(tmp_path, "fig5.csv", "hex-sweep", "--snr-step", "0.5")
    assert code == 0
    _, header, rows = parse_csv(out)
    assert header == ["snr_db", "rate_aa", "rate_k3", "rate_k4"]
    table = {float(r[0]): tuple(map(float, r[1:])) for r in rows}
    aa, k3, k4 = table[0.0]
    assert k3 > aa and k4 > aa
    aa, k3, k4 = table[-15.0]
    assert aa > k3 and aa > k4
    aa, k3, k4 = table[15.0]
    assert k4 > aa and k4 > k3
    diffs3 = [v[1] - v[0] for _, v in sorted(table.items())]
    assert sum(1 for x, y in zip(diffs3, diffs3[1:]) if np.sign(x) != np.sign(y)) == 1


def test_outputs_byte_identical_across_runs(tmp_path):
    _, first = run(tmp_path, "a.csv", "hex-sweep", "--snr-step", "1")
    _, second = run(tmp_path, "b.csv", "hex-sweep", "--snr-step", "1")
    assert first.read_bytes() == second.read_bytes()
    _, v1 = run(tmp_path, "v1.csv", "verify", "--suite", "interference",
                "--trials", "5", "--seed", "3")
    _, v2 = run(tmp_path, "v2.csv", "verify", "--suite", "interference",
                "--trials", "5", "--seed", "3")
    assert v1.read_bytes() == v2.read_bytes()


def test_verify_suites_pass(tmp_path, capsys):
    code, out = run(tmp_path, "verify.csv", "verify", "--suite", "all",
                    "--trials", "5")
    assert code == 0
    captured = capsys.readouterr()
    assert "total violations: 0" in captured.out
    _, header, rows = parse_csv(out)
    assert header == ["seed", "d", "t", "realized", "bound", "ratio"]
    assert rows, "expected at least one record"
    assert all(float(r[5]) <= 1.0 for r in rows)


def test_verify_zero_trials_is_vacuous(tmp_path):
    code, out = run(tmp_path, "empty.csv", "verify", "--suite", "all",
                    "--trials", "0")
    assert code == 0
    _, _, rows = parse_csv(out)
    assert rows == []


def test_verify_detects_corrupted_hardcore_claim(tmp_path):
    # the lattice has half-gap 2; claiming 6 must trip the verifier
    code, _ = run(tmp_path, "bad.csv", "verify", "--suite", "interference",
                  "--trials", "1", "--hardcore", "6")
    assert code == 3


def test_verify_unknown_suite_is_usage_error(tmp_path):
    code, _ = run(tmp_path, "x.csv", "verify", "--suite", "bogus")
    assert code == 1


def test_divergent_exponent_is_infeasible_request(tmp_path):
    code, _ = run(tmp_path, "x.csv", "rate-vs-hk", "--alpha", "2")
    assert code == 2


def test_help_exits_cleanly():
    assert cli.main(["--help"]) == 0


def test_missing_subcommand_is_usage_error():
    assert cli.main([]) == 1


def test_figure_commands_fast_at_default_grids(tmp_path):
    import time
    for name, argv in [("bc", ["bound-compare"]), ("rh", ["rate-vs-hk"]),
                       ("cp", ["critical-power"]), ("hx", ["hex-sweep"])]:
        start = time.perf_counter()
        code, _ = run(tmp_path, f"{name}.csv", *argv)
        assert code == 0
        assert time.perf_counter() - start < 10.0
