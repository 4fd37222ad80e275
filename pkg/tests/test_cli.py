from __future__ import annotations

import dataclasses
import subprocess
import sys

import pytest

from schurcodes import cli
from schurcodes.bilinear import build_scheme
from schurcodes.code import code_from_rows, enumeration_cap, DEFAULT_CAP, read_code, write_code
from schurcodes.field import field_make
from schurcodes.verify import check_change_base


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_all_pass(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--out", str(tmp_path / "v.txt"))
    assert code == 0
    assert "fail=0" in out and "skip=0" in out
    assert (tmp_path / "v.txt").read_text() == out
    for name in ("change_base", "deux_bases", "sympa_flagship", "census_length3", "asymptotic_rationals"):
        assert any(line.startswith(f"PASS\t{name}\t") for line in out.splitlines())


def test_verify_small_cap_skips(capsys):
    code, out, _ = run(capsys, "verify", "--cap", "2^4")
    assert code == 0
    assert "fail=0" in out and "SKIP\t" in out
    assert enumeration_cap() == DEFAULT_CAP


def test_corrupted_theta_fails_change_base():
    S = build_scheme(2, 1)
    rows = [list(r) for r in S.theta]
    rows[2][3] ^= 1
    bad = dataclasses.replace(S, theta=tuple(tuple(r) for r in rows))
    ok, detail = check_change_base([bad])
    assert ok is False and "theta_Phi_eq_Psi=False" in detail
    assert check_change_base([S])[0]


def test_pipeline_flagship(capsys, tmp_path):
    code, out, _ = run(capsys, "pipeline", "2", "1", "7", "1", "--out", str(tmp_path))
    assert code == 0
    assert "check.finie_ii=PASS" in out
    concat = read_code(tmp_path / "concat.code")
    assert (concat.n, concat.k) == (42, 6)
    square = read_code(tmp_path / "square.code")
    assert (square.n, square.k) == (42, 21)
    assert read_code(tmp_path / "outer.code").k == 2
    assert (tmp_path / "scheme.txt").read_text().startswith("field 2^3/11\ns 1\n")
    assert (tmp_path / "report.txt").read_text() == out


def test_pipeline_hypothesis_violated(capsys, tmp_path):
    code, _, err = run(capsys, "pipeline", "2", "1", "7", "3", "--out", str(tmp_path))
    assert code == 1 and "HypothesisViolated" in err


def test_pipeline_degenerate(capsys, tmp_path):
    code, _, _ = run(capsys, "pipeline", "3", "0", "2", "0", "--out", str(tmp_path))
    assert code == 0


def test_asymptotics_search(capsys):
    code, out, _ = run(capsys, "asymptotics", "2", "search")
    assert code == 0 and out.splitlines()[-1] == "argmax\t4"
    assert len(out.splitlines()) == 10


def test_asymptotics_point(capsys):
    code, out, _ = run(capsys, "asymptotics", "2", "4", "--mu", "186/161")
    assert code == 0
    for line in ("A=465/23", "alpha2_intercept=74/39525", "alpha2_slope=9/17", "delta2_bound=74/20925",
                 "rate_bound=1/651", "ddrel_bound=1/1575"):
        assert line in out.splitlines()


def test_asymptotics_invalid_regime(capsys):
    code, _, err = run(capsys, "asymptotics", "2", "4", "--A", "10")
    assert code == 1 and "RegimeInvalid" in err


def test_census(capsys):
    code, out, _ = run(capsys, "census", "3")
    assert code == 0
    assert out.splitlines()[-1] == "total\t16\texceptional\t2"
    assert "[3,2]<101,011>\t-" in out


def test_power_and_mindist(capsys, tmp_path):
    F2 = field_make(2)
    path = tmp_path / "parity.code"
    write_code(code_from_rows(F2, 3, [[1, 1, 0], [0, 1, 1]]), path)
    code, out, _ = run(capsys, "power", str(path), "2", "--out", str(tmp_path / "sq.code"))
    assert code == 0 and out.splitlines() == ["t\tdim\tdmin", "1\t2\t2", "2\t3\t1"]
    assert read_code(tmp_path / "sq.code").k == 3
    code, out, _ = run(capsys, "mindist", str(path))
    assert out.splitlines()[1] == "3\t2\t2\t2/3\t2/3"


def test_scheme_dump(capsys, tmp_path):
    code, out, _ = run(capsys, "scheme", "2", "1", "--out", str(tmp_path / "s.txt"))
    assert code == 0 and out.startswith("field 2^3/11")
    assert (tmp_path / "s.txt").read_text() == out


def test_search_a(capsys):
    code, out, _ = run(capsys, "search-a", "3", "2")
    assert code == 0 and out.strip()


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["nonsense"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["asymptotics", "2", "four"])
    assert exc.value.code == 2


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "mindist", str(tmp_path / "nope.code"))
    assert code == 1 and "FileNotFoundError" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "schurcodes", "asymptotics", "2", "search"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "argmax\t4" in proc.stdout
