import io
import os
import shlex
import subprocess
import sys
from pathlib import Path

import pytest

from infometrics import cli

sys.path.insert(0, str(Path(__file__).parent / "golden"))
from cases import CASES  # noqa: E402

GOLDEN = Path(__file__).parent / "golden"
INPUTS = GOLDEN / "inputs"
EXPECTED = GOLDEN / "expected"
UPDATE = os.environ.get("UPDATE_GOLDENS") == "1"


def invoke(argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def render(code, stdout):
    return f"exit={code}\n{stdout}"


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name):
    argv = shlex.split(CASES[name].format(inputs=INPUTS))
    code, out, err = invoke(argv)
    path = EXPECTED / f"{name}.txt"
    if UPDATE:
        path.write_text(render(code, out), encoding="utf-8", newline="\n")
    assert render(code, out).encode() == path.read_bytes()
    if code:
        assert out == ""
        assert err.count("\n") == 1 and err.strip()
    else:
        assert err == ""


def test_corpus_covers_subcommands_and_exit_codes():
    firsts = {shlex.split(v)[0] for v in CASES.values() if v}
    assert firsts == {"entropy", "algo", "limits", "emergence", "ca", "grit", "cogaug"}
    codes = {int(p.read_text().split("\n", 1)[0].split("=")[1]) for p in EXPECTED.glob("*.txt")}
    assert codes == {0, 1, 2, 3}
    assert len(CASES) >= 12


def test_repeat_runs_identical():
    for name in ("ca_sweep_csv", "cogaug_json", "limits_full_json"):
        argv = shlex.split(CASES[name].format(inputs=INPUTS))
        assert invoke(argv) == invoke(argv)


def test_spec_examples():
    assert invoke(["entropy", "--dist", "0.5,0.25,0.25"])[1].splitlines()[0] == "shannon_bits=1.500000"
    code, _, err = invoke(["entropy", "--dist", "0.5,0.6"])
    assert code == 2 and "tolerance" in err
    assert invoke(["emergence", "--peak"])[1] == "eta_star=0.367879\ngain=1.700186\n"


def test_diagnostics_name_offending_field():
    assert "radius_R" in invoke(shlex.split("limits --entropy-jk 1 --radius-m 0"))[2]
    assert "step bad" in invoke(["cogaug", "--ledger", str(INPUTS / "zero_psi_ledger.json")])[2]
    assert "--volts" in invoke(shlex.split("limits --energy-j 1 --volts 3"))[2]


@pytest.mark.parametrize(
    "value, text",
    [
        (1.5, "1.500000"),
        (6.036760722267447e33, "6.036761e33"),
        (999999.0, "999999.000000"),
        (1e6, "1.000000e6"),
        (-2.5e7, "-2.500000e7"),
        (float("inf"), "inf"),
        (-0.0, "0.000000"),
        (3, "3"),
    ],
)
def test_format_number(value, text):
    assert cli.format_number(value) == text


def test_emit_modes():
    report = {"a_plus_w": float("inf"), "w_total": 0.0}
    assert cli.emit(report) == "a_plus_w=inf\nw_total=0.000000\n"
    assert cli.emit(report, "json") == '{"a_plus_w": "inf", "w_total": 0.0}\n'


def test_empty_ledger_json_totals_zero():
    import json

    code, out, _ = invoke(["cogaug", "--ledger", str(INPUTS / "empty_ledger.json"), "--json"])
    report = json.loads(out)
    assert code == 0
    assert all(report[k] == 0 for k in ("w_h", "w_c", "g_h", "g_c", "w_total", "g_total", "a_plus_w", "a_plus_g"))


def test_sweep_csv_format():
    code, out, _ = invoke(["ca", "sweep", "--config", str(INPUTS / "sweep_small.json")])
    lines = out.split("\n")
    assert lines[0] == "lambda,seed,eta,capacity,activity,class"
    assert lines[-1] == "" and "\r" not in out and '"' not in out
    assert len(lines) == 2 + 12


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "infometrics", "entropy", "--dist", "0.5,0.5"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("shannon_bits=1.000000\n")
