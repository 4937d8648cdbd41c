import json
import subprocess
import sys

import pytest

from primepart.cli import main

CORRECTED = [16, 22, 34, 36, 46, 56, 64, 66, 70, 76, 78, 86, 88, 92, 94, 96, 100]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_52(capsys):
    assert run(capsys, "check", "52")[:2] == (0, "no\n")
    assert run(capsys, "check", "16")[:2] == (0, "yes\n")


def test_enumerate_100(capsys):
    code, out, _ = run(capsys, "enumerate", "--limit", "100", "--jobs", "1")
    assert code == 0 and list(map(int, out.split())) == CORRECTED
    code, out, _ = run(capsys, "--format", "json", "enumerate", "--limit", "100")
    assert json.loads(out) == CORRECTED


def test_jobs_do_not_change_output(capsys):
    outs = {run(capsys, "enumerate", "--limit", "120", "--jobs", str(k))[1] for k in (1, 2, 4)}
    assert len(outs) == 1
    outs = {run(capsys, "cross-check", "--limit", "40", "--jobs", str(k))[1] for k in (1, 3)}
    assert len(outs) == 1


def test_ew_min(capsys):
    assert run(capsys, "ew-min", "16", "--bound", "10000")[:2] == (0, "2184\n")
    assert run(capsys, "ew-min", "16", "--bound", "2000")[:2] == (0, "none within bound\n")
    code, out, _ = run(capsys, "ew-min", "16", "--bound", "10000", "--format", "json")
    assert json.loads(out) == {"w": 16, "bound": 10000, "e1": 2184}


@pytest.mark.parametrize(
    "argv",
    [
        ["check"],
        ["check", "abc"],
        ["enumerate"],
        ["frobnicate"],
        ["ew-min", "0", "--bound", "10"],
        ["certify", "3"],
        ["--jobs", "0", "check", "16"],
        ["check", "16", "--format", "xml"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and "error" in err


def test_oracle_cutoff_is_reported(capsys):
    code, out, err = run(capsys, "check", "200", "--oracle")
    assert code == 2 and "26" in err
    assert run(capsys, "check", "22", "--oracle")[:2] == (0, "yes\n")


def test_certify_writes_file(capsys, tmp_path):
    path = tmp_path / "c52.json"
    code, out, _ = run(capsys, "certify", "52", "--out", str(path))
    assert code == 0 and "not-prime-partitionable" in out
    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["n"] == 52 and len(data["refutation"]) == 4
    assert all(c["pass"] for c in data["checks"])


def test_certify_json_to_stdout(capsys):
    code, out, _ = run(capsys, "certify", "16", "--format", "json")
    assert code == 0 and json.loads(out)["verdict"] == "prime-partitionable"


def test_text_and_json_encode_the_same_data(capsys):
    _, text, _ = run(capsys, "enumerate", "--limit", "80")
    _, js, _ = run(capsys, "enumerate", "--limit", "80", "--format", "json")
    assert list(map(int, text.split())) == json.loads(js)
    _, text, _ = run(capsys, "check", "46")
    _, js, _ = run(capsys, "check", "46", "--format", "json")
    assert (text.strip() == "yes") == json.loads(js)["prime_partitionable"]


def test_corrigendum(capsys):
    code, out, _ = run(capsys, "corrigendum", "--jobs", "1")
    assert code == 0
    lines = out.splitlines()
    assert list(map(int, lines[1].split())) == CORRECTED
    assert lines[2] == "wrongly listed: 52"
    assert "3 + 49" in out or "3+49" in out
    code, out, _ = run(capsys, "corrigendum", "--format", "json")
    data = json.loads(out)
    assert data["excluded"] == [52] and len(data["chain_52"]) == 4


def test_cross_check_clean(capsys):
    code, out, _ = run(capsys, "cross-check", "--limit", "60", "--scan-bound", "3000")
    assert code == 0 and out.strip().endswith("57 values, 0 failures")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "primepart", "check", "52"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "no\n"


def test_verification_failure_exits_3(capsys, monkeypatch):
    from primepart import cli
    from primepart.certify import Certificate, VerificationFailure

    def broken(n, oracle=False):
        raise VerificationFailure("forced", Certificate(n, "prime-partitionable", checks=[("x", False)]))

    monkeypatch.setattr(cli, "certify", broken)
    code, _, err = run(capsys, "certify", "16")
    assert code == 3 and "forced" in err
