import json
import subprocess
import sys

import pytest

from filbert import verify
from filbert.cli import dumps, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out), out


def test_filbert_inverse(capsys):
    code, doc, _ = run_json(capsys, "matrix", "--family", "filbert", "--alpha", "2", "--n", "1", "--inverse")
    assert code == 0
    assert doc["payload"]["entries"] == [["4", "-6"], ["-6", "12"]]
    assert doc["kind"] == "inverse" and doc["status"] == "ok" and doc["family"] == "filbert"


def test_hilbert_det(capsys):
    code, doc, _ = run_json(capsys, "matrix", "--family", "hilbert", "--alpha", "1", "--n", "2", "--det")
    assert code == 0 and doc["payload"]["value"] == "1/2160"


def test_binom_inverse(capsys):
    code, doc, _ = run_json(capsys, "matrix", "--family", "binom", "--alpha", "2", "--n", "1", "--inverse")
    assert doc["payload"]["entries"] == [["6", "-12"], ["-12", "36"]]


def test_plain_matrix_entries_are_exact(capsys):
    code, doc, _ = run_json(capsys, "matrix", "--family", "hilbert", "--alpha", "1/2", "--n", "1")
    assert doc["alpha"] == "1/2"
    assert doc["payload"]["entries"] == [["2", "2/3"], ["2/3", "2/5"]]


@pytest.mark.parametrize("family", ["filbert", "hilbert", "binom"])
@pytest.mark.parametrize("what", ["--inverse", "--det"])
def test_oracle_mode(capsys, family, what):
    code, doc, _ = run_json(capsys, "matrix", "--family", family, "--alpha", "3", "--n", "4", what, "--oracle")
    assert code == 0
    assert doc["payload"]["equal"] is True
    assert doc["payload"]["closed_form"] == doc["payload"]["oracle"]


@pytest.mark.parametrize(
    "argv, coeffs",
    [
        (["--family", "fib", "--alpha", "2", "--n", "1"], ["1", "-2"]),
        (["--family", "jacobi01", "--alpha", "1", "--n", "1"], ["1", "-2"]),
        (["--family", "fib", "--alpha", "1", "--n", "0"], ["1"]),
        (["--family", "jacobi01-shifted", "--alpha", "1", "--n", "1"], ["-1", "2"]),
        (["--family", "jacobi01", "--alpha", "1/2", "--n", "1"], ["1/2", "-3/2"]),
    ],
)
def test_poly(capsys, argv, coeffs):
    code, doc, _ = run_json(capsys, "poly", *argv)
    assert code == 0 and doc["payload"]["coefficients"] == coeffs


@pytest.mark.parametrize(
    "argv",
    [
        ["matrix", "--family", "filbert", "--alpha", "1/2", "--n", "1"],
        ["matrix", "--family", "hilbert", "--alpha", "-1", "--n", "1"],
        ["matrix", "--family", "hilbert", "--alpha", "abc", "--n", "1"],
        ["matrix", "--family", "binom", "--alpha", "2", "--n", "-1"],
        ["matrix", "--family", "filbert", "--alpha", "2", "--n", "1", "--inverse", "--det"],
        ["matrix", "--family", "filbert", "--alpha", "2", "--n", "1", "--oracle"],
        ["matrix", "--family", "nope", "--alpha", "2", "--n", "1"],
        ["poly", "--family", "fib", "--alpha", "3/2", "--n", "1"],
        ["verify", "--suite", "bogus"],
        ["verify", "--alpha-max", "-1"],
        ["verify", "--tolerance", "0"],
    ],
)
def test_invalid_arguments_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_json_round_trip(capsys):
    for argv in (
        ["matrix", "--family", "hilbert", "--alpha", "5/3", "--n", "3", "--inverse"],
        ["matrix", "--family", "filbert", "--alpha", "3", "--n", "2", "--det", "--oracle"],
        ["verify", "--suite", "lemma", "--alpha-max", "2", "--n-max", "3"],
    ):
        _, doc, text = run_json(capsys, *argv)
        assert dumps(json.loads(text)) == text
        assert not list(floats_in(doc))


def floats_in(node):
    if isinstance(node, float):
        yield node
    elif isinstance(node, dict):
        for v in node.values():
            yield from floats_in(v)
    elif isinstance(node, list):
        for v in node:
            yield from floats_in(v)


def test_csv_output(capsys):
    code, out = run(capsys, "matrix", "--family", "binom", "--alpha", "2", "--n", "1", "--inverse", "--format", "csv")
    assert out == "6,-12\n-12,36\n"
    code, out = run(capsys, "matrix", "--family", "hilbert", "--alpha", "1", "--n", "1", "--format", "csv")
    assert out == "1,1/2\n1/2,1/3\n"


def test_csv_oracle_sections(capsys):
    code, out = run(capsys, "matrix", "--family", "hilbert", "--alpha", "1", "--n", "1", "--det", "--oracle", "--format", "csv")
    assert out == "closed_form\n1/12\noracle\n1/12\nequal\ntrue\n"


def test_plain_output(capsys):
    code, out = run(capsys, "matrix", "--family", "filbert", "--alpha", "2", "--n", "1", "--inverse", "--format", "plain")
    assert out.splitlines() == [" 4  -6", "-6  12"]


def test_out_file(capsys, tmp_path):
    path = tmp_path / "doc.json"
    code = main(["poly", "--family", "fib", "--alpha", "2", "--n", "2", "--out", str(path)])
    assert code == 0
    assert capsys.readouterr().out == ""
    assert json.loads(path.read_text())["payload"]["coefficients"] == ["2", "6", "-15"]


def test_verify_ok(capsys):
    code, doc, _ = run_json(capsys, "verify", "--suite", "lemma", "--alpha-max", "10", "--n-max", "30")
    assert code == 0 and doc["status"] == "ok"
    code, doc, _ = run_json(capsys, "verify", "--suite", "fib", "--alpha-max", "6", "--n-max", "12")
    assert code == 0 and doc["status"] == "ok"
    code, doc, _ = run_json(capsys, "verify", "--suite", "all", "--alpha-max", "0", "--n-max", "0")
    assert code == 0 and doc["payload"]["passed"]


@pytest.mark.parametrize("name", sorted(verify.CLOSED_FORMS))
def test_corruption_is_detected(capsys, name):
    code, doc, _ = run_json(capsys, "verify", "--suite", "all", "--alpha-max", "2", "--n-max", "3", "--corrupt", name)
    assert code == 1
    assert doc["status"] == "mismatch"
    failing = [c for c in doc["payload"]["checks"] if c["failed"]]
    assert failing and all(c["first_counterexample"] for c in failing)


def test_module_entry_point_and_threads(tmp_path):
    env_cmd = [sys.executable, "-m", "filbert", "verify", "--suite", "hilbert", "--alpha-max", "2", "--n-max", "3"]
    serial = subprocess.run(env_cmd, capture_output=True, text=True)
    import os

    env = dict(os.environ, FILBERT_THREADS="3")
    parallel = subprocess.run(env_cmd, capture_output=True, text=True, env=env)
    assert serial.returncode == parallel.returncode == 0
    assert serial.stdout == parallel.stdout
