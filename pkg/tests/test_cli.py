import csv
import io
import json
import math
import subprocess
import sys

import pytest

from markov_lyapunov.cli import EXIT_FAIL, EXIT_IO, EXIT_OK, EXIT_USAGE, main, parse_descriptor, parse_surd
from markov_lyapunov.arith import QuadraticSurd


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def csv_rows(text):
    lines = text.splitlines()
    assert lines[0].startswith("# markov-lyapunov/")
    return list(csv.DictReader(io.StringIO("\n".join(lines[1:]))))


def test_enumerate_markov_layout(capsys):
    code, out, _ = run(capsys, "enumerate", "markov", "--depth", "2")
    assert code == EXIT_OK
    rows = csv_rows(out)
    got = [(r["fraction"], max(int(r["x"]), int(r["y"]), int(r["z"]))) for r in rows]
    assert got == [("1/3", 5), ("1/4", 13), ("2/5", 29), ("1/5", 34), ("2/7", 194), ("3/8", 433), ("3/7", 169)]
    for r in rows:
        x, y, z = int(r["x"]), int(r["y"]), int(r["z"])
        assert x * x + y * y + z * z == 3 * x * y * z


def test_enumerate_cohn_json(capsys):
    code, out, _ = run(capsys, "enumerate", "cohn", "--depth", "0", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == "markov-lyapunov/enumerate" and doc["version"] == 1
    assert doc["rows"][0]["product"] == "[[7,11],[5,8]]"


def test_enumerate_mordell_residual_zero(capsys):
    code, out, _ = run(capsys, "enumerate", "mordell", "--depth", "3", "--a", "2")
    rows = csv_rows(out)
    assert code == 0 and len(rows) == 15 and all(r["residual"] == "0" for r in rows)
    assert (rows[0]["X"], rows[0]["Y"], rows[0]["Z"]) == ("6", "18", "102")


def test_enumerate_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["enumerate", "hurwitz", "--depth", "4", "--out", str(a)]) == 0
    assert main(["enumerate", "hurwitz", "--depth", "4", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_enumerate_rejects_a_for_plain_kind(capsys):
    code, _, err = run(capsys, "enumerate", "markov", "--a", "2")
    assert code == EXIT_USAGE and "error" in err


def test_lambda_text(capsys):
    code, out, _ = run(capsys, "lambda", "[;2]")
    fields = dict(line.split(": ", 1) for line in out.splitlines())
    assert code == 0
    assert float(fields["exact"]) == pytest.approx(math.log(3 + 2 * math.sqrt(2)) / 4, rel=1e-12)
    assert abs(float(fields["estimate"]) - float(fields["exact"])) < 1e-3


@pytest.mark.parametrize("desc", ["(1+√5)/2", "(1+sqrt5)/2", "[1;1]", "(RL)"])
def test_lambda_golden_forms(capsys, desc):
    code, out, _ = run(capsys, "lambda", desc, "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert float(doc["estimate"]) == pytest.approx(math.log((1 + math.sqrt(5)) / 2), abs=1e-3)


def test_lambda_rational_is_zero(capsys):
    code, out, _ = run(capsys, "lambda", "2/5", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["exact"] == "0" and doc["continued_fraction"] == "[2,2]"


def test_parse_helpers():
    assert parse_surd("(1+√5)/2") == QuadraticSurd.make(1, 1, 5, 2)
    assert parse_surd("(3-2sqrt2)/1") == QuadraticSurd.make(3, -2, 2, 1)
    assert parse_descriptor("R(RL)").kind == "path"


@pytest.mark.parametrize("bad", ["[1;", "(1+√4)/2x", "RX", "1/0"])
def test_lambda_bad_descriptor(capsys, bad):
    code, _, err = run(capsys, "lambda", bad)
    assert code == EXIT_USAGE and err


def test_spectrum_hurwitz_sorted(capsys):
    code, out, _ = run(capsys, "spectrum", "hurwitz", "--depth", "3")
    rows = csv_rows(out)
    xs = [float(r["x"]) for r in rows]
    lams = [float(r["lambda"]) for r in rows]
    assert code == 0 and xs == sorted(xs, reverse=True)
    assert lams == sorted(lams, reverse=True)


def test_spectrum_targets(capsys):
    code, out, _ = run(capsys, "spectrum", "targets", "0.1,0.3", "--n", "5000")
    rows = csv_rows(out)
    assert code == 0 and all(float(r["abs_error"]) < 0.01 for r in rows)


def test_spectrum_svg(tmp_path):
    out = tmp_path / "s.svg"
    assert main(["spectrum", "hurwitz", "--depth", "3", "--format", "svg", "--out", str(out)]) == 0
    assert out.read_text().startswith("<svg")


def test_verify_all(tmp_path):
    out = tmp_path / "v.json"
    assert main(["verify", "all", "--depth", "5", "--a", "1,2", "--out", str(out)]) == EXIT_OK
    doc = json.loads(out.read_text())
    assert doc["ok"] and set(doc["suites"]) == {"trees", "forms", "fricke", "minkowski"}
    assert EXIT_FAIL == 1


def test_io_error(capsys):
    code, _, err = run(capsys, "enumerate", "markov", "--out", "/nonexistent/dir/x.csv")
    assert code == EXIT_IO and err


def test_argparse_usage_exit():
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "nonsense"])
    assert exc.value.code == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "markov_lyapunov", "enumerate", "markov", "--depth", "0"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "1/3,1,2,5" in res.stdout
