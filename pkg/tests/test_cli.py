import csv
import io
import json
import subprocess
import sys

import pytest

from cyclocode.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_code_kasami_52(capsys):
    rc, out, _ = run(capsys, "code", "--p", "2", "--m", "5", "--poly", "x^5+x^2+1", "--function", "kasami", "--h", "2", "--distance", "exact", "--dual")
    obj = json.loads(out)
    assert rc == 0
    assert obj["schema"] == 1 and obj["seed"] == 0
    assert (obj["n"], obj["k"], obj["d"]) == (31, 15, 8)
    assert obj["dual"]["k"] == 16 and obj["dual"]["d"] == 7
    assert obj["field"]["ext_poly"]
    assert obj["generator_matches_minimal_poly"] is True


def test_code_round_trip(capsys, tmp_path):
    rc, out, _ = run(capsys, "code", "--m", "6", "--poly", "x^6+x^4+x^3+x+1", "--function", "q23", "--h", "1", "--distance", "none")
    assert rc == 0
    first = json.loads(out)
    path = tmp_path / "code.json"
    path.write_text(out)
    rc, out2, _ = run(capsys, "code", "--from-json", str(path))
    again = json.loads(out2)
    assert rc == 0 and again["problems"] == []
    assert (again["n"], again["k"], again["g"]) == (first["n"], first["k"], first["g"])


def test_round_trip_detects_tampering(capsys, tmp_path):
    _, out, _ = run(capsys, "code", "--m", "5", "--function", "gold", "--h", "1", "--distance", "none")
    obj = json.loads(out)
    obj["k"] += 1
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(obj))
    rc, out2, _ = run(capsys, "code", "--from-json", str(path))
    assert rc == 1 and json.loads(out2)["problems"]


def test_output_is_deterministic(capsys):
    args = ("code", "--m", "7", "--function", "kasami", "--h", "2", "--distance", "bounds", "--budget", "20", "--seed", "3")
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args)
    assert a == b and json.loads(a)["seed"] == 3


def test_sequence_and_field(capsys):
    rc, out, _ = run(capsys, "sequence", "--m", "5", "--poly", "x^5+x^2+1", "--function", "kasami", "--h", "2")
    obj = json.loads(out)
    assert rc == 0 and obj["L"] == 16 and obj["agrees_with_expansion"]
    assert obj["Ms_monic"] == "x^16 + x^14 + x^10 + x^9 + x^8 + x^7 + x^5 + x^4 + x^3 + x^2 + x + 1"
    rc, out, _ = run(capsys, "sequence", "--m", "4", "--function", "gold", "--h", "1", "--emit", "period")
    assert rc == 0 and len(json.loads(out)["period"]) == 15
    rc, out, _ = run(capsys, "field", "--p", "2", "--s", "2", "--m", "3")
    assert rc == 0 and json.loads(out)["embedding_ok"]


def test_cosets_csv(capsys):
    rc, out, _ = run(capsys, "cosets", "--q", "2", "--n", "15", "--leader-only", "--emit", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rc == 0
    assert [int(r["leader"]) for r in rows] == [0, 1, 3, 5, 7]
    assert sum(int(r["size"]) for r in rows) == 15


def test_ddt(capsys):
    rc, out, _ = run(capsys, "ddt", "--m", "5", "--family", "welch", "--h", "2")
    obj = json.loads(out)
    assert rc == 0 and obj["delta"] == 2 and obj["matches_claim"]


def test_verify_gold(capsys):
    rc, out, _ = run(capsys, "verify", "--lemma", "gold", "--m-max", "9")
    obj = json.loads(out)
    assert rc == 0 and obj["failed"] == 0 and obj["cells"] > 0


def test_verify_reports_failures_with_exit_1(capsys):
    rc, out, _ = run(capsys, "verify", "--lemma", "bracken-leander", "--m-max", "4")
    assert rc == 1 and json.loads(out)["failed"] == 1


def test_sweep_csv_columns(capsys):
    rc, out, _ = run(capsys, "sweep", "--function", "gold", "--m-min", "3", "--m-max", "5")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rc == 0
    assert list(rows[0].keys()) == ["m", "h", "q", "n", "k", "L_s", "d_lower", "d_upper", "exact"]
    assert [(int(r["m"]), int(r["h"])) for r in rows] == sorted((int(r["m"]), int(r["h"])) for r in rows)


@pytest.mark.parametrize(
    "argv",
    [
        ("code", "--m", "5", "--function", "welch"),
        ("code", "--m", "5"),
        ("code", "--m", "5", "--poly", "x^5+x+1", "--function", "gold", "--h", "1"),
        ("ddt", "--m", "17", "--family", "gold", "--h", "1"),
        ("verify", "--lemma", "nope"),
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    rc, _, err = run(capsys, *argv)
    assert rc == 2 and err


def test_console_script():
    r = subprocess.run([sys.executable, "-m", "cyclocode.cli", "cosets", "--q", "2", "--n", "7"], capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)[1]["members"] == [1, 2, 4]
