import csv
import io
import json
from pathlib import Path

import pytest

from orbifold_ring import ChowRing
from orbifold_ring.cli import run
from orbifold_ring.output import OutputDocument, canonical_json

GOLDEN = Path(__file__).parent / "golden"


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("which, ring", [
    ("deg", "model"), ("mult", "model"), ("pairing", "model"),
    ("deg", "chow"), ("mult", "chow"), ("pairing", "chow")])
def test_text_goldens(capsys, which, ring):
    code, out, _ = call(capsys, "table", which, "--ring", ring, "1", "2", "3")
    assert code == 0
    assert out == (GOLDEN / f"{which}_{ring}_123.txt").read_text()


def test_xi_golden(capsys):
    code, out, _ = call(capsys, "table", "xi", "1", "2", "3")
    assert out == (GOLDEN / "xi_123.txt").read_text()


def test_json_golden_and_round_trip(capsys):
    code, out, _ = call(capsys, "--format", "json", "table", "pairing", "1", "2", "3")
    assert code == 0
    assert out == (GOLDEN / "pairing_model_123.json").read_text()
    doc = json.loads(out)
    assert set(doc) == {"kind", "weights", "payload"}
    assert canonical_json(doc) == out
    assert OutputDocument(doc["kind"], doc["weights"], doc["payload"]).to_json() == out


@pytest.mark.parametrize("argv", [
    ["info", "1", "2", "3"], ["table", "deg", "--ring", "chow", "2", "3"],
    ["table", "xi", "4", "6"], ["poincare", "1", "1", "3"], ["verify", "2", "3"]])
def test_every_json_document_round_trips(capsys, argv):
    code, out, _ = call(capsys, "--format", "json", *argv)
    assert code == 0
    assert canonical_json(json.loads(out)) == out


def test_format_after_subcommand(capsys):
    _, a, _ = call(capsys, "--format", "csv", "table", "mult", "1", "2")
    _, b, _ = call(capsys, "table", "mult", "--format", "csv", "1", "2")
    assert a == b
    rows = list(csv.reader(io.StringIO(a)))
    assert rows[0] == ["*", "xi^0", "xi^1", "xi^2"]
    assert rows[2] == ["xi^1", "xi^1", "0", "0"]


def test_no_floats_anywhere(capsys):
    for fmt in ("text", "csv", "json"):
        _, out, _ = call(capsys, "--format", fmt, "table", "deg", "1", "1", "3")
        assert "4/3" in out and "2/3" in out
        assert "." not in out.replace("...", "")


def test_info(capsys):
    code, out, _ = call(capsys, "--format", "json", "info", "1", "1", "3")
    p = json.loads(out)["payload"]
    assert (p["n"], p["total"], p["product"], p["gorenstein"]) == (2, 5, 3, False)
    assert [b["degree"] for b in p["basis"]] == ["0", "1", "2", "2/3", "4/3"]


def test_poincare(capsys):
    code, out, _ = call(capsys, "--format", "csv", "poincare", "1", "2", "3")
    assert out == "deg,dim\n0,1\n1,4\n2,1\n"


def test_out_file(capsys, tmp_path):
    path = tmp_path / "t.txt"
    code, out, _ = call(capsys, "table", "deg", "--out", str(path), "1", "2", "3")
    assert code == 0 and out == ""
    assert path.read_text() == (GOLDEN / "deg_model_123.txt").read_text()


class TestExitCodes:
    def test_verify_pass(self, capsys):
        code, out, _ = call(capsys, "verify", "1", "2", "3")
        assert code == 0
        assert out.splitlines()[-1].startswith("PASS")

    @pytest.mark.parametrize("argv", [
        ["info", "0", "2"], ["info", "1", "x"], ["info"], ["table", "bogus", "1"],
        ["info", "4611686018427387904", "4611686018427387904"],
        ["verify", "--max-total", "5", "1", "2", "3"],
        ["verify", "sweep", "--max-n", "1"],
        ["nonsense"]])
    def test_usage_errors(self, capsys, argv):
        code, _, _ = call(capsys, *argv)
        assert code == 2

    def test_corrupted_structure_constant(self, capsys, monkeypatch):
        original = ChowRing.basis_cup

        def broken(self, a, b):
            c = original(self, a, b)
            # swap the two order-3 twisted sectors in one product
            if c is not None and c.g != 0 and a.g == 0 and a.d == 0:
                return original(self, a, type(b)(1 - b.g, b.d))
            return c

        monkeypatch.setattr(ChowRing, "basis_cup", broken)
        code, out, _ = call(capsys, "verify", "1", "2", "3")
        assert code == 1
        assert "FAIL" in out and "counterexample" in out

    def test_sweep(self, capsys):
        code, out, _ = call(capsys, "--format", "json", "verify", "sweep",
                            "--max-n", "2", "--max-weight", "3")
        assert code == 0
        doc = json.loads(out)
        assert doc["weights"] is None
        assert len(doc["payload"]["vectors"]) == 3 + 9 + 27
        assert doc["payload"]["records"] == []

    def test_sweep_cap(self, capsys, monkeypatch):
        monkeypatch.setenv("ORBIFOLD_RING_MAX_TOTAL", "4")
        code, _, _ = call(capsys, "verify", "sweep", "--max-n", "2", "--max-weight", "3")
        assert code == 2


@pytest.mark.parametrize("raw", [("1", "2", "3"), ("2", "3"), ("1", "1", "3")])
def test_chow_and_model_tables_correspond_under_xi(capsys, raw):
    _, c, _ = call(capsys, "--format", "json", "table", "mult", "--ring", "chow", *raw)
    _, m, _ = call(capsys, "--format", "json", "table", "mult", "--ring", "model", *raw)
    _, x, _ = call(capsys, "--format", "json", "table", "xi", *raw)
    xp = json.loads(x)["payload"]
    relabel = dict(zip(xp["rows"], (row[0] for row in xp["cells"])))
    relabel["0"] = "0"
    chow, model = json.loads(c)["payload"], json.loads(m)["payload"]
    mpos = {lab: i for i, lab in enumerate(model["rows"])}
    for i, a in enumerate(chow["rows"]):
        for j, b in enumerate(chow["cols"]):
            want = model["cells"][mpos[relabel[a]]][mpos[relabel[b]]]
            assert relabel[chow["cells"][i][j]] == want
