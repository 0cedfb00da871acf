import json

import pytest

from remoteness.cli import main
from remoteness.graphcore import C, decode_graph6, from_block_sequence, path
from remoteness.connectivity import is_bipartite


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_pk_kappa(capsys):
    code, out, err = run(capsys, "construct", "--family", "pk-kappa", "--n", "6", "--m", "10", "--kappa", "2")
    assert code == 0
    assert decode_graph6(out.strip()) == from_block_sequence([C(1), C(2), C(2), C(1)])
    assert "order 6, size 10" in err


def test_construct_bpk(capsys):
    code, out, _ = run(capsys, "construct", "--family", "bpk", "--n", "8", "--m", "10")
    g = decode_graph6(out.strip())
    assert code == 0 and (g.n, g.m) == (8, 10) and is_bipartite(g)


def test_construct_pk_lambda(capsys):
    code, out, err = run(capsys, "construct", "--family", "pk-lambda", "--n", "10", "--m", "22", "--lambda", "3")
    assert code == 0 and "F2(lambda=3,k=1,a=3,b=2)" in err
    assert decode_graph6(out.strip()).m == 22


def test_construct_lists_family_and_blocks(capsys):
    code, out, _ = run(capsys, "construct", "--family", "kappa-pc", "--n", "7", "--kappa", "2")
    assert code == 0 and len(out.split()) == 2
    code, out, _ = run(capsys, "construct", "--family", "blocks", "--blocks", "C1,C1,C1,C1", "--format", "json")
    assert json.loads(out)["graph6"] == "ChC" or decode_graph6(json.loads(out)["graph6"]) == path(4)


def test_construct_window_violation_exits_2(capsys):
    code, out, err = run(capsys, "construct", "--family", "bpk", "--n", "8", "--m", "30")
    assert code == 2 and out == "" and "floor(n^2/4)" in err
    code, _, err = run(capsys, "construct", "--family", "pk-kappa", "--n", "6")
    assert code == 2 and "--m" in err


def test_invariants(capsys, tmp_path):
    f = tmp_path / "g.g6"
    f.write_text("DhC\nCr\nE~~w\nC?\n")
    code, out, _ = run(capsys, "invariants", str(f))
    recs = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert (recs[0]["rho"], recs[0]["kappa"], recs[0]["lambda"]) == ("5/2", 1, 1)
    assert (recs[1]["rho"], recs[1]["triangleFree"]) == ("4/3", True)
    assert (recs[2]["rho"], recs[2]["kappa"]) == ("1", 5)
    assert recs[3]["rho"] is None and recs[3]["connected"] is False


def test_invariants_malformed_exits_2(capsys, malformed_corpus):
    code, _, err = run(capsys, "invariants", str(malformed_corpus))
    assert code == 2 and "line 4" in err


def test_invariants_reads_stdin(capsys, monkeypatch):
    import io
    import sys

    monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(b"DhC\n")))
    code, out, _ = run(capsys, "invariants", "-", "--format", "csv", "--precision", "2")
    assert code == 0 and out.splitlines()[1].split(",")[5:7] == ["5/2", "2.50"]


def test_bound(capsys):
    code, out, _ = run(capsys, "bound", "--which", "kappa", "--n", "7", "--m", "13", "--kappa", "2", "--format", "text")
    assert (code, out.strip()) == (0, "2")
    code, out, _ = run(capsys, "bound", "--which", "kappa", "--n", "7", "--m", "3", "--kappa", "2")
    doc = json.loads(out)
    assert code == 0 and doc["applicable"] is False and doc["value"] is None
    code, out, _ = run(capsys, "bound", "--which", "lambda-order", "--n", "10", "--lambda", "3")
    assert json.loads(out)["value"] == "22/9"
    code, out, _ = run(capsys, "bound", "--which", "epsilon", "--n", "7", "--m", "10", "--lambda", "2")
    doc = json.loads(out)
    assert doc["value"] == "10/9" and doc["closedForms"] == {"printed": "1", "rederived": "10/9"}
    code, _, _ = run(capsys, "bound", "--which", "lambda-order", "--n", "10", "--lambda", "4")
    assert code == 2


def test_verify_exit_codes(capsys, monkeypatch):
    code, out, _ = run(capsys, "verify", "--theorem", "thm5.1", "--internal-n", "6")
    doc = json.loads(out)
    assert code == 0 and doc["violations"] == [] and doc["theoremId"] == "THM_5_1"
    code, _, err = run(capsys, "verify", "--theorem", "THM_3_3", "--internal-n", "6")
    assert code == 2 and "kappa" in err
    code, _, _ = run(capsys, "verify", "--theorem", "nope", "--internal-n", "6")
    assert code == 2

    from fractions import Fraction

    from remoteness.verifier import theorems as T
    from remoteness.verifier.corpus import FilterKind

    fake = T.Theorem("TOO_TIGHT", "deliberately false", FilterKind.CONNECTED, lambda n, m, p: Fraction(1))
    monkeypatch.setitem(T.THEOREMS, "TOO_TIGHT", fake)
    code, _, _ = run(capsys, "verify", "--theorem", "TOO_TIGHT", "--internal-n", "4")
    assert code == 1


def test_verify_output_is_identical_across_job_counts(capsys):
    outs = []
    for jobs in ("1", "2"):
        code, out, _ = run(capsys, "verify", "--theorem", "THM_4_3", "--lambda", "2", "--internal-n", "6",
                           "--jobs", jobs, "--format", "csv")
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1] and outs[0].startswith("n,m,maxRho,boundValue,equal,witnessCount")


def test_verify_corpus_file(capsys, fixture_corpus):
    code, out, _ = run(capsys, "verify", "--theorem", "THM_1_1", "--corpus", str(fixture_corpus))
    assert code == 0 and json.loads(out)["graphsScanned"] == 142


def test_uniqueness(capsys):
    code, out, _ = run(capsys, "uniqueness", "--n", "6", "--kappa", "2")
    doc = json.loads(out)
    assert code == 0 and [c["m"] for c in doc["perCell"]] == [10]


def test_sweep(capsys):
    code, out, _ = run(capsys, "sweep", "--check", "bpk-equality", "--n-max", "15")
    assert code == 0 and json.loads(out)["mismatchCount"] == 0
    code, out, _ = run(capsys, "sweep", "--check", "epsilon-window", "--n-max", "10")
    assert code == 1 and json.loads(out)["mismatchCount"] == 2


def test_corpus_command(capsys):
    code, out, _ = run(capsys, "corpus", "--n", "5", "--connected")
    assert code == 0 and len(out.split()) == 21


def test_argparse_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["construct"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--theorem", "THM_1_1", "--jobs", "0"])
    assert exc.value.code == 2
