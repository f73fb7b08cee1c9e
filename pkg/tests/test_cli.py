import json

import pytest

from gl3ext.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def test_classify(capsys):
    rc, out, _ = run(capsys, "classify", "--p", "5", "--weight", "4,2,0")
    assert rc == 0
    data = json.loads(out)
    assert data["region"] == "C(2)" and data["lambda_prime"] == "3,2,1"


def test_tilting_char(capsys):
    rc, out, _ = run(capsys, "char", "--p", "5", "--weight", "4,2,0", "--kind", "tilting")
    assert rc == 0 and json.loads(out)["dim"] == 35


def test_ext(capsys):
    rc, out, _ = run(capsys, "ext", "--p", "5", "--lambda", "2,1,0", "--lambda-prime", "3,0,0")
    assert rc == 0
    data = json.loads(out)
    assert data["status"] == "EqualByTheorem" and data["h1_dim"] == 8


def test_tensor_and_socle(capsys):
    rc, out, _ = run(capsys, "tensor", "--p", "5", "--weight", "2,1,0")
    assert rc == 0 and json.loads(out)["dim"] == 64
    rc, out, _ = run(capsys, "socle", "--p", "7", "--lambda", "5,2,0", "--j0", "0")
    assert rc == 0 and json.loads(out)["exact"]
    rc, out, _ = run(capsys, "pair", "--p", "5", "--lambda", "2,1,0", "--lambda-prime", "3,0,0")
    assert rc == 0 and json.loads(out)["good"]


@pytest.mark.parametrize(
    "argv,code",
    [
        (["classify", "--p", "4", "--weight", "1,0,0"], 2),
        (["classify", "--p", "3", "--weight", "1,0,0"], 2),
        (["classify", "--p", "5", "--weight", "1,0"], 1),
        (["bogus", "--p", "5"], 1),
        (["socle", "--p", "5", "--lambda", "2,1,0", "--j0", "3"], 2),
        (["tensor", "--p", "5", "--weight", "9,0,0"], 2),
        (["classify", "--p", "5", "--weight", "1,0,0", "--format", "csv"], 1),
        (["ext", "--p", "5", "--f", "2", "--lambda", "2,1,0", "--lambda-prime", "3,0,0"], 2),
    ],
)
def test_exit_codes(capsys, argv, code):
    rc, out, err = run(capsys, *argv)
    assert rc == code and out == "" and err


def test_scan_out_files_match_across_jobs(capsys, tmp_path):
    paths = []
    for jobs in (1, 2):
        path = tmp_path / f"scan{jobs}.csv"
        rc, out, _ = run(capsys, "scan", "--p", "5", "--f", "1", "--jobs", str(jobs),
                         "--format", "csv", "--out", str(path))
        assert rc == 0 and out == ""
        paths.append(path)
    text = paths[0].read_text()
    assert text == paths[1].read_text()
    assert text.splitlines()[0].startswith("lambda,lambda_prime,status")
    assert len(text.splitlines()) == 1 + 105


def test_scan_json(capsys):
    rc, out, _ = run(capsys, "scan", "--p", "5", "--f", "1")
    data = json.loads(out)
    assert rc == 0 and data["total"] == sum(data["counts"].values()) == 105
