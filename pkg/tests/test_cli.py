"""Command-line surface: golden outputs, error codes, determinism."""

import json
import subprocess
import sys

from idelink.cli import run_command


def run(capsys, *argv):
    code = run_command(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_info(capsys, lens5_path):
    code, out = run(capsys, "info", lens5_path)
    assert code == 0
    assert out == {
        "h1": ["5"],
        "admissible": True,
        "knots": {"K": {"order": 5, "lambda": [1, 5], "basis": False}},
    }


def test_lk(capsys, hopf_path, lens5_path):
    code, out = run(capsys, "lk", hopf_path, "K1", "K2")
    assert (code, out) == (0, {"lk": "1"})

    # rationals print as p/q in lowest terms
    code, out = run_two_knot_lens(capsys)
    assert (code, out) == (0, {"lk": "-1/5"})


def run_two_knot_lens(capsys):
    import tempfile, os

    data = {
        "surgery": {"components": ["L1"], "matrix": [[5]]},
        "link": {
            "components": ["J", "K"],
            "lk_with_surgery": [[1], [1]],
            "lk_mutual": [[0, 0], [0, 0]],
        },
    }
    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
        json.dump(data, fh)
        path = fh.name
    try:
        return run(capsys, "lk", path, "J", "K")
    finally:
        os.unlink(path)


def test_longitude(capsys, lens5_path):
    code, out = run(capsys, "longitude", lens5_path, "K")
    assert code == 0
    assert out == {"knot": "K", "lambda": [1, 5], "index": 5, "basis": False}


def test_class_group_and_basis(capsys, hopf_path):
    code, out = run(capsys, "class-group", hopf_path)
    assert code == 0
    assert out == {"link": ["K1", "K2"], "class_group": ["0", "0"], "cokernel": []}

    code, out = run(capsys, "principal-basis", hopf_path)
    assert code == 0
    assert out == {
        "link": ["K1", "K2"],
        "basis": [{"K1": [1, 0], "K2": [0, -1]}, {"K1": [0, 1], "K2": [-1, 0]}],
    }


def test_delta_and_is_principal(capsys, hopf_path):
    code, out = run(capsys, "delta", hopf_path, "--divisor", "K1=1")
    assert code == 0
    assert out == {"idele": {"K1": [0, 1], "K2": [-1, 0]}}

    code, out = run(capsys, "is-principal", hopf_path, "--a", '{"K1":[0,1],"K2":[-1,0]}')
    assert (code, out) == (0, {"principal": True})
    code, out = run(capsys, "is-principal", hopf_path, "--a", '{"K1":[1,0]}')
    assert (code, out) == (0, {"principal": False})


def test_pairing(capsys, hopf_path):
    code, out = run(
        capsys,
        "pairing",
        hopf_path,
        "--a",
        '{"K1":[0,1],"K2":[-1,0]}',
        "--b",
        '{"K1":[-1,0],"K2":[0,1]}',
    )
    assert (code, out) == (0, {"iota": "0"})


def test_cover_symbol_decomp(capsys, hopf_path):
    phi = '{"branch_link":["K1","K2"],"target":[2],"phi":[[1],[0]]}'
    code, out = run(capsys, "cover", hopf_path, "--phi", phi)
    assert code == 0
    assert out["surjective"] is True

    code, out = run(capsys, "symbol", hopf_path, "--phi", phi, "--a", '{"K1":[1,0]}')
    assert code == 0
    assert out == {"symbol": [1], "local_symbols": {"K1": [1], "K2": [0]}}

    code, out = run(capsys, "decomp", hopf_path, "K1", "--phi", phi)
    assert code == 0
    assert out == {"knot": "K1", "ramification": 2, "residue_degree": 1, "components": 1}


def test_kummer(capsys, hopf_path):
    code, out = run(capsys, "kummer", hopf_path, "--divisor", "K1=1", "--n", "2")
    assert code == 0
    assert out == {
        "cover": {"branch_link": ["K1", "K2"], "target": [2], "phi": [[1], [0]]},
        "branch_locus": ["K1"],
    }


def test_hilbert(capsys, hopf_path):
    code, out = run(
        capsys,
        "hilbert",
        hopf_path,
        "K1",
        "--a",
        '{"K1":[-1,0],"K2":[0,1]}',
        "--b",
        '{"K1":[0,1],"K2":[-1,0]}',
        "--n",
        "3",
    )
    assert (code, out) == (0, {"symbol": 2})


def test_error_paths(capsys, hopf_path, lens5_path):
    code, out = run(capsys, "info", "/no/such/file.json")
    assert (code, out["error"]) == (2, "bad_input")

    code, out = run(capsys, "delta", lens5_path, "--divisor", "K=1")
    assert (code, out["error"]) == (2, "divisor_not_principal")

    code, out = run(capsys, "delta", hopf_path, "--divisor", "K9=1")
    assert (code, out["error"]) == (2, "support_outside_link")

    code, out = run(capsys, "delta", hopf_path, "--divisor", "K1")
    assert (code, out["error"]) == (2, "bad_input")

    code, out = run(capsys, "pairing", hopf_path, "--link", "K1", "--a", '{"K2":[1,0]}', "--b", "{}")
    assert (code, out["error"]) == (2, "support_outside_link")

    code, out = run(capsys, "kummer", hopf_path, "--divisor", "K1=1", "--n", "1")
    assert (code, out["error"]) == (2, "bad_modulus")

    code, out = run(capsys, "is-principal", hopf_path, "--a", "not json")
    assert (code, out["error"]) == (2, "bad_input")

    code, out = run(capsys, "bogus-command")
    assert (code, out["error"]) == (2, "bad_input")

    code, out = run(capsys, "lk", hopf_path, "K1")
    assert (code, out["error"]) == (2, "bad_input")


def test_fuzz_exit_codes(capsys):
    code, out = run(capsys, "fuzz", "--trials", "10", "--seed", "4")
    assert code == 0
    assert out["failing_trials"] == 0

    code, out = run(capsys, "fuzz", "--trials", "4", "--seed", "4", "--corrupt", "pairing")
    assert code == 1
    assert out["failing_trials"] > 0
    assert out["first_failure"]["property"] == "pairing-reciprocity"


def test_fuzz_stdout_is_byte_identical_across_processes():
    cmd = [sys.executable, "-m", "idelink.cli", "fuzz", "--trials", "25", "--seed", "6"]
    r1 = subprocess.run(cmd, capture_output=True)
    r2 = subprocess.run(cmd, capture_output=True)
    assert r1.returncode == 0 and r2.returncode == 0
    assert r1.stdout == r2.stdout
    assert r1.stdout.startswith(b'{"config"')
    # diagnostics go to stderr, never stdout
    assert b"trials in" in r1.stderr
