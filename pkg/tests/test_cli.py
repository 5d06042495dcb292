import json

from qgrass.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_qprod_text(capsys):
    code, out, _ = run(capsys, "qprod", "--k", "2", "--n", "4", "--lambda", "2,1", "--mu", "2,1")
    assert code == 0
    assert out.strip() == "q*s[2] + q*s[1,1]"


def test_qprod_json_round_trip(capsys):
    code, out, _ = run(
        capsys, "qprod", "--k", "2", "--n", "4",
        "--lambda", "2,1", "--mu", "2,1", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "k": 2, "n": 4,
        "terms": [
            {"d": 1, "partition": [2], "coeff": 1},
            {"d": 1, "partition": [1, 1], "coeff": 1},
        ],
    }
    assert json.dumps(payload, sort_keys=True) == out.strip()


def test_toric_schur_golden(capsys):
    code, out, _ = run(
        capsys, "toric-schur", "--k", "1", "--n", "3",
        "--lambda", "0", "--d", "1", "--mu", "0", "--nvars", "3", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["nvars"] == 3
    assert payload["terms"] == [
        {"coeff": 1, "partition": [2, 1]},
        {"coeff": -1, "partition": [1, 1, 1]},
    ]


def test_qpowers_golden(capsys):
    code, out, _ = run(
        capsys, "qpowers", "--k", "6", "--n", "16",
        "--lambda", "9,6,6,4,3", "--mu", "9,8,8,7,6,4",
    )
    assert code == 0
    assert out.strip() == "[2, 3]"
    code, out, _ = run(
        capsys, "qpowers", "--k", "6", "--n", "16",
        "--lambda", "9,6,6,4,3", "--mu", "9,8,8,7,6,4", "--format", "json",
    )
    assert code == 0
    assert json.loads(out) == {"dmin": 2, "dmax": 3}
    assert json.dumps(json.loads(out), sort_keys=True) == out.strip()


def test_gw_subcommand(capsys):
    code, out, _ = run(
        capsys, "gw", "--k", "2", "--n", "4",
        "--lambda", "1,1", "--mu", "2,1", "--nu", "2,1", "--backend", "all",
    )
    assert code == 0
    assert out.strip() == "d=1: bcf=1 toric=1 niltl=1"
    # omitted d picks the unique feasible degree
    code, out, _ = run(
        capsys, "gw", "--k", "2", "--n", "4",
        "--lambda", "1,1", "--mu", "2,1", "--nu", "2,1", "--format", "json",
    )
    payload = json.loads(out)
    assert payload["values"] == [{"d": 1, "value": 1}]


def test_reduce_subcommand(capsys):
    code, out, _ = run(capsys, "reduce", "--k", "2", "--n", "4", "--lambda", "4")
    assert code == 0 and out.strip() == "-q"
    code, out, _ = run(capsys, "reduce", "--k", "2", "--n", "4", "--lambda", "3,1")
    assert code == 0 and out.strip() == "q"
    code, out, _ = run(capsys, "reduce", "--k", "2", "--n", "4", "--lambda", "5,2")
    assert code == 0 and out.strip() == "0"
    code, out, _ = run(
        capsys, "reduce", "--k", "2", "--n", "4", "--lambda", "4,2", "--format", "json"
    )
    assert code == 0
    assert json.loads(out) == {"vanished": False, "core": [1, 1], "d": 1, "sign": 1}


def test_kostka_subcommand(capsys):
    code, out, _ = run(
        capsys, "kostka", "--k", "2", "--n", "4",
        "--lambda", "1,1", "--d", "1", "--mu", "2,1", "--beta", "2,1",
    )
    assert code == 0 and out.strip() == "1"


def test_invalid_input_exit_code(capsys):
    code, _, err = run(capsys, "qprod", "--k", "2", "--n", "4", "--lambda", "3,1", "--mu", "1")
    assert code == 1 and "box" in err
    code, _, err = run(capsys, "qprod", "--k", "2", "--n", "4", "--lambda", "x", "--mu", "1")
    assert code == 1
    code, _, err = run(capsys, "verify", "--k", "3", "--n", "20")
    assert code == 1 and "cap" in err


def test_verify_subcommand(capsys):
    code, out, _ = run(capsys, "verify", "--k", "2", "--n", "4", "--scope", "all")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines and all(line.startswith("PASS") for line in lines)
    names = {line.split()[1] for line in lines}
    assert "generating_function_identity" in names
    assert "backend_agreement_and_nonnegativity" in names
    assert "q_power_interval" in names

    code, out, _ = run(
        capsys, "verify", "--k", "1", "--n", "3", "--scope", "relations", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert all(entry["status"] == "pass" for entry in payload)


def test_verify_with_jobs(capsys):
    code, out, _ = run(capsys, "verify", "--k", "2", "--n", "4", "--scope", "backends", "--jobs", "2")
    assert code == 0 and "PASS" in out
