import json
import subprocess
import sys

RUN = [sys.executable, "-m", "sptab.cli"]


def run_cli(args, stdin=""):
    return subprocess.run(RUN + args, input=stdin, capture_output=True, text=True)


T_RANK3 = '{"n":3,"kind":"sp","columns":[[1,2,-2],[2,-2]]}'
T_EX4 = '{"n":4,"kind":"sp","columns":[[1,2,3,-3],[1,3,-3],[3,-3]]}'


def test_check_quasistandard_example():
    r = run_cli(["check", "--n", "3", "--predicate", "qs-sp"], T_RANK3)
    assert r.returncode == 0
    assert json.loads(r.stdout) == {"result": False, "violation": {"kind": "nqs-row", "row": 2}}
    r = run_cli(["check", "--n", "3", "--predicate", "ss-sp"], T_RANK3)
    assert json.loads(r.stdout) == {"result": True, "violation": None}


def test_check_reports_violation_location():
    r = run_cli(
        ["check", "--n", "2", "--predicate", "ss-sp"],
        '{"n":2,"kind":"sp","columns":[[2,-2]]}',
    )
    assert json.loads(r.stdout) == {"result": False, "violation": {"kind": "column", "col": 1}}


def test_check_admissible_bare_column():
    r = run_cli(["check", "--n", "4", "--predicate", "admissible"], "[1,2,-1]")
    assert json.loads(r.stdout)["result"] is True


def test_enum_count():
    r = run_cli(["enum", "--n", "2", "--shape", "2", "--predicate", "ss-sp", "--count"])
    assert json.loads(r.stdout) == {"count": 5}


def test_double_golden():
    r = run_cli(["double", "--n", "3"], T_RANK3)
    assert json.loads(r.stdout) == {
        "n": 3,
        "kind": "double",
        "columns": [[1, 2, -3], [1, 3, -2], [2, -3], [3, -2]],
    }
    r = run_cli(["double", "--n", "3", "--format", "ascii"], T_RANK3)
    assert r.stdout == "1  1  2  3\n2  3  3' 2'\n3' 2'\n"


def test_phi_psi_round_trip():
    r = run_cli(["phi", "--n", "4"], T_EX4)
    out = json.loads(r.stdout)
    assert out["shape"] == [4]
    assert out["result"]["columns"] == [[1, -3, -2, -1]]
    r = run_cli(
        ["psi", "--n", "4", "--target-shape", "4,3,2"],
        json.dumps(out["result"]),
    )
    assert json.loads(r.stdout)["result"] == json.loads(T_EX4)


def test_sjdt_trace_with_zero_letters():
    skew = '{"n":4,"columns":[[-4,-3,-2,-1],[1,4,-3,-1],[3,4]],"inner":[2,0,0]}'
    r = run_cli(["sjdt", "--n", "4", "--star", "2,1"], skew)
    out = json.loads(r.stdout)
    assert out["path"] == [[2, 1], [2, 2], [2, 3]]
    assert out["trace"][1]["zero_present"] is True
    assert out["trace"][1]["columns"][0][0] == {"m": 0, "b": False}
    assert out["final"]["columns"][0][-1] == {"m": 0, "b": True}


def test_verify_subcommands_pass():
    r = run_cli(["verify", "dims", "--n", "3", "--max-k", "3"])
    assert r.returncode == 0
    assert json.loads(r.stdout)["status"] == "pass"
    r = run_cli(["verify", "plucker", "--n", "2", "--k", "2", "--dump-matrix"])
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["kernel"] == 5
    assert sorted(out["triplets"]) == [[0, 2, 1], [0, 3, 1]]
    r = run_cli(["verify", "bijection", "--n", "2", "--max-boxes", "2"])
    assert r.returncode == 0
    assert json.loads(r.stdout)["status"] == "pass"


def test_verify_bijection_jobs_flag_matches_serial():
    a = run_cli(["verify", "bijection", "--n", "2", "--max-boxes", "3"])
    b = run_cli(["verify", "bijection", "--n", "2", "--max-boxes", "3", "--jobs", "2"])
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


def test_deterministic_output():
    for _ in range(2):
        a = run_cli(["enum", "--n", "2", "--shape", "2,1", "--predicate", "qs-sp"])
        b = run_cli(["enum", "--n", "2", "--shape", "2,1", "--predicate", "qs-sp"])
        assert a.stdout == b.stdout


def test_bad_input_exit_code():
    r = run_cli(["check", "--n", "3", "--predicate", "ss-sp"], "not json")
    assert r.returncode == 1
    assert "error" in r.stderr
    r = run_cli(["phi", "--n", "2"], '{"n":2,"kind":"sp","columns":[[2,-2]]}')
    assert r.returncode == 1


def test_rank_mismatch_is_an_input_error():
    r = run_cli(["check", "--n", "4", "--predicate", "ss-sp"], T_RANK3)
    assert r.returncode == 1
    assert "does not match" in r.stderr
