from __future__ import annotations

import json
import subprocess
import sys

import pytest

from rooted_csf.harness import suites
from rooted_csf.harness.cli import main
from rooted_csf.harness.compute import compute
from rooted_csf.harness.examples import EXAMPLES
from rooted_csf.harness.suites import SUITES, Instance, Suite, verify_suite

P3 = "3 2\n0 1\n1 2\n"
P3_END = "root 0\n3 2\n0 1\n1 2\n"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def p3_file(tmp_path):
    path = tmp_path / "p3.txt"
    path.write_text(P3)
    return str(path)


@pytest.fixture
def p3_end_file(tmp_path):
    path = tmp_path / "p3r.txt"
    path.write_text(P3_END)
    return str(path)


def test_compute_text_output(capsys, p3_file):
    code, out, _ = run(capsys, "compute", p3_file, "--invariant", "X", "--N", "2", "--format", "text")
    assert code == 0
    assert out.strip() == "x0^2*x1 + x0^2*x2 + x0*x1^2 + 6*x0*x1*x2 + x0*x2^2 + x1^2*x2 + x1*x2^2"


def test_compute_json_is_deterministic(capsys, p3_end_file):
    first = run(capsys, "compute", p3_end_file, "--invariant", "X0")[1]
    second = run(capsys, "--format", "json", "compute", p3_end_file, "--invariant", "X0")[1]
    assert first == second
    obj = json.loads(first)
    assert obj["result"]["basis"] == "m"
    assert obj["input"] == "root 0; 3 2; 0 1; 1 2"


@pytest.mark.parametrize("invariant", ["X", "X0", "Xne0", "f0", "fne0", "fG", "chi", "principal", "P",
                                       "U", "Ur", "spec-kp", "x-2p"])
def test_every_invariant_serializes(invariant):
    obj = compute(P3_END, invariant)
    assert json.loads(json.dumps(obj)) == obj


def test_compute_Xi_and_W():
    assert compute(P3_END, "Xi", N=2, i=1)["result"]["nvars"] == 3
    w = compute("weights 3 1 1\n3 2\n0 1\n1 2\n", "W")
    assert w["result"]["namespace"] == "part-size"


def test_compute_from_stdin(monkeypatch, capsys):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO(P3_END))
    code, out, _ = run(capsys, "compute", "-", "--invariant", "f0", "--format", "text")
    assert code == 0 and out.strip() == "q^3 + 6*q^2 + 2*q"


def test_parse_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 2\n0 1\n")
    code, _, err = run(capsys, "compute", str(bad), "--invariant", "X")
    assert code == 2 and "error" in err


def test_missing_root_is_a_usage_error(capsys, p3_file):
    assert run(capsys, "compute", p3_file, "--invariant", "X0")[0] == 2


def test_unknown_verb_or_suite_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "no-such-suite"])
    assert exc.value.code == 2


def test_guard_exit_code(capsys, tmp_path):
    big = tmp_path / "big.txt"
    big.write_text("20 0\n")
    code, _, err = run(capsys, "compute", str(big), "--invariant", "X", "--N", "20")
    assert code == 3 and "error" in err


def test_enumerate_writes_one_object_per_line(capsys, tmp_path):
    out = tmp_path / "trees.txt"
    assert run(capsys, "enumerate", "--kind", "free-trees", "--n", "6", "--out", str(out))[0] == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 6
    assert all(line.startswith("6 5;") for line in lines)
    code, text, _ = run(capsys, "enumerate", "--kind", "rooted-trees", "--n", "4", "--format", "json")
    assert json.loads(text)["count"] == 4


def test_enumerate_range_error(capsys):
    assert run(capsys, "enumerate", "--kind", "graphs", "--n", "9")[0] == 2


def test_search_verb(capsys):
    code, out, _ = run(capsys, "search", "--kind", "X-unrooted", "--n", "5")
    obj = json.loads(out)
    assert code == 0 and len(obj["collisions"]) == 1
    assert len(obj["collisions"][0]["members"]) == 2


def test_certify_verb(capsys, p3_file, p3_end_file):
    code, out, _ = run(capsys, "certify", p3_file)
    obj = json.loads(out)
    assert code == 0 and (obj["k"], obj["p"]) == (2, 3)
    code, out, _ = run(capsys, "certify", p3_end_file, "--p", "5")
    obj = json.loads(out)
    assert code == 0 and obj["monic_degree_n"] and obj["report"]["satisfied"]


def test_verify_report_and_reproduce_line(capsys):
    code, out, _ = run(capsys, "verify", "parity", "--max-n", "4")
    report = json.loads(out)
    assert code == 0 and report["passed"] and report["instances"] == 1 + 2 + 4 + 11


def test_verify_single_instance(capsys):
    code, out, _ = run(capsys, "verify", "identities", "--instance", "root 1; 3 2; 0 1; 1 2")
    assert code == 0 and json.loads(out)["instances"] == 1


def _always_fails(inst, max_n, seed):
    return 1, ["deliberate failure"], None


def test_failures_give_exit_code_one_and_a_reproduce_command(monkeypatch, capsys):
    fake = Suite("always-fails", 2, "test double", lambda n, s: [Instance("2 1; 0 1")], _always_fails)
    monkeypatch.setitem(SUITES, "always-fails", fake)
    report = verify_suite("always-fails")
    assert not report.passed
    failure = report.failures[0]
    assert failure.input == "2 1; 0 1"
    assert "--instance '2 1; 0 1'" in failure.reproduce


def test_guard_breaches_are_reported_not_fatal(monkeypatch):
    def guarded(inst, max_n, seed):
        raise suites.GuardError("too big")

    fake = Suite("guarded", 1, "test double", lambda n, s: [Instance("1 0")], guarded)
    monkeypatch.setitem(SUITES, "guarded", fake)
    report = verify_suite("guarded")
    assert report.guard_breaches and not report.failures


def test_parallel_run_matches_serial():
    serial = verify_suite("eisenstein-trees", max_n=7, seed=3, jobs=1)
    parallel = verify_suite("eisenstein-trees", max_n=7, seed=3, jobs=2)
    assert serial.dumps(timing=False) == parallel.dumps(timing=False)


def test_seed_is_recorded_and_runs_repeat():
    a = verify_suite("distinguish-rooted", max_n=7, seed=11)
    b = verify_suite("distinguish-rooted", max_n=7, seed=11)
    assert a.seed == 11 and a.dumps(timing=False) == b.dumps(timing=False)


@pytest.mark.parametrize("name", sorted(EXAMPLES))
def test_worked_example(name):
    results = EXAMPLES[name]()
    assert results and all(ok for _, ok in results), [label for label, ok in results if not ok]


@pytest.mark.parametrize("name", sorted(s for s in SUITES if s != "paper-examples"))
def test_every_suite_passes_at_small_size(name):
    report = verify_suite(name, max_n=4)
    assert report.passed, report.failures[:3]


def test_console_script_entry_point():
    result = subprocess.run([sys.executable, "-m", "rooted_csf", "enumerate", "--kind", "posets", "--n", "2"],
                            capture_output=True, text=True, check=True)
    assert result.stdout.splitlines() == ["poset; 2 0", "poset; 2 1; 0 1"]
