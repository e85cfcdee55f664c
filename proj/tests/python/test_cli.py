import json
import os
import subprocess

CLI = os.environ["IDEAL_LAB_CLI"]


def run(*args, env=None):
    merged = dict(os.environ)
    if env:
        merged.update(env)
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=merged)


def masked_report(text):
    report = json.loads(text)
    for check in report["checks"]:
        check["ms"] = 0
    return report


def test_witness_json():
    r = run("witness", "right", "4")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["states"] == 4
    assert doc["alphabet"] == ["a", "b", "c", "d"]
    assert doc["transitions"]["d"] == [1, 2, 4, 4]
    assert doc["initial"] == 1
    assert doc["finals"] == [4]


def test_witness_dialect_and_regular():
    r = run("witness", "right", "5", "a,-,-,d")
    assert r.returncode == 0
    assert json.loads(r.stdout)["alphabet"] == ["a", "d"]

    r = run("witness", "regular", "3")
    assert json.loads(r.stdout)["alphabet"] == ["a", "b", "c"]


def test_witness_usage_errors():
    r = run("witness", "left", "3")
    assert r.returncode == 2
    assert "n >= 4" in r.stderr

    assert run("witness").returncode == 2
    assert run("frobnicate").returncode == 2


def test_measure_product_witness_spec():
    r = run("measure", "product", "--class", "right", "--m", "4", "--n", "5")
    assert r.returncode == 0
    record = json.loads(r.stdout)
    assert record["measure"] == "product"
    assert record["params"]["class"] == "right"
    assert record["value"] == 12


def test_measure_atoms_uses_published_dialect():
    r = run("measure", "atoms", "--class", "two_sided", "--n", "5")
    assert r.returncode == 0
    record = json.loads(r.stdout)
    assert record["params"]["dialect"] == "a,-,-,d,e,f"
    assert record["value"] == 9


def test_measure_star():
    r = run("measure", "star", "--class", "left", "--n", "5")
    record = json.loads(r.stdout)
    assert record["params"]["dialect"] == "a,-,-,-,e"
    assert record["value"] == 6


def test_measure_same_stream():
    r = run("measure", "union", "--class", "right", "--m", "3", "--n", "4",
            "--same-stream")
    assert r.returncode == 0
    record = json.loads(r.stdout)
    assert record["params"]["operands"] == "same_stream"
    assert record["value"] == 7

    assert run("measure", "union", "--class", "right", "--m", "4", "--n", "4",
               "--same-stream").returncode == 2


def test_measure_files(tmp_path):
    unary = tmp_path / "w4.json"
    assert run("witness", "right", "4", "--out", str(unary)).returncode == 0
    r = run("measure", "reversal", str(unary))
    record = json.loads(r.stdout)
    assert record["value"] == 8
    assert record["params"]["inputs"] == [str(unary)]

    left = tmp_path / "p3.json"
    right = tmp_path / "p4.json"
    run("witness", "right", "3", "a,b,-,d", "--out", str(left))
    run("witness", "right", "4", "a,b,-,d", "--out", str(right))
    r = run("measure", "product", str(left), str(right))
    assert json.loads(r.stdout)["value"] == 7  # 3 + 2^(4-2)


def test_measure_usage_errors(tmp_path):
    assert run("measure", "product", "--class", "right", "--n", "5").returncode == 2
    assert run("measure", "semigroup").returncode == 2
    bad = tmp_path / "nope.json"
    assert run("measure", "reversal", str(bad)).returncode == 2
    some = tmp_path / "w.json"
    run("witness", "right", "3", "--out", str(some))
    assert run("measure", "reversal", str(some), "--class", "right",
               "--n", "3").returncode == 2


def test_verify_small_grid():
    r = run("verify", "right", "--n", "3..4", "--mn", "3..4")
    assert r.returncode == 0
    report = json.loads(r.stdout)
    assert report["summary"] == {"pass": 50, "fail": 0}
    assert all(check["pass"] for check in report["checks"])


def test_verify_deterministic_and_jobs():
    args = ("verify", "right", "--n", "3..4", "--mn", "3..4")
    first = masked_report(run(*args).stdout)
    second = masked_report(run(*args).stdout)
    parallel = masked_report(run(*args, "--jobs", "4").stdout)
    assert first == second == parallel


def test_verify_corrupt_fails():
    r = run("verify", "right", "--n", "3..4", "--mn", "3..4",
            "--corrupt", "d,3,1")
    assert r.returncode == 1
    report = json.loads(r.stdout)
    assert report["summary"]["fail"] > 0


def test_verify_cap_exit_code():
    r = run("verify", "right", "--n", "3..3", "--mn", "3..3", "--cap", "5")
    assert r.returncode == 3

    r = run("verify", "right", "--n", "3..3", "--mn", "3..3",
            env={"IDEAL_LAB_CAP": "5"})
    assert r.returncode == 3

    # The flag wins over the environment.
    r = run("verify", "right", "--n", "3..3", "--mn", "3..3", "--cap", "100000",
            env={"IDEAL_LAB_CAP": "5"})
    assert r.returncode == 0


def test_verify_formats_and_out(tmp_path):
    r = run("verify", "right", "--n", "3..3", "--mn", "3..3", "--format", "csv")
    assert r.returncode == 0
    assert r.stdout.startswith("class,measure,params,expected,measured,pass,ms\n")

    r = run("verify", "right", "--n", "3..3", "--mn", "3..3", "--format", "markdown")
    assert "| class | measure |" in r.stdout
    assert "**fail**" not in r.stdout

    out = tmp_path / "report.json"
    r = run("verify", "right", "--n", "3..3", "--mn", "3..3", "--out", str(out))
    assert r.returncode == 0
    assert r.stdout == ""
    assert json.loads(out.read_text())["summary"]["fail"] == 0

    assert run("verify", "right", "--format", "yaml").returncode == 2


def test_verify_range_errors():
    assert run("verify", "two_sided", "--n", "4..6").returncode == 2
    assert run("verify", "right", "--n", "5..4").returncode == 2
    assert run("verify", "right", "--n", "x").returncode == 2
