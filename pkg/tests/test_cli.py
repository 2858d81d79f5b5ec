import io
import json
import subprocess
import sys

from stanleydepth.cli import main

SCHEMA = {"input", "n", "field", "e", "d", "t", "r_prime", "depth", "sdepth", "witness", "checks"}


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def test_analyze_json():
    code, out = run("analyze", "--ideal", "x1^3*x2^4*x3^5, x1^10*x2^2", "--json")
    rec = json.loads(out)
    assert code == 0 and SCHEMA <= rec.keys()
    assert rec["e"] == [10, 4, 5] and rec["t"] == 1
    assert rec["canonical"]["I"] == "x1^2*x2, x1*x2^2*x3"
    assert rec["polarization"]["n"] == 19


def test_depth_and_sdepth():
    code, out = run("depth", "--ideal", "x2", "--mod", "x1^2*x2, x1*x2^2", "--json")
    assert json.loads(out)["depth"] == 0
    code, out = run("sdepth", "--ideal", "x1", "--mod", "x1*x2^2", "--json")
    rec = json.loads(out)
    assert rec["sdepth"] == 1 and rec["witness"]


def test_verify_exit_code_and_checks():
    code, out = run("verify", "--ideal", "x1,x2,x3,x4,x5,x6", "--mod",
                    "x1^2, x1*x2, x1*x3, x1*x4, x1*x5, x1*x7", "--json")
    rec = json.loads(out)
    assert code == 0
    by_id = {c["check_id"]: c for c in rec["checks"]}
    assert by_id["prop_32"]["status"] == "pass"
    assert rec["depth"] == 1 and rec["sdepth"] == 1


def test_human_output():
    code, out = run("verify", "--ideal", "x1", "--mod", "x1*x2^2", "--field", "2")
    assert code == 0
    assert "over GF(2)" in out and "theorem_27" in out


def test_input_errors():
    assert run("depth", "--ideal", "x1^")[0] == 2
    assert run("depth", "--ideal", "x1", "--mod", "x2")[0] == 2
    assert run("depth", "--ideal", "x1", "--mod", "x1")[0] == 2
    assert run("depth", "--ideal", "x1", "--field", "4")[0] == 2
    assert run("depth")[0] == 2
    assert run("depth", "--ideal", "x1", "--caps", "bogus=1")[0] == 2


def test_caps_flag_gives_unknown():
    code, out = run("verify", "--ideal", "x1,x2,x3", "--caps", "max_vars=2", "--json")
    rec = json.loads(out)
    assert code == 0 and "unknown" in rec


def test_fuzz_lines_and_determinism():
    a = run("fuzz", "--seed", "7", "--count", "3")[1]
    b = run("fuzz", "--seed", "7", "--count", "3")[1]
    assert a == b
    recs = [json.loads(line) for line in a.splitlines()]
    assert {r["instance"] for r in recs} == {0, 1, 2}
    assert all(r["status"] in ("pass", "vacuous", "unknown") for r in recs)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "stanleydepth", "analyze", "--ideal", "x1*x2^2", "--json"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["e"] == [1, 2]
