import io
import json
import subprocess
import sys

import pytest

from bosonic.cli import run
from bosonic.laurent import LaurentPoly


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), buf)
    return code, buf.getvalue()


def test_hl_r_json():
    code, out = call("hl-r", "--rank", "2", "--lambda", "1,0", "--json")
    assert code == 0
    assert LaurentPoly.from_json(out) == LaurentPoly.z(1, 2) + LaurentPoly.z(2, 2)


def test_hl_p_text():
    code, out = call("hl-p", "--rank", "2", "--lambda", "1,1")
    assert code == 0 and out.strip() == "z1*z2"


def test_monostatic_check_reports_value():
    code, out = call("verify", "--check", "monostatic", "--rank", "3", "--lambda", "4,2,2",
                     "--top-flag", "1,3,2")
    assert code == 0
    assert out.startswith("PASS monostatic")
    assert "value: t*z1^4*z2^2*z3^2" in out


def test_sigma_lattice_and_tau_are_byte_identical():
    args = ["sigma", "--rank", "3", "--lambda", "1,0,-1", "--w", "2,1,3", "--json"]
    _, lat = call(*args, "--method", "lattice")
    _, via_tau = call(*args, "--method", "tau")
    assert lat == via_tau and json.loads(lat)["half_q_exponent"] == -4


def test_partition_function_methods_agree():
    base = ["partition-function", "--rank", "3", "--lambda", "2,1,0", "--json"]
    outs = {call(*base, "--method", m)[1] for m in ("sweep", "enumerate", "transfer")}
    assert len(outs) == 1


def test_partition_function_colored_and_dump_states():
    code, out = call("partition-function", "--model", "colored", "--rank", "2",
                     "--lambda", "1,0", "--top-flag", "1,2", "--right-flag", "2,1", "--json")
    assert code == 0 and LaurentPoly.from_json(out) == LaurentPoly.z(2, 2)
    code, out = call("partition-function", "--rank", "2", "--lambda", "0,0", "--dump-states")
    states = [json.loads(line) for line in out.splitlines()]
    total = sum((LaurentPoly.from_dict(s["weight"]) for s in states), LaurentPoly.zero(2))
    assert total == 1 + LaurentPoly.t(2)


def test_tau_and_demazure_apply():
    code, out = call("tau", "--rank", "2", "--lambda", "1,0", "--w", "2,1", "--y", "1,2")
    assert code == 0 and out.strip() == "z2"
    code, out = call("demazure-apply", "--rank", "2", "--op", "dl", "--index", "1",
                     "--monomial", "1,0")
    assert out.strip() == "z2"
    poly = LaurentPoly.one(2).to_json()
    code, out = call("demazure-apply", "--rank", "2", "--op", "theta", "--poly", poly)
    assert out.strip() == "t + 1"


def test_verify_json_and_failure_exit_code():
    code, out = call("verify", "--check", "ybe-uncolored", "--nmax", "2", "--json")
    assert code == 0 and json.loads(out)["passed"]
    code, out = call("verify", "--check", "ybe-uncolored", "--nmax", "2", "--fault", "--json")
    data = json.loads(out)
    assert code == 1 and data["failure_count"] > 0 and data["failures"]


def test_verify_global_lifting_p_family_fails():
    code, _ = call("verify", "--check", "global-lifting", "--rank", "2", "--lambda", "1,1",
                   "--family", "P")
    assert code == 1


@pytest.mark.parametrize("argv", [
    ["hl-r", "--rank", "2", "--lambda", "0,1"],
    ["hl-r", "--rank", "3", "--lambda", "1,0"],
    ["hl-r", "--rank", "2", "--lambda", "a,b"],
    ["tau", "--rank", "2", "--lambda", "1,0", "--w", "1,1", "--y", "1,2"],
    ["demazure-apply", "--rank", "2", "--op", "dl", "--monomial", "1,0"],
    ["partition-function", "--model", "colored", "--rank", "2", "--lambda", "1,0"],
    ["verify", "--check", "tau", "--fault"],
    ["nonsense"],
    [],
])
def test_usage_errors_exit_2(argv):
    assert call(*argv)[0] == 2


def test_dump_weights_is_deterministic():
    a = call("dump-weights", "--kind", "uncolored", "--family", "P", "--json")
    b = call("dump-weights", "--kind", "uncolored", "--family", "P", "--json")
    assert a == b and a[0] == 0 and json.loads(a[1])


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bosonic", "hl-r", "--rank", "2",
                           "--lambda", "0,0"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "t + 1"
