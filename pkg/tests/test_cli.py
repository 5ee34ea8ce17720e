import io
import json
import subprocess
import sys

import numpy as np
import pytest

from entclass.cli import main
from entclass.pauli import reconstruct, validate_density
from entclass.statefile import dump_state, load_state, parse_state, StateFileError

from .conftest import BELL_KETS, projector


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, stdout=out, stderr=err)
    report = json.loads(out.getvalue()) if out.getvalue() else None
    return code, report, err.getvalue()


@pytest.fixture
def bell_file(tmp_path, bell_rho):
    path = tmp_path / "bell.json"
    dump_state(path, 2, rho=bell_rho)
    return str(path)


@pytest.fixture
def zz_file(tmp_path):
    path = tmp_path / "zz.json"
    rho = np.zeros((4, 4))
    rho[0, 0] = 1
    dump_state(path, 2, rho=rho)
    return str(path)


def write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload) if not isinstance(payload, str) else payload)
    return str(path)


def test_decompose_bell(bell_file, bell_x):
    code, rep, err = run(["decompose", "--state", bell_file])
    assert code == 0 and err == ""
    np.testing.assert_allclose(rep["results"]["coefficients"], bell_x, atol=1e-15)
    assert rep["results"]["blocks"]["x**"] == [[0.5, 0, 0], [0, -0.5, 0], [0, 0, -0.5]]
    assert rep["results"]["labels"][5] == "x_11"


def test_decompose_coefficient_file_round_trips(tmp_path, rng):
    x = rng.standard_normal(16)
    path = tmp_path / "c.json"
    dump_state(path, 2, x=x)
    code, rep, _ = run(["decompose", "--state", str(path)])
    assert code == 0
    np.testing.assert_allclose(rep["results"]["coefficients"], x, atol=1e-14)


def test_malformed_json(tmp_path):
    code, rep, err = run(["decompose", "--state", write(tmp_path, "bad.json", "{oops")])
    assert code == 2 and rep is None
    assert "cannot parse JSON" in err


@pytest.mark.parametrize(
    "payload",
    [
        {"n": 1, "format": "coefficients", "coefficients": [1, 2, 3]},
        {"n": 1, "format": "matrix", "coefficients": [-1, 0, 0, 0]},
        {"n": 1, "format": "matrix"},
        {"n": 0, "format": "coefficients", "coefficients": [1]},
        {
            "n": 1,
            "format": "coefficients",
            "coefficients": [-1, 0, 0, 0],
            "matrix": [[[1, 0], [0, 0]], [[0, 0], [0, 0]]],
        },
        {"n": 1, "format": "matrix", "matrix": [[[0, 0], [1, 0]], [[0, 0], [0, 0]]]},
    ],
)
def test_invalid_state_files(tmp_path, payload):
    with pytest.raises(StateFileError):
        parse_state(payload)
    code, _, err = run(["decompose", "--state", write(tmp_path, "s.json", payload)])
    assert code == 2 and err


def test_missing_file():
    code, _, err = run(["dim", "--state", "/nonexistent/state.json"])
    assert code == 2 and err


def test_dim_bell(bell_file):
    code, rep, _ = run(["dim", "--state", bell_file])
    assert code == 0
    assert rep["results"]["orbit_dimension"] == 3
    assert rep["tolerances"]["rank_tol"] == 1e-8


@pytest.mark.parametrize("n", [1, 2, 3])
def test_dim_maximally_mixed(tmp_path, n):
    path = tmp_path / "mm.json"
    dump_state(path, n, rho=np.eye(2**n) / 2**n)
    assert run(["dim", "--state", str(path)])[1]["results"]["orbit_dimension"] == 0


def test_dim_random(tmp_path):
    out = str(tmp_path / "r.json")
    assert run(["random", "--n", "2", "--mixed", "--seed", "4", "--out", out])[0] == 0
    assert run(["dim", "--state", out])[1]["results"]["orbit_dimension"] == 6


def test_invariants(tmp_path, bell_file):
    rep = run(["invariants", "--state", bell_file])[1]["results"]
    np.testing.assert_allclose(list(rep["invariants"].values()), [0.75, 3 / 16, 1 / 8] + [0] * 7, atol=1e-15)
    path = tmp_path / "mm.json"
    dump_state(path, 2, rho=np.eye(4) / 4)
    rep = run(["invariants", "--state", str(path)])[1]["results"]
    assert list(rep["invariants"].values()) == [0.0] * 10
    out = str(tmp_path / "p.json")
    run(["random", "--n", "1", "--pure", "--seed", "2", "--out", out])
    rep = run(["invariants", "--state", out])[1]["results"]
    assert rep["invariants"]["radius"] == pytest.approx(1.0, abs=1e-12)


def test_equiv_same_file(bell_file):
    code, rep, _ = run(["equiv", "--a", bell_file, "--b", bell_file])
    assert code == 0 and rep["results"]["status"] == "equivalent"


def test_equiv_two_bells(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    dump_state(a, 2, rho=projector(BELL_KETS["phi+"]))
    dump_state(b, 2, rho=projector(BELL_KETS["psi-"]))
    code, rep, _ = run(["equiv", "--a", str(a), "--b", str(b), "--seed", "3"])
    assert code == 0
    assert rep["results"]["distance"] < 1e-6
    assert rep["seed"] == 3
    assert rep["tolerances"]["distance_tol"] == 1e-6


def test_equiv_distinct(bell_file, zz_file):
    code, rep, _ = run(["equiv", "--a", bell_file, "--b", zz_file])
    assert code == 3
    assert rep["results"]["separating_invariant"] == "Tr(Z)"


def test_equiv_inconclusive(tmp_path):
    a, b = str(tmp_path / "a.json"), str(tmp_path / "b.json")
    run(["random", "--n", "3", "--pure", "--seed", "1", "--out", a])
    run(["random", "--n", "3", "--pure", "--seed", "2", "--out", b])
    code, rep, err = run(["equiv", "--a", a, "--b", b, "--restarts", "2"])
    assert code == 4 and err == ""
    assert rep["results"]["status"] == "inconclusive"


def test_equiv_seed_from_env(bell_file, monkeypatch):
    monkeypatch.setenv("ENTANGLE_SEED", "17")
    assert run(["equiv", "--a", bell_file, "--b", bell_file])[1]["seed"] == 17


def test_equiv_unphysical(tmp_path, bell_file):
    x = np.zeros(16)
    x[0], x[15] = -0.5, 5.0
    path = tmp_path / "u.json"
    dump_state(path, 2, x=x)
    assert run(["equiv", "--a", bell_file, "--b", str(path)])[0] == 2


@pytest.mark.parametrize("n,d,dim", [(1, 2, 2), (1, 1, 1), (2, 2, 4)])
def test_discover(n, d, dim):
    code, rep, _ = run(["discover", "--n", str(n), "--degree", str(d)])
    assert code == 0
    assert rep["results"]["kernel_dimension"] == dim


def test_discover_contains_radius():
    rep = run(["discover", "--n", "1", "--degree", "2"])[1]["results"]
    supports = [sorted(tuple(m["exponents"]) for m in p["monomials"]) for p in rep["invariants"]]
    assert sorted([(0, 0, 0, 2), (0, 0, 2, 0), (0, 2, 0, 0)]) in supports


def test_discover_budget():
    code, _, err = run(["discover", "--n", "3", "--degree", "3"])
    assert code == 2 and "exceeds budget" in err


def test_bloch(tmp_path):
    zero = tmp_path / "zero.json"
    dump_state(zero, 1, rho=np.diag([1.0, 0.0]))
    rep = run(["bloch", "--state", str(zero)])[1]["results"]
    # |0><0| = (I + sigma_3)/2 sits at x_3 = -1 in this chart
    assert rep["bloch"] == [0.0, 0.0, -1.0]
    assert rep["radius"] == 1.0 and rep["class"] == "pure"
    mm = tmp_path / "mm.json"
    dump_state(mm, 1, rho=np.eye(2) / 2)
    rep = run(["bloch", "--state", str(mm)])[1]["results"]
    assert rep["bloch"] == [0.0, 0.0, 0.0] and rep["class"] == "maximally mixed"
    mixed = tmp_path / "m.json"
    dump_state(mixed, 1, rho=np.diag([0.7, 0.3]))
    assert run(["bloch", "--state", str(mixed)])[1]["results"]["class"] == "mixed"


def test_bloch_wrong_n(bell_file):
    assert run(["bloch", "--state", bell_file])[0] == 2


def test_random_files(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        assert run(["random", "--n", "2", "--mixed", "--seed", "42", "--out", str(p)])[0] == 0
    assert a.read_bytes() == b.read_bytes()
    n, rho, _ = load_state(a)
    assert n == 2 and validate_density(rho).physical
    p = str(tmp_path / "p.json")
    run(["random", "--n", "1", "--pure", "--seed", "42", "--out", p])
    assert run(["bloch", "--state", p])[1]["results"]["radius"] == pytest.approx(1.0, abs=1e-12)


def test_reports_reproducible(bell_file, zz_file):
    argv = ["equiv", "--a", bell_file, "--b", bell_file, "--seed", "5"]
    r1, r2 = run(argv)[1], run(argv)[1]
    r1.pop("wall_time"), r2.pop("wall_time")
    assert r1 == r2


def test_usage_error():
    assert run(["dim"])[0] == 2
    assert run(["nosuchcommand"])[0] == 2


def test_module_entry_point(bell_file):
    proc = subprocess.run(
        [sys.executable, "-m", "entclass", "dim", "--state", bell_file],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stderr == ""
    assert json.loads(proc.stdout)["results"]["orbit_dimension"] == 3
