import json

import pytest

import agsemigroup as ag


@pytest.fixture(scope="module")
def hermitian2():
    return ag.Curve.hermitian(2)


def test_curve_and_functions(hermitian2):
    c = hermitian2
    assert c.genus() == 1
    assert c.field_order() == 4
    x, y = c.x(), c.y()
    assert x.valuation(c, "P") == -2
    assert y.valuation(c, "P") == -3
    assert x.valuation(c, "Q") == 1
    f = c.parse("(x^2 + y)/(x)")
    assert (f * x == x * x + y)
    assert not (x + y).is_zero()


def test_near_weight(hermitian2):
    c = hermitian2
    w = ag.NearWeight(c, "P")
    assert w.rho(c.x()) == 2
    assert w.rho(c.x() - c.x()) is None
    assert w.tilde_rho(c.x()) == 2
    assert w.v_rho(c.x(), c.parse("1")) == -2
    assert w.in_M(c.x())


def test_semigroup_summary(hermitian2):
    s = ag.semigroup(hermitian2, 8)
    assert s["gaps"] == [[0, 1], [1, 0]]
    assert s["gamma_tilde"] == [[1, 1]]
    assert s["conductor"] == [2, 2]
    assert s["gen_x"] == [2, 3]
    assert "#" in s["ascii"]


def test_code(hermitian2):
    r = ag.code(hermitian2, 2, 1)
    assert r["N"] == 7
    assert r["k"] == 3
    assert r["d_lower"] == 4
    assert r["d_exact"] == 4
    assert len(r["generator_matrix"]) == 3
    assert all(len(row) == 7 for row in r["generator_matrix"])


def test_check_axioms(hermitian2):
    rep = ag.check_axioms(hermitian2, max_factors=3, seed=1)
    assert rep["all_pass"] is True
    assert rep["gcd_rho"] == 1


def test_run_cli_roundtrip():
    code, out, err = ag.run_cli(["semigroup", "--q", "2", "--bound", "6"])
    assert code == 0
    assert err == ""
    j = json.loads(out)
    assert j["schema"] == "agsemigroup/1"
    code2, out2, _ = ag.run_cli(["semigroup", "--q", "2", "--bound", "6"])
    assert out == out2

    code, _, err = ag.run_cli(["semigroup", "--q", "6"])
    assert code == 2
    assert "usage error" in err


def test_errors():
    with pytest.raises(ValueError):
        ag.Curve.projective_line(6)
