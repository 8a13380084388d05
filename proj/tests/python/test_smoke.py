from fractions import Fraction

import pytest

import coxsol


def test_dihedral_summary():
    s = coxsol.summary("I2(9)")
    assert (s["order"], s["class_count"], s["cuspidal_count"]) == (18, 6, 4)
    assert [c["representative"] for c in s["classes"]][:2] == ["1", "s1"]


def test_product_and_names():
    g = coxsol.group("A1xI2(5)")
    assert (g.name, g.rank, g.order) == ("A1xI2(5)", 3, 20)


def test_bad_names():
    for bad in ["Q3", "I25", "A5"]:
        with pytest.raises(coxsol.CoxsolError):
            coxsol.group(bad)
    with pytest.raises(ValueError):
        coxsol.group("B1")


def test_verify_reports():
    assert coxsol.verify("b", "A1")["status"] == "verified"
    assert coxsol.verify("a", "I2(5)")["status"] == "verified"
    r = coxsol.verify("c", "A3", L=[1, 3])
    assert r["status"] == "verified"
    assert "A1xA1" in r["assignments"][0]["construction"]


def test_orlik_solomon_dimensions():
    os_ = coxsol.orlik_solomon("A3")
    assert os_["dimensions"] == [1, 6, 11, 6]
    assert os_["total_dimension"] == 24
    d = coxsol.orlik_solomon("I2(5)")
    assert [h["reflection"] for h in d["hyperplanes"]][0] == "s1"
    assert [h["reflection"] for h in d["hyperplanes"]][-1] == "s2"


def test_table_rows():
    t = coxsol.table("I2(7)")
    rows = {r["row"]: [coxsol.cyclotomic_value(v) for v in r["values"]] for r in t["rows"]}
    assert rows["omega"] == [14, 2, 0, 0, 0]
    assert rows["rho"] == [14, 0, 0, 0, 0]
    assert rows["Psi[S]"] == [6, 0, -1, -1, -1]


def test_seed_order_does_not_change_psi():
    a = coxsol.orlik_solomon(coxsol.group("A3"))["psi_lambda"]
    b = coxsol.orlik_solomon(coxsol.group("A3", seed_order=5))["psi_lambda"]
    assert a == b


def test_descent_idempotents_are_rational():
    d = coxsol.descent("A1")
    assert d["idempotents"]["{s1}"] == {"1": "1/2", "s1": "-1/2"}
    assert coxsol.cyclotomic_value({"conductor": 1, "coeffs": [["-3", "8"]]}) == Fraction(-3, 8)


def test_render_formats():
    csv = coxsol.render("I2(4)", "table", "csv")
    assert "omega,8,4,4,8,." in csv
