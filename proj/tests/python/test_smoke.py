import json

import pytest

import hopfbench as hb


def test_field_info():
    info = hb.field_info(2, 2)
    assert info["name"] == "GF(2^2)"
    assert info["q"] == 4
    assert info["modulus"] == [1, 1, 1]


def test_catalog_counts():
    assert len(hb.catalog_list("T4.2")) == 197
    assert len(hb.catalog_list("T3.7")) == 35
    assert "param l k" in hb.catalog_show("T4.2-5")


def test_instantiate_and_build():
    text = hb.instantiate("T4.2-5", "l=1")
    assert json.loads(text)["field"] == {"k": 1, "p": 2}
    r = hb.build(text)
    assert r["ok"] and r["dim"] == 16
    assert len(r["axioms"]) == 6 and all(r["axioms"].values())


def test_collapse_is_reported():
    pres = json.loads(hb.instantiate("T4.2-5", "l=0"))
    pres["generators"][2]["over"] = "1"
    r = hb.build(json.dumps(pres))
    assert not r["ok"]
    assert r["collapse"] == "non_coideal"


def test_normal_form_and_dimension():
    assert hb.normal_form("catalog:T4.2-5:l=0", "x*x + g^4") == "1"
    assert hb.dimension("catalog:T3.7-1:l=1", 3) == 81


def test_structure_queries():
    assert hb.skew_primitive_dim("catalog:T4.2-5:l=0", "1", "g^2") == 2
    assert hb.skew_primitive_dim("catalog:T4.2-5:l=0", "1", "g") == 1
    assert len(hb.grouplikes("catalog:T4.2-5:l=0", enumerate=True)) == 8
    assert hb.iso("catalog:T4.2-5:l=0", "catalog:T4.2-5:l=1")
    assert not hb.iso("catalog:T4.2-5:l=0", "catalog:T4.2-5:l=2", 2, 2)


def test_nichols():
    assert hb.nichols("trivial:2")["total"] == 4
    d = hb.nichols("jordan:1,2")
    assert d["closed"] and d["total"] == 16
    assert hb.nichols("jordan:1,2", 3)["total"] == 9


def test_verify_is_deterministic():
    a = hb.verify("T4.2-5", 2, 2)
    assert a == hb.verify("T4.2-5", 2, 2)
    assert len(a) == 4
    assert {r["dim"] for r in a} == {16}


def test_suites():
    r = hb.identity_suite("jacobson", 2, 1, trials=10)
    assert r["trials"] == 10 and r["failures"] == 0
    iso = hb.iso_criteria("T4.2-5", 2, 2)
    assert isinstance(iso, dict)
    rows = hb.ambiguity("L3.9", 2, 2, n=4)
    assert rows and all(row["agree"] for row in rows)


def test_errors_raise():
    with pytest.raises(Exception):
        hb.field_info(7, 1)
    with pytest.raises(Exception):
        hb.instantiate("T4.2-999")
