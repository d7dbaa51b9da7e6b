import json

import pytest

import qplane


def test_presentations_listed():
    names = qplane.presentations()
    for name in ["LIE", "LIE_EXP", "GAMMA", "FORMS", "VECT", "HN"]:
        assert name in names
    assert "GAMMA" in qplane.catalog_table()


def test_normalize_element_and_tensor():
    assert qplane.normalize("LIE", "X*Y") == "Y*X + h*Y"
    assert qplane.normalize("LIE", "X*Y - Y*X - h*Y") == "0"
    assert qplane.normalize("FORMS", "w1*w2 + E*w2*w1") == "0"
    assert qplane.normalize("LIE_EXP", "X*Y @ 1 - Y*X @ 1") == "h*Y @ 1"


def test_parse_errors_carry_spans():
    with pytest.raises(qplane.ParseError) as err:
        qplane.normalize("LIE", "X*Y + Z")
    assert (err.value.offset, err.value.length) == (6, 1)
    with pytest.raises(qplane.ParseError):
        qplane.normalize("LIE", "X*(Y")
    with pytest.raises(qplane.UnknownPresentation):
        qplane.normalize("NOPE", "X")


def test_hopf_and_confluence():
    rep = qplane.hopf("HN", samples=10, seed=3)
    assert rep.ok()
    assert rep.find("grouplike(K)").status == qplane.Status.PASS
    assert qplane.confluence("GAMMA", 3).ok()


def test_ansatz_reports_findings():
    rep = qplane.ansatz()
    assert rep.ok()
    assert rep.find("printed-intermediate-system").status == qplane.Status.FINDING
    assert "B4 - B6 - h" in qplane.ansatz_system(False)


def test_json_is_deterministic():
    a = qplane.covariance("derived", samples=5, seed=1).to_json()
    b = qplane.covariance("derived", samples=5, seed=1).to_json()
    assert a == b
    doc = json.loads(a)
    assert doc["suite"].startswith("covariance")
    assert all(c["status"] != "fail" for c in doc["checks"])


def test_oracle_small_cutoff():
    rep = qplane.oracle(4)
    assert rep.ok()
    assert rep.find("negative-control(sign)").status == qplane.Status.PASS
