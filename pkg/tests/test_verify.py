import json

import pytest

from qpartitions import verify as v
from qpartitions.qpoly import Monomial


def test_report_invariants():
    with pytest.raises(ValueError):
        v.VerificationReport("x", {}, "pass", first_discrepancy={"params": {}})
    with pytest.raises(ValueError):
        v.VerificationReport("x", {}, "fail")
    with pytest.raises(ValueError):
        v.VerificationReport("x", {}, "maybe")
    assert v.VerificationReport("x", {}, "conjecture-holds").ok
    assert not v.VerificationReport("x", {}, "conjecture-violated", first_discrepancy={"params": {}}).ok


def test_small_suites_pass():
    assert v.check_companion(1, 20).status == "pass"
    assert v.check_capparelli(2, 20).status == "pass"
    assert v.check_refined(2, 3).status == "pass"
    assert v.check_genfunc_routes(1, 6, ij_max=4).status == "pass"
    assert v.check_g_routes(2, 10).status == "pass"
    assert v.check_combined_relation(1, 4).status == "pass"
    assert v.check_boulet(4).status == "pass"
    assert v.check_limit(2, 3).status == "pass"
    assert v.check_limit_window(1, 2).cells == 1


def test_companion_values_table():
    r = v.check_companion(1, 19)
    assert r.values["columns"] == ["n", "A", "C", "D"]
    assert r.values["counts"][19] == [19, 10, 10, 10]
    assert r.cells == 20


def test_divisibility_reports_first_failure():
    r = v.check_divisibility(1, 4)
    assert r.status == "fail"
    assert r.first_discrepancy["params"]["m"] == 1
    assert r.first_discrepancy["params"]["N"] == 2
    assert "not divisible" in r.first_discrepancy["params"]["error"]
    full = v.check_divisibility(2, 4, full=True)
    assert full.status == "fail" and len(full.discrepancies) >= 1


def test_conjectured_leading():
    assert v.conjectured_leading(1, 2, "even") == Monomial(0, 1, 7)
    assert v.conjectured_leading(2, 2, "even") == Monomial(1, 0, 8)
    assert v.conjectured_leading(1, 2, "odd") == Monomial(1, 0, 11)
    assert v.conjectured_leading(2, 2, "odd") == Monomial(0, 1, 7)


def test_dominance_statuses():
    r1 = v.check_dominance(1, 3)
    assert r1.status == "conjecture-holds"
    assert all(e["dominates"] and e["leading_matches"] for e in r1.leading_terms)
    r2 = v.check_dominance(2, 3)
    assert r2.status == "conjecture-violated"
    assert all(e["dominates"] for e in r2.leading_terms)
    odd = [e for e in r2.leading_terms if e["parity"] == "odd"]
    assert all(not e["leading_matches"] for e in odd)
    assert odd[0]["leading"] == "a*q^5" and odd[0]["leading_by_q"] == "a*q^5"
    assert r2.first_discrepancy["params"]["reason"] == "leading term differs"


def test_json_round_trip_and_determinism():
    r = v.check_divisibility(2, 3)
    d = r.to_dict(include_elapsed=False)
    again = v.VerificationReport.from_dict(json.loads(json.dumps(d)))
    assert again.status == r.status and again.cells == r.cells
    assert again.to_dict(include_elapsed=False) == json.loads(json.dumps(d))
    assert r.to_json(include_elapsed=False) == v.check_divisibility(2, 3).to_json(include_elapsed=False)
    assert "elapsed_ms" in r.to_dict()


def test_run_suite():
    reports = v.run_suite("companion", (1, 2), max_n=10)
    assert [r.parameter_range["m"] for r in reports] == [1, 2]
    assert len(v.run_suite("boulet", max_N=3)) == 1
    with pytest.raises(ValueError):
        v.run_suite("nope")
    with pytest.raises(ValueError):
        v.check_companion(3, 5)


def test_summary_mentions_status():
    assert "pass" in v.check_companion(1, 5).summary()
    assert "first discrepancy" in v.check_divisibility(1, 2).summary()
