import json

import pytest

from heckeb2.cells import h1_element, reduce_mod_c0
from heckeb2.coxeter import OMEGA, parse_element as el
from heckeb2.errors import BudgetExceeded, NotDivisible, NotInH1, VerificationFailure
from heckeb2.hecke import HeckeElement
from heckeb2.klbasis import KLCache
from heckeb2.laurent import ONE, QUANTUM_TWO, V as v
from heckeb2.phimaps import (
    crt_s_product, lemma31_verify, lemma31a_verify, lemma32_verify, lemma35_check,
    mu_conjecture_scan, phi1, phi1_inverse, phi_multiplicative, phi_S, phi_S_hecke,
    phi_S_method1, prop33_verify, theorem36_verify,
)
from heckeb2.repring import V
from heckeb2.weights import X1, X2, ZERO_WEIGHT, Weight

TWO = QUANTUM_TWO
TWO_SQ = TWO * TWO


def C(terms):
    return HeckeElement({(el(w) if isinstance(w, str) else w): c for w, c in terms.items()}, "C")


def dominant(n):
    return [Weight(a, k - a) for k in range(n + 1) for a in range(k + 1)]


def test_phi1_examples():
    assert phi1({el("rt"): TWO_SQ}, raw=True) == V(0)
    assert phi1({el("rtsrt") * OMEGA: TWO_SQ}, raw=True) == V(1, 1)
    assert phi1({el("rt"): ONE}) == V(0)
    with pytest.raises(NotInH1):
        phi1({el("rtsrs"): ONE})
    with pytest.raises(NotDivisible):
        phi1({el("rt"): TWO}, raw=True)


def test_phi1_inverse_round_trip():
    u = V(2, 1, -TWO) + V(0) + V(3, 0, v)
    assert phi1(phi1_inverse(u)) == u


def test_phi_S_examples():
    assert phi_S(ZERO_WEIGHT) == V(0)
    assert phi_S(X1) == V(1, 0, -TWO) + V(0)
    assert phi_S(X2) == V(1, 1) + V(0, 1, -TWO)


def test_method_agreement():
    for lam in (X1, X2, X2 * 2, X1 + X2, Weight(2, 1), Weight(0, 3)):
        assert phi_S_method1(lam) == phi_S(lam), lam


def test_hecke_route_agrees(cache):
    for lam in dominant(3):
        assert phi_S_hecke(lam, cache) == phi_S(lam)


def test_phi_multiplicative():
    for lam in dominant(2):
        for mu in dominant(2):
            assert phi_multiplicative(lam, mu).passed


def test_crt_s_examples(cache):
    assert crt_s_product(X1, cache=cache) == C(
        {"rststr": ONE, "tsrsrt": ONE, "rtsrt": -TWO, "rt": ONE})
    omega = HeckeElement({OMEGA: ONE}, "C")
    expected = cache.c_product(C({"rtsrt": ONE, "rt": -TWO}), omega)
    assert crt_s_product(X2, cache=cache) == expected
    assert expected == C({el("rtsrt") * OMEGA: ONE, el("rt") * OMEGA: -TWO})
    assert crt_s_product(ZERO_WEIGHT, cache=cache) == C({"rt": ONE})
    with pytest.raises(BudgetExceeded):
        crt_s_product(Weight(1, 1), cache=KLCache(budget=6))


def test_theorem36_examples(cache):
    r1 = theorem36_verify(X1, cache)
    assert r1.passed and r1.lhs == C({"rt": ONE, "rtsrt": -TWO})
    r2 = theorem36_verify(X2, cache)
    assert r2.passed and r2.lhs == C({el("rtsrt") * OMEGA: ONE, el("rt") * OMEGA: -TWO})
    r0 = theorem36_verify(ZERO_WEIGHT, cache)
    assert r0.passed and r0.lhs == C({"rt": ONE})
    assert r1.extra["c0_part"] == C({"rststr": ONE, "tsrsrt": ONE})


def test_lemma31_examples(cache):
    r = lemma31_verify(1, 1, cache)
    assert r.passed and r.lhs == C({h1_element(2, 0): TWO_SQ, "rt": TWO_SQ})
    r = lemma31_verify(1, 2, cache)
    assert r.passed and r.lhs == C({h1_element(3, 0): TWO_SQ, "rtsrt": TWO_SQ})
    assert lemma31a_verify(2, cache).lhs == r.lhs
    r = lemma31_verify(2, 2, cache)
    assert r.passed and r.rhs == C({h1_element(4, 0): TWO_SQ, h1_element(2, 0): TWO_SQ, "rt": TWO_SQ})


def test_lemma32(cache):
    assert all(r.passed for r in lemma32_verify(cache))


def test_lemma35_examples(cache):
    for lam in (X1, X2, X1 + X2):
        assert lemma35_check(lam, cache).passed


def test_prop33_sample(cache):
    assert prop33_verify(1, 1, 0, 0, cache).lhs == V(2) + V(0)
    assert prop33_verify(2, 1, 1, 1, cache).passed


def test_strict_mode_raises(cache, monkeypatch):
    import heckeb2.phimaps as pm
    monkeypatch.setattr(pm, "phi_S", lambda lam: V(5))
    with pytest.raises(VerificationFailure) as info:
        pm.theorem36_verify(X1, cache, strict=True)
    assert info.value.report.lhs != info.value.report.rhs


def test_mu_scan_examples(cache):
    empty = mu_conjecture_scan(0, cache)
    assert empty.lhs == [] and empty.passed
    report = mu_conjecture_scan(13, cache)
    for row in report.lhs:
        if row["trivial"]:
            assert row["mu"] == 0
    json.dumps(report.to_json())


def test_report_json(cache):
    r = theorem36_verify(X1, cache)
    data = json.loads(json.dumps(r.to_json()))
    assert data["passed"] is True
    assert data["lhs"]["basis"] == "C"
    assert "c0_part" in data["extra"]
