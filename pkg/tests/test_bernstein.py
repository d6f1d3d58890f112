import pytest

from heckeb2.bernstein import (
    central_product, s_element, s_element_from_orbits, theta, theta_from,
    translation_element, translation_word_product, z_element,
)
from heckeb2.coxeter import IDENTITY, parse_element as el
from heckeb2.errors import NotDominant, VerificationFailure
from heckeb2.hecke import HeckeElement, T, t_inverse
from heckeb2.laurent import V
from heckeb2.weights import X1, X2, ZERO_WEIGHT, Weight, dim, orbit

from oracles import bfs_length, weyl_tensor

E = T(IDENTITY)


def box(n):
    return [Weight(a, b) for a in range(-n, n + 1) for b in range(-n, n + 1)]


def dominant(n):
    return [Weight(a, k - a) for k in range(n + 1) for a in range(k + 1)]


def test_translation_examples():
    assert translation_element(X1) is el("stsr") and el("stsr").length == 4
    assert translation_element(X2) is el("w.rsr") and el("w.rsr").length == 3
    x = translation_element(Weight(1, 1))
    assert x.length == 7 and bfs_length(x.coxeter_part) == 7
    with pytest.raises(NotDominant):
        translation_element(Weight(-1, 0))


def test_translation_lengths_add_on_dominant_cone():
    for lam in dominant(4):
        x = translation_element(lam)
        assert x is translation_word_product(lam)
        assert x.length == 4 * lam.a + 3 * lam.b


def test_theta_examples():
    assert theta(ZERO_WEIGHT) == E
    assert theta(X1) == T("stsr").scale(V ** -4)
    expected = t_inverse(el("w.rsr")).scale(V ** 3)
    assert theta(-X2) == expected
    assert theta(X2) * theta(-X2) == E


def test_theta_well_defined():
    for x in box(2):
        base = Weight(max(x.a, 0), max(x.b, 0))
        splits = [(base + d, base + d - x) for d in (ZERO_WEIGHT, X1, X2, X1 + X2)]
        assert len(splits) >= 3
        for xp, xm in splits:
            assert theta_from(xp, xm) == theta(x), (x, xp, xm)


def test_theta_multiplicative():
    pts = box(2)
    for x in pts:
        for y in pts[::4]:
            assert theta(x) * theta(y) == theta(x + y)


def test_z_examples():
    assert z_element(ZERO_WEIGHT) == E
    for lam in (X1, X2):
        assert len(orbit(lam)) == 4
        total = HeckeElement.zero()
        for x in orbit(lam):
            total = total + theta(x)
        assert z_element(lam) == total


def test_s_examples():
    assert s_element(ZERO_WEIGHT).expansion == E
    assert s_element(X2).expansion == z_element(X2)
    assert s_element(X1).expansion == z_element(X1) + z_element(ZERO_WEIGHT)
    with pytest.raises(NotDominant):
        s_element(Weight(0, -1))


def test_s_two_routes():
    for lam in dominant(3):
        assert s_element(lam).expansion == s_element_from_orbits(lam)


def test_centrality():
    for lam in dominant(3):
        S = s_element(lam)
        for g in "rstw":
            assert S.commutes_with(g), (lam, g)


def test_central_product_examples():
    assert central_product(ZERO_WEIGHT, X1) == {X1: 1}
    assert central_product(X2, X2) == {X2 * 2: 1, X1: 1, ZERO_WEIGHT: 1}
    dec = central_product(X1, X2)
    assert sum(m * dim(z) for z, m in dec.items()) == 20


def test_central_product_against_oracle():
    for lam in dominant(2):
        for mu in dominant(2):
            assert central_product(lam, mu) == weyl_tensor(lam, mu)


def test_central_product_reports_mismatch(monkeypatch):
    import heckeb2.bernstein as b
    monkeypatch.setattr(b, "tensor_decompose", lambda x, y: {ZERO_WEIGHT: 1})
    with pytest.raises(VerificationFailure) as info:
        b.central_product(X1, X2)
    assert "lhs" in info.value.report
