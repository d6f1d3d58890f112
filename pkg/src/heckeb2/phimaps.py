"""
The quotient algebras H_1, H_2 of H_{>=2}/H_{c0}, the maps phi_1, phi_2 and
phi = phi_1 phi_2^-1, and the checks built on them.

Quotient elements are dicts {w: coefficient} over the c_2 cell, as produced by
``cells.project_to_quotient``.  "Normalised" coordinates are taken with respect
to the basis (1/[2]^2) C^_w; raw coordinates with respect to C^_w itself.

>>> from heckeb2.weights import Weight
>>> print(phi_S(Weight(1, 0)))
-[2]·V(1) + V(0)
>>> print(crt_s_product(Weight(1, 0), mod_c0=True).format(ascending=True))
C[rt] - [2]·C[rtsrt]
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .bernstein import s_element
from .cells import (
    a_value, c0_part, h1_element, parse_h1_index, project_to_quotient,
    reduce_mod_c0,
)
from .coxeter import (
    OMEGA, GroupElement, bruhat_leq, enumerate_elements,
)
from .errors import BudgetExceeded, NotInH1, VerificationFailure
from .hecke import HeckeElement
from .klbasis import KLCache, default_cache
from .laurent import ONE, QUANTUM_TWO, LaurentPoly
from .repring import (
    MonomialElt, RepRingElt, V, monomial_to_irrep, phi_tilde_theta,
)
from .weights import (
    Weight, X1, X2, character, fundamental_polynomial, tensor_decompose,
)

__all__ = [
    "phi1", "phi1_inverse", "phi_S", "phi_S_method1", "phi_S_hecke",
    "crt_s_product", "theorem36_verify", "lemma31_verify", "lemma31a_verify",
    "lemma32_verify", "lemma35_check", "prop33_verify", "phi_multiplicative",
    "mu_conjecture_scan",
    "Report",
]

_TWO_SQ = QUANTUM_TWO * QUANTUM_TWO


@dataclass
class Report:
    """Outcome of one identity check, with both sides kept for inspection."""

    name: str
    params: dict
    passed: bool
    lhs: object = None
    rhs: object = None
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        def enc(x):
            if hasattr(x, "to_json"):
                return x.to_json()
            if isinstance(x, dict):
                return {str(k): enc(v) for k, v in x.items()}
            if isinstance(x, (list, tuple)):
                return [enc(v) for v in x]
            return x
        return {"check": self.name, "params": enc(self.params),
                "passed": self.passed, "lhs": enc(self.lhs),
                "rhs": enc(self.rhs), "extra": enc(self.extra)}

    def __str__(self):
        args = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.name}({args}): {'pass' if self.passed else 'FAIL'}"


def _fail_if(report: Report, strict: bool) -> Report:
    if strict and not report.passed:
        raise VerificationFailure(f"{report} does not hold", report)
    return report


def _check_budget(lengths, budget):
    top = max(lengths, default=0)
    if top > budget:
        raise BudgetExceeded(f"needs elements of length {top}, over the budget {budget}")


# -- phi_1 ----------------------------------------------------------------------------

def phi1(coords: Mapping[GroupElement, LaurentPoly], raw: bool = False) -> RepRingElt:
    """phi_1 on a quotient element of H_1.

    With ``raw`` the coordinates refer to C^_w and are divided by [2]^2 first.
    """
    out: dict[tuple[int, int], LaurentPoly] = {}
    for w, c in coords.items():
        idx = parse_h1_index(w)
        if idx is None:
            raise NotInH1(f"{w} is not of the form rt(srt)^m w^p")
        if raw:
            c = c.divide_exact(_TWO_SQ)
        out[idx] = c
    return RepRingElt(out)


def phi1_inverse(u: RepRingElt) -> dict[GroupElement, LaurentPoly]:
    """Normalised quotient coordinates of phi_1^-1(u)."""
    return {h1_element(k, p): c for (k, p), c in u.terms().items()}


# -- phi(S_lambda) by three routes ---------------------------------------------------------

def phi_S(lam: Weight) -> RepRingElt:
    """phi(S_lambda) from the theta-decomposition of the character."""
    acc = MonomialElt()
    for x, d in character(lam).items():
        acc = acc + phi_tilde_theta(x).scale(d)
    return monomial_to_irrep(acc)


def _base_values() -> tuple[RepRingElt, RepRingElt]:
    return (V(1, 0, -QUANTUM_TWO) + V(0), V(1, 1) + V(0, 1, -QUANTUM_TWO))


def phi_S_method1(lam: Weight, base: tuple[RepRingElt, RepRingElt] | None = None) -> RepRingElt:
    """phi(S_lambda) as f(phi(S_x1), phi(S_x2)), where chi_lambda = f(chi_x1, chi_x2)."""
    b1, b2 = base if base is not None else _base_values()
    out = RepRingElt()
    powers1, powers2 = [V(0)], [V(0)]
    for (i, j), c in fundamental_polynomial(lam).items():
        while len(powers1) <= i:
            powers1.append(powers1[-1] * b1)
        while len(powers2) <= j:
            powers2.append(powers2[-1] * b2)
        out = out + (powers1[i] * powers2[j]).scale(c)
    return out


def phi_S_hecke(lam: Weight, cache: KLCache | None = None) -> RepRingElt:
    """phi_1 phi_2^-1 (S_lambda), read off the quotient image of C_rt S_lambda."""
    return phi1(project_to_quotient(crt_s_product(lam, mod_c0=True, cache=cache)))


# -- C_rt S_lambda -------------------------------------------------------------------

def crt_s_product(lam: Weight, mod_c0: bool = False, cache: KLCache | None = None,
                  budget: int | None = None) -> HeckeElement:
    """C_rt S_lambda in the C-basis, optionally with the H_{c0} terms removed."""
    cache = cache if cache is not None else default_cache()
    budget = budget if budget is not None else cache.budget
    s = s_element(lam).expansion
    _check_budget([s.max_length() + 2], budget)
    from .coxeter import from_word
    prod = cache.c_basis(from_word("rt")) * s
    out = cache.t_to_c(prod)
    return reduce_mod_c0(out) if mod_c0 else out


def _akp_to_c(table: RepRingElt) -> HeckeElement:
    return HeckeElement({h1_element(k, p): c for (k, p), c in table.terms().items()}, "C")


def theorem36_verify(lam: Weight, cache: KLCache | None = None,
                     strict: bool = False) -> Report:
    """C_rt S_lambda mod H_{c0} against sum a_{k,p} C_{rt(srt)^k w^p}."""
    full = crt_s_product(lam, cache=cache)
    lhs = reduce_mod_c0(full)
    table = phi_S(lam)
    rhs = _akp_to_c(table)
    rep = Report("thm36", {"lambda": str(lam)}, lhs == rhs, lhs, rhs,
                 {"a_kp": table, "c0_part": c0_part(full)})
    return _fail_if(rep, strict)


# -- products in H_1 --------------------------------------------------------------------------

def _h1_combination(indices, coeff=_TWO_SQ, p: int = 0) -> HeckeElement:
    return HeckeElement({h1_element(k, p): coeff for k in indices}, "C")


def _product_mod_c0(x: GroupElement, y: GroupElement, cache: KLCache) -> HeckeElement:
    _check_budget([x.length + y.length], cache.budget)
    return reduce_mod_c0(cache.c_multiply(x, y))


def lemma31_verify(m: int, n: int, cache: KLCache | None = None,
                   strict: bool = False) -> Report:
    """C_{rt(srt)^m} C_{rt(srt)^n} = [2]^2 sum_i C_{rt(srt)^{m+n-2i}} mod H_{c0}."""
    cache = cache if cache is not None else default_cache()
    lhs = _product_mod_c0(h1_element(m, 0), h1_element(n, 0), cache)
    rhs = _h1_combination(m + n - 2 * i for i in range(min(m, n) + 1))
    return _fail_if(Report("lemma31b", {"m": m, "n": n}, lhs == rhs, lhs, rhs), strict)


def lemma31a_verify(m: int, cache: KLCache | None = None, strict: bool = False) -> Report:
    """C_rtsrt C_{rt(srt)^m} = [2]^2 (C_{rt(srt)^{m+1}} + C_{rt(srt)^{m-1}}) mod H_{c0}."""
    cache = cache if cache is not None else default_cache()
    lhs = _product_mod_c0(h1_element(1, 0), h1_element(m, 0), cache)
    rhs = _h1_combination((m + 1, m - 1))
    return _fail_if(Report("lemma31a", {"m": m}, lhs == rhs, lhs, rhs), strict)


def prop33_verify(m: int, n: int, p: int, p2: int, cache: KLCache | None = None,
                  strict: bool = False) -> Report:
    """phi_1 of the quotient product equals V(m) e^p V(n) e^p2."""
    cache = cache if cache is not None else default_cache()
    prod = _product_mod_c0(h1_element(m, p), h1_element(n, p2), cache)
    lhs = phi1(project_to_quotient(prod), raw=True)
    rhs = V(m, p) * V(n, p2)
    rep = Report("prop33", {"m": m, "n": n, "p": p, "p'": p2}, lhs == rhs, lhs, rhs)
    return _fail_if(rep, strict)


# -- C_rt S_x closed forms, descent check -----------------------------------------------------------------

def _lemma32_expected(lam: Weight, cache: KLCache) -> HeckeElement:
    from .coxeter import parse_element as el
    if lam == X1:
        return HeckeElement({el("rststr"): ONE, el("tsrsrt"): ONE,
                             el("rtsrt"): -QUANTUM_TWO, el("rt"): ONE}, "C")
    if lam == X2:
        left = HeckeElement({el("rtsrt"): ONE, el("rt"): -QUANTUM_TWO}, "C")
        return cache.c_product(left, HeckeElement({OMEGA: ONE}, "C"))
    raise ValueError("the closed forms are known for x1 and x2 only")


def lemma32_verify(cache: KLCache | None = None, strict: bool = False) -> list[Report]:
    """Both closed forms for C_rt S_x1 and C_rt S_x2, exactly."""
    cache = cache if cache is not None else default_cache()
    out = []
    for lam in (X1, X2):
        lhs = crt_s_product(lam, cache=cache)
        rhs = _lemma32_expected(lam, cache)
        out.append(_fail_if(Report("lemma32", {"lambda": str(lam)}, lhs == rhs, lhs, rhs), strict))
    return out


def lemma35_check(lam: Weight, cache: KLCache | None = None, strict: bool = False) -> Report:
    """Every surviving term of C_rt S_lambda mod H_{c0} has L = R = {r,t} and lies in H_1."""
    reduced = crt_s_product(lam, mod_c0=True, cache=cache)
    bad = []
    for w in reduced.support():
        ok = (w.left_descents() == w.right_descents() == frozenset("rt")
              and parse_h1_index(w) is not None)
        if not ok:
            bad.append(str(w))
    rep = Report("lemma35", {"lambda": str(lam)}, not bad, reduced, None,
                 {"offending": sorted(bad)})
    return _fail_if(rep, strict)


# -- multiplicativity of phi --------------------------------------------------------------

def phi_multiplicative(lam: Weight, lam2: Weight, strict: bool = False) -> Report:
    """phi(S_lam) phi(S_lam2) = sum_z m_z phi(S_z)."""
    lhs = phi_S(lam) * phi_S(lam2)
    rhs = RepRingElt()
    for z, m in tensor_decompose(lam, lam2).items():
        rhs = rhs + phi_S(z).scale(m)
    rep = Report("phi_mult", {"lambda": str(lam), "lambda'": str(lam2)}, lhs == rhs, lhs, rhs)
    return _fail_if(rep, strict)


# -- the mu scan -------------------------------------------------------------------------------

def _double_coset_minimal(w: GroupElement) -> bool:
    return not ({"s", "t"} & (w.left_descents() | w.right_descents()))


def mu_conjecture_scan(max_len: int, cache: KLCache | None = None,
                       max_gap: int | None = 3) -> Report:
    """Tabulate mu(y, w) for y in c0, w in c1 or c2, both minimal in W0 w W0.

    Only pairs with y < w and l(w) - l(y) <= max_gap are listed (no cap when
    ``max_gap`` is None).  Nonzero values are reported as counterexamples;
    nothing is asserted.
    """
    cache = cache if cache is not None else default_cache()
    if max_len <= 0:
        return Report("mu_scan", {"max_len": max_len, "max_gap": max_gap}, True, [], None,
                      {"counterexamples": []})
    elems = [w for w in enumerate_elements(max_len, budget=cache.budget)
             if _double_coset_minimal(w)]
    low = [y for y in elems if a_value(y) == 4]
    high = [w for w in elems if a_value(w) in (1, 2)]
    rows, bad = [], []
    for w in high:
        for y in low:
            d = w.length - y.length
            if d <= 0 or (max_gap is not None and d > max_gap) or not bruhat_leq(y, w):
                continue
            m = 0 if d % 2 == 0 else cache.mu(y, w)
            row = {"y": str(y), "w": str(w), "mu": m, "trivial": d % 2 == 0}
            rows.append(row)
            if m:
                bad.append(row)
    return Report("mu_scan", {"max_len": max_len, "max_gap": max_gap}, True, rows, None,
                  {"counterexamples": bad})
