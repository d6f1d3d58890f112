"""
Kazhdan-Lusztig basis C_w = q^(-l(w)/2) sum_{y <= w} P_{y,w} T_y.

C_w is built from the left multiplication rule for C_g:

    C_g C_u = C_{gu} + sum_{gz < z, z < u} mu(z, u) C_z      (gu > u)

read backwards, C_w = C_g C_{gw} - sum mu(z, gw) C_z with g the smallest left
descent of w.  The coefficient of T_z in C_u is v^(-l(u)) P_{z,u}(v^2), so
mu(z, u) is just the coefficient of v^(-l(z)-1) there.  On the omega-coset,
C_{omega u} = T_omega C_u.

>>> from heckeb2.coxeter import parse_element as el
>>> cache = KLCache()
>>> print(cache.c_basis(el("rt")))
q^-1·T[rt] + q^-1·T[t] + q^-1·T[r] + q^-1·T[e]
"""

from __future__ import annotations

import threading

from .coxeter import (
    DEFAULT_LENGTH_BUDGET, GENERATOR_NAMES, IDENTITY, OMEGA, GroupElement,
    first_left_descent,
)
from .errors import BasisMismatch, BudgetExceeded
from .hecke import HeckeElement, _Acc, _omega_left_terms
from .laurent import ONE, QUANTUM_TWO, ZERO, LaurentPoly

__all__ = [
    "KLCache", "default_cache", "c_basis", "kl_polynomial", "mu", "mu_tilde",
    "t_to_c", "c_to_t", "c_multiply", "c_product",
]


class KLCache:
    """Memo tables for C_w, P_{y,w} and mu(y, w) up to a length budget.

    Population is guarded by a lock, so a cache may be shared between threads;
    every stored value is immutable once written.
    """

    def __init__(self, budget: int = DEFAULT_LENGTH_BUDGET):
        self.budget = budget
        self._c: dict[GroupElement, dict[GroupElement, LaurentPoly]] = {
            IDENTITY: {IDENTITY: ONE},
        }
        self._lock = threading.RLock()

    def __len__(self):
        return len(self._c)

    def _check_budget(self, w: GroupElement):
        if w.length > self.budget:
            raise BudgetExceeded(
                f"{w} has length {w.length}, over the budget {self.budget}")

    # -- construction ---------------------------------------------------------

    def _terms(self, w: GroupElement) -> dict[GroupElement, LaurentPoly]:
        """T-expansion of C_w for w in W'."""
        out = self._c.get(w)
        if out is not None:
            return out
        self._check_budget(w)
        with self._lock:
            out = self._c.get(w)
            if out is None:
                # fill shorter prefixes first to keep recursion shallow
                chain = []
                u = w
                while u not in self._c:
                    chain.append(u)
                    u = u.left_mul(first_left_descent(u))
                for u in reversed(chain):
                    self._c[u] = self._build(u, first_left_descent(u))
                out = self._c[w]
        return out

    def _build(self, w: GroupElement, g: str) -> dict[GroupElement, LaurentPoly]:
        u = w.left_mul(g)
        assert u.length < w.length, (w, g)
        cu = self._terms(u)
        acc = _Acc()
        # C_g C_u with C_g = v^-1 (T_g + T_e)
        for y, c in cu.items():
            ct = c._terms
            gy = y.left_mul(g)
            if gy.length > y.length:
                acc.add(gy, ct, -1)
                acc.add(y, ct, -1)
            else:
                acc.add(gy, ct, 1)
                acc.add(y, ct, 1)
        for z, c in cu.items():
            if z is u:
                continue
            m = c.coefficient(-z.length - 1)
            if m and z.left_mul(g).length < z.length:
                for y, d in self._terms(z).items():
                    acc.add(y, d._terms, 0, -m)
        return acc.freeze()

    def c_basis_via(self, w: GroupElement, g: str) -> HeckeElement:
        """C_w rebuilt from a chosen left descent g (for independence checks)."""
        u = w.coxeter_part
        if w.omega:
            g = {"r": "t", "s": "s", "t": "r"}[g]
        if u.left_mul(g).length > u.length:
            raise ValueError(f"{g} is not a left descent of {w}")
        terms = self._build(u, g)
        if w.omega:
            terms = _omega_left_terms(terms)
        return HeckeElement._wrap(terms, "T")

    # -- public queries ---------------------------------------------------------

    def c_basis(self, w: GroupElement) -> HeckeElement:
        """T-basis expansion of C_w."""
        if w.omega:
            return HeckeElement._wrap(_omega_left_terms(self._terms(OMEGA * w)), "T")
        return HeckeElement._wrap(dict(self._terms(w)), "T")

    def kl_polynomial(self, y: GroupElement, w: GroupElement) -> LaurentPoly:
        """P_{y,w} as a polynomial in q (0 unless y <= w)."""
        if y.omega != w.omega:
            return ZERO
        if w.omega:
            y, w = OMEGA * y, OMEGA * w
        c = self._terms(w).get(y)
        if c is None:
            return ZERO
        return c.shift(w.length)

    def mu(self, y: GroupElement, w: GroupElement) -> int:
        """Coefficient of q^((l(w)-l(y)-1)/2) in P_{y,w}; 0 unless y < w."""
        if y.omega != w.omega or y.length >= w.length:
            return 0
        if w.omega:
            y, w = OMEGA * y, OMEGA * w
        c = self._terms(w).get(y)
        if c is None:
            return 0
        return c.coefficient(-y.length - 1)

    def mu_tilde(self, y: GroupElement, w: GroupElement) -> int:
        """mu(y, w) if y <= w, mu(w, y) if w <= y."""
        if y.length <= w.length:
            return self.mu(y, w)
        return self.mu(w, y)

    def mu_table(self, w: GroupElement) -> dict[GroupElement, int]:
        """All y < w with mu(y, w) != 0."""
        out = {}
        for y in self.c_basis(w).support():
            m = self.mu(y, w)
            if m:
                out[y] = m
        return out

    # -- change of basis ----------------------------------------------------------

    def t_to_c(self, h: HeckeElement) -> HeckeElement:
        """Rewrite a T-basis element in the C-basis (triangular elimination)."""
        if h.basis != "T":
            raise BasisMismatch("t_to_c expects a T-basis element")
        acc = _Acc()
        for w, c in h._terms.items():
            acc.add(w, c._terms)
        pending = acc.d
        out: dict[GroupElement, LaurentPoly] = {}
        while pending:
            top = max(w.length for w in pending)
            layer = sorted((w for w in pending if w.length == top),
                           key=GroupElement.sort_key)
            for w in layer:
                slot = pending.pop(w)
                clean = {e: c for e, c in slot.items() if c}
                if not clean:
                    continue
                # C_w = v^-l(w) T_w + lower terms
                a = LaurentPoly._wrap(clean).shift(w.length)
                out[w] = a
                cw = self.c_basis(w)._terms
                neg = {e: -c for e, c in a._terms.items()}
                for y, d in cw.items():
                    if y is not w:
                        acc.add_product(y, d._terms, neg)
        return HeckeElement._wrap(out, "C")

    def c_to_t(self, h: HeckeElement) -> HeckeElement:
        if h.basis != "C":
            raise BasisMismatch("c_to_t expects a C-basis element")
        acc = _Acc()
        for w, a in h._terms.items():
            for y, d in self.c_basis(w)._terms.items():
                acc.add_product(y, d._terms, a._terms)
        return HeckeElement._wrap(acc.freeze(), "T")

    def c_multiply(self, x: GroupElement, y: GroupElement) -> HeckeElement:
        """C_x C_y in the C-basis."""
        return self.t_to_c(self.c_basis(x) * self.c_basis(y))

    def c_product(self, h: HeckeElement, k: HeckeElement) -> HeckeElement:
        """Product of two C-basis elements, returned in the C-basis."""
        return self.t_to_c(self.c_to_t(h) * self.c_to_t(k))

    # -- the multiplication rule, evaluated directly ----------------------------------

    def left_generator_rule(self, g: str, w: GroupElement) -> HeckeElement:
        """C_g C_w from the descent rule, in the C-basis."""
        return self._generator_rule(g, w, side="left")

    def right_generator_rule(self, w: GroupElement, g: str) -> HeckeElement:
        """C_w C_g from the descent rule, in the C-basis."""
        return self._generator_rule(g, w, side="right")

    def _generator_rule(self, g, w, side):
        step = (lambda x: x.left_mul(g)) if side == "left" else (lambda x: x.right_mul(g))
        if step(w).length < w.length:
            return HeckeElement._wrap({w: QUANTUM_TWO}, "C")
        out = {step(w): ONE}
        for y in self.c_basis(w).support():
            if y is w or step(y).length > y.length:
                continue
            m = self.mu(y, w)
            if m:
                out[y] = LaurentPoly.constant(m)
        return HeckeElement._wrap(out, "C")


_DEFAULT: KLCache | None = None
_DEFAULT_LOCK = threading.Lock()


def default_cache() -> KLCache:
    """Process-wide cache with the default length budget."""
    global _DEFAULT
    with _DEFAULT_LOCK:
        if _DEFAULT is None:
            _DEFAULT = KLCache()
        return _DEFAULT


def _cache(cache):
    return cache if cache is not None else default_cache()


def c_basis(w: GroupElement, cache: KLCache | None = None) -> HeckeElement:
    return _cache(cache).c_basis(w)


def kl_polynomial(y: GroupElement, w: GroupElement, cache: KLCache | None = None) -> LaurentPoly:
    return _cache(cache).kl_polynomial(y, w)


def mu(y: GroupElement, w: GroupElement, cache: KLCache | None = None) -> int:
    return _cache(cache).mu(y, w)


def mu_tilde(y: GroupElement, w: GroupElement, cache: KLCache | None = None) -> int:
    return _cache(cache).mu_tilde(y, w)


def t_to_c(h: HeckeElement, cache: KLCache | None = None) -> HeckeElement:
    return _cache(cache).t_to_c(h)


def c_to_t(h: HeckeElement, cache: KLCache | None = None) -> HeckeElement:
    return _cache(cache).c_to_t(h)


def c_multiply(x: GroupElement, y: GroupElement, cache: KLCache | None = None) -> HeckeElement:
    return _cache(cache).c_multiply(x, y)


def c_product(h: HeckeElement, k: HeckeElement, cache: KLCache | None = None) -> HeckeElement:
    return _cache(cache).c_product(h, k)
