"""
The representation ring of F = SL2(C) x Z/2 with coefficients in A, and its
monomial model.

``RepRingElt`` is written in the irreducible basis V(k) eps^p; ``MonomialElt``
in the basis theta'_{m xi} eps^p of A[Z xi] x {e, eps}.  The SL2 character of
V(k) is theta'_{k xi} + theta'_{(k-2) xi} + ... + theta'_{-k xi}.

The map phi~ sends theta_{x1} to -q^(1/2) theta'_xi and theta_{x2} to
theta'_xi eps, extended multiplicatively to all weights.

>>> print(V(1) * V(1))
V(2) + V(0)
>>> print(irrep_to_monomial(V(1)))
th'(1) + th'(-1)
"""

from __future__ import annotations

from typing import Mapping

from .errors import NotSymmetric
from .laurent import ONE, ZERO, LaurentPoly, as_laurent
from .weights import Weight

__all__ = [
    "RepRingElt", "MonomialElt", "V", "theta_prime", "rf_multiply",
    "irrep_to_monomial", "monomial_to_irrep", "phi_tilde_theta",
]


class _Sparse:
    """Finite A-linear combination keyed by (index, p) with p in {0, 1}."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], LaurentPoly] | None = None):
        self._terms = {}
        if terms:
            for (k, p), c in terms.items():
                c = as_laurent(c)
                if c:
                    key = (int(k), int(p) % 2)
                    s = self._terms.get(key, ZERO) + c
                    if s:
                        self._terms[key] = s
                    else:
                        self._terms.pop(key, None)
        self._validate()

    def _validate(self):
        pass

    @classmethod
    def _wrap(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: (kv[0][1], -kv[0][0]))

    def terms(self) -> dict[tuple[int, int], LaurentPoly]:
        return dict(self._terms)

    def coefficient(self, k: int, p: int) -> LaurentPoly:
        return self._terms.get((k, p % 2), ZERO)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            s = out.get(key, ZERO) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return self._wrap(out)

    def __neg__(self):
        return self._wrap({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "_Sparse":
        c = as_laurent(c)
        return self._wrap({k: x * c for k, x in self._terms.items() if x * c})

    def __rmul__(self, c):
        c = as_laurent(c)
        if c is NotImplemented:
            return NotImplemented
        return self.scale(c)

    def _basis_name(self, k: int) -> str:
        raise NotImplementedError

    def __str__(self):
        from .hecke import format_coefficient
        if not self._terms:
            return "0"
        out = []
        for (k, p), c in self.items():
            name = self._basis_name(k) + ("·eps" if p else "")
            coeff = format_coefficient(c)
            if coeff.startswith("-"):
                out.append(("- " if out else "-") + coeff[1:] + name)
            else:
                out.append(("+ " if out else "") + coeff + name)
        return " ".join(out)

    def __repr__(self):
        return f"{type(self).__name__}({self})"

    def to_json(self) -> list[dict]:
        return [{"k": k, "p": p, "coefficient": c.to_json()} for (k, p), c in self.items()]


class RepRingElt(_Sparse):
    """Element of A (x) R(SL2 x Z/2) in the V(k) eps^p basis."""

    __slots__ = ()

    def _validate(self):
        for k, _ in self._terms:
            if k < 0:
                raise ValueError(f"V({k}) is not an irreducible of SL2")

    def _basis_name(self, k):
        return f"V({k})"

    def __mul__(self, other):
        if isinstance(other, RepRingElt):
            return rf_multiply(self, other)
        c = as_laurent(other)
        if c is NotImplemented:
            return NotImplemented
        return self.scale(c)

    def to_json(self) -> list[dict]:
        return [{"k": k, "p": p, "coefficient": c.to_json()} for (k, p), c in self.items()]


class MonomialElt(_Sparse):
    """Element of A[Z xi] x {e, eps} in the theta'_{m xi} eps^p basis."""

    __slots__ = ()

    def _basis_name(self, m):
        return f"th'({m})"

    def __mul__(self, other):
        if isinstance(other, MonomialElt):
            out: dict[tuple[int, int], LaurentPoly] = {}
            for (m, p), c in self._terms.items():
                for (n, p2), d in other._terms.items():
                    key = (m + n, (p + p2) % 2)
                    out[key] = out.get(key, ZERO) + c * d
            return MonomialElt._wrap({k: c for k, c in out.items() if c})
        c = as_laurent(other)
        if c is NotImplemented:
            return NotImplemented
        return self.scale(c)

    def is_symmetric(self) -> bool:
        return all(self._terms.get((-m, p)) == c for (m, p), c in self._terms.items())

    def to_json(self) -> list[dict]:
        return [{"m": m, "p": p, "coefficient": c.to_json()} for (m, p), c in self.items()]


def V(k: int, p: int = 0, coeff=ONE) -> RepRingElt:
    """coeff * V(k) eps^p."""
    return RepRingElt({(k, p): coeff})


def theta_prime(m: int, p: int = 0, coeff=ONE) -> MonomialElt:
    """coeff * theta'_{m xi} eps^p."""
    return MonomialElt({(m, p): coeff})


def rf_multiply(u: RepRingElt, w: RepRingElt) -> RepRingElt:
    """Clebsch-Gordan: V(m) V(n) = sum_{i=0}^{min(m,n)} V(m+n-2i); eps^2 = 1."""
    out: dict[tuple[int, int], LaurentPoly] = {}
    for (m, p), c in u._terms.items():
        for (n, p2), d in w._terms.items():
            cd = c * d
            key_p = (p + p2) % 2
            for i in range(min(m, n) + 1):
                key = (m + n - 2 * i, key_p)
                out[key] = out.get(key, ZERO) + cd
    return RepRingElt._wrap({k: c for k, c in out.items() if c})


def irrep_to_monomial(u: RepRingElt) -> MonomialElt:
    out: dict[tuple[int, int], LaurentPoly] = {}
    for (k, p), c in u._terms.items():
        for j in range(k + 1):
            key = (k - 2 * j, p)
            out[key] = out.get(key, ZERO) + c
    return MonomialElt._wrap({k: c for k, c in out.items() if c})


def monomial_to_irrep(w: MonomialElt) -> RepRingElt:
    """Inverse of ``irrep_to_monomial`` on S2-invariant input; peels top monomials."""
    if not w.is_symmetric():
        raise NotSymmetric(f"{w} is not invariant under m -> -m")
    rest = dict(w._terms)
    out: dict[tuple[int, int], LaurentPoly] = {}
    for p in (0, 1):
        while True:
            tops = [m for (m, pp) in rest if pp == p]
            if not tops:
                break
            k = max(tops)
            c = rest[(k, p)]
            out[(k, p)] = c
            for j in range(k + 1):
                key = (k - 2 * j, p)
                s = rest.get(key, ZERO) - c
                if s:
                    rest[key] = s
                else:
                    rest.pop(key, None)
    return RepRingElt._wrap(out)


def phi_tilde_theta(x: Weight) -> MonomialElt:
    """phi~(theta_x) = (-1)^a q^(a/2) theta'_{(a+b) xi} eps^(b mod 2) for x = a x1 + b x2."""
    sign = -1 if x.a % 2 else 1
    return MonomialElt._wrap({(x.a + x.b, x.b % 2): LaurentPoly.monomial(x.a, sign)})
