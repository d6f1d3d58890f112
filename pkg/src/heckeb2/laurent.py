"""
Exact Laurent polynomials in ``v = q^(1/2)`` with integer coefficients.

Every scalar in the Hecke algebra lives in Z[q^(1/2), q^(-1/2)]; storing a
single integer exponent in ``v`` keeps half-integer powers of ``q`` exact.
Coefficients are Python ints, so there is no overflow.

>>> two = QUANTUM_TWO
>>> print(two)
q^(1/2) + q^(-1/2)
>>> print(two * two)
q + 2 + q^-1
>>> (two * two).divide_exact(two) == two
True
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import NotDivisible

__all__ = ["LaurentPoly", "ZERO", "ONE", "V", "Q", "QUANTUM_TWO", "as_laurent"]


class LaurentPoly:
    """An element of Z[v, v^-1]; immutable, zero coefficients never stored."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        if terms:
            self._terms = {int(e): int(c) for e, c in terms.items() if c}
        else:
            self._terms = {}
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict[int, int]) -> "LaurentPoly":
        # trusted constructor: ``terms`` already has no zero entries
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls._wrap({exponent: coeff} if coeff else {})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls.monomial(0, c)

    @classmethod
    def from_q_coefficients(cls, coeffs: Iterable[int]) -> "LaurentPoly":
        """Polynomial in q given by its coefficient list, constant term first."""
        return cls._wrap({2 * i: c for i, c in enumerate(coeffs) if c})

    # -- inspection ---------------------------------------------------------

    def terms(self) -> dict[int, int]:
        """A copy of the exponent -> coefficient map."""
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), reverse=True)

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    @property
    def max_exponent(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return max(self._terms)

    @property
    def min_exponent(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return min(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._terms.get(0, 0)

    def is_q_polynomial(self) -> bool:
        """True when this is a polynomial in q (even, nonnegative v-exponents)."""
        return all(e >= 0 and e % 2 == 0 for e in self._terms)

    def q_coefficients(self) -> list[int]:
        """Coefficient list in q, constant term first; requires ``is_q_polynomial``."""
        if not self.is_q_polynomial():
            raise ValueError(f"{self} is not a polynomial in q")
        if not self._terms:
            return []
        out = [0] * (max(self._terms) // 2 + 1)
        for e, c in self._terms.items():
            out[e // 2] = c
        return out

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return LaurentPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._wrap({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._wrap({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise NotDivisible(f"{self} is not a unit")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise NotDivisible(f"{self} is not a unit")
            return LaurentPoly.monomial(e * n, c ** (-n))
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by v^k."""
        if not k:
            return self
        return LaurentPoly._wrap({e + k: c for e, c in self._terms.items()})

    def scale(self, c: int) -> "LaurentPoly":
        if not c:
            return ZERO
        return LaurentPoly._wrap({e: c * x for e, x in self._terms.items()})

    def bar(self) -> "LaurentPoly":
        """The ring involution v -> v^-1."""
        return LaurentPoly._wrap({-e: c for e, c in self._terms.items()})

    def divide_exact(self, d) -> "LaurentPoly":
        """Quotient ``self / d`` in Z[v, v^-1]; raises NotDivisible otherwise."""
        d = as_laurent(d)
        if not d._terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._terms:
            return ZERO
        # v is a unit, so reduce to ordinary division in Z[v]
        p_lo, d_lo = min(self._terms), min(d._terms)
        rem = {e - p_lo: c for e, c in self._terms.items()}
        div = {e - d_lo: c for e, c in d._terms.items()}
        d_deg = max(div)
        d_lead = div[d_deg]
        quot: dict[int, int] = {}
        while rem:
            r_deg = max(rem)
            if r_deg < d_deg:
                raise NotDivisible(f"{self} is not divisible by {d}")
            c, m = divmod(rem[r_deg], d_lead)
            if m:
                raise NotDivisible(f"{self} is not divisible by {d}")
            shift = r_deg - d_deg
            quot[shift] = c
            for e, x in div.items():
                k = e + shift
                s = rem.get(k, 0) - c * x
                if s:
                    rem[k] = s
                else:
                    rem.pop(k, None)
        return LaurentPoly._wrap(quot).shift(p_lo - d_lo)

    # -- comparison / hashing -----------------------------------------------

    def __eq__(self, other):
        other = as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- display / serialization --------------------------------------------

    def __repr__(self):
        return f"LaurentPoly({dict(sorted(self._terms.items()))})"

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for e, c in self.items():
            mono = _q_power(e)
            if mono == "1":
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append(("- " if c < 0 else "+ ") + body)
        return " ".join(pieces)

    def to_json(self) -> list[list[int]]:
        """Exponent/coefficient pairs (exponent in units of q^(1/2)), descending."""
        return [[e, c] for e, c in self.items()]

    @classmethod
    def from_json(cls, pairs) -> "LaurentPoly":
        out: dict[int, int] = {}
        for e, c in pairs:
            out[int(e)] = out.get(int(e), 0) + int(c)
        return cls(out)


def _q_power(e: int) -> str:
    if e == 0:
        return "1"
    if e % 2 == 0:
        k = e // 2
        return "q" if k == 1 else f"q^{k}"
    return f"q^({e}/2)"


def as_laurent(x):
    """Coerce ints to constant polynomials; return NotImplemented otherwise."""
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    return NotImplemented


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
V = LaurentPoly.monomial(1)
Q = LaurentPoly.monomial(2)
QUANTUM_TWO = LaurentPoly({1: 1, -1: 1})
