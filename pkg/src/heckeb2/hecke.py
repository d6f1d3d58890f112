"""
The generic Hecke algebra of W in the standard basis {T_w}.

Quadratic relation ``(T_g - q)(T_g + 1) = 0`` for g in {r, s, t}, and
``T_omega T_w = T_{omega w}``.  Elements are sparse maps from group elements to
Laurent polynomials, tagged with the basis they are written in ('T' or 'C').
Arithmetic never converts between bases implicitly; see ``klbasis`` for that.

>>> from heckeb2.coxeter import parse_element as el
>>> Ts = T(el("s"))
>>> print(Ts * Ts)
(q - 1)·T[s] + q·T[e]
>>> print(T(el("w")) * T(el("w")))
T[e]
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .coxeter import (
    GroupElement, IDENTITY, OMEGA, first_left_descent, first_right_descent,
    parse_element,
)
from .errors import BasisMismatch
from .laurent import ONE, ZERO, LaurentPoly, as_laurent

__all__ = [
    "HeckeElement", "T", "t_multiply", "t_inverse_generator", "t_inverse",
    "left_mul_generator", "right_mul_generator", "right_mul_inverse",
    "add", "scale", "support", "coefficient_of",
]

BASES = ("T", "C")


class _Acc:
    """Mutable accumulator: element -> {v-exponent: int coefficient}."""

    __slots__ = ("d",)

    def __init__(self):
        self.d: dict[GroupElement, dict[int, int]] = {}

    def add(self, w, terms: dict[int, int], shift: int = 0, scale: int = 1):
        slot = self.d.get(w)
        if slot is None:
            slot = self.d[w] = {}
        for e, c in terms.items():
            k = e + shift
            slot[k] = slot.get(k, 0) + scale * c

    def add_product(self, w, terms: dict[int, int], factor: dict[int, int]):
        slot = self.d.get(w)
        if slot is None:
            slot = self.d[w] = {}
        for f, a in factor.items():
            for e, c in terms.items():
                k = e + f
                slot[k] = slot.get(k, 0) + a * c

    def freeze(self) -> dict[GroupElement, LaurentPoly]:
        out = {}
        for w, slot in self.d.items():
            clean = {e: c for e, c in slot.items() if c}
            if clean:
                out[w] = LaurentPoly._wrap(clean)
        return out


class HeckeElement:
    """A finite A-linear combination of T_w or C_w, w in W."""

    __slots__ = ("_terms", "basis")

    def __init__(self, terms: Mapping[GroupElement, LaurentPoly] | None = None,
                 basis: str = "T"):
        if basis not in BASES:
            raise ValueError(f"basis must be 'T' or 'C', not {basis!r}")
        self.basis = basis
        self._terms = {}
        if terms:
            for w, c in terms.items():
                c = as_laurent(c)
                if c:
                    self._terms[w] = c

    @classmethod
    def _wrap(cls, terms: dict, basis: str) -> "HeckeElement":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj.basis = basis
        return obj

    @classmethod
    def basis_element(cls, w: GroupElement, basis: str = "T") -> "HeckeElement":
        return cls._wrap({w: ONE}, basis)

    @classmethod
    def zero(cls, basis: str = "T") -> "HeckeElement":
        return cls._wrap({}, basis)

    # -- inspection -----------------------------------------------------------

    def items(self, ascending: bool = False):
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key(),
                      reverse=not ascending)

    def terms(self) -> dict[GroupElement, LaurentPoly]:
        return dict(self._terms)

    def support(self) -> frozenset[GroupElement]:
        return frozenset(self._terms)

    def coefficient_of(self, w: GroupElement) -> LaurentPoly:
        return self._terms.get(w, ZERO)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def max_length(self) -> int:
        return max((w.length for w in self._terms), default=0)

    # -- module operations ----------------------------------------------------

    def _check(self, other: "HeckeElement"):
        if self.basis != other.basis:
            raise BasisMismatch(f"cannot combine {self.basis}- and {other.basis}-basis elements")

    def __add__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            s = out.get(w, ZERO) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return HeckeElement._wrap(out, self.basis)

    def __neg__(self):
        return HeckeElement._wrap({w: -c for w, c in self._terms.items()}, self.basis)

    def __sub__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "HeckeElement":
        c = as_laurent(c)
        if not c:
            return HeckeElement.zero(self.basis)
        return HeckeElement._wrap({w: x * c for w, x in self._terms.items()}, self.basis)

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return t_multiply(self, other)
        c = as_laurent(other)
        if c is NotImplemented:
            return NotImplemented
        return self.scale(c)

    def __rmul__(self, other):
        c = as_laurent(other)
        if c is NotImplemented:
            return NotImplemented
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.basis == other.basis and self._terms == other._terms

    __hash__ = None

    # -- display ---------------------------------------------------------------

    def __str__(self):
        return format_combination(self.items(), self.basis)

    def format(self, ascending: bool = False) -> str:
        """Display string; ``ascending`` lists shorter elements first."""
        return format_combination(self.items(ascending), self.basis)

    def __repr__(self):
        return f"HeckeElement({self}, basis={self.basis!r})"

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [[str(w), c.to_json()] for w, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "HeckeElement":
        return cls({parse_element(w): LaurentPoly.from_json(c) for w, c in data["terms"]},
                   data["basis"])


def format_coefficient(c: LaurentPoly) -> str:
    """Coefficient prefix: '' for 1, '-' for -1, '[2]^k' forms when exact."""
    from .laurent import QUANTUM_TWO
    if c == ONE:
        return ""
    if c == -ONE:
        return "-"
    for k in range(1, 5):
        p = QUANTUM_TWO ** k
        for sign, prefix in ((1, ""), (-1, "-")):
            if c == p.scale(sign):
                return prefix + ("[2]" if k == 1 else f"[2]^{k}") + "·"
    text = str(c)
    if len(c.terms()) == 1 and not text.startswith("-"):
        return text + "·"
    return f"({text})·"


def format_combination(items, basis: str) -> str:
    if not items:
        return "0"
    out = []
    for w, c in items:
        coeff = format_coefficient(c)
        term = f"{basis}[{w}]"
        if coeff.startswith("-"):
            piece = coeff[1:] + term
            out.append(("- " if out else "-") + piece)
        else:
            out.append(("+ " if out else "") + coeff + term)
    return " ".join(out)


def T(w: GroupElement | str) -> HeckeElement:
    """The standard basis element T_w."""
    if isinstance(w, str):
        w = parse_element(w)
    return HeckeElement.basis_element(w, "T")


def _require_t(*hs: HeckeElement):
    for h in hs:
        if h.basis != "T":
            raise BasisMismatch("operation requires T-basis input")


# -- multiplication by a single generator ----------------------------------------

def _left_gen_terms(g: str, terms: dict) -> dict:
    acc = _Acc()
    for w, c in terms.items():
        ct = c._terms
        gw = w.left_mul(g)
        if gw.length > w.length:
            acc.add(gw, ct)
        else:
            acc.add(gw, ct, 2)
            acc.add(w, ct, 2)
            acc.add(w, ct, 0, -1)
    return acc.freeze()


def _right_gen_terms(terms: dict, g: str) -> dict:
    acc = _Acc()
    for w, c in terms.items():
        ct = c._terms
        wg = w.right_mul(g)
        if wg.length > w.length:
            acc.add(wg, ct)
        else:
            acc.add(wg, ct, 2)
            acc.add(w, ct, 2)
            acc.add(w, ct, 0, -1)
    return acc.freeze()


def _right_gen_inverse_terms(terms: dict, g: str) -> dict:
    # T_g^-1 = q^-1 T_g + (q^-1 - 1) T_e
    acc = _Acc()
    for w, c in terms.items():
        ct = c._terms
        wg = w.right_mul(g)
        if wg.length < w.length:
            acc.add(wg, ct)
        else:
            acc.add(wg, ct, -2)
            acc.add(w, ct, -2)
            acc.add(w, ct, 0, -1)
    return acc.freeze()


def _omega_left_terms(terms: dict) -> dict:
    return {OMEGA * w: c for w, c in terms.items()}


def _omega_right_terms(terms: dict) -> dict:
    return {w * OMEGA: c for w, c in terms.items()}


def left_mul_generator(g: str, h: HeckeElement) -> HeckeElement:
    """T_g * h, for g in {r, s, t} or 'w' (omega)."""
    _require_t(h)
    if g == "w":
        return HeckeElement._wrap(_omega_left_terms(h._terms), "T")
    return HeckeElement._wrap(_left_gen_terms(g, h._terms), "T")


def right_mul_generator(h: HeckeElement, g: str) -> HeckeElement:
    """h * T_g, for g in {r, s, t} or 'w' (omega)."""
    _require_t(h)
    if g == "w":
        return HeckeElement._wrap(_omega_right_terms(h._terms), "T")
    return HeckeElement._wrap(_right_gen_terms(h._terms, g), "T")


# -- general products ---------------------------------------------------------------

def _left_parent(x: GroupElement):
    g = first_left_descent(x)
    if g is None:
        return None, None
    return x.left_mul(g), g


def _right_parent(y: GroupElement):
    g = first_right_descent(y)
    if g is None:
        return None, None
    return y.right_mul(g), g


def _spanning_forest(elements: Iterable[GroupElement], parent_of):
    """Children lists for the closure of ``elements`` under ``parent_of``."""
    children: dict[GroupElement, list] = {}
    roots = set()
    for x in elements:
        while True:
            p, g = parent_of(x)
            if p is None:
                roots.add(x)
                break
            kids = children.setdefault(p, [])
            if any(c is x for c, _ in kids):
                break
            kids.append((x, g))
            x = p
    return roots, children


def t_multiply(h: HeckeElement, k: HeckeElement) -> HeckeElement:
    """Product of two T-basis elements.

    Expands the smaller factor: T_x * k is built from T_{gx} * k one generator at
    a time, sharing work between elements with a common reduced-word suffix.
    """
    _require_t(h, k)
    if not h or not k:
        return HeckeElement.zero("T")
    acc = _Acc()
    if len(h._terms) <= len(k._terms):
        roots, children = _spanning_forest(h._terms, _left_parent)

        def visit(x, value):
            c = h._terms.get(x)
            if c is not None:
                for w, d in value.items():
                    acc.add_product(w, d._terms, c._terms)
            for child, g in children.get(x, ()):
                visit(child, _left_gen_terms(g, value))

        for root in roots:
            visit(root, k._terms if root is IDENTITY else _omega_left_terms(k._terms))
    else:
        roots, children = _spanning_forest(k._terms, _right_parent)

        def visit(y, value):
            c = k._terms.get(y)
            if c is not None:
                for w, d in value.items():
                    acc.add_product(w, d._terms, c._terms)
            for child, g in children.get(y, ()):
                visit(child, _right_gen_terms(value, g))

        for root in roots:
            visit(root, h._terms if root is IDENTITY else _omega_right_terms(h._terms))
    return HeckeElement._wrap(acc.freeze(), "T")


def t_inverse_generator(g: str) -> HeckeElement:
    """T_g^-1 = q^-1 T_g + (q^-1 - 1) T_e, and T_omega^-1 = T_omega."""
    if g == "w":
        return T(OMEGA)
    from .coxeter import generator
    return HeckeElement._wrap({
        generator(g): LaurentPoly.monomial(-2),
        IDENTITY: LaurentPoly({-2: 1, 0: -1}),
    }, "T")


def right_mul_inverse(h: HeckeElement, w: GroupElement) -> HeckeElement:
    """h * T_w^-1, peeling generators off the right end of w."""
    _require_t(h)
    terms = h._terms
    y = w
    while y.length:
        g = first_right_descent(y)
        terms = _right_gen_inverse_terms(terms, g)
        y = y.right_mul(g)
    if y is OMEGA:
        terms = _omega_right_terms(terms)
    return HeckeElement._wrap(terms, "T")


def t_inverse(w: GroupElement) -> HeckeElement:
    """T_w^-1 expanded in the T-basis."""
    return right_mul_inverse(T(IDENTITY), w)


# -- functional aliases -------------------------------------------------------------

def add(h: HeckeElement, k: HeckeElement) -> HeckeElement:
    return h + k


def scale(h: HeckeElement, c) -> HeckeElement:
    return h.scale(c)


def support(h: HeckeElement) -> frozenset[GroupElement]:
    return h.support()


def coefficient_of(h: HeckeElement, w: GroupElement) -> LaurentPoly:
    return h.coefficient_of(w)
