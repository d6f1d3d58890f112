"""
The extended affine Weyl group W = Omega x| W' of type B2~.

An element is stored as the affine map ``mu -> u(mu) + lam`` on the weight
lattice, with ``u`` in the finite Weyl group W0 = <s, t> and ``lam`` a weight in
fundamental-weight coordinates.  Reduced words are derived on demand.  The
affine generator is ``r = t_{-x1} s_{x1}``; with that choice the fundamental
weights come out as

    t_{x1} = stsr,    t_{x2} = w.rsr  (omega * rsr),

and omega is the unique length-zero element of the non-trivial coset.  Lengths
use the Iwahori-Matsumoto count over the positive roots of C2.

Elements are interned: two equal elements are the same object.

>>> x1 = parse_element("stsr")
>>> x1.translation, x1.finite_part.word, x1.length
(Weight(a=1, b=0), '', 4)
>>> print(parse_element("w.rsr") * parse_element("w.rsr"))
tsrtsr
>>> print(parse_element("rtsr").inverse())
rsrt
"""

from __future__ import annotations

import re
from collections import deque
from typing import Iterable, Literal

from .errors import BudgetExceeded, ParseError
from .weights import (
    IDENTITY_MATRIX, POSITIVE_COROOTS, POSITIVE_ROOTS, ROOT_DATA, S_MATRIX,
    T_MATRIX, W0, W0Element, Weight, _W0_BY_MATRIX, _mat_act, _mat_mul,
    _matrix_inverse, _reflection_matrix,
)

__all__ = [
    "GroupElement", "W0Element", "GENERATORS", "IDENTITY", "OMEGA",
    "generator", "multiply", "length", "descents", "bruhat_leq", "invert",
    "enumerate_elements", "parse_element", "from_word", "translation",
    "DEFAULT_LENGTH_BUDGET",
]

DEFAULT_LENGTH_BUDGET = 24

GENERATOR_NAMES = ("r", "s", "t")
Side = Literal["left", "right"]

_COROOT_PAIRS = tuple(zip(POSITIVE_ROOTS, POSITIVE_COROOTS))
_POSITIVE_SET = frozenset((r.a, r.b) for r in POSITIVE_ROOTS)


def _negated_roots(matrix) -> tuple[bool, ...]:
    # which positive roots alpha have u^-1(alpha) < 0
    inv = _matrix_inverse(matrix)
    return tuple(_mat_act(inv, r.a, r.b) not in _POSITIVE_SET for r in POSITIVE_ROOTS)


_NEGATED = {u.matrix: _negated_roots(u.matrix) for u in W0}


def _im_length(matrix, lam: tuple[int, int]) -> int:
    a, b = lam
    total = 0
    for neg, co in zip(_NEGATED[matrix], POSITIVE_COROOTS):
        n = a * co[0] + b * co[1]
        total += abs(n + 1) if neg else abs(n)
    return total


_INTERN: dict = {}


class GroupElement:
    """An element of W; immutable and interned."""

    __slots__ = ("matrix", "shift", "length", "_hash", "_word", "_left", "_right")

    def __new__(cls, matrix, shift):
        key = (matrix, shift)
        obj = _INTERN.get(key)
        if obj is not None:
            return obj
        if matrix not in _W0_BY_MATRIX:
            raise ValueError(f"{matrix} is not in W0")
        obj = object.__new__(cls)
        obj.matrix = matrix
        obj.shift = shift
        obj.length = _im_length(matrix, shift)
        obj._hash = hash(key)
        obj._word = None
        obj._left = {}
        obj._right = {}
        return _INTERN.setdefault(key, obj)

    def __reduce__(self):
        return (GroupElement, (self.matrix, self.shift))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return self is other

    def __ne__(self, other):
        return self is not other

    # -- structure ------------------------------------------------------------

    @property
    def omega(self) -> int:
        """Exponent p in w = omega^p * u with u in W'."""
        return self.shift[1] & 1

    @property
    def finite_part(self) -> W0Element:
        return _W0_BY_MATRIX[self.matrix]

    @property
    def translation(self) -> Weight:
        return Weight(*self.shift)

    @property
    def coxeter_part(self) -> "GroupElement":
        """The W'-component u of w = omega^p * u."""
        return OMEGA * self if self.omega else self

    @property
    def word(self) -> str:
        """Shortlex-least reduced word (r < s < t) of the W'-component."""
        if self._word is None:
            letters = []
            u = self.coxeter_part
            while u.length:
                for g in GENERATOR_NAMES:
                    v = u.left_mul(g)
                    if v.length < u.length:
                        letters.append(g)
                        u = v
                        break
            self._word = "".join(letters)
        return self._word

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        A, lam = self.matrix, self.shift
        mu = _mat_act(A, *other.shift)
        return GroupElement(_mat_mul(A, other.matrix), (mu[0] + lam[0], mu[1] + lam[1]))

    def left_mul(self, g: str) -> "GroupElement":
        """g * self for a generator name."""
        out = self._left.get(g)
        if out is None:
            out = self._left[g] = GENERATORS[g] * self
        return out

    def right_mul(self, g: str) -> "GroupElement":
        """self * g for a generator name."""
        out = self._right.get(g)
        if out is None:
            out = self._right[g] = self * GENERATORS[g]
        return out

    def inverse(self) -> "GroupElement":
        inv = _matrix_inverse(self.matrix)
        a, b = _mat_act(inv, *self.shift)
        return GroupElement(inv, (-a, -b))

    def left_descents(self) -> frozenset[str]:
        n = self.length
        return frozenset(g for g in GENERATOR_NAMES if self.left_mul(g).length < n)

    def right_descents(self) -> frozenset[str]:
        n = self.length
        return frozenset(g for g in GENERATOR_NAMES if self.right_mul(g).length < n)

    def act(self, mu: Weight) -> Weight:
        a, b = _mat_act(self.matrix, mu.a, mu.b)
        return Weight(a + self.shift[0], b + self.shift[1])

    def __repr__(self):
        return f"GroupElement({self})"

    def __str__(self):
        word = self.word
        if self.omega:
            return "w." + word if word else "w"
        return word or "e"

    def sort_key(self):
        return (self.length, self.omega, self.word)


IDENTITY = GroupElement(IDENTITY_MATRIX, (0, 0))

GENERATORS: dict[str, GroupElement] = {
    "s": GroupElement(S_MATRIX, (0, 0)),
    "t": GroupElement(T_MATRIX, (0, 0)),
    # reflection in the affine wall <mu, x1^v> = -1
    "r": GroupElement(_reflection_matrix(*ROOT_DATA.positive_roots[2]), (-1, 0)),
}


def _find_omega() -> GroupElement:
    found = [
        GroupElement(u.matrix, (a, b))
        for u in W0 for a in range(-2, 3) for b in (-1, 1)
        if _im_length(u.matrix, (a, b)) == 0
    ]
    assert len(found) == 1, found
    return found[0]


OMEGA = _find_omega()
# the defining relations of Omega x| W'
assert OMEGA * OMEGA is IDENTITY
assert OMEGA * GENERATORS["r"] * OMEGA is GENERATORS["t"]
assert OMEGA * GENERATORS["s"] * OMEGA is GENERATORS["s"]
assert OMEGA * GENERATORS["t"] * OMEGA is GENERATORS["r"]

_OMEGA_SWAP = {"r": "t", "s": "s", "t": "r"}


def generator(name: str) -> GroupElement:
    """The simple reflection ``r``, ``s`` or ``t``, or ``w`` for omega."""
    if name == "w":
        return OMEGA
    try:
        return GENERATORS[name]
    except KeyError:
        raise ParseError(f"unknown generator {name!r}") from None


def from_word(word: Iterable[str], omega: int = 0) -> GroupElement:
    """omega^p times the product of the letters of ``word`` (need not be reduced)."""
    x = OMEGA if omega % 2 else IDENTITY
    for g in word:
        x = x.right_mul(g)
    return x


def translation(mu: Weight) -> GroupElement:
    """The translation t_mu, for any weight mu."""
    return GroupElement(IDENTITY_MATRIX, (mu.a, mu.b))


_ELEMENT_RE = re.compile(r"^(?:(w)(?:\.([rste]*))?|([rste]+))$")


def parse_element(text: str) -> GroupElement:
    """Parse the text syntax: ``e``, ``rtsrt``, ``w`` or ``w.rsr`` (omega * rsr)."""
    s = text.strip().replace(" ", "")
    m = _ELEMENT_RE.match(s)
    if not m:
        raise ParseError(f"cannot parse group element {text!r}")
    if m.group(1):
        word = (m.group(2) or "").replace("e", "")
        return from_word(word, omega=1)
    word = m.group(3)
    if "e" in word and word != "e":
        raise ParseError(f"'e' only stands alone: {text!r}")
    return from_word(word.replace("e", ""))


# -- functional API ------------------------------------------------------------

def multiply(a: GroupElement, b: GroupElement) -> GroupElement:
    return a * b


def length(w: GroupElement) -> int:
    return w.length


def invert(w: GroupElement) -> GroupElement:
    return w.inverse()


def descents(w: GroupElement, side: Side = "right") -> frozenset[str]:
    """L(w) or R(w): generators g with l(gw) < l(w), resp. l(wg) < l(w)."""
    if side == "left":
        return w.left_descents()
    if side == "right":
        return w.right_descents()
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def first_left_descent(w: GroupElement) -> str | None:
    n = w.length
    for g in GENERATOR_NAMES:
        if w.left_mul(g).length < n:
            return g
    return None


def first_right_descent(w: GroupElement) -> str | None:
    n = w.length
    for g in GENERATOR_NAMES:
        if w.right_mul(g).length < n:
            return g
    return None


_BRUHAT: dict[tuple[GroupElement, GroupElement], bool] = {}


def bruhat_leq(y: GroupElement, w: GroupElement) -> bool:
    """Bruhat order, extended to W by requiring equal omega-components."""
    if y.omega != w.omega:
        return False
    ly, lw = y.length, w.length
    if ly >= lw:
        return y is w
    if ly == 0:
        # the bottom of each coset
        return True
    key = (y, w)
    res = _BRUHAT.get(key)
    if res is None:
        g = first_left_descent(w)
        gw = w.left_mul(g)
        gy = y.left_mul(g)
        if gy.length < ly:
            res = bruhat_leq(gy, gw)
        else:
            res = bruhat_leq(y, gw)
        _BRUHAT[key] = res
    return res


def enumerate_elements(max_len: int, both_cosets: bool = False,
                       budget: int = DEFAULT_LENGTH_BUDGET) -> list[GroupElement]:
    """Elements of W' (optionally of W) with length <= max_len.

    Sorted by (length, omega, shortlex word); each element appears once.
    """
    if max_len > budget:
        raise BudgetExceeded(f"max_len {max_len} exceeds the length budget {budget}")
    seen = {IDENTITY}
    layer = [IDENTITY]
    for _ in range(max_len):
        nxt = []
        for x in layer:
            n = x.length
            for g in GENERATOR_NAMES:
                y = x.right_mul(g)
                if y.length > n and y not in seen:
                    seen.add(y)
                    nxt.append(y)
        layer = nxt
    out = list(seen)
    if both_cosets:
        out += [OMEGA * x for x in out]
    out.sort(key=GroupElement.sort_key)
    return out


def cayley_distances(max_len: int) -> dict[GroupElement, int]:
    """Breadth-first distances from e in the Cayley graph of (W', {r, s, t}).

    Independent of the length formula; only the group law is used.
    """
    dist = {IDENTITY: 0}
    queue = deque([IDENTITY])
    while queue:
        x = queue.popleft()
        d = dist[x]
        if d == max_len:
            continue
        for g in GENERATOR_NAMES:
            y = x * GENERATORS[g]
            if y not in dist:
                dist[y] = d + 1
                queue.append(y)
    return dist


def omega_conjugate_letter(g: str) -> str:
    """omega g omega^-1 for a generator name."""
    return _OMEGA_SWAP[g]
