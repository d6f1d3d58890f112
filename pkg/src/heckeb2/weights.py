"""
The weight lattice of Sp4(C), its Weyl group, and rational representations.

Weights are written in the basis of fundamental weights, ``Weight(a, b)``
meaning ``a*x1 + b*x2`` where x1 is the highest weight of the 5-dimensional
module and x2 that of the 4-dimensional one.  With the long simple root
``alpha1`` (reflection s) and the short simple root ``alpha2`` (reflection t),

    alpha1 = 2*x1 - 2*x2,    alpha2 = -x1 + 2*x2,

which inverts ``x1 = alpha1 + alpha2`` and ``x2 = alpha1/2 + alpha2``.  The
coroot pairings are read off as linear functionals on (a, b): <mu, alpha1^v> = a,
<mu, alpha2^v> = b.

>>> dim(Weight(0, 1)), dim(Weight(1, 0))
(4, 5)
>>> sorted(tensor_decompose(Weight(0, 1), Weight(0, 1)).items())
[(Weight(a=0, b=0), 1), (Weight(a=0, b=2), 1), (Weight(a=1, b=0), 1)]
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import NotDominant

__all__ = [
    "Weight", "W0Element", "RootData", "ROOT_DATA", "W0", "W0_IDENTITY",
    "W0_LONGEST", "w0_act", "orbit", "dominant_representative",
    "dominance_leq", "height", "inner", "weight_multiplicity", "character",
    "dim", "weyl_dimension", "tensor_decompose", "character_product",
    "decompose_character", "dominant_weights", "fundamental_polynomial",
]


@dataclass(frozen=True, order=True, slots=True)
class Weight:
    a: int
    b: int

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "Weight":
        return Weight(-self.a, -self.b)

    def __mul__(self, k: int) -> "Weight":
        return Weight(k * self.a, k * self.b)

    __rmul__ = __mul__

    @property
    def is_dominant(self) -> bool:
        return self.a >= 0 and self.b >= 0

    def pair(self, functional: tuple[int, int]) -> int:
        return self.a * functional[0] + self.b * functional[1]

    def __str__(self):
        return f"{self.a}*x1{self.b:+d}*x2"


ZERO_WEIGHT = Weight(0, 0)
X1 = Weight(1, 0)
X2 = Weight(0, 1)


@dataclass(frozen=True)
class RootData:
    """C2 root data in fundamental-weight coordinates."""
    # alpha1 (long), alpha2 (short)
    simple_roots: tuple[Weight, Weight]
    # (root, coroot functional) for the four positive roots
    positive_roots: tuple[tuple[Weight, tuple[int, int]], ...]
    rho: Weight

    def cartan_matrix(self) -> tuple[tuple[int, int], tuple[int, int]]:
        coroots = [c for r, c in self.positive_roots[:2]]
        return tuple(
            tuple(self.simple_roots[j].pair(coroots[i]) for j in range(2))
            for i in range(2)
        )


ROOT_DATA = RootData(
    simple_roots=(Weight(2, -2), Weight(-1, 2)),
    positive_roots=(
        (Weight(2, -2), (1, 0)),   # alpha1, long
        (Weight(-1, 2), (0, 1)),   # alpha2, short
        (Weight(1, 0), (2, 1)),    # alpha1 + alpha2 = x1, short
        (Weight(0, 2), (1, 1)),    # alpha1 + 2*alpha2 = 2*x2, long
    ),
    rho=Weight(1, 1),
)

POSITIVE_ROOTS = tuple(r for r, _ in ROOT_DATA.positive_roots)
POSITIVE_COROOTS = tuple(c for _, c in ROOT_DATA.positive_roots)


def _check_root_data():
    rd = ROOT_DATA
    # <x_i, alpha_j^v> = delta_ij
    assert X1.pair(POSITIVE_COROOTS[0]) == 1 and X1.pair(POSITIVE_COROOTS[1]) == 0
    assert X2.pair(POSITIVE_COROOTS[0]) == 0 and X2.pair(POSITIVE_COROOTS[1]) == 1
    # x1 = alpha1 + alpha2, 2*x2 = alpha1 + 2*alpha2
    a1, a2 = rd.simple_roots
    assert a1 + a2 == X1 and a1 + a2 * 2 == X2 * 2
    # C2 Cartan matrix, alpha1 long
    assert rd.cartan_matrix() == ((2, -1), (-2, 2))
    for root, co in rd.positive_roots:
        assert root.pair(co) == 2


_check_root_data()


# -- the finite Weyl group -----------------------------------------------------

Matrix = tuple[int, int, int, int]


def _mat_mul(A: Matrix, B: Matrix) -> Matrix:
    return (A[0] * B[0] + A[1] * B[2], A[0] * B[1] + A[1] * B[3],
            A[2] * B[0] + A[3] * B[2], A[2] * B[1] + A[3] * B[3])


def _mat_act(A: Matrix, a: int, b: int) -> tuple[int, int]:
    return A[0] * a + A[1] * b, A[2] * a + A[3] * b


def _reflection_matrix(root: Weight, coroot: tuple[int, int]) -> Matrix:
    # mu -> mu - <mu, coroot> * root, columns are images of x1 and x2
    c1 = (1 - coroot[0] * root.a, -coroot[0] * root.b)
    c2 = (-coroot[1] * root.a, 1 - coroot[1] * root.b)
    return (c1[0], c2[0], c1[1], c2[1])


@dataclass(frozen=True)
class W0Element:
    """An element of the dihedral group <s, t> of order 8."""
    word: str
    matrix: Matrix

    def __mul__(self, other: "W0Element") -> "W0Element":
        return _W0_BY_MATRIX[_mat_mul(self.matrix, other.matrix)]

    def inverse(self) -> "W0Element":
        return _W0_BY_MATRIX[_matrix_inverse(self.matrix)]

    def act(self, mu: Weight) -> Weight:
        return Weight(*_mat_act(self.matrix, mu.a, mu.b))

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def sign(self) -> int:
        return -1 if len(self.word) % 2 else 1

    def __str__(self):
        return self.word or "e"


def _matrix_inverse(A: Matrix) -> Matrix:
    det = A[0] * A[3] - A[1] * A[2]
    # det is +-1 for every element of W0
    return (A[3] * det, -A[1] * det, -A[2] * det, A[0] * det)


S_MATRIX = _reflection_matrix(*ROOT_DATA.positive_roots[0])
T_MATRIX = _reflection_matrix(*ROOT_DATA.positive_roots[1])
IDENTITY_MATRIX: Matrix = (1, 0, 0, 1)


def _build_w0() -> list[W0Element]:
    # breadth first in shortlex order, so each stored word is shortlex-minimal
    seen = {IDENTITY_MATRIX: ""}
    frontier = [("", IDENTITY_MATRIX)]
    while frontier:
        nxt = []
        for word, m in frontier:
            for letter, g in (("s", S_MATRIX), ("t", T_MATRIX)):
                p = _mat_mul(m, g)
                if p not in seen:
                    seen[p] = word + letter
                    nxt.append((word + letter, p))
        frontier = sorted(nxt)
    return sorted((W0Element(w, m) for m, w in seen.items()),
                  key=lambda u: (len(u.word), u.word))


W0: list[W0Element] = _build_w0()
_W0_BY_MATRIX = {u.matrix: u for u in W0}
W0_IDENTITY = W0[0]
W0_LONGEST = W0[-1]
assert len(W0) == 8 and W0_LONGEST.length == 4


def w0_act(u: W0Element, mu: Weight) -> Weight:
    return u.act(mu)


def reflect(mu: Weight, root: Weight, coroot: tuple[int, int]) -> Weight:
    return mu - root * mu.pair(coroot)


def orbit(mu: Weight) -> frozenset[Weight]:
    return frozenset(u.act(mu) for u in W0)


def dominant_representative(mu: Weight) -> Weight:
    a, b = mu.a, mu.b
    while a < 0 or b < 0:
        if a < 0:
            a, b = -a, b + 2 * a
        else:
            a, b = a + b, -b
    return Weight(a, b)


def height(mu: Weight) -> int:
    """Twice the height in simple roots; strictly positive on positive roots."""
    return 4 * mu.a + 3 * mu.b


def dominance_leq(mu: Weight, lam: Weight) -> bool:
    """mu <= lam: lam - mu is a nonnegative integer combination of simple roots."""
    d = lam - mu
    c2 = d.a + d.b
    twice_c1 = 2 * d.a + d.b
    return c2 >= 0 and twice_c1 >= 0 and twice_c1 % 2 == 0


def _to_euclidean(mu: Weight) -> tuple[int, int]:
    # x1 = e1 + e2, x2 = e1 in the standard model of C2
    return mu.a + mu.b, mu.a


def inner(mu: Weight, nu: Weight) -> int:
    """W0-invariant form with (short, short) = 2."""
    m, n = _to_euclidean(mu), _to_euclidean(nu)
    return m[0] * n[0] + m[1] * n[1]


def _require_dominant(lam: Weight):
    if not lam.is_dominant:
        raise NotDominant(f"{lam} is not dominant")


def dominant_weights(lam: Weight) -> list[Weight]:
    """Dominant mu <= lam, highest first."""
    _require_dominant(lam)
    out = []
    a1, a2 = ROOT_DATA.simple_roots
    top = height(lam)
    for c1 in range(top // height(a1) + 1):
        for c2 in range(top // height(a2) + 1):
            mu = lam - a1 * c1 - a2 * c2
            if mu.is_dominant:
                out.append(mu)
    return sorted(set(out), key=lambda m: (-height(m), m))


@lru_cache(maxsize=None)
def _freudenthal(lam: Weight, mu: Weight) -> int:
    # mu is dominant and mu <= lam
    if mu == lam:
        return 1
    rho = ROOT_DATA.rho
    denom = inner(lam + rho, lam + rho) - inner(mu + rho, mu + rho)
    top = height(lam)
    total = 0
    for alpha in POSITIVE_ROOTS:
        nu = mu + alpha
        while height(nu) <= top:
            m = weight_multiplicity(lam, nu)
            if m:
                total += m * inner(nu, alpha)
            nu = nu + alpha
    value = Fraction(2 * total, denom)
    assert value.denominator == 1, (lam, mu, value)
    return int(value)


def weight_multiplicity(lam: Weight, mu: Weight) -> int:
    """Dimension of the mu-weight space of V(lam), by Freudenthal's recursion."""
    _require_dominant(lam)
    mu = dominant_representative(mu)
    if not dominance_leq(mu, lam):
        return 0
    return _freudenthal(lam, mu)


@lru_cache(maxsize=None)
def _character(lam: Weight) -> tuple[tuple[Weight, int], ...]:
    out = {}
    for mu in dominant_weights(lam):
        m = _freudenthal(lam, mu)
        if m:
            for nu in orbit(mu):
                out[nu] = m
    return tuple(sorted(out.items()))


def character(lam: Weight) -> dict[Weight, int]:
    """The formal character of V(lam): weight -> multiplicity."""
    _require_dominant(lam)
    return dict(_character(lam))


def dim(lam: Weight) -> int:
    return sum(character(lam).values())


def weyl_dimension(lam: Weight) -> int:
    _require_dominant(lam)
    rho = ROOT_DATA.rho
    num = den = 1
    for co in POSITIVE_COROOTS:
        num *= (lam + rho).pair(co)
        den *= rho.pair(co)
    assert num % den == 0
    return num // den


def character_product(chi: dict[Weight, int], psi: dict[Weight, int]) -> Counter:
    out: Counter = Counter()
    for mu, m in chi.items():
        for nu, n in psi.items():
            out[mu + nu] += m * n
    return out


def decompose_character(chi: dict[Weight, int]) -> dict[Weight, int]:
    """Write a W0-invariant virtual character as a sum of irreducible characters.

    Peels off the character of a highest remaining weight until nothing is left.
    """
    rest = Counter({mu: m for mu, m in chi.items() if m})
    out: dict[Weight, int] = {}
    while rest:
        top = max(rest, key=lambda mu: (height(mu), mu))
        if not top.is_dominant:
            raise ValueError("input is not W0-invariant")
        c = rest[top]
        out[top] = out.get(top, 0) + c
        for nu, m in character(top).items():
            rest[nu] -= c * m
            if not rest[nu]:
                del rest[nu]
    return out


def tensor_decompose(lam: Weight, lam2: Weight) -> dict[Weight, int]:
    """Multiplicities m such that V(lam) (x) V(lam2) = sum m_z V(z)."""
    _require_dominant(lam)
    _require_dominant(lam2)
    return decompose_character(character_product(character(lam), character(lam2)))


@lru_cache(maxsize=None)
def _fundamental_polynomial(lam: Weight) -> tuple[tuple[tuple[int, int], int], ...]:
    rest = {lam: 1}
    poly: dict[tuple[int, int], int] = {}
    while rest:
        top = max(rest, key=lambda mu: (height(mu), mu))
        c = rest[top]
        poly[(top.a, top.b)] = poly.get((top.a, top.b), 0) + c
        chi = {ZERO_WEIGHT: 1}
        for _ in range(top.a):
            chi = character_product(chi, character(X1))
        for _ in range(top.b):
            chi = character_product(chi, character(X2))
        for nu, m in decompose_character(chi).items():
            v = rest.get(nu, 0) - c * m
            if v:
                rest[nu] = v
            else:
                rest.pop(nu, None)
    return tuple(sorted(poly.items()))


def fundamental_polynomial(lam: Weight) -> dict[tuple[int, int], int]:
    """Integer polynomial f with chi(lam) = f(chi(x1), chi(x2)).

    Returned as a map (i, j) -> coefficient of chi(x1)^i * chi(x2)^j.
    """
    _require_dominant(lam)
    return dict(_fundamental_polynomial(lam))
