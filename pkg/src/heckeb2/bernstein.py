"""
Bernstein elements and the central basis S_lambda.

For a weight x = x' - x'' with x', x'' dominant,

    theta_x = (q^(-l(x')/2) T_{x'}) (q^(-l(x'')/2) T_{x''})^-1,

z_lambda is the sum of theta over the W0-orbit of lambda, and

    S_lambda = sum_{mu dominant, mu <= lambda} d_mu(lambda) z_mu
             = sum_x d_x(lambda) theta_x.

The S_lambda span the centre of the Hecke algebra and multiply like the
irreducible characters of Sp4(C).

>>> from heckeb2.weights import Weight
>>> print(theta(Weight(1, 0)))
q^-2·T[stsr]
>>> len(s_element(Weight(1, 0)).expansion.support())
19
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .coxeter import GroupElement, OMEGA, from_word, translation
from .errors import NotDominant, VerificationFailure
from .hecke import HeckeElement, T, right_mul_inverse
from .laurent import LaurentPoly
from .weights import Weight, character, orbit, tensor_decompose

__all__ = [
    "CentralElement", "translation_element", "theta", "theta_from",
    "z_element", "s_element", "central_product",
]


def _require_dominant(mu: Weight):
    if not mu.is_dominant:
        raise NotDominant(f"{mu} is not dominant")


def translation_element(mu: Weight) -> GroupElement:
    """t_mu for dominant mu; equals (stsr)^a (w.rsr)^b."""
    _require_dominant(mu)
    return translation(mu)


def translation_word_product(mu: Weight) -> GroupElement:
    """(stsr)^a (omega rsr)^b computed as a word product."""
    _require_dominant(mu)
    x = from_word("stsr" * mu.a)
    y = from_word("rsr", omega=1)
    for _ in range(mu.b):
        x = x * y
    return x


def theta_from(x_plus: Weight, x_minus: Weight) -> HeckeElement:
    """theta_{x_plus - x_minus} from an explicit dominant decomposition."""
    _require_dominant(x_plus)
    _require_dominant(x_minus)
    tp, tm = translation(x_plus), translation(x_minus)
    h = right_mul_inverse(T(tp), tm)
    return h.scale(LaurentPoly.monomial(tm.length - tp.length))


@lru_cache(maxsize=None)
def _theta(x: Weight) -> HeckeElement:
    x_plus = Weight(max(x.a, 0), max(x.b, 0))
    return theta_from(x_plus, x_plus - x)


def theta(x: Weight) -> HeckeElement:
    """theta_x with the canonical split x' = (max(a,0), max(b,0))."""
    return _theta(x)


def z_element(lam: Weight) -> HeckeElement:
    """Sum of theta over the W0-orbit of a dominant weight."""
    _require_dominant(lam)
    out = HeckeElement.zero("T")
    for x in sorted(orbit(lam)):
        out = out + theta(x)
    return out


@dataclass(frozen=True, eq=False)
class CentralElement:
    weight: Weight
    expansion: HeckeElement

    def commutes_with(self, g: str) -> bool:
        """S T_g == T_g S for g in {r, s, t, w}."""
        from .coxeter import generator
        Tg = T(OMEGA if g == "w" else generator(g))
        return self.expansion * Tg == Tg * self.expansion


@lru_cache(maxsize=None)
def _s_element(lam: Weight) -> CentralElement:
    acc = HeckeElement.zero("T")
    for x, d in sorted(character(lam).items()):
        acc = acc + theta(x).scale(d)
    return CentralElement(lam, acc)


def s_element(lam: Weight) -> CentralElement:
    """S_lambda in the T-basis."""
    _require_dominant(lam)
    return _s_element(lam)


def s_element_from_orbits(lam: Weight) -> HeckeElement:
    """S_lambda as sum_{mu dominant} d_mu(lambda) z_mu (second route, for checks)."""
    from .weights import dominant_weights, weight_multiplicity
    out = HeckeElement.zero("T")
    for mu in dominant_weights(lam):
        d = weight_multiplicity(lam, mu)
        if d:
            out = out + z_element(mu).scale(d)
    return out


def central_product(lam: Weight, lam2: Weight) -> dict[Weight, int]:
    """Decomposition of S_lam S_lam2 into S_z, verified in the Hecke algebra.

    The multiplicities come from the tensor product of Sp4 modules; the product
    of the two central elements is then compared term by term with sum m_z S_z.
    """
    _require_dominant(lam)
    _require_dominant(lam2)
    predicted = tensor_decompose(lam, lam2)
    lhs = s_element(lam).expansion * s_element(lam2).expansion
    rhs = HeckeElement.zero("T")
    for z, m in predicted.items():
        rhs = rhs + s_element(z).expansion.scale(m)
    if lhs != rhs:
        raise VerificationFailure(
            f"S_{lam} S_{lam2} does not match the tensor decomposition",
            {"lhs": lhs.to_json(), "rhs": rhs.to_json(),
             "predicted": {str(z): m for z, m in predicted.items()}})
    return predicted
