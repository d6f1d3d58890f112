"""Exact computations in the Hecke algebra of the extended affine Weyl group of type B2~.

>>> from heckeb2 import parse_element, c_basis
>>> print(c_basis(parse_element("s")))
q^(-1/2)·T[s] + q^(-1/2)·T[e]
"""

from .bernstein import CentralElement, central_product, s_element, theta, z_element
from .cells import (
    a_value, classify_left_cell, classify_right_cell, h1_element, parse_h1_index,
    project_to_quotient, reduce_mod_c0, two_sided_cell,
)
from .coxeter import (
    GENERATORS, IDENTITY, OMEGA, GroupElement, bruhat_leq, descents,
    enumerate_elements, from_word, generator, invert, length, multiply,
    parse_element, translation,
)
from .errors import (
    BasisMismatch, BudgetExceeded, HeckeError, NotDivisible, NotDominant,
    NotInH1, NotInIdeal, NotSymmetric, ParseError, VerificationFailure,
)
from .hecke import HeckeElement, T, t_inverse, t_inverse_generator, t_multiply
from .klbasis import (
    KLCache, c_basis, c_multiply, c_product, c_to_t, default_cache,
    kl_polynomial, mu, mu_tilde, t_to_c,
)
from .laurent import ONE, QUANTUM_TWO, ZERO, LaurentPoly
from .phimaps import (
    Report, crt_s_product, lemma31_verify, lemma31a_verify, lemma32_verify,
    lemma35_check, mu_conjecture_scan, phi1, phi1_inverse, phi_S, phi_S_method1,
    prop33_verify, theorem36_verify,
)
from .repring import (
    MonomialElt, RepRingElt, irrep_to_monomial, monomial_to_irrep,
    phi_tilde_theta, rf_multiply,
)
from .weights import (
    X1, X2, Weight, character, dim, orbit, tensor_decompose, weight_multiplicity,
)

__version__ = "0.1.0"
