"""
Left cells, two-sided cells and the a-function of W (type B2~).

The sixteen left cells are cut out by right descent sets W^J = {w : R(w) = J}
and by right-multiplication chains.  A chain step ``X = Y g`` is read as:
w is in X iff R(w) is the descent set of X, wg < w and wg is in Y.

    A_rs = W^rs      A_rt = A_rs t     A_s = A_rt s     A_r = A_s r
    A_st = W^st      A_rt' = A_st r    A_s' = A_rt' s   A_t = A_s' t
    B_rt = W^rt - (A_rt u A_rt')       B_s = B_rt s     B_r = B_s r    B_t = B_s t
    C_r = W^r - (A_r u B_r)   C_t = W^t - (A_t u B_t)   C_s = W^s - (A_s u A_s' u B_s)
    D = W^{} = {e}

Two-sided cells: c_0 (the A's, a = 4), c_2 (the B's, a = 2), c_1 (the C's,
a = 1), c_e = {e}.  Elements of the omega-coset are classified by their
W'-component.

>>> from heckeb2.coxeter import parse_element as el
>>> classify_left_cell(el("rtsrt")), a_value(el("rtsrt"))
('B_rt', 2)
>>> classify_left_cell(el("stsr")), a_value(el("w.rsr"))
('C_r', 1)
>>> classify_left_cell(el("rsrs"))
'A_rs'
"""

from __future__ import annotations

from functools import lru_cache

from .coxeter import GroupElement, OMEGA, from_word
from .errors import NotInIdeal
from .hecke import HeckeElement
from .laurent import LaurentPoly

__all__ = [
    "LEFT_CELL_NAMES", "TWO_SIDED_CELLS", "classify_left_cell",
    "classify_right_cell", "two_sided_cell", "a_value", "reduce_mod_c0",
    "project_to_quotient", "parse_h1_index", "h1_element",
]

LEFT_CELL_NAMES = (
    "A_rs", "A_rt", "A_s", "A_r", "A_st", "A_rt'", "A_s'", "A_t",
    "B_rt", "B_s", "B_r", "B_t", "C_r", "C_t", "C_s", "D",
)

# name -> (two-sided cell, a-value)
TWO_SIDED_CELLS = {"A": ("c_0", 4), "B": ("c_2", 2), "C": ("c_1", 1), "D": ("c_e", 0)}

# chain steps: cell -> (required descent set, generator, parent cell)
_CHAINS = {
    "A_rt": ("rt", "t", "A_rs"),
    "A_s": ("s", "s", "A_rt"),
    "A_r": ("r", "r", "A_s"),
    "A_rt'": ("rt", "r", "A_st"),
    "A_s'": ("s", "s", "A_rt'"),
    "A_t": ("t", "t", "A_s'"),
    "B_s": ("s", "s", "B_rt"),
    "B_r": ("r", "r", "B_s"),
    "B_t": ("t", "t", "B_s"),
}


def _descent_key(w: GroupElement) -> str:
    return "".join(sorted(w.right_descents()))


def _in_chain(w: GroupElement, cell: str) -> bool:
    descent, g, parent = _CHAINS[cell]
    if _descent_key(w) != descent:
        return False
    u = w.right_mul(g)
    return u.length < w.length and _classify(u) == parent


@lru_cache(maxsize=None)
def _classify(w: GroupElement) -> str:
    # w in W'
    J = _descent_key(w)
    if J == "":
        return "D"
    if J == "rs":
        return "A_rs"
    if J == "st":
        return "A_st"
    if J == "rt":
        for cell in ("A_rt", "A_rt'"):
            if _in_chain(w, cell):
                return cell
        return "B_rt"
    if J == "s":
        for cell in ("A_s", "A_s'", "B_s"):
            if _in_chain(w, cell):
                return cell
        return "C_s"
    if J == "r":
        for cell in ("A_r", "B_r"):
            if _in_chain(w, cell):
                return cell
        return "C_r"
    if J == "t":
        for cell in ("A_t", "B_t"):
            if _in_chain(w, cell):
                return cell
        return "C_t"
    raise AssertionError(f"unexpected descent set {J!r} for {w}")


def classify_left_cell(w: GroupElement) -> str:
    """Name of the left cell containing w (via its W'-component)."""
    return _classify(w.coxeter_part)


def classify_right_cell(w: GroupElement) -> str:
    """Right cells are inverses of left cells; named after the left cell of w^-1."""
    return _classify(w.coxeter_part.inverse())


def two_sided_cell(w: GroupElement) -> str:
    return TWO_SIDED_CELLS[classify_left_cell(w)[0]][0]


def a_value(w: GroupElement) -> int:
    return TWO_SIDED_CELLS[classify_left_cell(w)[0]][1]


def reduce_mod_c0(h: HeckeElement) -> HeckeElement:
    """Drop every C_w with w in the lowest two-sided cell."""
    if h.basis != "C":
        raise ValueError("reduce_mod_c0 expects a C-basis element")
    return HeckeElement._wrap({w: c for w, c in h._terms.items() if a_value(w) != 4}, "C")


def c0_part(h: HeckeElement) -> HeckeElement:
    """The terms of a C-basis element lying in H_{c0}."""
    if h.basis != "C":
        raise ValueError("c0_part expects a C-basis element")
    return HeckeElement._wrap({w: c for w, c in h._terms.items() if a_value(w) == 4}, "C")


def project_to_quotient(h: HeckeElement) -> dict[GroupElement, LaurentPoly]:
    """Coordinates of the image of h in H_{>=2} / H_{c0}, basis indexed by c_2."""
    if h.basis != "C":
        raise ValueError("project_to_quotient expects a C-basis element")
    out = {}
    for w, c in h._terms.items():
        a = a_value(w)
        if a < 2:
            raise NotInIdeal(f"C[{w}] has a-value {a}; element is not in H_{{>=2}}")
        if a == 2:
            out[w] = c
    return out


@lru_cache(maxsize=None)
def h1_element(m: int, p: int) -> GroupElement:
    """rt(srt)^m omega^p."""
    x = from_word("rt" + "srt" * m)
    return x * OMEGA if p else x


def parse_h1_index(w: GroupElement) -> tuple[int, int] | None:
    """(m, p) when w = rt(srt)^m omega^p, else None."""
    p = w.omega
    u = w * OMEGA if p else w
    n = u.length
    if n < 2 or (n - 2) % 3:
        return None
    m = (n - 2) // 3
    return (m, p) if h1_element(m, p) is w else None
