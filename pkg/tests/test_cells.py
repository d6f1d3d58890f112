import random
from collections import defaultdict

import pytest

from heckeb2.cells import (
    LEFT_CELL_NAMES, a_value, c0_part, classify_left_cell, classify_right_cell,
    h1_element, parse_h1_index, project_to_quotient, reduce_mod_c0, two_sided_cell,
)
from heckeb2.coxeter import IDENTITY, OMEGA, enumerate_elements, parse_element as el
from heckeb2.errors import NotInIdeal
from heckeb2.hecke import HeckeElement
from heckeb2.laurent import ONE, QUANTUM_TWO

from oracles import has_unique_reduced_word, in_lowest_cell


def C(terms):
    return HeckeElement({el(w): c for w, c in terms.items()}, "C")


def test_classify_examples():
    assert classify_left_cell(IDENTITY) == "D"
    for m in range(5):
        assert classify_left_cell(h1_element(m, 0)) == "B_rt"
    assert a_value(el("rtsrt")) == 2
    assert a_value(IDENTITY) == 0


def test_dominant_translation_stsr():
    # stsr has a unique reduced word, so it lies in c_1 rather than c_0
    assert classify_left_cell(el("stsr")) == "C_r"
    assert has_unique_reduced_word(el("stsr"))
    assert a_value(el("stsr")) == 1


def test_omega_part():
    for w in enumerate_elements(10):
        assert a_value(OMEGA * w) == a_value(w)
        assert classify_left_cell(OMEGA * w) == classify_left_cell(w)


def test_partition_and_descent_constancy():
    by_cell = defaultdict(list)
    for w in enumerate_elements(16):
        name = classify_left_cell(w)
        assert name in LEFT_CELL_NAMES
        by_cell[name].append(w)
    assert set(by_cell) == set(LEFT_CELL_NAMES)
    for name, ws in by_cell.items():
        assert len({w.right_descents() for w in ws}) == 1, name
    right = defaultdict(set)
    for w in enumerate_elements(16):
        right[classify_right_cell(w)].add(w.left_descents())
    assert all(len(v) == 1 for v in right.values())


def test_a_values_and_oracles():
    ws = enumerate_elements(16)
    assert [w for w in ws if a_value(w) == 0] == [IDENTITY]
    for w in ws:
        a = a_value(w)
        assert a in (0, 1, 2, 4)
        assert (a == 4) == in_lowest_cell(w)
        if w is not IDENTITY:
            assert (a == 1) == has_unique_reduced_word(w)
        assert two_sided_cell(w) == {0: "c_e", 1: "c_1", 2: "c_2", 4: "c_0"}[a]


def test_reduce_examples():
    h = C({"rststr": ONE, "rt": ONE})
    assert reduce_mod_c0(h) == C({"rt": ONE})
    zero = HeckeElement.zero("C")
    assert reduce_mod_c0(zero) == zero
    assert reduce_mod_c0(reduce_mod_c0(h)) == reduce_mod_c0(h)
    assert reduce_mod_c0(h) + c0_part(h) == h
    with pytest.raises(ValueError):
        reduce_mod_c0(HeckeElement.zero("T"))


def test_project_examples():
    assert project_to_quotient(C({"rtsrt": ONE})) == {el("rtsrt"): ONE}
    with pytest.raises(NotInIdeal):
        project_to_quotient(C({"s": ONE}))
    lemma = C({"rststr": ONE, "tsrsrt": ONE, "rtsrt": -QUANTUM_TWO, "rt": ONE})
    assert project_to_quotient(lemma) == {el("rt"): ONE, el("rtsrt"): -QUANTUM_TWO}


def test_parse_h1_index():
    assert parse_h1_index(el("rt")) == (0, 0)
    assert parse_h1_index(el("rtsrt") * OMEGA) == (1, 1)
    assert parse_h1_index(el("s")) is None
    assert parse_h1_index(el("rtsrs")) is None
    for m in range(5):
        for p in (0, 1):
            assert parse_h1_index(h1_element(m, p)) == (m, p)


def test_c0_is_ideal(cache):
    rng = random.Random(5)
    low = [w for w in enumerate_elements(8) if a_value(w) == 4]
    for _ in range(8):
        h = HeckeElement({rng.choice(low): ONE, rng.choice(low): QUANTUM_TWO}, "C")
        for g in "rst":
            gen = HeckeElement({el(g): ONE}, "C")
            for prod in (cache.c_product(gen, h), cache.c_product(h, gen)):
                assert all(a_value(w) == 4 for w in prod.support())
