import pytest

from heckeb2.coxeter import (
    GENERATORS, IDENTITY, OMEGA, bruhat_leq, descents, enumerate_elements,
    from_word, generator, invert, length, multiply, parse_element as el,
    translation,
)
from heckeb2.errors import BudgetExceeded, ParseError
from heckeb2.weights import Weight

from oracles import bfs_length, subword_leq

r, s, t = (GENERATORS[g] for g in "rst")


def test_multiply_examples():
    assert str(r * t) == "rt" and (r * t).length == 2
    assert s * s is IDENTITY
    x = el("stsr") * el("w.rsr")
    assert x is translation(Weight(1, 1))
    assert x.length == 7 and bfs_length(x.coxeter_part) == 7


def test_relations():
    assert r * t is t * r
    assert from_word("rs" * 4) is IDENTITY
    assert from_word("st" * 4) is IDENTITY
    assert OMEGA * OMEGA is IDENTITY
    assert OMEGA * r is t * OMEGA
    assert OMEGA * s is s * OMEGA
    assert OMEGA * t is r * OMEGA


def test_length_examples():
    assert length(IDENTITY) == 0
    assert length(el("stsr")) == 4
    assert length(el("w.rsr")) == 3


def test_fundamental_translations():
    assert translation(Weight(1, 0)) is el("stsr")
    assert translation(Weight(0, 1)) is el("w.rsr")


def test_descents_examples():
    assert descents(el("rt"), "right") == {"r", "t"}
    assert descents(OMEGA * r, "left") == {"t"}
    assert descents(el("w.rsr"), "right") == {"r"}


def test_bruhat_examples():
    for w in enumerate_elements(4):
        assert bruhat_leq(IDENTITY, w)
    assert bruhat_leq(el("rt"), el("rtsrt"))
    assert not bruhat_leq(s, el("rt"))
    assert not bruhat_leq(el("r"), el("w.r"))


def test_invert_examples():
    assert invert(IDENTITY) is IDENTITY
    assert invert(el("rt")) is el("rt")
    assert str(invert(el("stsr"))) == "rsts"


def test_enumerate_small():
    assert enumerate_elements(0) == [IDENTITY]
    assert [str(w) for w in enumerate_elements(1)] == ["e", "r", "s", "t"]
    two = enumerate_elements(2)
    assert [str(w) for w in two] == ["e", "r", "s", "t", "rs", "rt", "sr", "st", "ts"]
    assert len(two) == 9


def test_enumerate_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_elements(30)
    assert len(enumerate_elements(12, both_cosets=True)) == 2 * len(enumerate_elements(12))


def test_parse_errors():
    for bad in ("x", "w.rx", "ee", "re", ""):
        with pytest.raises(ParseError):
            el(bad)
    assert generator("w") is OMEGA


def test_print_round_trip():
    for w in enumerate_elements(10, both_cosets=True):
        assert el(str(w)) is w


def test_exchange_condition():
    for w in enumerate_elements(10, both_cosets=True):
        for g in "rst":
            assert abs(w.right_mul(g).length - w.length) == 1
            assert abs(w.left_mul(g).length - w.length) == 1


def test_inverse_and_length():
    for w in enumerate_elements(10, both_cosets=True):
        assert w * invert(w) is IDENTITY
        assert invert(w).length == w.length


def test_length_matches_bfs():
    for w in enumerate_elements(12):
        assert bfs_length(w) == w.length


def test_translations_additive():
    ws = [Weight(a, b) for a in range(-2, 3) for b in range(-2, 3)]
    for mu in ws:
        for nu in ws[::3]:
            assert translation(mu) * translation(nu) is translation(mu + nu)
            assert translation(mu) * translation(nu) is translation(nu) * translation(mu)


def test_translation_acts_by_shift():
    x = translation(Weight(1, 1))
    assert x.act(Weight(0, 0)) == Weight(1, 1)
    assert x.act(Weight(2, -1)) == Weight(3, 0)


def test_bruhat_against_subwords():
    elems = enumerate_elements(8)
    for w in elems[::7]:
        for y in elems:
            if y.length <= w.length:
                assert bruhat_leq(y, w) == subword_leq(y, w), (y, w)


def test_bruhat_is_partial_order_refining_length():
    elems = enumerate_elements(6)
    for x in elems:
        assert bruhat_leq(x, x)
        for y in elems:
            if bruhat_leq(x, y) and x is not y:
                assert x.length < y.length
                assert not bruhat_leq(y, x)


def test_multiply_function():
    assert multiply(r, t) is r * t
