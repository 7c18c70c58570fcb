import pytest
from hypothesis import given, settings, strategies as st

from mvbraid.words import (
    GeneratorId,
    Letter,
    Word,
    canonical_relator,
    cyclic_reduce,
    format_generator,
    format_word,
    invert,
    lam,
    parse_generator,
    parse_word,
    rho,
    schreier,
    sigma,
    substitute,
    xgen,
)

GENS = [sigma(1), sigma(2), rho(1), rho(2), rho(1, 1)]
letters = st.builds(Letter, st.sampled_from(GENS), st.sampled_from([1, -1]))
words = st.lists(letters, max_size=20).map(Word)


def test_free_reduction():
    w = Word([(sigma(1), 1), (rho(1), 1), (rho(1), -1), (sigma(1), -1)])
    assert w == Word()
    assert len(parse_word("s1 s2 s2^-1 r1")) == 2


def test_tokens_round_trip():
    for text in ["s1", "r2", "t1", "r1.1", "l1.2", "l2.1.1", "x3.1", "m1.3", "y2.3", "z1.2", "c1",
                 "S[3;r1]", "a", "g2.3"]:
        g = parse_generator(text)
        assert parse_generator(format_generator(g)) == g
    assert parse_generator("t1") == rho(1, 1)
    assert format_generator(rho(1, 1), tau_alias=True) == "t1"
    assert parse_generator("l1.2") == lam(1, 2, 0)
    assert parse_generator("S[0;s1]") == schreier(0, sigma(1))


def test_bad_tokens():
    for text in ["1x", "l1", "s1^2", "S[1"]:
        with pytest.raises(ValueError):
            parse_generator(text)


def test_powers_expand():
    assert parse_word("s1^3") == Word([(sigma(1), 1)] * 3)
    assert parse_word("s1^-2 s1^2") == Word()
    assert format_word(Word()) == "1"
    assert parse_word("1") == Word()


def test_inverse_and_power():
    w = parse_word("s1 r2 x1.2")
    assert w * ~w == Word()
    assert w ** -1 == invert(w)
    assert w ** 0 == Word()


def test_substitute_missing_image():
    with pytest.raises(KeyError):
        substitute(parse_word("s1 s2"), {sigma(1): Word()})


def test_canonical_relator_is_class_invariant():
    r = parse_word("s1 s2 s1 s2^-1 s1^-1 s2^-1")
    variants = [r[i:] + r[:i] for i in range(len(r))]
    variants += [invert(Word(v)) for v in variants]
    assert {canonical_relator(v) for v in variants} == {canonical_relator(r)}


def test_cyclic_reduce():
    assert cyclic_reduce(parse_word("s1 s2 s1^-1")) == parse_word("s2")


def test_generator_order():
    assert sorted([xgen(1, 2), lam(2, 1), sigma(2), rho(1)]) == [sigma(2), rho(1), lam(2, 1), xgen(1, 2)]
    assert GeneratorId("a") < GeneratorId("b")


@given(words)
def test_words_are_reduced(w):
    assert all(not (a.gen == b.gen and a.exp == -b.exp) for a, b in zip(w, w[1:]))


@given(words, words)
def test_inverse_of_product(u, v):
    assert ~(u * v) == ~v * ~u


@given(words)
def test_text_round_trip(w):
    assert parse_word(format_word(w)) == w


@given(words, st.integers(0, 30))
def test_canonical_relator_rotation(w, k):
    r = cyclic_reduce(w)
    if r:
        k %= len(r)
        assert canonical_relator(r[k:] + r[:k]) == canonical_relator(r)
        assert canonical_relator(~r) == canonical_relator(r)
