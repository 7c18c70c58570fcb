import pytest
from hypothesis import given, strategies as st

from mvbraid.perm import (
    DegreeMismatch,
    Permutation,
    enumerate_symmetric,
    evaluate,
    parse_permutation,
)
from mvbraid.words import parse_word, rho, sigma

perms4 = st.permutations([1, 2, 3, 4]).map(Permutation)


def test_right_action_convention():
    a = Permutation.transposition(3, 1, 2)
    b = Permutation.transposition(3, 2, 3)
    # 1 -a-> 2 -b-> 3
    assert (a * b)(1) == 3
    assert str(a * b) == "(1 3 2)"


def test_evaluate_left_to_right():
    images = {sigma(1): Permutation.transposition(3, 1, 2), sigma(2): Permutation.transposition(3, 2, 3)}
    assert evaluate(parse_word("s1 s2"), images) == images[sigma(1)] * images[sigma(2)]
    assert evaluate(parse_word("s1 s2 s1 s2^-1 s1^-1 s2^-1"), images).is_identity()


def test_evaluate_errors():
    with pytest.raises(KeyError):
        evaluate(parse_word("s1 r1"), {sigma(1): Permutation.identity(3)})
    with pytest.raises(DegreeMismatch):
        evaluate(parse_word("s1"), {sigma(1): Permutation.identity(3), rho(1): Permutation.identity(4)})


def test_parse():
    assert parse_permutation("(1 2)(3 4)") == Permutation([2, 1, 4, 3])
    assert parse_permutation("()", 3).is_identity()
    assert parse_permutation("[2,3,1]") == Permutation.from_cycles(3, [(1, 2, 3)])
    with pytest.raises(ValueError):
        Permutation([1, 1, 2])
    with pytest.raises(DegreeMismatch):
        parse_permutation("2 1", 3)


def test_enumerate_symmetric():
    assert len(enumerate_symmetric(4)) == 24
    assert len(set(enumerate_symmetric(3))) == 6
    with pytest.raises(ValueError):
        enumerate_symmetric(0)


@given(perms4, perms4, perms4)
def test_group_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert (a * a.inverse()).is_identity()
    assert parse_permutation(str(a), 4) == a
