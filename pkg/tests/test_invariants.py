import pytest
from hypothesis import given, settings, strategies as st

from mvbraid import catalog as C
from mvbraid.invariants import (
    AbelianInvariants,
    abelianization,
    free_factor_report,
    matmul,
    relation_matrix,
    smith_normal_form,
)


def test_snf_examples():
    assert smith_normal_form([[4, 6], [6, 9], [2, 5]]).diagonal == [1, 4]
    assert smith_normal_form([[2, 0], [0, 3]]).diagonal == [1, 6]
    assert smith_normal_form([[0, 0], [0, 0]]).diagonal == [0, 0]
    assert smith_normal_form([], 3).diagonal == []


def test_snf_y_matrix():
    # Y: three squares and three order-3 products of pairs
    m = relation_matrix(C.build("Y").presentation)
    assert sorted(smith_normal_form(m).diagonal) == [1, 1, 2]


def test_invariants_text():
    assert str(AbelianInvariants(0)) == "0"
    assert str(AbelianInvariants(2, (2, 2))) == "Z^2 ⊕ Z/2 ⊕ Z/2"
    assert AbelianInvariants(1, (2,)) + AbelianInvariants(0, (3,)) == AbelianInvariants(1, (6,))


@pytest.mark.parametrize("key,n,k,expected", [
    ("B", 3, None, AbelianInvariants(1)),
    ("Y", None, None, AbelianInvariants(0, (2,))),
    ("MkVP-claimed", 3, 2, AbelianInvariants(9)),
    ("MkVB", 3, 1, AbelianInvariants(1, (2,))),
    ("MkVB", 3, 2, AbelianInvariants(1, (2, 2))),
    ("MkVB", 3, 3, AbelianInvariants(1, (2, 2, 2))),
    ("VP", 3, None, AbelianInvariants(6)),
    ("H2", None, None, AbelianInvariants(1)),
])
def test_abelianization_oracles(key, n, k, expected):
    assert abelianization(C.build(key, n, k).presentation) == expected


def test_free_factors():
    rep = free_factor_report(C.build("MVQ3").presentation)
    assert len(rep.factors) == 3
    assert [str(i) for i in rep.invariants] == ["Z", "Z", "Z/2"]


matrices = st.integers(1, 5).flatmap(lambda c: st.lists(
    st.lists(st.integers(-12, 12), min_size=c, max_size=c), min_size=0, max_size=5).map(lambda m: (m, c)))


@settings(max_examples=500, deadline=None)
@given(matrices)
def test_snf_properties(mc):
    m, cols = mc
    f = smith_normal_form(m, cols)
    if m:
        assert matmul(matmul(f.left, m), f.right) == f.diag_matrix()
    nonzero = [d for d in f.diagonal if d]
    assert all(d > 0 for d in nonzero)
    assert all(y % x == 0 for x, y in zip(nonzero, nonzero[1:]))
