import pytest
from hypothesis import given, settings, strategies as st

from mvbraid import catalog as C
from mvbraid.cosets import (
    kernel_coset_table,
    lambda_words,
    schreier_transversal,
    todd_coxeter,
)
from mvbraid.errors import CosetLimitExceeded, NotWellDefined
from mvbraid.perm import Permutation, enumerate_symmetric
from mvbraid.pipeline import enumerate_kernel, kernel_table
from mvbraid.presentation import Presentation
from mvbraid.words import GeneratorId, Word, parse_word

a, b = GeneratorId("a"), GeneratorId("b")


def _group(rels):
    return Presentation.create("G", [a, b], [parse_word(r) for r in rels])


@pytest.mark.parametrize("rels,order", [
    (["a a", "b b b", "a b a b"], 6),          # S3
    (["a a", "b b b", "a b a b a b"], 12),     # A4
    (["a a", "b b b", "a b a b a b a b"], 24), # S4
    (["a a", "b b b", "a b a b a b a b a b"], 60),  # A5
])
def test_todd_coxeter_orders(rels, order):
    t = todd_coxeter(_group(rels))
    assert t.degree == order
    assert not t.check()


def test_todd_coxeter_subgroup_index():
    # <b> has index 20 in A5
    t = todd_coxeter(_group(["a a", "b b b", "a b a b a b a b a b"]), [parse_word("b")])
    assert t.degree == 20


def test_todd_coxeter_limit():
    with pytest.raises(CosetLimitExceeded):
        todd_coxeter(_group(["a a", "b b b"]), max_cosets=50)


def test_limit_from_environment(monkeypatch):
    monkeypatch.setenv("MVBRAID_MAX_COSETS", "10")
    with pytest.raises(CosetLimitExceeded):
        todd_coxeter(_group(["a a", "b b b", "a b a b a b a b a b"]))


def test_index_one():
    t = todd_coxeter(_group(["a", "b"]))
    assert t.degree == 1
    tr = schreier_transversal(t)
    assert tr.reps == (Word(),)


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("key", ["phi", "psi"])
def test_kernel_index(n, k, key):
    _, t = kernel_table("MkVB", n, k, key)
    assert t.degree == len(enumerate_symmetric(n))
    assert not t.check()
    assert t.labels[0].is_identity()
    assert list(t.labels) == sorted(t.labels)


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("key", ["phi", "psi"])
def test_enumeration_reproduces_kernel_table(n, k, key):
    _, t = kernel_table("MkVB", n, k, key)
    assert enumerate_kernel("MkVB", n, k, key).rows == t.standardized().rows


def test_kernel_table_rejects_bad_map():
    p = C.build("sym-MVB3").presentation
    with pytest.raises(NotWellDefined):
        kernel_coset_table(p, C.build_hom("rho-only").images)


def test_lambda_words():
    assert len(lambda_words(4)) == 24
    assert set(lambda_words(2)) == {Word(), parse_word("r1")}
    assert parse_word("r2 r1") in lambda_words(3)


@pytest.mark.parametrize("n,k", [(3, 2), (4, 1)])
def test_lambda_transversal(n, k):
    _, t = kernel_table("MkVB", n, k, "phi")
    tr = schreier_transversal(t, "lambda", n)
    assert tr.is_prefix_closed()
    assert all(t.trace(w) == c for c, w in enumerate(tr.reps))
    assert tr[0] == Word()


def test_lambda_transversal_needs_n():
    _, t = kernel_table("MkVB", 3, 1, "phi")
    with pytest.raises(ValueError):
        schreier_transversal(t, "lambda")
    with pytest.raises(ValueError):
        schreier_transversal(t, "other")


def test_table_json():
    _, t = kernel_table("MkVB", 2, 1, "phi")
    data = t.to_json()
    assert data["degree"] == 2
    assert data["action"]["s1"] == [1, 0]


# ------------------------------------------------------------ properties

perm_images = st.integers(2, 5).flatmap(
    lambda m: st.tuples(st.permutations(list(range(1, m + 1))), st.permutations(list(range(1, m + 1)))))


@settings(max_examples=1000, deadline=None)
@given(perm_images)
def test_bfs_transversal_prefix_closed(images):
    free = Presentation.create("F2", [a, b], [])
    t = kernel_coset_table(free, {a: Permutation(images[0]), b: Permutation(images[1])})
    tr = schreier_transversal(t, "bfs")
    assert tr.is_prefix_closed()
    assert all(t.trace(w) == c for c, w in enumerate(tr.reps))
