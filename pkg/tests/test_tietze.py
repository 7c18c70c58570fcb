import pytest
from hypothesis import assume, given, settings, strategies as st

from mvbraid.invariants import abelianization
from mvbraid.presentation import Presentation
from mvbraid.tietze import (
    RelatorTooLong,
    commutation_class,
    commuting_pairs,
    eliminate_generator,
    equivalent_mod_commutation,
    involutions,
    normalize_involutions,
    reduce_involutions,
    relator_sets_equal,
    simplify,
    simplify_with_report,
)
from mvbraid.words import GeneratorId, Letter, Word, canonical_relator, parse_word

a, b, u, v = (GeneratorId(x) for x in "abuv")


def test_eliminate_generator():
    p = Presentation.create("G", [a, b, u], [parse_word("u a^-1 b^-1"), parse_word("u u u")])
    q = eliminate_generator(p, u, parse_word("u a^-1 b^-1"))
    assert q.generators == (a, b)
    assert q.relator_set() == {canonical_relator(parse_word("a b a b a b"))}
    assert q.resolve_word(parse_word("u")) == parse_word("b a")


def test_eliminate_requires_single_occurrence():
    p = Presentation.create("G", [a], [parse_word("a a")])
    with pytest.raises(ValueError):
        eliminate_generator(p, a, parse_word("a a"))


def test_relator_length_cap():
    p = Presentation.create("G", [a, b], [parse_word("a b b b b"), parse_word("a a a a")])
    with pytest.raises(RelatorTooLong):
        eliminate_generator(p, a, parse_word("a b b b b"), max_length=8)


def test_simplify_trefoil_presentation():
    # <a, b, u | u = a b, a u = u b ...> reduces to two generators
    p = Presentation.create("G", [a, b, u], [parse_word("u b^-1 a^-1"), parse_word("a b a b^-1 a^-1 b^-1")])
    q = simplify(p)
    assert len(q.generators) == 2
    assert abelianization(q) == abelianization(p)


def test_simplify_budget():
    p = Presentation.create("G", [a, b, u], [parse_word("a"), parse_word("b"), parse_word("u")])
    rep = simplify_with_report(p, budget=1)
    assert rep.exhausted
    assert len(rep.presentation.generators) == 2
    assert simplify(p).generators == ()


def test_involutions():
    p = Presentation.create("G", [a, b], [parse_word("a a"), parse_word("a b a b^-1")])
    assert involutions(p) == {a}
    assert reduce_involutions(parse_word("a^-1 b a a b"), frozenset({a})) == parse_word("a b b")
    q = normalize_involutions(p)
    assert canonical_relator(parse_word("a b a b^-1")) in q.relator_set()


def test_commutation():
    rels = [parse_word("a b a^-1 b^-1"), parse_word("a u a^-1 u^-1")]
    pairs = commuting_pairs(rels)
    assert pairs == {frozenset((a, b)), frozenset((a, u))}
    assert equivalent_mod_commutation(parse_word("a b u a^-1 b^-1 u^-1"), parse_word("b a u b^-1 a^-1 u^-1"), pairs)
    assert not equivalent_mod_commutation(parse_word("b u b^-1 u^-1"), parse_word("a u a^-1 u^-1"), pairs)
    assert canonical_relator(parse_word("u v")) in commutation_class(parse_word("v u"), pairs)


def test_relator_sets_equal():
    p = Presentation.create("P", [a, b], [parse_word("a b a^-1 b^-1")])
    q = Presentation.create("Q", [a, b], [parse_word("b a b^-1 a^-1")])
    assert relator_sets_equal(p, q).equal
    r = Presentation.create("R", [a, u], [parse_word("a a")])
    cmp = relator_sets_equal(p, r)
    assert not cmp.equal
    assert cmp.generators_only_left == [b]
    assert "relators only in R" in cmp.to_text()


GENS = [a, b, u, v]
letters = st.builds(Letter, st.sampled_from(GENS), st.sampled_from([1, -1]))
relators = st.lists(letters, min_size=1, max_size=8).map(Word)


@settings(max_examples=1000, deadline=None)
@given(st.lists(relators, max_size=5), st.sampled_from(GENS), st.sampled_from([1, -1]),
       st.lists(letters, max_size=6), st.lists(letters, max_size=6))
def test_eliminate_preserves_abelianization(rels, g, e, left, right):
    rest = [let for let in left + right if let.gen != g]
    defining = Word(rest[:len(left)] + [Letter(g, e)] + rest[len(left):])
    assume(sum(1 for let in defining if let.gen == g) == 1)
    p = Presentation.create("G", GENS, list(rels) + [defining])
    q = eliminate_generator(p, g, canonical_relator(defining))
    assert abelianization(q) == abelianization(p)
