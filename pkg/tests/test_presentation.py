import json

from mvbraid.presentation import (
    Presentation,
    format_presentation,
    rename_generators,
    support_components,
    validate,
)
from mvbraid.words import GeneratorId, lam, parse_word, sigma

a, b, u = GeneratorId("a"), GeneratorId("b"), GeneratorId("u")


def test_create_canonicalizes_and_dedupes():
    p = Presentation.create("G", [a, b], [parse_word("a b a^-1 b^-1"), parse_word("b a b^-1 a^-1"),
                                          parse_word("a a^-1")])
    assert len(p.relators) == 1


def test_json_round_trip():
    p = Presentation.create("B3", [sigma(1), sigma(2)], [parse_word("s1 s2 s1 s2^-1 s1^-1 s2^-1")])
    data = json.loads(p.dumps())
    assert data["generators"] == ["s1", "s2"]
    assert Presentation.loads(p.dumps()) == p


def test_validate():
    p = Presentation("G", (a, a), (parse_word("a b"), parse_word("a b")))
    rep = validate(p)
    assert not rep.ok
    assert rep.duplicate_generators == [a]
    assert rep.undeclared == [(0, b), (1, b)]
    assert rep.duplicate_relators == [1]


def test_support_components():
    p = Presentation.create("G", [a, b, u, GeneratorId("v")],
                            [parse_word("a b a^-1 b^-1"), parse_word("u u")])
    parts = support_components(p)
    assert [len(q.generators) for q in parts] == [2, 1, 1]
    assert [len(q.relators) for q in parts] == [1, 1, 0]


def test_rename():
    p = Presentation.create("G", [a, b], [parse_word("a b a^-1 b^-1")])
    q = rename_generators(p, {a: lam(1, 2)})
    assert q.generators == (lam(1, 2), b)
    assert "l1.2" in format_presentation(q)


def test_resolve_word():
    p = Presentation.create("G", [a], [], {b: parse_word("a a")})
    assert p.resolve_word(parse_word("b^-1 a")) == parse_word("a^-1")
