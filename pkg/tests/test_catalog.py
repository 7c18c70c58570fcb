import pytest

from mvbraid import catalog as C
from mvbraid.perm import evaluate
from mvbraid.words import GeneratorId, canonical_relator, lam, parse_word, rho, sigma


def test_keys_build():
    for key in C.keys():
        p = C.build(key).presentation
        assert p.generators


def test_unknown_key():
    with pytest.raises(C.UnknownKey):
        C.build("nope")
    with pytest.raises(C.UnknownKey):
        C.build_hom("nope")


def test_parameter_checks():
    with pytest.raises(ValueError):
        C.build("MkVB", 1, 1)
    with pytest.raises(ValueError):
        C.build("sym-MkVB", 3, 1)


@pytest.mark.parametrize("n,k,count", [
    # 1 braid; per sort 2 squares + 1 rho braid + 1 mixed
    (3, 1, 5), (3, 2, 9),
    # 2 braid + 1 far; per sort 3 squares + 2 braid + 1 far + 2 mixed + 2 far sigma/rho;
    # 2 far rho^(0)/rho^(1) pairs
    (4, 2, 25),
])
def test_mkvb_counts(n, k, count):
    p = C.build("MkVB", n, k).presentation
    assert len(p.generators) == (n - 1) * (k + 1)
    assert len(p.relators) == count


def test_b3():
    p = C.build("B", 3).presentation
    assert p.relator_set() == {canonical_relator(parse_word("s1 s2 s1 s2^-1 s1^-1 s2^-1"))}


@pytest.mark.parametrize("key", ["phi", "psi", "chi3", "chi4"])
def test_maps_well_defined(key):
    for n, k in [(2, 1), (3, 2), (4, 3)]:
        if key.startswith("chi") and (n, k) != (3, 2):
            continue
        hom = C.build_hom(key, n, k)
        for r in hom.source.relators:
            assert evaluate(r, hom.images).is_identity()


def test_claimed_index_ranges():
    p = C.build("MkVP-claimed", 3, 3).presentation
    gens = set(p.generators)
    assert lam(2, 1) in gens and lam(1, 2, 1) in gens
    assert lam(2, 1, 1) not in gens and lam(2, 1, 2) not in gens
    assert len(p.generators) == 6 + 3 * 2
    assert len(p.relators) == 6 + 2
    # commuting relators need four distinct strands
    assert not any(len(r) == 4 for r in p.relators)
    assert any(len(r) == 4 for r in C.build("MkVP-claimed", 4, 2).presentation.relators)


def test_dictionaries_lie_in_kernels():
    for key, hom in [("MkVP", "phi"), ("MkVH", "psi"), ("MVP3", "phi"), ("MVH3", "psi"),
                     ("MVQ3", "chi3"), ("MVC3", "chi4")]:
        d = C.build_dictionary(key, 3, 2)
        images = C.build_hom(hom, 3, 2).images
        for g, w in d.entries.items():
            assert evaluate(w, images).is_identity(), (key, g)


def test_dictionary_sizes():
    assert len(C.build_dictionary("MkVP", 3, 2)) == 9
    assert len(C.build_dictionary("MkVP", 4, 3)) == 12 + 2 * 6
    assert len(C.build_dictionary("MVQ3")) == 12


def test_y_group():
    p = C.build("Y").presentation
    assert len(p.relators) == 6
    assert sum(1 for r in p.relators if len(r) == 2) == 3


def test_symmetric_extras_are_forbidden_f3_plus_detours():
    extra = C.symmetric_extra_relators(3, 2)
    assert set(C.forbidden_f3(3, 2)) <= set(extra)
    sym = C.build("sym-MkVB", 3, 2).presentation
    assert len(sym.relators) == 11


def test_listed_symmetric_group_has_same_relators():
    assert (C.build("sym-MkVB", 3, 2).presentation.relator_set()
            == C.build("sym-MkVB-listed", 3, 2).presentation.relator_set())


def test_tau_alias():
    p = C.build("MkVB", 3, 2).presentation
    assert rho(1, 1) in p.generators and sigma(2) in p.generators
    assert GeneratorId("rho", (1, 2)) not in p.generators
