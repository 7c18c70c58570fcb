"""Constructors for the braid-type groups, their maps to S_n and the named
kernel generators.

Relators built from an equation ``lhs = rhs`` are ``lhs * rhs^-1``.  Groups
whose virtual generators are involutions are stored with relators reduced
modulo the involution relators (rho^-1 written as rho), which does not
change the presented group and makes equal relation lists compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Mapping, Sequence

from .perm import Permutation
from .presentation import Presentation
from .tietze import Dictionary, normalize_involutions
from .words import (
    GeneratorId,
    Word,
    cgen,
    lam,
    letters_of,
    substitute,
    mu,
    rho,
    sigma,
    xgen,
    ygen,
    zgen,
)


class UnknownKey(KeyError):
    pass


def rel(lhs: Sequence, rhs: Sequence = ()) -> Word:
    """Relator for ``lhs = rhs``; items as accepted by ``letters_of``."""
    return letters_of(*lhs) * ~letters_of(*rhs)


def commutator(a, b) -> Word:
    return rel([a, b], [b, a])


def _check_n(n: int, low: int = 2) -> None:
    if n is None or n < low:
        raise ValueError(f"strand count n must be >= {low}, got {n}")


def _check_k(k: int, low: int = 1) -> None:
    if k is None or k < low:
        raise ValueError(f"number of virtual sorts k must be >= {low}, got {k}")


def _far_pairs(n: int):
    """Ordered pairs (i, j) of generator indices with |i - j| >= 2."""
    return [(i, j) for i in range(1, n) for j in range(1, n) if abs(i - j) >= 2]


# ---------------------------------------------------------------- ambient groups


def braid_relators(n: int) -> list[Word]:
    s = sigma
    out = [rel([s(i), s(i + 1), s(i)], [s(i + 1), s(i), s(i + 1)]) for i in range(1, n - 1)]
    out += [commutator(s(i), s(j)) for i, j in _far_pairs(n) if i < j]
    return out


def b_group(n: int) -> Presentation:
    _check_n(n)
    return Presentation.create(f"B{n}", [sigma(i) for i in range(1, n)], braid_relators(n))


def vb_group(n: int) -> Presentation:
    """Virtual braid group in its classical listing."""
    _check_n(n)
    s, r = sigma, rho
    gens = [s(i) for i in range(1, n)] + [r(i) for i in range(1, n)]
    rels = braid_relators(n)
    rels += [rel([r(i), r(i)]) for i in range(1, n)]
    rels += [commutator(r(i), r(j)) for i, j in _far_pairs(n) if i < j]
    rels += [rel([r(i), r(i + 1), r(i)], [r(i + 1), r(i), r(i + 1)]) for i in range(1, n - 1)]
    rels += [commutator(s(i), r(j)) for i, j in _far_pairs(n)]
    rels += [rel([r(i), r(i + 1), s(i)], [s(i + 1), r(i), r(i + 1)]) for i in range(1, n - 1)]
    return normalize_involutions(Presentation.create(f"VB{n}", gens, rels))


def mkvb_generators(n: int, k: int) -> list[GeneratorId]:
    return [sigma(i) for i in range(1, n)] + [rho(i, a) for a in range(k) for i in range(1, n)]


def mkvb_relators(n: int, k: int) -> list[Word]:
    s, r = sigma, rho
    rels = [rel([r(i, a), r(i, a)]) for a in range(k) for i in range(1, n)]
    # commutativity, homogeneous then mixed
    rels += [commutator(s(i), s(j)) for i, j in _far_pairs(n) if i < j]
    rels += [commutator(r(i, a), r(j, a)) for a in range(k) for i, j in _far_pairs(n) if i < j]
    rels += [commutator(s(i), r(j, a)) for a in range(k) for i, j in _far_pairs(n)]
    rels += [commutator(r(i, a), r(j, b)) for a in range(k) for b in range(a + 1, k)
             for i, j in _far_pairs(n)]
    # braid relations, homogeneous then mixed
    rels += [rel([s(i), s(i + 1), s(i)], [s(i + 1), s(i), s(i + 1)]) for i in range(1, n - 1)]
    rels += [rel([r(i, a), r(i + 1, a), r(i, a)], [r(i + 1, a), r(i, a), r(i + 1, a)])
             for a in range(k) for i in range(1, n - 1)]
    rels += [rel([s(i), r(i + 1), r(i)], [r(i + 1), r(i), s(i + 1)]) for i in range(1, n - 1)]
    rels += [rel([r(i), r(i + 1), r(i, b)], [r(i + 1, b), r(i), r(i + 1)])
             for b in range(1, k) for i in range(1, n - 1)]
    return rels


def mkvb_group(n: int, k: int) -> Presentation:
    _check_n(n)
    _check_k(k)
    return normalize_involutions(
        Presentation.create(f"M{k}VB{n}", mkvb_generators(n, k), mkvb_relators(n, k)))


def forbidden_f1(n: int, k: int) -> list[Word]:
    s, r = sigma, rho
    return [rel([s(i), s(i + 1), r(i, a)], [r(i + 1, a), s(i), s(i + 1)])
            for a in range(k) for i in range(1, n - 1)]


def forbidden_f2(n: int, k: int) -> list[Word]:
    s, r = sigma, rho
    return [rel([s(i + 1), s(i), r(i + 1, a)], [r(i, a), s(i + 1), s(i)])
            for a in range(k) for i in range(1, n - 1)]


def forbidden_f3(n: int, k: int) -> list[Word]:
    r = rho
    out = []
    for i in range(1, n - 1):
        for b in range(1, k):
            out.append(rel([r(i), r(i + 1, b), r(i, b)], [r(i + 1, b), r(i, b), r(i + 1)]))
        for g in range(1, k):
            for b in range(g + 1, k):
                out.append(rel([r(i, g), r(i + 1, b), r(i, b)], [r(i + 1, b), r(i, b), r(i + 1, g)]))
                out.append(rel([r(i, g), r(i + 1, g), r(i, b)], [r(i + 1, b), r(i, g), r(i + 1, g)]))
    return out


def sigma_detour(n: int, k: int, sorts=None) -> list[Word]:
    """sigma_i rho^(a)_{i+1} rho^(a)_i = rho^(a)_{i+1} rho^(a)_i sigma_{i+1}."""
    s, r = sigma, rho
    sorts = range(k) if sorts is None else sorts
    return [rel([s(i), r(i + 1, a), r(i, a)], [r(i + 1, a), r(i, a), s(i + 1)])
            for a in sorts for i in range(1, n - 1)]


def symmetric_mkvb_group(n: int, k: int) -> Presentation:
    """M_kVB_n with F3 and the sigma detour relations for every sort."""
    _check_n(n)
    _check_k(k, 2)
    rels = mkvb_relators(n, k) + forbidden_f3(n, k) + sigma_detour(n, k, range(1, k))
    return normalize_involutions(Presentation.create(f"symM{k}VB{n}", mkvb_generators(n, k), rels))


def symmetric_mkvb_listed(n: int, k: int) -> Presentation:
    """The symmetric group from its own relation listing (all sorts detour)."""
    _check_n(n)
    _check_k(k, 2)
    s, r = sigma, rho
    rels = [rel([r(i, a), r(i, a)]) for a in range(k) for i in range(1, n)]
    rels += [commutator(s(i), s(j)) for i, j in _far_pairs(n) if i < j]
    rels += [commutator(r(i, a), r(j, a)) for a in range(k) for i, j in _far_pairs(n) if i < j]
    rels += [commutator(s(i), r(j, a)) for a in range(k) for i, j in _far_pairs(n)]
    rels += [commutator(r(i, a), r(j, b)) for a in range(k) for b in range(a + 1, k)
             for i, j in _far_pairs(n)]
    rels += [rel([s(i), s(i + 1), s(i)], [s(i + 1), s(i), s(i + 1)]) for i in range(1, n - 1)]
    rels += [rel([r(i, a), r(i + 1, a), r(i, a)], [r(i + 1, a), r(i, a), r(i + 1, a)])
             for a in range(k) for i in range(1, n - 1)]
    rels += sigma_detour(n, k)
    for a in range(k):
        for b in range(a + 1, k):
            for i in range(1, n - 1):
                rels.append(rel([r(i, a), r(i + 1, a), r(i, b)], [r(i + 1, b), r(i, a), r(i + 1, a)]))
                rels.append(rel([r(i, a), r(i + 1, b), r(i, b)], [r(i + 1, b), r(i, b), r(i + 1, a)]))
    return normalize_involutions(Presentation.create(f"symM{k}VB{n}", mkvb_generators(n, k), rels))


def symmetric_mvb3() -> Presentation:
    """Two-sort, three-strand symmetric group from its explicit listing.

    The first detour relation is taken as sigma1 rho2 rho1 = rho2 rho1 sigma2
    (the listing prints rho1 rho2 on the right, which is not compatible
    with the map to S_3 that the kernel computations rely on).
    """
    s1, s2, r1, r2, t1, t2 = sigma(1), sigma(2), rho(1), rho(2), rho(1, 1), rho(2, 1)
    rels = [rel([g, g]) for g in (r1, r2, t1, t2)]
    rels += [rel([s1, s2, s1], [s2, s1, s2]), rel([r1, r2, r1], [r2, r1, r2]),
             rel([t1, t2, t1], [t2, t1, t2])]
    rels += [rel([s1, r2, r1], [r2, r1, s2]), rel([t1, r2, r1], [r2, r1, t2])]
    rels += [rel([s1, t2, t1], [t2, t1, s2]), rel([t1, t2, r1], [r2, t1, t2])]
    return normalize_involutions(
        Presentation.create("symMVB3", [s1, s2, r1, r2, t1, t2], rels))


def welded_group(n: int, k: int) -> Presentation:
    _check_n(n)
    _check_k(k)
    return normalize_involutions(Presentation.create(
        f"M{k}WB{n}", mkvb_generators(n, k), mkvb_relators(n, k) + forbidden_f1(n, k)))


def unrestricted_group(n: int, k: int) -> Presentation:
    _check_n(n)
    _check_k(k)
    return normalize_involutions(Presentation.create(
        f"M{k}UB{n}", mkvb_generators(n, k),
        mkvb_relators(n, k) + forbidden_f1(n, k) + forbidden_f2(n, k)))


def fvb_group(n: int) -> Presentation:
    """Flat virtual braid group on generators c_i (flat crossings) and rho_i."""
    _check_n(n)
    images = {sigma(i): Word(((cgen(i), 1),)) for i in range(1, n)}
    images.update({rho(i): Word(((rho(i), 1),)) for i in range(1, n)})
    base = vb_group(n)
    rels = [substitute(r, images) for r in base.relators]
    rels += [rel([cgen(i), cgen(i)]) for i in range(1, n)]
    gens = [cgen(i) for i in range(1, n)] + [rho(i) for i in range(1, n)]
    return normalize_involutions(Presentation.create(f"FVB{n}", gens, rels))


# ---------------------------------------------------------------- kernel groups


def lam_word(i: int, j: int, a: int = 0, family: Callable = lam) -> Word:
    """Generator word; for a >= 1 only i < j is a generator and (j, i) is its inverse."""
    if a >= 1 and i > j:
        return ~Word(((family(j, i, a), 1),))
    return Word(((family(i, j, a), 1),))


def _pair_word(family: Callable, i: int, j: int, symmetric: bool) -> Word:
    if symmetric and i > j:
        return ~Word(((family(j, i), 1),))
    return Word(((family(i, j), 1),))


def vp_triangle(i, j, k, g: Callable[[int, int], Word]) -> Word:
    """g_ki g_kj g_ij = g_ij g_kj g_ki (the listed pattern for VP_3)."""
    return rel([g(k, i), g(k, j), g(i, j)], [g(i, j), g(k, j), g(k, i)])


def stated_triangle(i, j, k, g: Callable[[int, int], Word]) -> Word:
    """g_ik g_jk g_ij = g_ij g_jk g_ik (the pattern stated for M_kVP_n)."""
    return rel([g(i, k), g(j, k), g(i, j)], [g(i, j), g(j, k), g(i, k)])


def vh_braid(i, j, k, g: Callable[[int, int], Word]) -> Word:
    """g_ik g_kj g_ik = g_kj g_ik g_kj."""
    return rel([g(i, k), g(k, j), g(i, k)], [g(k, j), g(i, k), g(k, j)])


def _distinct_triples(n: int):
    return list(permutations(range(1, n + 1), 3))


def _disjoint_pairs(n: int, ordered_first: bool, ordered_second: bool):
    """Pairs ((i, j), (k, l)) with four distinct indices."""
    def pairs(ordered):
        if ordered:
            return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
        return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    for p in pairs(ordered_first):
        for q in pairs(ordered_second):
            if len({*p, *q}) == 4:
                yield p, q


def vp_group(n: int, pattern: str = "listed") -> Presentation:
    """Virtual pure braid group on lambda_ij, i != j.

    ``pattern="listed"`` uses g_ki g_kj g_ij = g_ij g_kj g_ki;
    ``pattern="stated"`` uses g_ik g_jk g_ij = g_ij g_jk g_ik.
    """
    _check_n(n)
    gens = [lam(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    g = lambda i, j: lam_word(i, j)  # noqa: E731
    tri = vp_triangle if pattern == "listed" else stated_triangle
    rels = [commutator(lam_word(*p), lam_word(*q)) for p, q in _disjoint_pairs(n, True, True)]
    rels += [tri(i, j, k, g) for i, j, k in _distinct_triples(n)]
    return Presentation.create(f"VP{n}", gens, rels)


def fvp_group(n: int, family: Callable[[int, int], GeneratorId] = lam) -> Presentation:
    """Flat virtual pure braid group: VP_n with g_ji = g_ij^-1, on g_ij for i < j."""
    _check_n(n)
    gens = [family(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    g = lambda i, j: _pair_word(family, i, j, True)  # noqa: E731
    rels = [commutator(g(*p), g(*q)) for p, q in _disjoint_pairs(n, True, True)]
    rels += [vp_triangle(i, j, k, g) for i, j, k in _distinct_triples(n)]
    return Presentation.create(f"FVP{n}", gens, rels)


def vh_group(n: int) -> Presentation:
    _check_n(n)
    gens = [xgen(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    g = lambda i, j: lam_word(i, j, 0, xgen)  # noqa: E731
    rels = [commutator(g(*p), g(*q)) for p, q in _disjoint_pairs(n, True, True)]
    rels += [vh_braid(i, j, k, g) for i, j, k in _distinct_triples(n)]
    return Presentation.create(f"VH{n}", gens, rels)


def _claimed_pure(n: int, k: int, family: Callable, zero_rel: Callable, name: str) -> Presentation:
    gens = [family(i, j, 0) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    gens += [family(i, j, b) for b in range(1, k) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    rels = []
    for a in range(k):
        for c in range(a, k):
            for p, q in _disjoint_pairs(n, a == 0, c == 0):
                rels.append(commutator(lam_word(*p, a, family), lam_word(*q, c, family)))
    g0 = lambda i, j: lam_word(i, j, 0, family)  # noqa: E731
    rels += [zero_rel(i, j, k3, g0) for i, j, k3 in _distinct_triples(n)]
    for b in range(1, k):
        gb = lambda i, j, b=b: lam_word(i, j, b, family)  # noqa: E731
        rels += [stated_triangle(i, j, k3, gb)
                 for i in range(1, n + 1) for j in range(i + 1, n + 1) for k3 in range(j + 1, n + 1)]
    return Presentation.create(name, gens, rels)


def mkvp_claimed(n: int, k: int) -> Presentation:
    _check_n(n)
    _check_k(k)
    return _claimed_pure(n, k, lam, stated_triangle, f"M{k}VP{n}-claimed")


def mkvh_claimed(n: int, k: int) -> Presentation:
    _check_n(n)
    _check_k(k)
    return _claimed_pure(n, k, xgen, vh_braid, f"M{k}VH{n}-claimed")


def symmetric_pure_families(n: int, k: int, family: Callable = lam, semi: bool = False) -> list[Word]:
    """Extra relators of the symmetric pure (``semi=False``) or semi-pure quotient.

    lambda^0_ij lambda^a_ik lambda^a_jk = lambda^a_jk lambda^a_ik lambda^0_ij (a != 0);
    the semi-pure version has x^a_ik x^a_jk x^0_ij on the right.  Then
    g^a_ij g^a_ik g^b_jk = g^b_jk g^a_ik g^a_ij (0 < a < b).  Indices range
    over distinct triples; for a >= 1, (j, i) means the inverse of (i, j).
    """
    out = []
    for i, j, k3 in _distinct_triples(n):
        for a in range(1, k):
            l0 = lam_word(i, j, 0, family)
            lik, ljk = lam_word(i, k3, a, family), lam_word(j, k3, a, family)
            if semi:
                out.append(rel([l0, lik, ljk], [lik, ljk, l0]))
            else:
                out.append(rel([l0, lik, ljk], [ljk, lik, l0]))
            for b in range(a + 1, k):
                lij, lik = lam_word(i, j, a, family), lam_word(i, k3, a, family)
                ljkb = lam_word(j, k3, b, family)
                out.append(rel([lij, lik, ljkb], [ljkb, lik, lij]))
    return out


def mvp3_claimed() -> Presentation:
    l = lambda i, j: lam_word(i, j)  # noqa: E741,E731
    gens = [lam(1, 2), lam(2, 1), lam(1, 3), lam(3, 1), lam(2, 3), lam(3, 2), mu(1, 2), mu(1, 3), mu(2, 3)]
    triples = [((1, 2), (3, 2), (1, 3)), ((2, 1), (3, 1), (2, 3)), ((1, 3), (2, 3), (1, 2)),
               ((3, 1), (2, 1), (3, 2)), ((2, 3), (1, 3), (2, 1)), ((3, 2), (1, 2), (3, 1))]
    rels = [rel([l(*a), l(*b), l(*c)], [l(*c), l(*b), l(*a)]) for a, b, c in triples]
    rels.append(rel([mu(1, 2), mu(1, 3), mu(2, 3)], [mu(2, 3), mu(1, 3), mu(1, 2)]))
    return Presentation.create("MVP3", gens, rels)


def _x_listed_relators() -> list[Word]:
    """The six x relations as listed for the three-strand kernels, verbatim."""
    x = lambda i, j: Word(((xgen(i, j), 1),))  # noqa: E731
    listed = [
        ((1, 2), (2, 3), (1, 2), (2, 3), (1, 2), (2, 3)),
        ((2, 1), (1, 3), (2, 1), (1, 3), (2, 1), (1, 3)),
        ((1, 3), (3, 2), (1, 3), (3, 2), (1, 3), (3, 2)),
        ((3, 1), (1, 2), (3, 1), (1, 2), (3, 1), (1, 2)),
        ((2, 3), (3, 1), (2, 3), (3, 1), (2, 3), (3, 1)),
        ((3, 2), (2, 1), (3, 2), (1, 3), (2, 1), (1, 3)),  # printed with x13 on the right
    ]
    return [rel([x(*a), x(*b), x(*c)], [x(*d), x(*e), x(*f)]) for a, b, c, d, e, f in listed]


def h1_group() -> Presentation:
    rels = _x_listed_relators()
    return Presentation.create("H1", [xgen(1, 3), xgen(2, 1), xgen(3, 2)],
                               [rels[1], rels[2], rels[5]])


def h2_group() -> Presentation:
    rels = _x_listed_relators()
    return Presentation.create("H2", [xgen(1, 2), xgen(3, 1), xgen(2, 3)],
                               [rels[0], rels[3], rels[4]])


def y_group() -> Presentation:
    y12, y13, y23 = ygen(1, 2), ygen(1, 3), ygen(2, 3)
    rels = [rel([g, g]) for g in (y12, y13, y23)]
    rels += [rel([a, b] * 3) for a, b in ((y12, y13), (y12, y23), (y23, y13))]
    return Presentation.create("Y", [y12, y13, y23], rels)


def mvh3_claimed() -> Presentation:
    vh = vh_group(3)
    z = fvp_group(3, zgen)
    return Presentation.create("MVH3", vh.generators + z.generators, vh.relators + z.relators)


def mvq3_claimed() -> Presentation:
    """x and y generators; the y involutions are included alongside the
    listed (y y)^3 and x relations."""
    y = y_group()
    gens = [xgen(1, 2), xgen(2, 3), xgen(1, 3), xgen(2, 1), xgen(3, 2), xgen(3, 1)] + list(y.generators)
    return Presentation.create("MVQ3", gens, list(y.relators) + _x_listed_relators())


def mvc3_claimed() -> Presentation:
    vp, y = vp_group(3), y_group()
    return Presentation.create("MVC3", vp.generators + y.generators, vp.relators + y.relators)


def sym_mvp3_extra() -> list[Word]:
    """Stated images of the extra symmetric relations in MVP_3 names."""
    l = lambda i, j: Word(((lam(i, j), 1),))  # noqa: E741,E731
    m = lambda i, j: Word(((mu(i, j), 1),))  # noqa: E731
    return [
        rel([l(1, 2), m(1, 3), m(2, 3)], [m(2, 3), m(1, 3), l(1, 2)]),
        rel([l(2, 1), m(2, 3), m(1, 3)], [m(1, 3), m(2, 3), l(2, 1)]),
        rel([l(2, 3), m(1, 3), m(1, 2)], [m(1, 2), m(1, 3), l(2, 3)]),
        rel([l(3, 2), m(1, 2), m(1, 3)], [m(1, 3), m(1, 2), l(3, 2)]),
        rel([m(1, 2), l(1, 3), m(2, 3)], [m(2, 3), l(1, 3), m(1, 2)]),
        rel([l(3, 1), ~m(1, 2), m(2, 3)], [m(2, 3), ~m(1, 2), l(3, 1)]),
    ]


def sym_mvh3_extra() -> list[Word]:
    x = lambda i, j: Word(((xgen(i, j), 1),))  # noqa: E731
    z = lambda i, j: _pair_word(zgen, i, j, True)  # noqa: E731
    listed = [((2, 1), (1, 3), (2, 3)), ((1, 2), (2, 3), (1, 3)), ((3, 1), (1, 2), (3, 2)),
              ((3, 2), (2, 1), (3, 1)), ((1, 3), (3, 2), (1, 2)), ((2, 3), (3, 1), (2, 1))]
    return [rel([x(*a), z(*b), z(*c)], [z(*b), z(*c), x(*a)]) for a, b, c in listed]


def symmetric_extra_relators(n: int, k: int) -> list[Word]:
    """Relators imposed on M_kVB_n to obtain the symmetric quotient."""
    return forbidden_f3(n, k) + sigma_detour(n, k, range(1, k))


def _quotient_stated(n: int, k: int, family: Callable, patterns) -> list[Word]:
    out = []
    g = lambda i, j, a: lam_word(i, j, a, family)  # noqa: E731
    for i, j, m in _distinct_triples(n):
        for a in range(1, k):
            for lhs, rhs in patterns["sorted"]:
                out.append(rel([g(*t(i, j, m, a)) for t in lhs], [g(*t(i, j, m, a)) for t in rhs]))
        for lhs, rhs in patterns["plain"]:
            out.append(rel([g(*t(i, j, m, 0)) for t in lhs], [g(*t(i, j, m, 0)) for t in rhs]))
    return out


def _t(x, y, sort):
    """Index template: x, y pick among (i, j, k); sort is 0 or the free sort a."""
    pick = {"i": 0, "j": 1, "k": 2}
    return lambda i, j, m, a: ((i, j, m)[pick[x]], (i, j, m)[pick[y]], a if sort else 0)


_WELDED_PURE = {
    "sorted": [((_t("i", "j", 0), _t("i", "k", 0), _t("j", "k", 1)),
                (_t("j", "k", 1), _t("i", "k", 0), _t("i", "j", 0)))],
    "plain": [((_t("i", "j", 0), _t("i", "k", 0)), (_t("i", "k", 0), _t("i", "j", 0)))],
}
_UNRESTRICTED_PURE = {
    "sorted": [((_t("j", "k", 0), _t("i", "k", 0), _t("i", "j", 1)),
                (_t("i", "j", 1), _t("i", "k", 0), _t("j", "k", 0)))],
    "plain": [((_t("j", "k", 0), _t("i", "k", 0)), (_t("i", "k", 0), _t("j", "k", 0)))],
}
_WELDED_SEMI = {
    "sorted": [((_t("i", "k", 0), _t("j", "i", 0), _t("k", "i", 1)),
                (_t("i", "j", 1), _t("j", "k", 0), _t("i", "j", 0)))],
    "plain": [((_t("j", "k", 0), _t("i", "k", 0)), (_t("i", "k", 0), _t("j", "k", 0)))],
}
_UNRESTRICTED_SEMI = {
    "sorted": [((_t("i", "k", 0), _t("k", "j", 0), _t("k", "i", 1)),
                (_t("j", "k", 1), _t("i", "j", 0), _t("j", "k", 0)))],
    "plain": [((_t("j", "k", 0), _t("i", "k", 0)), (_t("i", "k", 0), _t("j", "k", 0)))],
}


def quotient_stated_families(kind: str, n: int, k: int) -> list[Word]:
    """Relations stated for the pure/semi-pure kernels of the welded (W) and
    unrestricted (U) quotients; the U lists include the W lists."""
    if kind == "WP":
        return _quotient_stated(n, k, lam, _WELDED_PURE)
    if kind == "UP":
        return _quotient_stated(n, k, lam, _WELDED_PURE) + _quotient_stated(n, k, lam, _UNRESTRICTED_PURE)
    if kind == "WH":
        return _quotient_stated(n, k, xgen, _WELDED_SEMI)
    if kind == "UH":
        return _quotient_stated(n, k, xgen, _WELDED_SEMI) + _quotient_stated(n, k, xgen, _UNRESTRICTED_SEMI)
    raise UnknownKey(f"unknown quotient kind {kind!r}")


# ---------------------------------------------------------------- registry


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    params: tuple
    presentation: Presentation
    description: str = ""


_PRESENTATIONS: dict[str, tuple[Callable[..., Presentation], str, str]] = {
    # key: (builder, parameter signature, description)
    "B": (lambda n, k: b_group(n), "n", "braid group"),
    "VB": (lambda n, k: vb_group(n), "n", "virtual braid group"),
    "FVB": (lambda n, k: fvb_group(n), "n", "flat virtual braid group"),
    "MkVB": (mkvb_group, "n,k", "multi-virtual braid group"),
    "sym-MkVB": (symmetric_mkvb_group, "n,k", "symmetric multi-virtual braid group"),
    "sym-MkVB-listed": (symmetric_mkvb_listed, "n,k", "symmetric group from its relation listing"),
    "sym-MVB3": (lambda n, k: symmetric_mvb3(), "", "symmetric two-sort three-strand group"),
    "MkWB": (welded_group, "n,k", "multi-welded braid group (adds F1)"),
    "MkUB": (unrestricted_group, "n,k", "multi-unrestricted braid group (adds F1, F2)"),
    "VP": (lambda n, k: vp_group(n), "n", "virtual pure braid group"),
    "VP-stated": (lambda n, k: vp_group(n, "stated"), "n", "virtual pure braid group, general pattern"),
    "VH": (lambda n, k: vh_group(n), "n", "virtual semi-pure braid group"),
    "FVP": (lambda n, k: fvp_group(n), "n", "flat virtual pure braid group"),
    "MkVP-claimed": (mkvp_claimed, "n,k", "stated presentation of the pure kernel"),
    "MkVH-claimed": (mkvh_claimed, "n,k", "stated presentation of the semi-pure kernel"),
    "MVP3": (lambda n, k: mvp3_claimed(), "", "stated pure kernel, three strands, two sorts"),
    "MVH3": (lambda n, k: mvh3_claimed(), "", "stated semi-pure kernel, VH_3 * FVP_3"),
    "MVQ3": (lambda n, k: mvq3_claimed(), "", "stated kernel of chi3"),
    "MVC3": (lambda n, k: mvc3_claimed(), "", "stated kernel of chi4, VP_3 * Y"),
    "H1": (lambda n, k: h1_group(), "", "first x factor, as printed"),
    "H2": (lambda n, k: h2_group(), "", "second x factor"),
    "Y": (lambda n, k: y_group(), "", "three involutions with order-3 products"),
}

DEFAULT_PARAMS = {"n": 3, "k": 2}


def keys() -> list[str]:
    return list(_PRESENTATIONS)


def describe(key: str) -> str:
    try:
        _, sig, desc = _PRESENTATIONS[key]
    except KeyError:
        raise UnknownKey(f"unknown catalog key {key!r}") from None
    return f"({sig}) {desc}" if sig else desc


def build(key: str, n: int | None = None, k: int | None = None) -> CatalogEntry:
    try:
        builder, sig, desc = _PRESENTATIONS[key]
    except KeyError:
        raise UnknownKey(f"unknown catalog key {key!r}") from None
    n = DEFAULT_PARAMS["n"] if n is None else n
    k = (2 if "sym" in key else 1) if k is None else k
    if "n" in sig:
        _check_n(n)
    if "k" in sig:
        _check_k(k)
    params = tuple(v for v, name in ((n, "n"), (k, "k")) if name in sig)
    return CatalogEntry(key, params, builder(n, k), desc)


FORBIDDEN = {"F1": forbidden_f1, "F2": forbidden_f2, "F3": forbidden_f3}


def forbidden(name: str, n: int, k: int) -> list[Word]:
    try:
        return FORBIDDEN[name](n, k)
    except KeyError:
        raise UnknownKey(f"unknown relator family {name!r}") from None


# ---------------------------------------------------------------- homomorphisms


@dataclass(frozen=True)
class HomSpec:
    """Generator images; ``target`` is ``"S<n>"`` for permutation images or
    a catalog key for word images."""

    key: str
    source: Presentation
    images: Mapping[GeneratorId, object]
    target: str
    target_presentation: Presentation | None = field(default=None, repr=False)

    @property
    def to_symmetric(self) -> bool:
        return self.target.startswith("S")


def _transp(n: int, i: int) -> Permutation:
    return Permutation.transposition(n, i, i + 1)


def _perm_images(n: int, k: int, sig: bool, rho0: bool, rho_other: bool) -> dict:
    e = Permutation.identity(n)
    images = {}
    for i in range(1, n):
        images[sigma(i)] = _transp(n, i) if sig else e
        for a in range(k):
            on = rho0 if a == 0 else rho_other
            images[rho(i, a)] = _transp(n, i) if on else e
    return images


# map key -> (sigma, rho^(0), rho^(a>=1)) nontrivial?
PERMUTATION_MAPS = {
    "phi": (True, True, True),
    "psi": (False, True, True),
    "chi3": (False, True, False),
    "chi4": (True, True, False),
    "rho-only": (False, True, False),
}


def build_hom(key: str, n: int = 3, k: int = 2, source: Presentation | None = None) -> HomSpec:
    _check_n(n)
    _check_k(k)
    if key in PERMUTATION_MAPS:
        if source is None:
            source = symmetric_mvb3() if key == "rho-only" else mkvb_group(n, k)
        if key == "rho-only":
            n, k = 3, 2
        return HomSpec(key, source, _perm_images(n, k, *PERMUTATION_MAPS[key]), f"S{n}")
    one = lambda g: Word(((g, 1),))  # noqa: E731
    if key == "psi1":
        images = {sigma(i): one(sigma(i)) for i in range(1, n)}
        images.update({rho(i, a): (one(rho(i)) if a == 0 else Word())
                       for a in range(k) for i in range(1, n)})
        return HomSpec(key, mkvb_group(n, k), images, "VB", vb_group(n))
    if key == "iota1":
        images = {sigma(i): one(sigma(i)) for i in range(1, n)}
        images.update({rho(i): one(rho(i)) for i in range(1, n)})
        return HomSpec(key, vb_group(n), images, "MkVB", mkvb_group(n, k))
    if key == "psi2":
        if k < 2:
            raise ValueError("psi2 needs k >= 2")
        images = {sigma(i): Word() for i in range(1, n)}
        for i in range(1, n):
            images[rho(i)] = one(rho(i))
            images[rho(i, 1)] = one(cgen(i))
            images.update({rho(i, a): Word() for a in range(2, k)})
        return HomSpec(key, mkvb_group(n, k), images, "FVB", fvb_group(n))
    if key == "iota2":
        if k < 2:
            raise ValueError("iota2 needs k >= 2")
        images = {cgen(i): one(rho(i, 1)) for i in range(1, n)}
        images.update({rho(i): one(rho(i)) for i in range(1, n)})
        return HomSpec(key, fvb_group(n), images, "MkVB", mkvb_group(n, k))
    if key == "psi3":
        images = {sigma(i): one(sigma(i)) for i in range(1, n)}
        images.update({rho(i, a): (one(rho(i, a)) if a < k else Word())
                       for a in range(k + 1) for i in range(1, n)})
        return HomSpec(key, mkvb_group(n, k + 1), images, "MkVB", mkvb_group(n, k))
    if key == "iota3":
        images = {g: one(g) for g in mkvb_generators(n, k)}
        return HomSpec(key, mkvb_group(n, k), images, "MkVB", mkvb_group(n, k + 1))
    raise UnknownKey(f"unknown homomorphism {key!r}")


RETRACTIONS = {"psi1": "iota1", "psi2": "iota2", "psi3": "iota3"}


# ---------------------------------------------------------------- dictionaries


def _rho_chain(i: int, j: int) -> Word:
    """rho_{j-1} rho_{j-2} ... rho_{i+1}."""
    return Word(tuple((rho(m), 1) for m in range(j - 1, i, -1)))


def _conj(i: int, j: int, core: Word) -> Word:
    c = _rho_chain(i, j)
    return Word(tuple(c) + tuple(core) + tuple(reversed(c)))


def _s(i):
    return Word(((sigma(i), 1),))


def _r(i, a=0):
    return Word(((rho(i, a), 1),))


def pure_dictionary(n: int, k: int, family: Callable = lam, beta_family: Callable | None = None) -> dict:
    out = {}
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            out[family(i, j, 0)] = _conj(i, j, _r(i) * ~_s(i))
            out[family(j, i, 0)] = _conj(i, j, ~_s(i) * _r(i))
    for b in range(1, k):
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                g = beta_family(i, j) if beta_family else family(i, j, b)
                out[g] = _conj(i, j, _r(i) * _r(i, b))
    return out


def semipure_dictionary(n: int, k: int) -> dict:
    out = {}
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            out[xgen(i, j)] = _conj(i, j, ~_s(i))
            out[xgen(j, i)] = _conj(i, j, _r(i) * ~_s(i) * _r(i))
    for b in range(1, k):
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                out[xgen(i, j, b)] = _conj(i, j, _r(i) * _r(i, b))
    return out


def _x_positive() -> dict:
    return {
        xgen(1, 2): _s(1), xgen(2, 3): _s(2), xgen(1, 3): _r(2) * _s(1) * _r(2),
        xgen(2, 1): _r(1) * _s(1) * _r(1), xgen(3, 2): _r(2) * _s(2) * _r(2),
        xgen(3, 1): _r(2) * _r(1) * _s(1) * _r(1) * _r(2),
    }


def _y_entries() -> dict:
    t1, t2 = _r(1, 1), _r(2, 1)
    return {
        ygen(1, 2): t1, ygen(2, 3): t2, ygen(1, 3): _r(2) * t1 * _r(2),
        ygen(2, 1): _r(1) * t1 * _r(1), ygen(3, 2): _r(2) * t2 * _r(2),
        ygen(3, 1): _r(2) * _r(1) * t1 * _r(1) * _r(2),
    }


def build_dictionary(key: str, n: int = 3, k: int = 2) -> Dictionary:
    if key == "MkVP":
        return Dictionary(f"M{k}VP{n}", pure_dictionary(n, k))
    if key == "MkVH":
        return Dictionary(f"M{k}VH{n}", semipure_dictionary(n, k))
    t1, t2 = _r(1, 1), _r(2, 1)
    if key == "MVP3":
        return Dictionary("MVP3", pure_dictionary(3, 2, lam, mu))
    if key == "MVH3":
        d = _x_positive()
        d.update({zgen(1, 2): _r(1) * t1, zgen(2, 3): _r(2) * t2,
                  zgen(1, 3): _r(2) * _r(1) * t1 * _r(2)})
        return Dictionary("MVH3", d)
    if key == "MVQ3":
        d = _x_positive()
        d.update(_y_entries())
        return Dictionary("MVQ3", d)
    if key == "MVC3":
        d = pure_dictionary(3, 1)
        d.update(_y_entries())
        return Dictionary("MVC3", d)
    raise UnknownKey(f"unknown dictionary {key!r}")
