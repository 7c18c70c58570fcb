"""Homomorphism checks: well-definedness into S_n, retractions, the index
action on kernel generators, and finite-quotient separation certificates."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .cosets import CosetTable, Transversal
from .errors import NotInSubgroup
from .perm import Permutation, enumerate_symmetric, evaluate
from .presentation import Presentation
from .rewrite import Rewriter
from .tietze import Dictionary, resolve_symbol_word
from .words import (
    GeneratorId,
    Word,
    format_generator,
    format_word,
    substitute,
)


# ---------------------------------------------------------------- well-definedness


@dataclass
class HomReport:
    """Outcome of a generator-image check; ``failures`` holds (relator, image)."""

    name: str
    checked: int
    failures: list[tuple[Word, object]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_text(self) -> str:
        if self.ok:
            return f"{self.name}: ok ({self.checked} checked)"
        lines = [f"{self.name}: FAILED ({len(self.failures)} of {self.checked})"]
        for w, img in self.failures:
            lines.append(f"  {format_word(w)} -> {img}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "checked": self.checked,
                "failures": [{"word": format_word(w), "image": str(img)} for w, img in self.failures]}


def check_well_defined(p: Presentation, images: Mapping[GeneratorId, Permutation],
                       name: str = "hom") -> HomReport:
    """Evaluate every relator under ``images``; failures are relators whose
    image is not the identity."""
    missing = [g for g in p.generators if g not in images]
    if missing:
        raise KeyError(f"no image for generator {format_generator(missing[0])}")
    rep = HomReport(name, len(p.relators))
    for r in p.relators:
        img = evaluate(r, images)
        if not img.is_identity():
            rep.failures.append((r, img))
    return rep


def check_retraction(proj: Mapping[GeneratorId, Word], incl: Mapping[GeneratorId, Word],
                     source: Presentation, name: str = "retraction") -> HomReport:
    """proj(incl(g)) must freely reduce to g for every generator of ``source``.

    Sufficient, purely syntactic: a failure does not show the composite is
    not the identity in the group.
    """
    rep = HomReport(name, len(source.generators))
    for g in source.generators:
        img = substitute(incl[g], proj)
        if img != Word(((g, 1),)):
            rep.failures.append((Word(((g, 1),)), format_word(img)))
    return rep


# ---------------------------------------------------------------- index action


def permute_generator(g: GeneratorId, perm: Permutation,
                      named: set[GeneratorId] | None = None) -> tuple[GeneratorId, int]:
    """Image of a two-index generator under the index permutation ``perm``.

    Indices are the first two entries of ``g.indices``; further entries
    (the sort) are kept.  When ``named`` is given and only the swapped
    name exists there, the swapped generator is returned with exponent -1.
    """
    i, j, *rest = g.indices
    new = GeneratorId(g.family, (perm(i), perm(j), *rest))
    if named is not None and new not in named:
        swapped = GeneratorId(g.family, (perm(j), perm(i), *rest))
        if swapped in named:
            return swapped, -1
    return new, 1


def index_permutation(a: Word, n: int) -> Permutation:
    """The permutation a-bar: every sort of rho_i maps to (i, i+1), sigma_i
    to (i, i+1) as well; only rho-letters occur in the standard transversal."""
    images = {}
    for g, _ in a:
        if g.family in ("rho", "sigma"):
            images[g] = Permutation.transposition(n, g.indices[0], g.indices[0] + 1)
        else:
            raise ValueError(f"no index action for {format_generator(g)}")
    return evaluate(a, images) if a else Permutation.identity(n)


@dataclass
class ActionMismatch:
    transversal_word: Word
    generator: GeneratorId
    expected: tuple[GeneratorId, int]
    got: Word

    def to_text(self) -> str:
        g, e = self.expected
        exp = format_generator(g) + ("" if e > 0 else "^-1")
        return (f"a = {format_word(self.transversal_word)}, g = {format_generator(self.generator)}: "
                f"expected {exp}, got {format_word(self.got)}")


@dataclass
class ActionReport:
    pairs: int
    mismatches: list[ActionMismatch]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_text(self) -> str:
        head = f"action: {self.pairs} pairs, {len(self.mismatches)} mismatch(es)"
        return "\n".join([head] + ["  " + m.to_text() for m in self.mismatches])

    def to_json(self) -> dict:
        return {"pairs": self.pairs, "ok": self.ok,
                "mismatches": [m.to_text() for m in self.mismatches]}


def conjugate_image(a: Word, g: GeneratorId, d: Dictionary, p: Presentation,
                    rw: Rewriter) -> Word:
    """tau(a^-1 exp(g) a), resolved to the generators of ``p``."""
    w = Word(tuple(~a) + tuple(d.entries[g]) + tuple(a))
    return resolve_symbol_word(p, rw.tau(w))


def verify_action(t: CosetTable, tr: Transversal, d: Dictionary, p: Presentation,
                  n: int) -> ActionReport:
    """Check a^-1 g a = g with indices permuted by a-bar for every transversal
    word a and every dictionary generator g.

    ``p`` is the derived presentation after the dictionary was applied; its
    ``resolve`` map turns eliminated symbols into surviving generators.
    """
    rw = Rewriter(t, tr)
    named = set(d.entries)
    mismatches = []
    pairs = 0
    for a in tr.reps:
        perm = index_permutation(a, n)
        for g in d.entries:
            pairs += 1
            expected = permute_generator(g, perm, named)
            try:
                got = conjugate_image(a, g, d, p, rw)
            except NotInSubgroup:
                got = Word()
                mismatches.append(ActionMismatch(a, g, expected, got))
                continue
            target = _resolve_named(p, expected)
            if got != target:
                mismatches.append(ActionMismatch(a, g, expected, got))
    return ActionReport(pairs, mismatches)


def _resolve_named(p: Presentation, named: tuple[GeneratorId, int]) -> Word:
    g, e = named
    w = Word(((g, e),))
    return resolve_symbol_word(p, w)


# ---------------------------------------------------------------- separation


@dataclass
class SeparatingQuotient:
    """Images in S_m satisfying every relator of ``presentation`` under which
    ``word`` maps to a nontrivial permutation."""

    presentation: str
    word: Word
    images: dict[GeneratorId, Permutation]
    image: Permutation

    def to_text(self) -> str:
        lines = [f"{format_word(self.word)} -> {self.image} in S{len(self.image)}"]
        lines += [f"  {format_generator(g)} -> {perm}" for g, perm in self.images.items()]
        return "\n".join(lines)


def _cycle_type_reps(perms: Sequence[Permutation]) -> list[Permutation]:
    seen, out = set(), []
    for perm in perms:
        shape = tuple(sorted(len(c) for c in perm.cycles()))
        if shape not in seen:
            seen.add(shape)
            out.append(perm)
    return out


def _search_order(p: Presentation) -> list[GeneratorId]:
    """Greedy order: next is the generator completing the most relators,
    ties by declared order."""
    remaining = list(p.generators)
    supports = [frozenset(g for g, _ in r) for r in p.relators if r]
    chosen: list[GeneratorId] = []
    done: set[GeneratorId] = set()
    while remaining:
        def score(g):
            have = done | {g}
            closed = sum(1 for s in supports if g in s and s <= have)
            touching = sum(1 for s in supports if g in s)
            return (closed, touching)
        best = max(remaining, key=lambda g: (score(g), -remaining.index(g)))
        remaining.remove(best)
        chosen.append(best)
        done.add(best)
    return chosen


def _compose(cur: tuple, perm: tuple) -> tuple:
    return tuple(perm[v] for v in cur)


def _eval(codes, images, inverses, ident):
    cur = ident
    for g, e in codes:
        cur = _compose(cur, images[g] if e > 0 else inverses[g])
    return cur


def find_separating_quotient(p: Presentation, word: Word, degrees: Sequence[int] = (3, 4, 5),
                             limit: int = 2_000_000) -> SeparatingQuotient | None:
    """Search S_m for a homomorphism of ``p`` that does not kill ``word``.

    A hit proves ``word`` is not trivial in the group presented by ``p``.
    Backtracking assigns generator images (greedy order, see
    ``_search_order``) and checks each relator as soon as its generators
    are assigned; the first image only ranges over cycle-type
    representatives.  ``limit`` caps the number of candidate images tried
    per degree.  Returns None when nothing is found.
    """
    gens = _search_order(p)
    pos = {g: i for i, g in enumerate(gens)}
    ready: list[list[Word]] = [[] for _ in gens]
    for r in p.relators:
        if r:
            ready[max(pos[g] for g, _ in r)].append(r)
    for m in degrees:
        perms = [tuple(v - 1 for v in q) for q in enumerate_symmetric(m)]
        inv_of = {q: tuple(sorted(range(m), key=q.__getitem__)) for q in perms}
        reps = [tuple(v - 1 for v in q) for q in _cycle_type_reps(enumerate_symmetric(m))]
        ident = tuple(range(m))
        images: dict[GeneratorId, tuple] = {}
        inverses: dict[GeneratorId, tuple] = {}
        tried = 0

        def search(i: int):
            nonlocal tried
            if i == len(gens):
                img = _eval(word, images, inverses, ident)
                return None if img == ident else img
            g = gens[i]
            for cand in (reps if i == 0 else perms):
                tried += 1
                if tried > limit:
                    return None
                images[g], inverses[g] = cand, inv_of[cand]
                if all(_eval(r, images, inverses, ident) == ident for r in ready[i]):
                    hit = search(i + 1)
                    if hit is not None:
                        return hit
            images.pop(g, None)
            inverses.pop(g, None)
            return None

        hit = search(0)
        if hit is not None:
            found = {g: Permutation(v + 1 for v in images[g]) for g in p.generators}
            return SeparatingQuotient(p.name, word, found, Permutation(v + 1 for v in hit))
    return None


def expand_through_dictionary(w: Word, d: Dictionary) -> Word:
    """Replace named kernel generators by their ambient expansions."""
    return substitute(w, dict(d.entries))

