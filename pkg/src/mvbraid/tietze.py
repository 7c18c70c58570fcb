"""Tietze simplification, renaming through generator dictionaries, and
relator-set comparison."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .cosets import CosetTable, Transversal
from .errors import NotInSubgroup
from .presentation import Presentation, support_components
from .rewrite import Rewriter
from .words import (
    GeneratorId,
    IDENTITY,
    Letter,
    Word,
    canonical_relator,
    format_generator,
    format_word,
    invert,
    substitute,
)

MAX_RELATOR_LENGTH = 512
DEFAULT_BUDGET = 1000


class RelatorTooLong(RuntimeError):
    pass


@dataclass(frozen=True)
class Dictionary:
    """Named kernel generators with their words in the ambient generators."""

    name: str
    entries: Mapping[GeneratorId, Word]

    def __len__(self) -> int:
        return len(self.entries)

    def to_json(self) -> dict:
        return {"name": self.name,
                "entries": {format_generator(g): format_word(w) for g, w in self.entries.items()}}


# ---------------------------------------------------------------- involutions


def involutions(p: Presentation) -> frozenset[GeneratorId]:
    """Generators g with g^2 among the relators."""
    out = set()
    for r in p.relators:
        if len(r) == 2 and r[0] == r[1]:
            out.add(r[0].gen)
    return frozenset(out)


def reduce_involutions(w: Iterable[Letter], invs: frozenset[GeneratorId]) -> Word:
    """Rewrite g^-1 as g and cancel gg for every involution g."""
    out: list[Letter] = []
    for let in w:
        if let.gen in invs:
            let = Letter(let.gen, 1)
        if out and out[-1].gen == let.gen and (out[-1].exp == -let.exp or let.gen in invs):
            out.pop()
        else:
            out.append(let)
    return Word._trusted(out)


def reduce_involutions_cyclic(w: Word, invs: frozenset[GeneratorId]) -> Word:
    r = reduce_involutions(w, invs)
    while len(r) >= 2 and r[0].gen == r[-1].gen and (
            r[0].exp == -r[-1].exp or r[0].gen in invs):
        r = Word._trusted(r[1:-1])
    return r


def normalize_involutions(p: Presentation) -> Presentation:
    """Replace each relator by its reduction modulo the involution relators.

    The g^2 relators themselves are kept; this is a sequence of Tietze
    moves, so the presented group is unchanged.
    """
    invs = involutions(p)
    if not invs:
        return p
    rels = []
    for r in p.relators:
        if len(r) == 2 and r[0] == r[1] and r[0].gen in invs:
            rels.append(r)
        else:
            rels.append(reduce_involutions_cyclic(r, invs))
    return Presentation.create(p.name, p.generators, rels, p.resolve)


# ---------------------------------------------------------------- elimination


def replace_generator(w: Word, g: GeneratorId, image: Word) -> Word:
    out: list[Letter] = []
    for let in w:
        if let.gen == g:
            out.extend(image if let.exp > 0 else invert(image))
        else:
            out.append(let)
    return Word(out)


def eliminate_generator(p: Presentation, g: GeneratorId, defining: Word,
                        max_length: int = MAX_RELATOR_LENGTH) -> Presentation:
    """Solve ``defining`` for ``g`` and substitute it everywhere.

    ``defining`` must contain ``g`` exactly once.  Raises ``RelatorTooLong``
    if a substituted relator exceeds ``max_length`` letters.
    """
    positions = [i for i, let in enumerate(defining) if let.gen == g]
    if len(positions) != 1:
        raise ValueError(f"{format_generator(g)} occurs {len(positions)} times in "
                         f"{format_word(defining)}; need exactly one")
    i = positions[0]
    rot = defining[i:] + defining[:i]
    rest = Word(rot[1:])
    # g^e * rest = 1  =>  g = rest^-1 (e = +1) or g = rest (e = -1)
    solution = invert(rest) if rot[0].exp > 0 else rest
    target = canonical_relator(defining)
    rels = []
    for r in p.relators:
        if canonical_relator(r) == target:
            continue
        if any(let.gen == g for let in r):
            r = replace_generator(r, g, solution)
            if len(r) > max_length:
                raise RelatorTooLong(f"eliminating {format_generator(g)} gives a relator of "
                                     f"length {len(r)} > {max_length}")
        rels.append(r)
    resolve = {h: replace_generator(w, g, solution) for h, w in p.resolve.items()}
    resolve[g] = solution
    gens = [h for h in p.generators if h != g]
    return Presentation.create(p.name, gens, rels, resolve)


@dataclass
class SimplifyReport:
    presentation: Presentation
    passes: int = 0
    eliminated: list[GeneratorId] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)
    exhausted: bool = False


def _occurrences(r: Word, g: GeneratorId) -> int:
    return sum(1 for let in r if let.gen == g)


def _candidates(p: Presentation):
    """Elimination moves in priority order: (generator, defining relator)."""
    order = {g: i for i, g in enumerate(p.generators)}
    short = []
    for r in p.relators:
        if len(r) == 1:
            short.append((r[0].gen, r))
        elif len(r) == 2 and r[0].gen != r[1].gen:
            later = max(r[0].gen, r[1].gen, key=lambda h: order.get(h, -1))
            short.append((later, r))
    yield from short
    ranked = []
    for ri, r in enumerate(p.relators):
        if len(r) <= 2:
            continue
        for g in sorted({let.gen for let in r}, key=lambda h: -order.get(h, -1)):
            if _occurrences(r, g) == 1:
                ranked.append((len(r), ri, -order.get(g, -1), g, r))
    ranked.sort(key=lambda x: x[:3])
    for _, _, _, g, r in ranked:
        yield g, r


def simplify_with_report(p: Presentation, budget: int = DEFAULT_BUDGET,
                         max_length: int = MAX_RELATOR_LENGTH) -> SimplifyReport:
    """Eliminate generators until no move applies or ``budget`` passes ran.

    Each pass normalizes involutions, then performs the first applicable
    elimination: length-1 relators, length-2 relators (removing the
    later-declared generator), then the shortest relator in which some
    generator occurs once.
    """
    rep = SimplifyReport(Presentation.create(p.name, p.generators, p.relators, p.resolve))
    cur = normalize_involutions(rep.presentation)
    while True:
        if rep.passes >= budget:
            rep.exhausted = True
            break
        rep.passes += 1
        moved = False
        for g, r in _candidates(cur):
            try:
                nxt = eliminate_generator(cur, g, r, max_length)
            except RelatorTooLong as exc:
                rep.skipped.append(str(exc))
                continue
            cur = normalize_involutions(nxt)
            rep.eliminated.append(g)
            moved = True
            break
        if not moved:
            break
    rep.presentation = cur
    return rep


def simplify(p: Presentation, budget: int = DEFAULT_BUDGET,
             max_length: int = MAX_RELATOR_LENGTH) -> Presentation:
    return simplify_with_report(p, budget, max_length).presentation


# ---------------------------------------------------------------- dictionaries


class DictionaryMismatch(ValueError):
    pass


def resolve_symbol_word(p: Presentation, w: Word) -> Word:
    """Resolve ``w`` through ``p.resolve`` and reduce modulo p's involutions."""
    return reduce_involutions(p.resolve_word(w), involutions(p))


def apply_dictionary(p: Presentation, d: Dictionary, t: CosetTable, tr: Transversal,
                     name: str | None = None) -> Presentation:
    """Rename the surviving Schreier symbols to the dictionary's names.

    Each entry's expansion is rewritten by tau and resolved in ``p``; it
    must come out as a single generator to the power +-1.
    """
    if not d.entries:
        return p
    rw = Rewriter(t, tr)
    rename: dict[GeneratorId, tuple[GeneratorId, int]] = {}
    for named, expansion in d.entries.items():
        try:
            sym = rw.tau(expansion)
        except NotInSubgroup as exc:
            raise DictionaryMismatch(f"entry {format_generator(named)} = {format_word(expansion)} "
                                     f"is not in the subgroup (ends at coset {exc.coset})") from None
        img = resolve_symbol_word(p, sym)
        if len(img) != 1 or img[0].gen not in p.generators:
            raise DictionaryMismatch(f"entry {format_generator(named)} rewrites to "
                                     f"{format_word(img)}, not a single generator")
        old = img[0].gen
        if old in rename:
            raise DictionaryMismatch(f"entries {format_generator(rename[old][0])} and "
                                     f"{format_generator(named)} both name {format_generator(old)}")
        rename[old] = (named, img[0].exp)
    images = {}
    for g in p.generators:
        if g in rename:
            new, exp = rename[g]
            images[g] = Word(((new, exp),))
        else:
            images[g] = Word(((g, 1),))
    rels = [substitute(r, images) for r in p.relators]
    resolve = {h: substitute(w, images) for h, w in p.resolve.items()}
    for g in p.generators:
        if g in rename:
            resolve[g] = images[g]
    named_order = [new for new in d.entries if any(v[0] == new for v in rename.values())]
    others = [g for g in p.generators if g not in rename]
    return Presentation.create(name or p.name, named_order + others, rels, resolve)


# ---------------------------------------------------------------- comparison


@dataclass
class Comparison:
    left: str
    right: str
    generators_only_left: list[GeneratorId]
    generators_only_right: list[GeneratorId]
    relators_only_left: list[Word]
    relators_only_right: list[Word]

    @property
    def equal(self) -> bool:
        return not (self.generators_only_left or self.generators_only_right
                    or self.relators_only_left or self.relators_only_right)

    def __bool__(self) -> bool:
        return self.equal

    def to_json(self) -> dict:
        return {
            "left": self.left,
            "right": self.right,
            "equal": self.equal,
            "generators_only_left": [format_generator(g) for g in self.generators_only_left],
            "generators_only_right": [format_generator(g) for g in self.generators_only_right],
            "relators_only_left": [format_word(r) for r in self.relators_only_left],
            "relators_only_right": [format_word(r) for r in self.relators_only_right],
        }

    def to_text(self) -> str:
        if self.equal:
            return f"{self.left} and {self.right}: relator sets equal"
        lines = [f"{self.left} vs {self.right}: relator sets differ"]
        for label, items, fmt in (
            (f"generators only in {self.left}", self.generators_only_left, format_generator),
            (f"generators only in {self.right}", self.generators_only_right, format_generator),
            (f"relators only in {self.left}", self.relators_only_left, format_word),
            (f"relators only in {self.right}", self.relators_only_right, format_word),
        ):
            if items:
                lines.append(f"  {label}:")
                lines.extend(f"    {fmt(x)}" for x in items)
        return "\n".join(lines)


def _relator_multiset(p: Presentation) -> dict[Word, int]:
    counts: dict[Word, int] = {}
    for r in p.relators:
        c = canonical_relator(r)
        if c:
            counts[c] = counts.get(c, 0) + 1
    return counts


def relator_sets_equal(p: Presentation, q: Presentation) -> Comparison:
    gp, gq = set(p.generators), set(q.generators)
    rp, rq = _relator_multiset(p), _relator_multiset(q)
    only_p = [r for r in sorted(rp, key=lambda w: w.key) for _ in range(rp[r] - rq.get(r, 0))]
    only_q = [r for r in sorted(rq, key=lambda w: w.key) for _ in range(rq[r] - rp.get(r, 0))]
    return Comparison(p.name, q.name, sorted(gp - gq), sorted(gq - gp), only_p, only_q)


def commuting_pairs(relators: Iterable[Word]) -> frozenset[frozenset[GeneratorId]]:
    """Generator pairs {a, b} with a commutator a b a^-1 b^-1 among ``relators``."""
    out = set()
    for r in relators:
        if len(r) == 4 and r[0].gen == r[2].gen and r[1].gen == r[3].gen and r[0].gen != r[1].gen \
                and r[0].exp == -r[2].exp and r[1].exp == -r[3].exp:
            out.add(frozenset((r[0].gen, r[1].gen)))
    return frozenset(out)


def commutation_class(r: Word, pairs: frozenset[frozenset[GeneratorId]], limit: int = 20000) -> frozenset[Word]:
    """Canonical relators reachable from ``r`` by swapping adjacent commuting
    letters (cyclically) and free cancellation.  Bounded by ``limit`` words."""
    start = canonical_relator(r)
    seen = {start}
    todo = [start]
    while todo and len(seen) < limit:
        w = todo.pop()
        m = len(w)
        for i in range(m):
            a, b = w[i], w[(i + 1) % m]
            if m < 2 or frozenset((a.gen, b.gen)) not in pairs:
                continue
            rot = list(w[i:] + w[:i])
            rot[0], rot[1] = rot[1], rot[0]
            nxt = canonical_relator(Word(rot))
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return frozenset(seen)


def equivalent_mod_commutation(r: Word, s: Word, pairs: frozenset[frozenset[GeneratorId]]) -> bool:
    return canonical_relator(s) in commutation_class(r, pairs)


@dataclass
class ComponentMatch:
    """Pairing of support components by generator set."""

    matched: list[tuple[Presentation, Presentation, Comparison]]
    unmatched_left: list[Presentation]
    unmatched_right: list[Presentation]

    @property
    def equal(self) -> bool:
        return (not self.unmatched_left and not self.unmatched_right
                and all(c.equal for _, _, c in self.matched))


def compare_components(p: Presentation, q: Presentation) -> ComponentMatch:
    left = support_components(p)
    right = {frozenset(c.generators): c for c in support_components(q)}
    matched, unmatched = [], []
    for c in left:
        other = right.pop(frozenset(c.generators), None)
        if other is None:
            unmatched.append(c)
        else:
            matched.append((c, other, relator_sets_equal(c, other)))
    return ComponentMatch(matched, unmatched, list(right.values()))
