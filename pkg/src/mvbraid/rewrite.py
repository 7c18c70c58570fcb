"""Reidemeister-Schreier: Schreier generators, the rewriting map tau and
derived subgroup presentations."""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .cosets import CosetTable, Transversal
from .errors import NotInSubgroup
from .presentation import Presentation
from .words import GeneratorId, IDENTITY, Letter, Word, format_generator, format_word, schreier


@dataclass(frozen=True)
class SchreierSymbol:
    """s_{c,a} = rep(c) a rep(c.a)^-1 as a free word."""

    coset: int
    gen: GeneratorId
    expansion: Word

    @property
    def trivial(self) -> bool:
        return not self.expansion

    @property
    def ident(self) -> GeneratorId:
        return schreier(self.coset, self.gen)

    def __str__(self) -> str:
        return f"{format_generator(self.ident)} = {format_word(self.expansion)}"


def schreier_generators(t: CosetTable, tr: Transversal) -> list[SchreierSymbol]:
    """One symbol per (coset, generator), coset-major."""
    out = []
    for c in range(t.degree):
        for g, gen in enumerate(t.generators):
            d = t.rows[c][2 * g]
            exp = Word(tuple(tr[c]) + (Letter(gen, 1),) + tuple(~tr[d]))
            out.append(SchreierSymbol(c, gen, exp))
    return out


class Rewriter:
    """tau for a fixed (table, transversal): letter codes in, symbol words out."""

    def __init__(self, t: CosetTable, tr: Transversal, drop_trivial: bool = True):
        self.table = t
        self.transversal = tr
        self.symbols = schreier_generators(t, tr)
        self.keep = bytes(0 if (drop_trivial and s.trivial) else 1 for s in self.symbols)
        self.encoder = t.encoder
        self.ngens = len(t.generators)

    def rewrite(self, w: Word, start: int = 0) -> tuple[Word, int]:
        codes, end = kernels.rewrite(self.table.rows, start, self.encoder.encode(w),
                                     self.ngens, self.keep)
        syms = self.symbols
        return Word._trusted(Letter(syms[c >> 1].ident, 1 - 2 * (c & 1)) for c in codes), end

    def tau(self, w: Word) -> Word:
        out, end = self.rewrite(w, 0)
        if end != 0:
            raise NotInSubgroup(f"{format_word(w)} ends at coset {end}, not in the subgroup", end)
        return out

    def expansions(self) -> dict[GeneratorId, Word]:
        return {s.ident: s.expansion for s in self.symbols}


def tau_rewrite(w: Word, t: CosetTable, tr: Transversal, drop_trivial: bool = True) -> Word:
    """Rewrite a subgroup element into Schreier symbols.

    A letter a^+1 read at coset c emits s_{c,a}; a letter a^-1 that moves
    c to d emits s_{d,a}^-1.  Freely trivial symbols are omitted unless
    ``drop_trivial`` is false.
    """
    return Rewriter(t, tr, drop_trivial).tau(w)


def derive_subgroup_presentation(p: Presentation, t: CosetTable, tr: Transversal,
                                 name: str | None = None) -> Presentation:
    """Generators: nontrivial symbols.  Relators: tau(rep r rep^-1) for each
    transversal word and each relator, in (transversal, relator) order."""
    rw = Rewriter(t, tr)
    gens = [s.ident for s in rw.symbols if not s.trivial]
    rels = []
    for lam in tr.reps:
        inv = ~lam
        for r in p.relators:
            rels.append(rw.tau(Word(tuple(lam) + tuple(r) + tuple(inv))))
    resolve = {s.ident: IDENTITY for s in rw.symbols if s.trivial}
    return Presentation.create(name or f"ker({p.name})", gens, rels, resolve)
