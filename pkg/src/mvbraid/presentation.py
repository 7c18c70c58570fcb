"""Group presentations as values: bookkeeping, validation, free-factor split."""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping

from .words import (
    GeneratorId,
    Word,
    canonical_relator,
    format_generator,
    format_word,
    parse_generator,
    parse_word,
    substitute,
)


@dataclass(frozen=True)
class Presentation:
    """``<generators | relators>``.

    ``resolve`` records, for generators that were eliminated or renamed by
    Tietze moves, a word in the current generators.  Generators not in
    ``resolve`` stand for themselves.
    """

    name: str
    generators: tuple[GeneratorId, ...]
    relators: tuple[Word, ...]
    resolve: Mapping[GeneratorId, Word] = field(default_factory=dict, compare=False, repr=False)

    @classmethod
    def create(cls, name: str, generators: Iterable[GeneratorId],
               relators: Iterable[Iterable], resolve=None) -> Presentation:
        """Canonicalize relators, dropping empty and duplicate ones (order kept)."""
        seen = set()
        rels = []
        for r in relators:
            c = canonical_relator(r)
            if c and c not in seen:
                seen.add(c)
                rels.append(c)
        return cls(name, tuple(generators), tuple(rels), dict(resolve or {}))

    def with_relators(self, relators: Iterable[Iterable], name: str | None = None) -> Presentation:
        return Presentation.create(name or self.name, self.generators, relators, self.resolve)

    def renamed(self, name: str) -> Presentation:
        return replace(self, name=name)

    def relator_set(self) -> frozenset[Word]:
        return frozenset(canonical_relator(r) for r in self.relators)

    def resolve_word(self, w: Word) -> Word:
        """Rewrite ``w`` (over original or current generators) in current generators."""
        out = []
        for gen, exp in w:
            img = self.resolve.get(gen)
            if img is None:
                out.append((gen, exp))
            else:
                out.extend(img if exp > 0 else ~img)
        return Word(out)

    def __str__(self) -> str:
        return format_presentation(self)

    # ------------------------------------------------------------ JSON

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "generators": [format_generator(g) for g in self.generators],
            "relators": [format_word(r) for r in self.relators],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> Presentation:
        return cls(
            data["name"],
            tuple(parse_generator(g) for g in data["generators"]),
            tuple(parse_word(r) for r in data["relators"]),
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    @classmethod
    def loads(cls, text: str) -> Presentation:
        return cls.from_json(json.loads(text))


def format_presentation(p: Presentation, tau_alias: bool = False) -> str:
    gens = ", ".join(format_generator(g, tau_alias) for g in p.generators)
    lines = [f"{p.name} = < {gens} |"]
    lines += [f"    {format_word(r, tau_alias)}" for r in p.relators]
    lines.append(">")
    return "\n".join(lines)


@dataclass
class ValidationReport:
    undeclared: list[tuple[int, GeneratorId]] = field(default_factory=list)
    duplicate_generators: list[GeneratorId] = field(default_factory=list)
    duplicate_relators: list[int] = field(default_factory=list)
    empty_relators: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.undeclared and not self.duplicate_generators

    @property
    def warnings(self) -> list[str]:
        out = [f"relator #{i} duplicates an earlier relator" for i in self.duplicate_relators]
        out += [f"relator #{i} is trivially redundant (empty)" for i in self.empty_relators]
        return out

    @property
    def errors(self) -> list[str]:
        out = [f"relator #{i} uses undeclared generator {format_generator(g)}"
               for i, g in self.undeclared]
        out += [f"generator {format_generator(g)} declared twice" for g in self.duplicate_generators]
        return out

    def to_json(self) -> dict:
        return {"ok": self.ok, "errors": self.errors, "warnings": self.warnings}


def validate(p: Presentation) -> ValidationReport:
    rep = ValidationReport()
    declared = set()
    for g in p.generators:
        if g in declared:
            rep.duplicate_generators.append(g)
        declared.add(g)
    seen = set()
    for i, r in enumerate(p.relators):
        for g in sorted(Word(r).generators() - declared):
            rep.undeclared.append((i, g))
        c = canonical_relator(r)
        if not c:
            rep.empty_relators.append(i)
        elif c in seen:
            rep.duplicate_relators.append(i)
        seen.add(c)
    return rep


def support_components(p: Presentation) -> list[Presentation]:
    """Connected components of the graph "generators co-occur in a relator".

    Generators absent from every relator become singleton free factors.
    Parts are ordered by their first generator in declared order.
    """
    parent = {g: g for g in p.generators}

    def find(g):
        while parent[g] != g:
            parent[g] = parent[parent[g]]
            g = parent[g]
        return g

    for r in p.relators:
        gens = [let.gen for let in r]
        for g in gens:
            parent.setdefault(g, g)
        for a, b in zip(gens, gens[1:]):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[rb] = ra

    order: list[GeneratorId] = []
    members: dict[GeneratorId, list[GeneratorId]] = {}
    for g in p.generators:
        root = find(g)
        if root not in members:
            members[root] = []
            order.append(root)
        members[root].append(g)
    rels: dict[GeneratorId, list[Word]] = {root: [] for root in order}
    stray: list[Word] = []
    for r in p.relators:
        if not r:
            stray.append(r)
            continue
        root = find(r[0].gen)
        if root not in rels:  # undeclared generators only
            rels[root] = []
            members[root] = []
            order.append(root)
        rels[root].append(r)
    parts = [Presentation(f"{p.name}[{i}]", tuple(members[root]), tuple(rels[root]))
             for i, root in enumerate(order)]
    if stray:
        parts.append(Presentation(f"{p.name}[{len(parts)}]", (), tuple(stray)))
    return parts


def rename_generators(p: Presentation, mapping: Mapping[GeneratorId, GeneratorId],
                      name: str | None = None) -> Presentation:
    """Rename generators one-to-one (e.g. to compare lambda^(1) against FVP names)."""
    images = {g: Word([(mapping.get(g, g), 1)]) for g in p.generators}
    rels = [substitute(r, images) for r in p.relators]
    return Presentation.create(name or p.name, [mapping.get(g, g) for g in p.generators], rels)
