"""Coset tables: exact kernel tables from permutation images, Todd-Coxeter
enumeration, canonical renumbering and Schreier transversals."""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from . import kernels
from .errors import NotWellDefined
from .perm import Permutation, evaluate
from .presentation import Presentation
from .words import GeneratorId, Letter, Word, format_generator, format_word, rho

DEFAULT_MAX_COSETS = 10000
MAX_COSETS_ENV = "MVBRAID_MAX_COSETS"


def max_cosets_default() -> int:
    value = os.environ.get(MAX_COSETS_ENV)
    return int(value) if value else DEFAULT_MAX_COSETS


class Encoder:
    """Maps words over a fixed generator list to integer letter codes."""

    def __init__(self, generators: Sequence[GeneratorId]):
        self.generators = tuple(generators)
        self.index = {g: i for i, g in enumerate(self.generators)}

    def encode(self, w: Word) -> list[int]:
        try:
            return [2 * self.index[g] + (0 if e > 0 else 1) for g, e in w]
        except KeyError as exc:
            raise KeyError(f"generator {format_generator(exc.args[0])} not declared") from None

    def decode(self, codes: Sequence[int]) -> Word:
        return Word._trusted(Letter(self.generators[c >> 1], 1 - 2 * (c & 1)) for c in codes)


@dataclass(frozen=True)
class CosetTable:
    """Action of each generator (column ``2g``) and its inverse (``2g+1``) on cosets.

    ``labels`` holds the permutation of each coset for kernel tables.
    """

    generators: tuple[GeneratorId, ...]
    rows: tuple[tuple[int, ...], ...]
    base: Presentation | None = field(default=None, compare=False, repr=False)
    labels: tuple[Permutation, ...] | None = field(default=None, compare=False, repr=False)

    @property
    def degree(self) -> int:
        return len(self.rows)

    @property
    def encoder(self) -> Encoder:
        return Encoder(self.generators)

    def act(self, coset: int, gen: GeneratorId, exp: int = 1) -> int:
        col = 2 * self.generators.index(gen) + (0 if exp > 0 else 1)
        return self.rows[coset][col]

    def trace(self, w: Word, start: int = 0) -> int:
        return kernels.trace(self.rows, start, self.encoder.encode(w))

    def check(self) -> list[str]:
        """Consistency problems: non-inverse columns or relators not closing."""
        problems = []
        n = self.degree
        for c, row in enumerate(self.rows):
            for g in range(len(self.generators)):
                d = row[2 * g]
                if not 0 <= d < n or self.rows[d][2 * g + 1] != c:
                    problems.append(f"coset {c}: {format_generator(self.generators[g])} "
                                    "and its inverse are not mutually inverse")
        if self.base is not None and not problems:
            enc = self.encoder
            for r in self.base.relators:
                codes = enc.encode(r)
                for c in range(n):
                    if kernels.trace(self.rows, c, codes) != c:
                        problems.append(f"relator {format_word(r)} does not close at coset {c}")
                        break
        return problems

    def standardized(self) -> CosetTable:
        """Renumber cosets in BFS order from coset 0, scanning columns in order."""
        order = [0]
        new = {0: 0}
        i = 0
        while i < len(order):
            for d in self.rows[order[i]]:
                if d not in new:
                    new[d] = len(order)
                    order.append(d)
            i += 1
        rows = tuple(tuple(new[d] for d in self.rows[c]) for c in order)
        labels = tuple(self.labels[c] for c in order) if self.labels else None
        return CosetTable(self.generators, rows, self.base, labels)

    def to_json(self) -> dict:
        action = {}
        for g, gen in enumerate(self.generators):
            name = format_generator(gen)
            action[name] = [row[2 * g] for row in self.rows]
            action[name + "^-1"] = [row[2 * g + 1] for row in self.rows]
        return {
            "degree": self.degree,
            "generators": [format_generator(g) for g in self.generators],
            "action": action,
        }


def kernel_coset_table(p: Presentation, images: Mapping[GeneratorId, Permutation]) -> CosetTable:
    """Cosets of the kernel of ``generator -> permutation``.

    Cosets are the permutations reachable from the identity by right
    multiplication, numbered in lexicographic order (identity first).
    """
    missing = [g for g in p.generators if g not in images]
    if missing:
        raise KeyError(f"no image for generator {format_generator(missing[0])}")
    for r in p.relators:
        img = evaluate(r, images)
        if not img.is_identity():
            raise NotWellDefined(f"relator {format_word(r)} maps to {img}, not the identity")
    gens = [images[g] for g in p.generators]
    n = len(gens[0]) if gens else 1
    start = Permutation.identity(n)
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for img in gens:
            nxt = cur * img
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    labels = sorted(seen)
    index = {perm: i for i, perm in enumerate(labels)}
    inverses = [img.inverse() for img in gens]
    rows = []
    for perm in labels:
        row = []
        for img, inv in zip(gens, inverses):
            row.append(index[perm * img])
            row.append(index[perm * inv])
        rows.append(tuple(row))
    return CosetTable(p.generators, tuple(rows), p, tuple(Permutation(x) for x in labels))


def todd_coxeter(p: Presentation, subgroup_gens: Sequence[Word] = (),
                 max_cosets: int | None = None) -> CosetTable:
    """HLT coset enumeration; the result is in standardized numbering.

    Raises ``CosetLimitExceeded`` when more than ``max_cosets`` cosets
    are defined (default from ``MVBRAID_MAX_COSETS`` or 10000).
    """
    limit = max_cosets if max_cosets is not None else max_cosets_default()
    enc = Encoder(p.generators)
    rels = [enc.encode(r) for r in p.relators]
    sub = [enc.encode(Word(w)) for w in subgroup_gens]
    rows = kernels.enumerate_cosets(len(p.generators), rels, sub, limit)
    table = CosetTable(p.generators, tuple(tuple(r) for r in rows), p)
    return table.standardized()


# ---------------------------------------------------------------- transversals


@dataclass(frozen=True)
class Transversal:
    """Coset representatives; ``reps[c]`` is the word for coset ``c``."""

    reps: tuple[Word, ...]
    strategy: str = "bfs"

    def __getitem__(self, coset: int) -> Word:
        return self.reps[coset]

    def __len__(self) -> int:
        return len(self.reps)

    def is_prefix_closed(self) -> bool:
        words = set(self.reps)
        return all(Word._trusted(w[:i]) in words for w in self.reps for i in range(len(w)))

    def to_json(self) -> dict:
        return {"strategy": self.strategy, "reps": [format_word(w) for w in self.reps]}


def lambda_words(n: int) -> list[Word]:
    """The products m_{2,j2} m_{3,j3} ... m_{n,jn}, m_{kl} = rho_{k-1} ... rho_l."""
    words = [Word()]
    for k in range(2, n + 1):
        blocks = []
        for l in range(1, k + 1):
            blocks.append([Letter(rho(i), 1) for i in range(k - 1, l - 1, -1)])
        words = [Word(tuple(w) + tuple(b)) for w in words for b in blocks]
    return words


def schreier_transversal(t: CosetTable, strategy: str = "bfs", n: int | None = None) -> Transversal:
    """``bfs``: shortest representatives, ties by column order.
    ``lambda``: the products of m_{kl} blocks (needs ``n`` and generators rho(i))."""
    if strategy == "bfs":
        reps: list[Word | None] = [None] * t.degree
        reps[0] = Word()
        queue = deque([0])
        while queue:
            c = queue.popleft()
            for col, d in enumerate(t.rows[c]):
                if reps[d] is None:
                    letter = Letter(t.generators[col >> 1], 1 - 2 * (col & 1))
                    reps[d] = Word._trusted(tuple(reps[c]) + (letter,))
                    queue.append(d)
        if any(r is None for r in reps):
            raise ValueError("coset table is not connected")
        return Transversal(tuple(reps), "bfs")  # type: ignore[arg-type]
    if strategy == "lambda":
        if n is None:
            raise ValueError("the lambda transversal needs the strand count n")
        needed = [rho(i) for i in range(1, n)]
        absent = [g for g in needed if g not in t.generators]
        if absent:
            raise ValueError(f"lambda transversal needs generator {format_generator(absent[0])}")
        words = lambda_words(n)
        if len(words) != t.degree:
            raise ValueError(f"table has {t.degree} cosets but the lambda set has {len(words)} words")
        reps = [None] * t.degree
        for w in words:
            c = t.trace(w)
            if reps[c] is not None:
                raise ValueError(f"lambda words {format_word(reps[c])} and {format_word(w)} "
                                 f"reach the same coset {c}")
            reps[c] = w
        return Transversal(tuple(reps), "lambda")  # type: ignore[arg-type]
    raise ValueError(f"unknown transversal strategy {strategy!r}")


def representative(w: Word, t: CosetTable, tr: Transversal) -> Word:
    return tr[t.trace(w)]
