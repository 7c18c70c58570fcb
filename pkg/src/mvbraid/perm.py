"""Permutations of {1..n} with points acting on the right.

``p * q`` means "first p, then q": the image of k under ``p * q`` is
``(k)p`` mapped by ``q``.  Words are evaluated left to right in this sense.
"""

from __future__ import annotations

import itertools
import re
from typing import Mapping

from .words import GeneratorId, Word, format_generator

MAX_DEGREE = 8


class DegreeMismatch(ValueError):
    pass


class Permutation(tuple):
    """Image array; entry ``i - 1`` holds the image of point ``i``."""

    def __new__(cls, images):
        images = tuple(int(v) for v in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> Permutation:
        img = list(range(1, n + 1))
        img[a - 1], img[b - 1] = b, a
        return cls(img)

    @classmethod
    def from_cycles(cls, n: int, cycles) -> Permutation:
        img = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self)

    def __call__(self, k: int) -> int:
        return self[k - 1]

    def __mul__(self, other: Permutation) -> Permutation:  # type: ignore[override]
        if len(self) != len(other):
            raise DegreeMismatch(f"degrees {len(self)} and {len(other)} differ")
        return Permutation(other[v - 1] for v in self)

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for i, v in enumerate(self, 1):
            inv[v - 1] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self, 1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, len(self) + 1):
            if start in seen or self(start) == start:
                continue
            cyc = [start]
            seen.add(start)
            k = self(start)
            while k != start:
                cyc.append(k)
                seen.add(k)
                k = self(k)
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self) -> str:
        return f"Permutation({list(self)})"


def parse_permutation(text: str, n: int | None = None) -> Permutation:
    """Accept cycle notation ``(1 2)(3 4)`` / ``()`` or one-line ``[2,1,3]`` / ``2 1 3``."""
    text = text.strip()
    if text.startswith("("):
        cycles = [tuple(int(v) for v in re.split(r"[\s,]+", body.strip()) if v)
                  for body in re.findall(r"\(([^)]*)\)", text)]
        moved = max((max(c) for c in cycles if c), default=1)
        deg = n if n is not None else moved
        if moved > deg:
            raise ValueError(f"cycle point {moved} exceeds degree {deg}")
        return Permutation.from_cycles(deg, [c for c in cycles if c])
    body = text.strip("[]")
    p = Permutation(int(v) for v in re.split(r"[\s,]+", body) if v)
    if n is not None and len(p) != n:
        raise DegreeMismatch(f"expected degree {n}, got {len(p)}")
    return p


def evaluate(w: Word, images: Mapping[GeneratorId, Permutation]) -> Permutation:
    degrees = {len(p) for p in images.values()}
    if len(degrees) > 1:
        raise DegreeMismatch(f"images have mixed degrees {sorted(degrees)}")
    if not degrees:
        if w:
            raise KeyError(f"no image for generator {format_generator(w[0].gen)}")
        return Permutation.identity(1)
    n = degrees.pop()
    cur = list(range(1, n + 1))
    inverses: dict[GeneratorId, Permutation] = {}
    for gen, exp in w:
        try:
            p = images[gen]
        except KeyError:
            raise KeyError(f"no image for generator {format_generator(gen)}") from None
        if exp < 0:
            p = inverses.setdefault(gen, p.inverse())
        cur = [p[v - 1] for v in cur]
    return Permutation(cur)


def enumerate_symmetric(n: int) -> list[Permutation]:
    if not 1 <= n <= MAX_DEGREE:
        raise ValueError(f"n must lie in 1..{MAX_DEGREE}, got {n}")
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]
