"""Free-group words over an indexed generator alphabet.

Text syntax (used by the CLI and the JSON files)::

    word    := token (WS token)*  |  "1"  |  ""
    token   := name [index ("." index)*] ["^" int]
             | "S[" coset ";" token "]" ["^" int]
    name    := letters

Known family letters:

    s  sigma(i)            r  rho(i, a)   (``r1`` is rho(1, 0))
    t  rho(i, 1) alias     l  lambda(i, j, a)   (``l1.2`` is lambda(1, 2, 0))
    x  x(i, j, a)          m  mu(i, j)
    y  y(i, j)             z  z(i, j)
    c  c(i)

Any other name is a user-defined family, e.g. ``a``, ``b^-1``, ``g2.3``.
``S[c;g]`` is the Schreier symbol for coset ``c`` and ambient generator ``g``.
A power ``^n`` is expanded into ``|n|`` letters of exponent ``sign(n)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple

# family -> (rank, token letter, number of stored indices)
FAMILIES = {
    "sigma": (0, "s", 1),
    "rho": (1, "r", 2),
    "lambda": (2, "l", 3),
    "x": (3, "x", 3),
    "mu": (4, "m", 2),
    "y": (5, "y", 2),
    "z": (6, "z", 2),
    "c": (7, "c", 1),
    "S": (8, "S", 1),
}
USER_RANK = 9
_TOKEN_TO_FAMILY = {tok: fam for fam, (_, tok, _) in FAMILIES.items() if fam != "S"}


@dataclass(frozen=True, slots=True)
class GeneratorId:
    """A generator: a symbol family plus small integer indices.

    ``ref`` is only used by Schreier symbols, where it names the ambient
    generator ``a`` of ``s_{c,a}`` (the coset is ``indices[0]``).
    """

    family: str
    indices: tuple[int, ...] = ()
    ref: GeneratorId | None = None

    @property
    def sort_key(self) -> tuple:
        info = FAMILIES.get(self.family)
        if info is None:
            head = (USER_RANK, self.family)
        else:
            head = (info[0], "")
        return head + (self.indices, self.ref.sort_key if self.ref else ())

    def __lt__(self, other: GeneratorId) -> bool:
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        return format_generator(self)

    def __repr__(self) -> str:
        return f"GeneratorId({format_generator(self)!r})"


def sigma(i: int) -> GeneratorId:
    return GeneratorId("sigma", (i,))


def rho(i: int, alpha: int = 0) -> GeneratorId:
    return GeneratorId("rho", (i, alpha))


def tau(i: int) -> GeneratorId:
    """Display alias used for the two-sort case: tau_i is rho(i, 1)."""
    return rho(i, 1)


def lam(i: int, j: int, alpha: int = 0) -> GeneratorId:
    return GeneratorId("lambda", (i, j, alpha))


def xgen(i: int, j: int, alpha: int = 0) -> GeneratorId:
    return GeneratorId("x", (i, j, alpha))


def mu(i: int, j: int) -> GeneratorId:
    return GeneratorId("mu", (i, j))


def ygen(i: int, j: int) -> GeneratorId:
    return GeneratorId("y", (i, j))


def zgen(i: int, j: int) -> GeneratorId:
    return GeneratorId("z", (i, j))


def cgen(i: int) -> GeneratorId:
    return GeneratorId("c", (i,))


def schreier(coset: int, gen: GeneratorId) -> GeneratorId:
    return GeneratorId("S", (coset,), gen)


def named(name: str, *indices: int) -> GeneratorId:
    return GeneratorId(name, tuple(indices))


class Letter(NamedTuple):
    gen: GeneratorId
    exp: int  # +1 or -1

    def inverse(self) -> Letter:
        return Letter(self.gen, -self.exp)

    @property
    def key(self) -> tuple:
        return (self.gen.sort_key, 0 if self.exp > 0 else 1)


class Word(tuple):
    """A freely reduced word; the empty word is the identity.

    Constructing a ``Word`` always freely reduces its letters.
    """

    def __new__(cls, letters: Iterable[Letter] = ()):
        out: list[Letter] = []
        for let in letters:
            if not isinstance(let, Letter):
                let = Letter(*let)
            if let.exp not in (1, -1):
                raise ValueError(f"exponent must be +1 or -1, got {let.exp}")
            if out and out[-1].gen == let.gen and out[-1].exp == -let.exp:
                out.pop()
            else:
                out.append(let)
        return super().__new__(cls, out)

    @classmethod
    def _trusted(cls, letters: Iterable[Letter]) -> Word:
        return super().__new__(cls, letters)

    def __mul__(self, other: Word) -> Word:  # type: ignore[override]
        return Word(tuple.__add__(self, other))

    def __invert__(self) -> Word:
        return invert(self)

    def __pow__(self, n: int) -> Word:
        if n < 0:
            return invert(self) ** (-n)
        return Word(tuple(self) * n)

    def generators(self) -> set[GeneratorId]:
        return {let.gen for let in self}

    @property
    def key(self) -> tuple:
        return tuple(let.key for let in self)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"


IDENTITY = Word()


def letters_of(*items) -> Word:
    """Build a word from generators, letters, words or ``(gen, power)`` pairs."""
    out: list[Letter] = []
    for item in items:
        if isinstance(item, GeneratorId):
            out.append(Letter(item, 1))
        elif isinstance(item, Letter):
            out.append(item)
        elif isinstance(item, Word):
            out.extend(item)
        else:
            gen, power = item
            sign = 1 if power > 0 else -1
            out.extend([Letter(gen, sign)] * abs(power))
    return Word(out)


def free_reduce(letters: Iterable) -> Word:
    return Word(letters)


def invert(w: Iterable[Letter]) -> Word:
    return Word._trusted(Letter(g, -e) for g, e in reversed(tuple(w)))


def substitute(w: Word, images: Mapping[GeneratorId, Word]) -> Word:
    out: list[Letter] = []
    for gen, exp in w:
        try:
            img = images[gen]
        except KeyError:
            raise KeyError(f"no image for generator {format_generator(gen)}") from None
        out.extend(img if exp > 0 else invert(img))
    return Word(out)


def cyclic_reduce(w: Word) -> Word:
    lo, hi = 0, len(w)
    while hi - lo >= 2 and w[lo].gen == w[hi - 1].gen and w[lo].exp == -w[hi - 1].exp:
        lo += 1
        hi -= 1
    return Word._trusted(w[lo:hi])


def _min_rotation(w: Word) -> tuple[tuple, Word]:
    best_key = None
    best = w
    for i in range(len(w)):
        rot = w[i:] + w[:i]
        k = tuple(let.key for let in rot)
        if best_key is None or k < best_key:
            best_key, best = k, rot
    return best_key, Word._trusted(best)


def canonical_relator(w: Iterable[Letter]) -> Word:
    """Order-minimal representative of the cyclic class of ``w`` and ``w^-1``.

    The empty word maps to the empty relator.
    """
    r = cyclic_reduce(Word(w))
    if not r:
        return IDENTITY
    k1, c1 = _min_rotation(r)
    k2, c2 = _min_rotation(invert(r))
    return c1 if k1 <= k2 else c2


# ---------------------------------------------------------------- text syntax

_TOKEN_RE = re.compile(r"([A-Za-z_]+)((?:\d+)(?:\.\d+)*)?(?:\^(-?\d+))?$")


def format_generator(g: GeneratorId, tau_alias: bool = False) -> str:
    if g.family == "S":
        return f"S[{g.indices[0]};{format_generator(g.ref, tau_alias)}]"
    info = FAMILIES.get(g.family)
    if info is None:
        idx = g.indices
        tok = g.family
    else:
        tok = info[1]
        idx = g.indices
        if g.family == "rho":
            if tau_alias and idx[1] == 1:
                tok, idx = "t", idx[:1]
            elif idx[1] == 0:
                idx = idx[:1]
        elif g.family in ("lambda", "x") and idx[2] == 0:
            idx = idx[:2]
    return tok + ".".join(str(i) for i in idx)


def parse_generator(text: str) -> GeneratorId:
    text = text.strip()
    if text.startswith("S["):
        if not text.endswith("]") or ";" not in text:
            raise ValueError(f"bad Schreier symbol {text!r}")
        coset, inner = text[2:-1].split(";", 1)
        return schreier(int(coset), parse_generator(inner))
    m = _TOKEN_RE.match(text)
    if not m or m.group(3) is not None:
        raise ValueError(f"bad generator token {text!r}")
    name, idx_text = m.group(1), m.group(2)
    idx = tuple(int(p) for p in idx_text.split(".")) if idx_text else ()
    if name == "t":
        if len(idx) != 1:
            raise ValueError(f"tau takes one index: {text!r}")
        return rho(idx[0], 1)
    fam = _TOKEN_TO_FAMILY.get(name)
    if fam is None:
        return GeneratorId(name, idx)
    nidx = FAMILIES[fam][2]
    if fam == "rho" and len(idx) == 1:
        idx = idx + (0,)
    elif fam in ("lambda", "x") and len(idx) == 2:
        idx = idx + (0,)
    if len(idx) != nidx:
        raise ValueError(f"family {fam} takes {nidx} indices: {text!r}")
    return GeneratorId(fam, idx)


def _split_tokens(text: str) -> list[str]:
    # whitespace separates tokens, except inside S[...]
    tokens, buf, depth = [], [], 0
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch.isspace() and depth == 0:
            if buf:
                tokens.append("".join(buf))
                buf = []
        else:
            buf.append(ch)
    if buf:
        tokens.append("".join(buf))
    return tokens


def parse_word(text: str) -> Word:
    text = text.strip()
    if text in ("", "1", "e"):
        return IDENTITY
    out: list[Letter] = []
    for tok in _split_tokens(text):
        power = 1
        head = tok
        if "^" in tok and not tok.endswith("]"):
            head, _, ptxt = tok.rpartition("^")
            power = int(ptxt)
        if power == 0:
            continue
        gen = parse_generator(head)
        sign = 1 if power > 0 else -1
        out.extend([Letter(gen, sign)] * abs(power))
    return Word(out)


def format_word(w: Iterable[Letter], tau_alias: bool = False) -> str:
    parts = []
    for gen, exp in w:
        tok = format_generator(gen, tau_alias)
        parts.append(tok if exp > 0 else tok + "^-1")
    return " ".join(parts) if parts else "1"
