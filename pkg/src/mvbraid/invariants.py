"""Integer abelianization via Smith normal form, and the free-factor report."""

from __future__ import annotations

from dataclasses import dataclass, field

from .presentation import Presentation, support_components
from .words import format_generator

Matrix = list[list[int]]


def _identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(a[i][t] * b[t][j] for t in range(inner)) for j in range(cols)]
            for i in range(len(a))]


def _is_unimodular_pair(m: Matrix, inv: Matrix) -> bool:
    return matmul(m, inv) == _identity(len(m))


@dataclass
class SmithForm:
    """``left * m * right == diag`` with unimodular ``left`` and ``right``."""

    diagonal: list[int]
    left: Matrix
    right: Matrix
    rows: int
    cols: int

    def diag_matrix(self) -> Matrix:
        d = [[0] * self.cols for _ in range(self.rows)]
        for i, v in enumerate(self.diagonal):
            d[i][i] = v
        return d


def smith_normal_form(m: Matrix, ncols: int | None = None) -> SmithForm:
    """Diagonalize ``m`` by unimodular row and column operations.

    Pivot: smallest nonzero absolute value, ties broken by position.  The
    diagonal is nonnegative and each entry divides the next.  The identity
    ``L m R = D`` and unimodularity of both transforms are checked before
    returning (AssertionError otherwise).
    """
    rows = len(m)
    cols = ncols if ncols is not None else (len(m[0]) if m else 0)
    a = [list(r) for r in m]
    left, left_inv = _identity(rows), _identity(rows)
    right, right_inv = _identity(cols), _identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]
        for r in left_inv:
            r[i], r[j] = r[j], r[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in right:
            r[i], r[j] = r[j], r[i]
        right_inv[i], right_inv[j] = right_inv[j], right_inv[i]

    def add_row(src, dst, q):
        # row_dst += q * row_src
        if q == 0:
            return
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        left[dst] = [x + q * y for x, y in zip(left[dst], left[src])]
        for r in left_inv:
            r[src] -= q * r[dst]

    def add_col(src, dst, q):
        # col_dst += q * col_src
        if q == 0:
            return
        for r in a:
            r[dst] += q * r[src]
        for r in right:
            r[dst] += q * r[src]
        right_inv[src] = [x - q * y for x, y in zip(right_inv[src], right_inv[dst])]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        left[i] = [-x for x in left[i]]
        for r in left_inv:
            r[i] = -r[i]

    t = 0
    while t < min(rows, cols):
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = abs(a[i][j])
                if v and (pivot is None or v < pivot[0]):
                    pivot = (v, i, j)
        if pivot is None:
            break
        _, i, j = pivot
        swap_rows(t, i)
        swap_cols(t, j)
        done = False
        while not done:
            done = True
            p = a[t][t]
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(t, i, -(a[i][t] // p))
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(t, j, -(a[t][j] // p))
            rest = [(abs(a[i][t]), i, "r") for i in range(t + 1, rows) if a[i][t]]
            rest += [(abs(a[t][j]), j, "c") for j in range(t + 1, cols) if a[t][j]]
            if rest:
                _, idx, kind = min(rest)
                if kind == "r":
                    swap_rows(t, idx)
                else:
                    swap_cols(t, idx)
                done = False
                continue
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if a[i][j] % p), None)
            if bad is not None:
                add_row(bad[0], t, 1)
                done = False
        if a[t][t] < 0:
            negate_row(t)
        t += 1

    diagonal = [a[i][i] for i in range(min(rows, cols))]
    form = SmithForm(diagonal, left, right, rows, cols)
    assert matmul(matmul(left, m), right) == form.diag_matrix() if rows and cols else True, \
        "Smith form transform identity failed"
    assert _is_unimodular_pair(left, left_inv) and _is_unimodular_pair(right, right_inv), \
        "Smith form transforms are not unimodular"
    nonzero = [d for d in diagonal if d]
    assert all(b % a_ == 0 for a_, b in zip(nonzero, nonzero[1:])), "divisibility chain broken"
    return form


def relation_matrix(p: Presentation) -> Matrix:
    """Row per relator, column per generator: total signed exponent."""
    index = {g: i for i, g in enumerate(p.generators)}
    out = []
    for r in p.relators:
        row = [0] * len(p.generators)
        for g, e in r:
            row[index[g]] += e
        out.append(row)
    return out


@dataclass(frozen=True)
class AbelianInvariants:
    rank: int
    torsion: tuple[int, ...] = field(default=())

    def __str__(self) -> str:
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " ⊕ ".join(parts) if parts else "0"

    def __add__(self, other: AbelianInvariants) -> AbelianInvariants:
        # direct sum; torsion recombined through the Smith form of the diagonal
        diag = list(self.torsion) + list(other.torsion)
        m = [[d if i == j else 0 for j in range(len(diag))] for i, d in enumerate(diag)]
        tors = tuple(d for d in smith_normal_form(m, len(diag)).diagonal if d > 1)
        return AbelianInvariants(self.rank + other.rank, tors)

    def to_json(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion), "text": str(self)}


def abelianization(p: Presentation) -> AbelianInvariants:
    m = relation_matrix(p)
    ncols = len(p.generators)
    diag = smith_normal_form(m, ncols).diagonal
    nonzero = [d for d in diag if d]
    return AbelianInvariants(ncols - len(nonzero), tuple(d for d in nonzero if d > 1))


@dataclass
class FactorReport:
    """Free factors read off the disjoint generator supports of the relators."""

    factors: list[Presentation]
    invariants: list[AbelianInvariants]

    def to_text(self) -> str:
        lines = [f"{len(self.factors)} free factor(s)"]
        for f, inv in zip(self.factors, self.invariants):
            gens = ", ".join(format_generator(g) for g in f.generators)
            lines.append(f"  [{gens}]  {len(f.relators)} relator(s)  {inv}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"factors": [{"presentation": f.to_json(), "abelianization": inv.to_json()}
                            for f, inv in zip(self.factors, self.invariants)]}


def free_factor_report(p: Presentation) -> FactorReport:
    comps = support_components(p)
    return FactorReport(comps, [abelianization(c) for c in comps])
