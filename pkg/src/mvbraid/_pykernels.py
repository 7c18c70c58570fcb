"""Pure-Python kernels.  ``_ckernels.pyx`` implements the same functions.

Words are lists of letter codes: generator ``g`` with exponent +1 is ``2*g``,
with exponent -1 it is ``2*g + 1``; ``code ^ 1`` is the inverse letter.
Coset tables are lists of rows, one column per letter code.
"""

from .errors import CosetLimitExceeded

BACKEND = "python"


def free_reduce(codes):
    out = []
    for c in codes:
        if out and out[-1] == c ^ 1:
            out.pop()
        else:
            out.append(c)
    return out


def trace(table, start, codes):
    cur = start
    for c in codes:
        cur = table[cur][c]
    return cur


def rewrite(table, start, codes, ngens, keep):
    """Reidemeister-Schreier rewrite of ``codes`` read from coset ``start``.

    Emits symbol codes ``2*(coset*ngens + g) + neg``; for a negative letter
    the coset is the one reached after reading it.  Symbols with
    ``keep[sym] == 0`` are skipped; the result is freely reduced.
    Returns ``(symbols, end_coset)``.
    """
    out = []
    cur = start
    for c in codes:
        nxt = table[cur][c]
        g = c >> 1
        if c & 1:
            sym = nxt * ngens + g
            code = 2 * sym + 1
        else:
            sym = cur * ngens + g
            code = 2 * sym
        if keep[sym]:
            if out and out[-1] == code ^ 1:
                out.pop()
            else:
                out.append(code)
        cur = nxt
    return out, cur


def enumerate_cosets(ngens, relators, subgroup, max_cosets):
    """HLT coset enumeration with a union-find coincidence queue.

    Returns the live rows (with entries mapped to live coset numbers in
    order of first definition); callers standardize the numbering.
    """
    ncol = 2 * ngens
    table = [[-1] * ncol]
    parent = [0]

    def rep(c):
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def define(c, x):
        if len(table) >= max_cosets:
            raise CosetLimitExceeded(f"more than {max_cosets} cosets defined")
        d = len(table)
        table.append([-1] * ncol)
        parent.append(d)
        table[c][x] = d
        table[d][x ^ 1] = c

    def merge(k, l, queue):
        k, l = rep(k), rep(l)
        if k != l:
            if l < k:
                k, l = l, k
            parent[l] = k
            queue.append(l)

    def coincidence(a, b):
        queue = []
        merge(a, b, queue)
        i = 0
        while i < len(queue):
            g = queue[i]
            i += 1
            row = table[g]
            for x in range(ncol):
                d = row[x]
                if d < 0:
                    continue
                table[d][x ^ 1] = -1
                f1, f2 = rep(g), rep(d)
                if table[f1][x] >= 0:
                    merge(f2, table[f1][x], queue)
                elif table[f2][x ^ 1] >= 0:
                    merge(f1, table[f2][x ^ 1], queue)
                else:
                    table[f1][x] = f2
                    table[f2][x ^ 1] = f1

    def scan_and_fill(c, w):
        f = b = c
        i, j = 0, len(w) - 1
        while True:
            while i <= j and table[f][w[i]] >= 0:
                f = table[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and table[b][w[j] ^ 1] >= 0:
                b = table[b][w[j] ^ 1]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if i == j:
                table[f][w[i]] = b
                table[b][w[i] ^ 1] = f
                return
            define(f, w[i])

    for w in subgroup:
        if w:
            scan_and_fill(0, w)
    c = 0
    while c < len(table):
        if parent[c] == c:
            for r in relators:
                scan_and_fill(c, r)
                if parent[c] != c:
                    break
            if parent[c] == c:
                for x in range(ncol):
                    if table[c][x] < 0:
                        define(c, x)
        c += 1

    live = [c for c in range(len(table)) if parent[c] == c]
    index = {c: i for i, c in enumerate(live)}
    return [[index[rep(table[c][x])] for x in range(ncol)] for c in live]
