# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contract as ``_pykernels``."""

from libc.stdlib cimport malloc, realloc, free

from .errors import CosetLimitExceeded

BACKEND = "cython"


def free_reduce(codes):
    cdef list out = []
    cdef Py_ssize_t n = 0
    cdef long c
    for c in codes:
        if n and <long>out[n - 1] == (c ^ 1):
            out.pop()
            n -= 1
        else:
            out.append(c)
            n += 1
    return out


def trace(table, long start, codes):
    cdef long cur = start
    cdef long c
    for c in codes:
        cur = table[cur][c]
    return cur


def rewrite(table, long start, codes, long ngens, keep):
    cdef list out = []
    cdef Py_ssize_t n = 0
    cdef long cur = start, nxt, c, g, sym, code
    cdef const unsigned char[:] kv = keep
    for c in codes:
        nxt = table[cur][c]
        g = c >> 1
        if c & 1:
            sym = nxt * ngens + g
            code = 2 * sym + 1
        else:
            sym = cur * ngens + g
            code = 2 * sym
        if kv[sym]:
            if n and <long>out[n - 1] == (code ^ 1):
                out.pop()
                n -= 1
            else:
                out.append(code)
                n += 1
        cur = nxt
    return out, cur


cdef class _Enum:
    cdef int *table
    cdef int *parent
    cdef int ncol
    cdef int n
    cdef int cap
    cdef int max_cosets
    cdef int *queue
    cdef int qcap

    def __cinit__(self, int ngens, int max_cosets):
        self.ncol = 2 * ngens
        self.max_cosets = max_cosets
        self.cap = 64
        self.table = <int *>malloc(self.cap * self.ncol * sizeof(int))
        self.parent = <int *>malloc(self.cap * sizeof(int))
        self.qcap = 64
        self.queue = <int *>malloc(self.qcap * sizeof(int))
        if not self.table or not self.parent or not self.queue:
            raise MemoryError()
        self.n = 0
        self._new_row()

    def __dealloc__(self):
        free(self.table)
        free(self.parent)
        free(self.queue)

    cdef int _new_row(self) except -1:
        cdef int x
        cdef int *t
        cdef int *p
        if self.n >= self.max_cosets:
            raise CosetLimitExceeded(f"more than {self.max_cosets} cosets defined")
        if self.n == self.cap:
            self.cap *= 2
            t = <int *>realloc(self.table, self.cap * self.ncol * sizeof(int))
            p = <int *>realloc(self.parent, self.cap * sizeof(int))
            if not t or not p:
                raise MemoryError()
            self.table, self.parent = t, p
        for x in range(self.ncol):
            self.table[self.n * self.ncol + x] = -1
        self.parent[self.n] = self.n
        self.n += 1
        return self.n - 1

    cdef inline int rep(self, int c):
        cdef int root = c, nxt
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            nxt = self.parent[c]
            self.parent[c] = root
            c = nxt
        return root

    cdef int define(self, int c, int x) except -1:
        cdef int d = self._new_row()
        self.table[c * self.ncol + x] = d
        self.table[d * self.ncol + (x ^ 1)] = c
        return 0

    cdef int push(self, int v, int *qlen) except -1:
        cdef int *q
        if qlen[0] == self.qcap:
            self.qcap *= 2
            q = <int *>realloc(self.queue, self.qcap * sizeof(int))
            if not q:
                raise MemoryError()
            self.queue = q
        self.queue[qlen[0]] = v
        qlen[0] += 1
        return 0

    cdef int merge(self, int k, int l, int *qlen) except -1:
        k = self.rep(k)
        l = self.rep(l)
        if k != l:
            if l < k:
                k, l = l, k
            self.parent[l] = k
            self.push(l, qlen)
        return 0

    cdef int coincidence(self, int a, int b) except -1:
        cdef int qlen = 0, i = 0, g, x, d, f1, f2, ncol = self.ncol
        cdef int *t
        self.merge(a, b, &qlen)
        while i < qlen:
            g = self.queue[i]
            i += 1
            for x in range(ncol):
                t = self.table
                d = t[g * ncol + x]
                if d < 0:
                    continue
                t[d * ncol + (x ^ 1)] = -1
                f1 = self.rep(g)
                f2 = self.rep(d)
                if t[f1 * ncol + x] >= 0:
                    self.merge(f2, t[f1 * ncol + x], &qlen)
                elif t[f2 * ncol + (x ^ 1)] >= 0:
                    self.merge(f1, t[f2 * ncol + (x ^ 1)], &qlen)
                else:
                    t[f1 * ncol + x] = f2
                    t[f2 * ncol + (x ^ 1)] = f1
        return 0

    cdef int scan_and_fill(self, int c, int *w, int length) except -1:
        cdef int f = c, b = c, i = 0, j = length - 1, ncol = self.ncol
        while True:
            while i <= j and self.table[f * ncol + w[i]] >= 0:
                f = self.table[f * ncol + w[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return 0
            while j >= i and self.table[b * ncol + (w[j] ^ 1)] >= 0:
                b = self.table[b * ncol + (w[j] ^ 1)]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return 0
            if i == j:
                self.table[f * ncol + w[i]] = b
                self.table[b * ncol + (w[i] ^ 1)] = f
                return 0
            self.define(f, w[i])


def enumerate_cosets(int ngens, relators, subgroup, int max_cosets):
    cdef _Enum e = _Enum(ngens, max_cosets)
    cdef int ncol = 2 * ngens
    cdef int nrel = len(relators)
    cdef int total = 0, k, r, c, x, pos
    cdef int *lens
    cdef int *offs
    cdef int *flat
    words = list(relators)
    for w in words:
        total += len(w)
    lens = <int *>malloc((nrel + 1) * sizeof(int))
    offs = <int *>malloc((nrel + 1) * sizeof(int))
    flat = <int *>malloc((total + 1) * sizeof(int))
    if not lens or not offs or not flat:
        free(lens); free(offs); free(flat)
        raise MemoryError()
    cdef int *sub
    try:
        pos = 0
        for r in range(nrel):
            offs[r] = pos
            lens[r] = len(words[r])
            for k in range(lens[r]):
                flat[pos] = words[r][k]
                pos += 1
        for w in subgroup:
            if len(w):
                sub = <int *>malloc(len(w) * sizeof(int))
                if not sub:
                    raise MemoryError()
                try:
                    for k in range(len(w)):
                        sub[k] = w[k]
                    e.scan_and_fill(0, sub, len(w))
                finally:
                    free(sub)
        c = 0
        while c < e.n:
            if e.parent[c] == c:
                for r in range(nrel):
                    e.scan_and_fill(c, flat + offs[r], lens[r])
                    if e.parent[c] != c:
                        break
                if e.parent[c] == c:
                    for x in range(ncol):
                        if e.table[c * ncol + x] < 0:
                            e.define(c, x)
            c += 1
    finally:
        free(lens)
        free(offs)
        free(flat)

    live = [c for c in range(e.n) if e.parent[c] == c]
    index = {c: i for i, c in enumerate(live)}
    return [[index[e.rep(e.table[c * ncol + x])] for x in range(ncol)] for c in live]
