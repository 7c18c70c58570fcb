"""Time the compiled and pure-Python kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import random
import timeit

from mvbraid import _pykernels
from mvbraid import catalog as C
from mvbraid.cosets import Encoder, schreier_transversal
from mvbraid.pipeline import kernel_table
from mvbraid.rewrite import Rewriter

try:
    from mvbraid import _ckernels
except ImportError:
    _ckernels = None


def _presentation_codes(key, n, k):
    p = C.build(key, n, k).presentation
    enc = Encoder(p.generators)
    return p, [enc.encode(r) for r in p.relators]


def coxeter_symmetric(n):
    """Relator codes of S_n on the adjacent transpositions s_0 .. s_{n-2}."""
    rels = []
    for i in range(n - 1):
        rels.append([2 * i, 2 * i])
        for j in range(i + 1, n - 1):
            rels.append([2 * i, 2 * j] * (3 if j == i + 1 else 2))
    return rels


def cases():
    a5 = (2, [[0, 0], [2, 2, 2], [0, 2] * 5], [])
    s6 = (5, coxeter_symmetric(6), [])
    p, rels = _presentation_codes("MkVB", 4, 2)
    d = C.build_dictionary("MkVP", 4, 2)
    enc = Encoder(p.generators)
    mkvb = (len(p.generators), rels, [enc.encode(w) for w in d.entries.values()])
    yield "enumerate A5 (60 cosets)", "enumerate_cosets", (*a5, 10000)
    yield "enumerate S6 (720 cosets)", "enumerate_cosets", (*s6, 100000)
    yield "enumerate ker phi M2VB4 (24 cosets)", "enumerate_cosets", (*mkvb, 100000)

    _, t = kernel_table("MkVB", 4, 2, "phi")
    tr = schreier_transversal(t, "lambda", 4)
    rw = Rewriter(t, tr)
    rng = random.Random(1)
    words = [[rng.randrange(2 * rw.ngens) for _ in range(200)] for _ in range(200)]

    def rewrite_all(impl):
        for w in words:
            impl.rewrite(t.rows, 0, w, rw.ngens, rw.keep)

    def reduce_all(impl):
        for w in words:
            impl.free_reduce(w)

    yield "rewrite 200 words of length 200", rewrite_all, None
    yield "free-reduce 200 words of length 200", reduce_all, None


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    impls = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    print(f"{'case':40s}" + "".join(f"{name:>12s}" for name, _ in impls) + "     speedup")
    for label, op, call_args in cases():
        times = []
        for _, impl in impls:
            if callable(op):
                fn = lambda impl=impl: op(impl)  # noqa: E731
            else:
                fn = lambda impl=impl: getattr(impl, op)(*call_args)  # noqa: E731
            times.append(min(timeit.repeat(fn, number=1, repeat=args.repeat)))
        speed = f"{times[0] / times[1]:10.1f}x" if len(times) == 2 else ""
        print(f"{label:40s}" + "".join(f"{t * 1000:10.2f}ms" for t in times) + speed)


if __name__ == "__main__":
    main()
