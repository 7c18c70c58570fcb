"""Command-line front end.

Exit codes: 0 success, 2 usage error, 3 verification mismatch, 4 resource
limit (coset enumeration).  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import catalog as C
from . import kernels
from .cosets import schreier_transversal
from .errors import CosetLimitExceeded, NotWellDefined
from .invariants import abelianization, free_factor_report
from .pipeline import (
    ABELIAN_FAMILIES,
    AMBIENT_GROUPS,
    MAP_DICTIONARY,
    QUOTIENTS,
    abelian_family_check,
    derive,
    enumerate_kernel,
    dictionary_key,
    kernel_table,
    quotient_report,
    separate_claims,
    verify_actions,
    verify_homs,
    verify_retractions,
    zoo_checks,
)
from .presentation import Presentation, format_presentation, support_components
from .tietze import DictionaryMismatch, compare_components, relator_sets_equal, simplify_with_report
from .words import format_generator

OK, USAGE, MISMATCH, LIMIT = 0, 2, 3, 4


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _read_json(path: str) -> dict:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _presentation_from(data: dict) -> tuple[Presentation, dict]:
    """Accept a bare presentation or a derive result wrapping one."""
    if "presentation" in data:
        return Presentation.from_json(data["presentation"]), data
    return Presentation.from_json(data), {}


def _add_params(p: argparse.ArgumentParser, k_default: int | None = 2) -> None:
    p.add_argument("--n", type=int, default=3, help="strand count (default 3)")
    p.add_argument("--k", type=int, default=k_default, help="number of virtual sorts")


def _add_derive_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--group", default="MkVB", choices=AMBIENT_GROUPS)
    _add_params(p)
    p.add_argument("--map", dest="map_key", default="phi", choices=sorted(MAP_DICTIONARY))
    p.add_argument("--transversal", default="lambda", choices=("lambda", "bfs"))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mvbraid", description="Multi-virtual braid group kernels.")
    sub = ap.add_subparsers(dest="command", required=True)

    cat = sub.add_parser("catalog", help="list or show catalog presentations")
    cat_sub = cat.add_subparsers(dest="action", required=True)
    cat_sub.add_parser("list")
    show = cat_sub.add_parser("show")
    show.add_argument("key")
    _add_params(show, None)
    show.add_argument("--format", choices=("json", "text"), default="json")

    der = sub.add_parser("derive", help="derive a kernel presentation")
    _add_derive_flags(der)
    der.add_argument("--no-simplify", action="store_true")
    der.add_argument("--dictionary", default="auto",
                     help="dictionary key, 'auto' (from the map) or 'none'")
    der.add_argument("--output", help="also write the JSON result to this file")
    der.add_argument("--format", choices=("json", "text"), default="json")

    simp = sub.add_parser("simplify", help="Tietze-simplify a presentation")
    simp.add_argument("--input", required=True, help="presentation JSON ('-' for stdin)")
    simp.add_argument("--budget", type=int, default=1000)
    simp.add_argument("--format", choices=("json", "text"), default="json")

    cmp = sub.add_parser("compare", help="compare a derived presentation with a catalog entry")
    cmp.add_argument("--against", required=True)
    cmp.add_argument("--input", help="derive result or presentation JSON ('-' for stdin); "
                                     "without it the derive flags are used")
    _add_derive_flags(cmp)
    cmp.add_argument("--components", action="store_true",
                     help="compare support components pairwise instead of whole relator sets")
    cmp.add_argument("--certify", action="store_true",
                     help="search finite quotients refuting relators only on the stated side")
    cmp.add_argument("--format", choices=("json", "text"), default="text")

    ab = sub.add_parser("abelianize", help="abelian invariants of a presentation")
    ab.add_argument("key", nargs="?")
    _add_params(ab, None)
    ab.add_argument("--input")
    ab.add_argument("--factors", action="store_true", help="also report free factors")

    idx = sub.add_parser("index", help="index of the kernel")
    _add_derive_flags(idx)
    idx.add_argument("--method", choices=("kernel", "todd-coxeter"), default="kernel",
                     help="permutation-image table or coset enumeration of the named generators")
    idx.add_argument("--max-cosets", type=int,
                     help="coset limit for todd-coxeter (default MVBRAID_MAX_COSETS or 10000)")

    ver = sub.add_parser("verify", help="verification suites")
    ver.add_argument("what", choices=("action", "hom", "retraction", "quotients", "zoo", "all"))
    _add_params(ver)
    ver.add_argument("--format", choices=("json", "text"), default="text")

    exp = sub.add_parser("export", help="export a presentation or a coset table")
    exp.add_argument("key", nargs="?")
    _add_params(exp, None)
    exp.add_argument("--input")
    exp.add_argument("--table", action="store_true",
                     help="export the kernel coset table and transversal (derive flags)")
    exp.add_argument("--group", default="MkVB", choices=AMBIENT_GROUPS)
    exp.add_argument("--map", dest="map_key", default="phi", choices=sorted(MAP_DICTIONARY))
    exp.add_argument("--transversal", default="lambda", choices=("lambda", "bfs"))
    exp.add_argument("--format", choices=("json", "text"), default="json")

    sub.add_parser("backend", help="print the active kernel backend")
    return ap


# ---------------------------------------------------------------- commands


def _catalog(args, out) -> int:
    if args.action == "list":
        for key in C.keys():
            entry = C.describe(key)
            out.append(f"{key:18s} {entry}")
        return OK
    entry = C.build(args.key, args.n, args.k)
    if args.format == "json":
        out.append(_dump(entry.presentation.to_json()))
    else:
        out.append(format_presentation(entry.presentation))
    return OK


def _derive(args, out) -> int:
    dictionary = None if args.dictionary == "none" else args.dictionary
    d = derive(args.group, args.n, args.k, args.map_key, args.transversal, dictionary,
               simplify=not args.no_simplify)
    for w in d.warnings:
        print(f"warning: {w}", file=sys.stderr)
    data = d.to_json()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(_dump(data) + "\n")
    if args.format == "json":
        out.append(_dump(data))
    else:
        out.append(f"index {d.index}; raw {len(d.raw.generators)} generators, "
                   f"{len(d.raw.relators)} relators")
        out.append(format_presentation(d.presentation))
    return OK


def _simplify(args, out) -> int:
    p, _ = _presentation_from(_read_json(args.input))
    rep = simplify_with_report(p, args.budget)
    if rep.exhausted:
        print(f"warning: budget of {args.budget} passes exhausted", file=sys.stderr)
    for s in rep.skipped:
        print(f"warning: {s}", file=sys.stderr)
    out.append(_dump(rep.presentation.to_json()) if args.format == "json"
               else format_presentation(rep.presentation))
    return OK


def _compare(args, out) -> int:
    der = None
    if args.input:
        p, meta = _presentation_from(_read_json(args.input))
        n, k = meta.get("n", args.n), meta.get("k", args.k)
    else:
        der = derive(args.group, args.n, args.k, args.map_key, args.transversal,
                     dictionary_key(args.map_key, args.against))
        for w in der.warnings:
            print(f"warning: {w}", file=sys.stderr)
        p, n, k = der.presentation, args.n, args.k
    q = C.build(args.against, n, k).presentation
    if args.components:
        match = compare_components(p, q)
        lines = [f"components: {len(match.matched)} matched, {len(match.unmatched_left)} only derived, "
                 f"{len(match.unmatched_right)} only stated"]
        for a, _, c in match.matched:
            gens = ", ".join(format_generator(g) for g in a.generators)
            lines.append(f"  [{gens}] {'equal' if c.equal else 'differ'}")
            if not c.equal:
                lines.extend("    " + line for line in c.to_text().splitlines()[1:])
        for side, comps in (("derived", match.unmatched_left), ("stated", match.unmatched_right)):
            for comp in comps:
                gens = ", ".join(format_generator(g) for g in comp.generators)
                lines.append(f"  only {side}: [{gens}]")
        out.append("\n".join(lines))
        return OK if match.equal else MISMATCH
    cmp = relator_sets_equal(p.renamed("derived"), q)
    if args.format == "json":
        data = cmp.to_json()
    else:
        out.append(cmp.to_text())
    if args.certify and not cmp.equal:
        if der is None:
            der = derive(args.group, n, k, args.map_key, args.transversal,
                         dictionary_key(args.map_key, args.against))
        certs = separate_claims(der, cmp)
        if args.format == "json":
            data["certificates"] = [{"relator": str(r), "image": str(h.image) if h else None}
                                    for r, h in certs]
        else:
            for r, hit in certs:
                if hit is None:
                    out.append(f"no finite quotient found for {r}")
                else:
                    out.append("refuted in a finite quotient: " + hit.to_text())
    if args.format == "json":
        out.append(_dump(data))
    return OK if cmp.equal else MISMATCH


def _abelianize(args, out) -> int:
    if args.input:
        p, _ = _presentation_from(_read_json(args.input))
    elif args.key:
        p = C.build(args.key, args.n, args.k).presentation
    else:
        raise UsageError("give a catalog key or --input")
    out.append(str(abelianization(p)))
    if args.factors:
        out.append(free_factor_report(p).to_text())
    return OK


def _index(args, out) -> int:
    if args.method == "todd-coxeter":
        t = enumerate_kernel(args.group, args.n, args.k, args.map_key, args.max_cosets)
    else:
        _, t = kernel_table(args.group, args.n, args.k, args.map_key)
    out.append(str(t.degree))
    return OK


def _verify(args, out) -> int:
    items: list[tuple[str, bool, str]] = []
    what = args.what
    if what in ("hom", "all"):
        for it in verify_homs(args.n, args.k):
            items.append((it.name, it.ok, it.text))
    if what in ("retraction", "all"):
        for rep in verify_retractions(args.n, args.k):
            items.append((f"retraction {rep.name}", rep.ok, rep.to_text()))
    if what in ("action", "all"):
        for name, rep in verify_actions(args.n, args.k):
            items.append((f"action {name}", rep.ok, rep.to_text()))
    if what in ("zoo", "all") and (args.n, args.k) == (3, 2):
        for z in zoo_checks():
            text = z.detail
            if z.comparison is not None and not z.comparison.equal:
                text += "\n" + z.comparison.to_text()
            items.append((f"zoo {z.name}", z.ok, text))
    if what in ("quotients", "all") and args.k >= 2:
        for key in QUOTIENTS:
            if key.endswith("3") and (args.n, args.k) != (3, 2):
                continue
            rep = quotient_report(key, args.n, args.k)
            items.append((f"quotient {key}", rep.contains_stated_mod_commutation, rep.to_text()))
            if key in ABELIAN_FAMILIES:
                chk = abelian_family_check(rep.presentation, ABELIAN_FAMILIES[key])
                items.append((f"abelian {ABELIAN_FAMILIES[key]} in {key}", chk.ok, chk.to_text()))
    if args.format == "json":
        out.append(_dump([{"name": n, "ok": ok, "detail": t} for n, ok, t in items]))
    else:
        for name, ok, text in items:
            out.append(f"[{'PASS' if ok else 'FAIL'}] {name}")
            out.extend("    " + line for line in text.splitlines())
        failed = sum(1 for _, ok, _ in items if not ok)
        out.append(f"{len(items) - failed} passed, {failed} failed")
    return OK if all(ok for _, ok, _ in items) else MISMATCH


def _export(args, out) -> int:
    if args.table:
        n, k = args.n, args.k if args.k is not None else 2
        _, t = kernel_table(args.group, n, k, args.map_key)
        tr = schreier_transversal(t, args.transversal, n)
        data = {"table": t.to_json(), "transversal": tr.to_json()}
        if args.format == "json":
            out.append(_dump(data))
        else:
            gens = [format_generator(g) for g in t.generators]
            out.append("coset  rep  " + "  ".join(gens))
            for c, row in enumerate(t.rows):
                cells = "  ".join(str(row[2 * i]) for i in range(len(gens)))
                out.append(f"{c}  {tr.to_json()['reps'][c]}  {cells}")
        return OK
    if args.input:
        p, _ = _presentation_from(_read_json(args.input))
    elif args.key:
        p = C.build(args.key, args.n, args.k).presentation
    else:
        raise UsageError("give a catalog key, --input or --table")
    if args.format == "json":
        data = p.to_json()
        data["components"] = [[format_generator(g) for g in c.generators] for c in support_components(p)]
        out.append(_dump(data))
    else:
        out.append(format_presentation(p))
    return OK


COMMANDS = {
    "catalog": _catalog, "derive": _derive, "simplify": _simplify, "compare": _compare,
    "abelianize": _abelianize, "index": _index, "verify": _verify, "export": _export,
    "backend": lambda args, out: out.append(kernels.BACKEND) or OK,
}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    out: list[str] = []
    try:
        code = COMMANDS[args.command](args, out)
    except CosetLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return LIMIT
    except (UsageError, C.UnknownKey, NotWellDefined, DictionaryMismatch, ValueError, KeyError) as exc:
        print(f"error: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return USAGE
    if out:
        sys.stdout.write("\n".join(out) + "\n")
    return code


def main() -> None:
    sys.exit(run())
