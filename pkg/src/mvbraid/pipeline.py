"""End-to-end runs: kernel table, transversal, Reidemeister-Schreier,
simplification, dictionary naming and comparison against stated
presentations."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import catalog as C
from .cosets import CosetTable, Transversal, kernel_coset_table, schreier_transversal, todd_coxeter
from .homomorphism import (
    ActionReport,
    HomReport,
    SeparatingQuotient,
    check_retraction,
    check_well_defined,
    expand_through_dictionary,
    find_separating_quotient,
    verify_action,
)
from .invariants import AbelianInvariants, abelianization
from .presentation import Presentation, support_components
from .rewrite import Rewriter, derive_subgroup_presentation
from .tietze import (
    Comparison,
    ComponentMatch,
    Dictionary,
    DictionaryMismatch,
    SimplifyReport,
    apply_dictionary,
    commutation_class,
    commuting_pairs,
    compare_components,
    involutions,
    reduce_involutions_cyclic,
    relator_sets_equal,
    resolve_symbol_word,
    simplify_with_report,
)
from .words import Word, canonical_relator, format_word, xgen

MAP_DICTIONARY = {"phi": "MkVP", "psi": "MkVH", "chi3": "MVQ3", "chi4": "MVC3"}
NAMED_DICTIONARIES = {"MVP3", "MVH3", "MVQ3", "MVC3"}
AMBIENT_GROUPS = ("MkVB", "sym-MkVB", "sym-MkVB-listed", "sym-MVB3", "MkWB", "MkUB", "VB", "B")


def dictionary_key(map_key: str, against: str | None = None) -> str:
    """Dictionary for a map; the three-strand zoo keys carry their own names."""
    if against in NAMED_DICTIONARIES:
        return against
    return MAP_DICTIONARY[map_key]


@dataclass
class Derivation:
    group: str
    n: int
    k: int
    map_key: str
    source: Presentation
    table: CosetTable
    transversal: Transversal
    raw: Presentation
    simplified: SimplifyReport
    presentation: Presentation
    dictionary: Dictionary | None = None
    warnings: list[str] = field(default_factory=list)

    @property
    def index(self) -> int:
        return self.table.degree

    def to_json(self) -> dict:
        return {
            "group": self.group, "n": self.n, "k": self.k, "map": self.map_key,
            "transversal": self.transversal.strategy, "index": self.index,
            "dictionary": self.dictionary.name if self.dictionary else None,
            "raw": {"generators": len(self.raw.generators), "relators": len(self.raw.relators)},
            "simplify_passes": self.simplified.passes,
            "presentation": self.presentation.to_json(),
        }


def kernel_table(group: str, n: int, k: int, map_key: str) -> tuple[Presentation, CosetTable]:
    p = C.build(group, n, k).presentation
    hom = C.build_hom(map_key, n, k, p)
    return p, kernel_coset_table(p, hom.images)


def enumerate_kernel(group: str, n: int, k: int, map_key: str,
                     max_cosets: int | None = None) -> CosetTable:
    """Todd-Coxeter enumeration of the subgroup generated by the named
    dictionary entries of ``map_key``; standardized numbering."""
    p = C.build(group, n, k).presentation
    d = C.build_dictionary(MAP_DICTIONARY[map_key], n, k)
    return todd_coxeter(p, list(d.entries.values()), max_cosets)


def derive(group: str = "MkVB", n: int = 3, k: int = 2, map_key: str = "phi",
           transversal: str = "lambda", dictionary: str | None = "auto",
           simplify: bool = True) -> Derivation:
    """Run the kernel pipeline.  ``dictionary`` is a dictionary key, ``"auto"``
    (chosen from the map) or None for machine names only."""
    p, t = kernel_table(group, n, k, map_key)
    tr = schreier_transversal(t, transversal, n)
    raw = derive_subgroup_presentation(p, t, tr, name=f"ker({p.name},{map_key})")
    rep = simplify_with_report(raw) if simplify else SimplifyReport(raw)
    cur = rep.presentation
    warnings = list(rep.skipped)
    d = None
    if dictionary:
        key = MAP_DICTIONARY[map_key] if dictionary == "auto" else dictionary
        d = C.build_dictionary(key, n, k)
        try:
            cur = apply_dictionary(cur, d, t, tr, name="derived")
        except DictionaryMismatch as exc:
            warnings.append(f"dictionary {d.name} not applied: {exc}")
            d = None
    return Derivation(group, n, k, map_key, p, t, tr, raw, rep, cur, d, warnings)


def compare(der: Derivation, against: str) -> Comparison:
    return relator_sets_equal(der.presentation, C.build(against, der.n, der.k).presentation)


# ---------------------------------------------------------------- certificates


def separate_claims(der: Derivation, cmp: Comparison, degrees=(3, 4, 5)) -> list[tuple[Word, SeparatingQuotient | None]]:
    """For each relator present only on the claimed side, look for a finite
    quotient of the ambient group in which its expansion is nontrivial."""
    if der.dictionary is None:
        return []
    out = []
    for r in cmp.relators_only_right:
        if any(g not in der.dictionary.entries for g, _ in r):
            out.append((r, None))
            continue
        w = expand_through_dictionary(r, der.dictionary)
        out.append((r, find_separating_quotient(der.source, w, degrees)))
    return out


# ---------------------------------------------------------------- quotients


@dataclass
class QuotientReport:
    """Extra ambient relators rewritten into the kernel's named generators."""

    key: str
    derived: list[Word]
    stated: list[Word]
    missing: list[Word]
    unlisted: list[Word]
    presentation: Presentation | None
    hom: HomReport | None = None
    missing_mod_commutation: list[Word] = field(default_factory=list)

    @property
    def well_defined(self) -> bool:
        return self.hom is None or self.hom.ok

    @property
    def contains_stated(self) -> bool:
        return self.well_defined and not self.missing

    @property
    def contains_stated_mod_commutation(self) -> bool:
        return self.well_defined and not self.missing_mod_commutation

    def to_text(self) -> str:
        if not self.well_defined:
            return (f"{self.key}: the map does not kill the extra relators, so it does not "
                    f"induce a map on the quotient\n" + self.hom.to_text())
        lines = [f"{self.key}: {len(self.derived)} rewritten relator(s), {len(self.stated)} stated, "
                 f"{len(self.missing)} stated relator(s) not derived, "
                 f"{len(self.missing_mod_commutation)} not derived up to commutation"]
        lines += [f"  not derived: {format_word(r)}" for r in self.missing]
        lines += [f"  not stated:  {format_word(r)}" for r in self.unlisted]
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"key": self.key, "well_defined": self.well_defined,
                "contains_stated": self.contains_stated,
                "contains_stated_mod_commutation": self.contains_stated_mod_commutation,
                "derived": [format_word(r) for r in self.derived],
                "stated": [format_word(r) for r in self.stated],
                "missing": [format_word(r) for r in self.missing],
                "unlisted": [format_word(r) for r in self.unlisted]}


# key: (extra relators, map, dictionary key, stated relators)
QUOTIENTS = {
    "sym-MkVP": (C.symmetric_extra_relators, "phi", "MkVP",
                 lambda n, k: C.symmetric_pure_families(n, k)),
    "sym-MkVH": (C.symmetric_extra_relators, "psi", "MkVH",
                 lambda n, k: C.symmetric_pure_families(n, k, xgen, semi=True)),
    "sym-MVP3": (C.symmetric_extra_relators, "phi", "MVP3", lambda n, k: C.sym_mvp3_extra()),
    "sym-MVH3": (C.symmetric_extra_relators, "psi", "MVH3", lambda n, k: C.sym_mvh3_extra()),
    "MkWP": (lambda n, k: C.forbidden_f1(n, k), "phi", "MkVP",
             lambda n, k: C.quotient_stated_families("WP", n, k)),
    "MkUP": (lambda n, k: C.forbidden_f1(n, k) + C.forbidden_f2(n, k), "phi", "MkVP",
             lambda n, k: C.quotient_stated_families("UP", n, k)),
    "MkWH": (lambda n, k: C.forbidden_f1(n, k), "psi", "MkVH",
             lambda n, k: C.quotient_stated_families("WH", n, k)),
    "MkUH": (lambda n, k: C.forbidden_f1(n, k) + C.forbidden_f2(n, k), "psi", "MkVH",
             lambda n, k: C.quotient_stated_families("UH", n, k)),
}


def quotient_report(key: str, n: int = 3, k: int = 2) -> QuotientReport:
    """Rewrite lambda e lambda^-1 for every extra relator e and transversal
    word lambda, resolve into the named kernel generators of M_kVB_n and
    compare with the stated relation families (containment, not equality)."""
    extra, map_key, dkey, stated_fn = QUOTIENTS[key]
    stated = []
    for r in stated_fn(n, k):
        c = canonical_relator(r)
        if c and c not in stated:
            stated.append(c)
    ambient = C.build("MkVB", n, k).presentation
    images = C.build_hom(map_key, n, k, ambient).images
    hom = check_well_defined(Presentation.create(key, ambient.generators, extra(n, k)),
                             images, f"{map_key} on the extra relators")
    if not hom.ok:
        return QuotientReport(key, [], stated, list(stated), [], None, hom, list(stated))
    der = derive("MkVB", n, k, map_key, "lambda", dkey)
    s = der.presentation
    rw = Rewriter(der.table, der.transversal)
    invs = involutions(s)
    derived: list[Word] = []
    for e in extra(n, k):
        for lam in der.transversal.reps:
            w = rw.tau(Word(tuple(lam) + tuple(e) + tuple(~lam)))
            r = canonical_relator(reduce_involutions_cyclic(resolve_symbol_word(s, w), invs))
            if r and r not in derived:
                derived.append(r)
    dset = set(derived)
    missing = [r for r in stated if r not in dset]
    sset = set(stated)
    unlisted = [r for r in derived if r not in sset]
    name = key if key[-1].isdigit() else f"{key}{n}"
    quotient = Presentation.create(name, s.generators, list(s.relators) + derived, s.resolve)
    pairs = commuting_pairs(quotient.relators)
    closure = set()
    for r in derived:
        closure |= commutation_class(r, pairs)
    loose = [r for r in missing if r not in closure]
    return QuotientReport(key, derived, stated, missing, unlisted, quotient, hom, loose)


@dataclass
class AbelianFamilyCheck:
    """Relators of a quotient supported on one generator family.

    ``ok`` when the subpresentation they define abelianizes to a free
    abelian group of full rank, every pair of family generators has a
    commutator relator, and every other family relator has zero exponent
    sum (so it follows from the commutators).
    """

    family: str
    generators: list
    relators: list[Word]
    invariants: AbelianInvariants
    uncommuting: list[tuple]
    joining: list[Word]

    @property
    def ok(self) -> bool:
        return (self.invariants.rank == len(self.generators) and not self.invariants.torsion
                and not self.uncommuting and not self.joining)

    def to_text(self) -> str:
        gens = ", ".join(str(g) for g in self.generators)
        lines = [f"<{gens}>: {len(self.relators)} relator(s), abelianization {self.invariants}"]
        lines += [f"  no commutator relator for {a}, {b}" for a, b in self.uncommuting]
        lines += [f"  relator not implied by commutators: {format_word(r)}" for r in self.joining]
        return "\n".join(lines)


def abelian_family_check(q: Presentation, family: str) -> AbelianFamilyCheck:
    gens = [g for g in q.generators if g.family == family]
    gset = set(gens)
    rels = [r for r in q.relators if r and {g for g, _ in r} <= gset]
    sub = Presentation.create(f"{q.name}:{family}", gens, rels)
    pairs = commuting_pairs(rels)
    uncommuting = [(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]
                   if frozenset((a, b)) not in pairs]
    joining = []
    for r in rels:
        sums: dict = {}
        for g, e in r:
            sums[g] = sums.get(g, 0) + e
        if any(sums.values()):
            joining.append(r)
    return AbelianFamilyCheck(family, gens, rels, abelianization(sub), uncommuting, joining)


# family of generators claimed to span Z^3 in the three-strand symmetric quotients
ABELIAN_FAMILIES = {"sym-MVP3": "mu", "sym-MVH3": "z"}


# ---------------------------------------------------------------- three-strand zoo


@dataclass
class ZooResult:
    name: str
    ok: bool
    detail: str
    comparison: Comparison | None = None
    components: ComponentMatch | None = None
    invariants: tuple[AbelianInvariants, AbelianInvariants] | None = None


def _component_summary(p: Presentation) -> str:
    return "[" + ", ".join(f"{len(c.generators)}g/{len(c.relators)}r" for c in support_components(p)) + "]"


def zoo_checks() -> list[ZooResult]:
    """Three-strand, two-sort kernels against their stated presentations."""
    out = []
    der = derive("MkVB", 3, 2, "phi", "lambda", "MVP3")
    cmp = relator_sets_equal(der.presentation, C.build("MVP3").presentation)
    out.append(ZooResult("MVP3", cmp.equal, f"relator sets {'equal' if cmp.equal else 'differ'}", cmp))

    der = derive("MkVB", 3, 2, "psi", "lambda", "MVH3")
    comps = compare_components(der.presentation, C.build("MVH3").presentation)
    out.append(ZooResult("MVH3", comps.equal, "components " + _component_summary(der.presentation),
                         components=comps))

    for name, map_key, parts in (("MVQ3", "chi3", ("H1", "H2", "Y")), ("MVC3", "chi4", ("VP", "Y"))):
        der = derive("MkVB", 3, 2, map_key, "lambda", name)
        pieces = [C.build(key, 3).presentation for key in parts]
        target = Presentation.create(name, [g for q in pieces for g in q.generators],
                                     [r for q in pieces for r in q.relators])
        comps = compare_components(der.presentation, target)
        inv = (abelianization(der.presentation), abelianization(target))
        ok = comps.equal and len(support_components(der.presentation)) == len(parts)
        out.append(ZooResult(name, ok, f"components {_component_summary(der.presentation)}; "
                                       f"abelianization derived {inv[0]}, stated {inv[1]}",
                             components=comps, invariants=inv))
    return out


# ---------------------------------------------------------------- verification suite


@dataclass
class SuiteItem:
    name: str
    ok: bool
    text: str


def verify_homs(n: int, k: int) -> list[SuiteItem]:
    out = []
    p = C.build("MkVB", n, k).presentation
    for key in ("phi", "psi"):
        rep = check_well_defined(p, C.build_hom(key, n, k, p).images, f"{key}_{n},{k}")
        out.append(SuiteItem(f"hom {key}", rep.ok, rep.to_text()))
    if (n, k) == (3, 2):
        for key in ("chi3", "chi4"):
            rep = check_well_defined(p, C.build_hom(key, n, k, p).images, key)
            out.append(SuiteItem(f"hom {key}", rep.ok, rep.to_text()))
        sym = C.build("sym-MVB3").presentation
        rep = check_well_defined(sym, C.build_hom("rho-only", 3, 2, sym).images, "rho-only")
        # sigma, tau trivial and rho onto S_3 is not well defined on the symmetric group
        out.append(SuiteItem("hom rho-only (expected to fail)", not rep.ok, rep.to_text()))
    return out


def verify_retractions(n: int, k: int) -> list[HomReport]:
    out = []
    pairs = [("psi1", "iota1"), ("psi3", "iota3")]
    if k >= 2:
        pairs.append(("psi2", "iota2"))
    for proj_key, incl_key in pairs:
        proj = C.build_hom(proj_key, n, k)
        incl = C.build_hom(incl_key, n, k)
        out.append(check_retraction(proj.images, incl.images, incl.source, f"{proj_key} o {incl_key}"))
    return out


def verify_actions(n: int, k: int) -> list[tuple[str, ActionReport]]:
    out = []
    for map_key in ("phi", "psi"):
        der = derive("MkVB", n, k, map_key, "lambda")
        if der.dictionary is None:
            raise DictionaryMismatch("; ".join(der.warnings))
        rep = verify_action(der.table, der.transversal, der.dictionary, der.presentation, n)
        out.append((f"{map_key} ({der.dictionary.name})", rep))
    return out
