"""Acceptance checks, numbered 1-10, shared by ``slgrs selftest`` and the test suite.

Each check returns a :class:`CriterionResult`; none of them raises on a
failed expectation, so a single run reports every criterion.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from . import linalg as la
from .carter import (
    admissible_representation,
    are_isomorphic_grs,
    classify_names,
    diagram_of,
    morphism_reflection_identity,
    realize,
    realize_in_ambient,
    verify_admissible,
)
from .cartan_types import classical_root_count, standard_grs, standard_presentations
from .catalog import catalog, classify_diagram
from .coordinate_models import model_rank, model_roots
from .diagrams import diagrams_isomorphic
from .errors import GrsError, SearchExhausted
from .grs import (
    GrsPresentation,
    LatticeMap,
    coxeter_matrix,
    euler_form,
    hurwitz_move,
    is_morphism,
    new_grs,
    present_on,
    product,
    radical,
    basis_reflections,
    solve_euler_uniqueness,
)
from .weyl import (
    are_conjugate,
    conjugacy_class,
    enumerate_roots,
    enumerate_weyl_group,
    solve_invariant_form,
)

SEED = 20240611
EXPECTED_CATALOG_SIZE = 39
ALL_TWO_CARTAN = ((2, 2, 2), (2, 2, 2), (2, 2, 2))
E8_NAMES = ["E_8"] + [f"E_8(a_{k})" for k in range(1, 9)]


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"criterion {self.number:2d} [{'PASS' if self.passed else 'FAIL'}] {self.title}: {self.detail}"

    def to_json(self) -> dict:
        return {"number": self.number, "title": self.title,
                "passed": self.passed, "detail": self.detail}


# -- corpus -----------------------------------------------------------------

def all_two_system() -> GrsPresentation:
    return new_grs(ALL_TWO_CARTAN, "all-2 rank 3")


def weyl_word(grs: GrsPresentation, rng: random.Random, length: int) -> la.Matrix:
    refl = basis_reflections(grs)
    return product((refl[rng.randrange(grs.rank)] for _ in range(length)), grs.rank)


def weyl_conjugated(grs: GrsPresentation, rng: random.Random) -> tuple[GrsPresentation, la.Matrix]:
    """Presentation on the basis w(e_1), ..., w(e_mu); returns it with w."""
    w = weyl_word(grs, rng, 2 * grs.rank + 1)
    return present_on(grs, la.columns(w), f"{grs.label}^w"), w


def hurwitz_variant(grs: GrsPresentation, rng: random.Random) -> tuple[GrsPresentation, la.Matrix]:
    """Presentation on a basis reached by Hurwitz moves and sign flips.

    Both operations keep the ordered reflection product, so the new Coxeter
    matrix is the old one written in the new basis.  Returns the presentation
    and the matrix whose columns are the new basis in old coordinates.
    """
    n = grs.rank
    basis = list(la.identity(n))
    if n > 1:
        for _ in range(rng.randint(3, 8)):
            basis = hurwitz_move(grs, basis, rng.randrange(n - 1))
    basis = [tuple(-x for x in b) if rng.random() < 0.3 else b for b in basis]
    return present_on(grs, basis, f"{grs.label}^h"), la.from_columns(basis)


@lru_cache(maxsize=1)
def corpus() -> tuple[GrsPresentation, ...]:
    rng = random.Random(SEED)
    base = [realize(n) for n in catalog().names()] + standard_presentations()
    out = list(base) + [all_two_system()]
    for g in base:
        out.append(weyl_conjugated(g, rng)[0])
        for _ in range(3):
            out.append(hurwitz_variant(g, rng)[0])
    return tuple(out)


# -- criteria ---------------------------------------------------------------

def criterion_1() -> CriterionResult:
    bad = []
    for g in corpus():
        x = euler_form(g)
        c = coxeter_matrix(g)
        if la.add(x, la.transpose(x)) != g.cartan:
            bad.append((g.label, "X+X^T"))
        if la.matmul(x, c) != la.neg(la.transpose(x)):
            bad.append((g.label, "XC"))
        if la.det_exact(x) != 1:
            bad.append((g.label, "det"))
    distinct = len({g.cartan for g in corpus()})
    return CriterionResult(
        1, "Euler identities", not bad and len(corpus()) >= 200,
        f"{len(corpus())} systems ({distinct} distinct Cartan matrices), {len(bad)} failures {bad[:3]}",
    )


def criterion_2() -> CriterionResult:
    bad = []
    for g in corpus():
        try:
            if solve_euler_uniqueness(g) != euler_form(g):
                bad.append(g.label)
        except GrsError as e:
            bad.append(f"{g.label} ({e})")
    return CriterionResult(
        2, "Euler uniqueness by exact solve", not bad,
        f"{len(corpus()) - len(bad)}/{len(corpus())} unique; failures: {bad}",
    )


def criterion_3() -> CriterionResult:
    rows = []
    ok = True
    for g in standard_presentations():
        kind, n = g.label[0], int(g.label[2:])
        count = len(enumerate_roots(g))
        model = model_roots(kind, n)
        good = (
            count == len(model) == classical_root_count(kind, n)
            and model_rank(model) == n
            and count <= 3**n + n
        )
        ok &= good
        rows.append(f"{g.label}={count}" + ("" if good else f"!={len(model)}"))
    return CriterionResult(3, "root counts vs coordinate models", ok, " ".join(rows))


def criterion_4() -> CriterionResult:
    exhausted = 0
    bad = []
    checked = 0
    for g in corpus():
        if not la.is_positive_definite(g.cartan):
            continue
        checked += 1
        c = coxeter_matrix(g)
        try:
            rep = admissible_representation(g, c)
        except SearchExhausted:
            exhausted += 1
            continue
        if len(rep) != g.rank or not verify_admissible(g, c, rep).ok:
            bad.append(g.label)
    return CriterionResult(
        4, "Coxeter elements are admissible", not bad and exhausted == 0,
        f"{checked} positive definite systems, {exhausted} exhausted searches, bad: {bad}",
    )


def criterion_5() -> CriterionResult:
    names = catalog().names()
    wrong = [(n, classify_names(realize(n))) for n in names]
    wrong = [(n, got) for n, got in wrong if got != [n]]
    ok = not wrong and len(names) == EXPECTED_CATALOG_SIZE
    return CriterionResult(
        5, "realize then classify round trip", ok,
        f"{len(names)} entries (expected {EXPECTED_CATALOG_SIZE}), mismatches {wrong}",
    )


def _is_explicit_isomorphism(p: la.Matrix, src: GrsPresentation, tgt: GrsPresentation) -> bool:
    """p maps src coordinates to tgt coordinates as a GRS isomorphism."""
    return (
        abs(la.det_exact(p)) == 1
        and la.gram(tgt.cartan, la.columns(p)) == src.cartan
        and la.matmul(p, coxeter_matrix(src)) == la.matmul(coxeter_matrix(tgt), p)
    )


def criterion_6() -> CriterionResult:
    rng = random.Random(SEED + 6)
    gs = {n: realize(n) for n in E8_NAMES}
    polys = {n: la.charpoly(coxeter_matrix(g)) for n, g in gs.items()}
    false_pairs = 0
    bad = []
    for a, b in itertools.combinations(E8_NAMES, 2):
        if are_isomorphic_grs(gs[a], gs[b]) or polys[a] == polys[b]:
            bad.append((a, b))
        else:
            false_pairs += 1
    variants = 0
    for n, g in gs.items():
        wg, _ = weyl_conjugated(g, rng)
        hg, p = hurwitz_variant(g, rng)
        for v, witness in ((wg, None), (hg, p)):
            good = are_isomorphic_grs(g, v)
            if witness is not None:
                good &= _is_explicit_isomorphism(witness, v, g)
            if good:
                variants += 1
            else:
                bad.append((n, v.label))
    return CriterionResult(
        6, "rank 8 E-type systems pairwise distinct", not bad and false_pairs == 36,
        f"{false_pairs}/36 pairs non-isomorphic, {variants}/18 re-presentations matched, bad {bad}",
    )


@lru_cache(maxsize=None)
def admissible_elements(kind: str, n: int) -> dict[str, tuple[la.Matrix, ...]]:
    """All Weyl group elements with a generating admissible representation,
    grouped by the catalog name of the diagram found first."""
    g = standard_grs(kind, n)
    groups: dict[str, list[la.Matrix]] = {}
    for w in enumerate_weyl_group(g).elements:
        try:
            rep = admissible_representation(g, w)
        except SearchExhausted:
            continue
        name = classify_diagram(diagram_of(g, rep)) or "uncatalogued"
        groups.setdefault(name, []).append(w)
    return {k: tuple(v) for k, v in sorted(groups.items())}


def criterion_7() -> CriterionResult:
    notes = []
    ok = True
    for kind, n in (("D", 4), ("A", 4), ("A", 5)):
        g = standard_grs(kind, n)
        groups = admissible_elements(kind, n)
        classes = {name: conjugacy_class(g, ws[0]) for name, ws in groups.items()}
        within = all(w in classes[name] for name, ws in groups.items() for w in ws)
        across = all(
            not (classes[a] & classes[b]) for a, b in itertools.combinations(classes, 2)
        )
        realized = {}
        for name in groups:
            r = realize_in_ambient(name)
            if r.ambient.cartan == g.cartan:
                realized[name] = r.element
        found = all(
            are_conjugate(g, realized[name], groups[name][0]) is True for name in realized
        )
        distinct = all(
            are_conjugate(g, realized[a], realized[b]) is False
            for a, b in itertools.combinations(realized, 2)
        )
        good = within and across and found and distinct and "uncatalogued" not in groups
        ok &= good
        sizes = ",".join(f"{k}:{len(v)}" for k, v in groups.items())
        notes.append(f"W({kind}_{n}) {sizes} {'ok' if good else 'FAILED'}")
    return CriterionResult(7, "conjugacy of admissible elements", ok, "; ".join(notes))


def criterion_8() -> CriterionResult:
    rng = random.Random(SEED + 8)
    samples = []
    for kind, n in (("A", 5), ("D", 4)):
        pool = [w for ws in admissible_elements(kind, n).values() for w in ws]
        samples += [(standard_grs(kind, n), w) for w in rng.sample(pool, 10)]
    agree = 0
    for g, w in samples:
        fwd = diagram_of(g, admissible_representation(g, w))
        rev = diagram_of(g, admissible_representation(g, w, reverse=True))
        agree += diagrams_isomorphic(fwd, rev)
    return CriterionResult(
        8, "forward and reverse searches agree", agree == len(samples) == 20,
        f"{agree}/{len(samples)} sampled elements",
    )


def _direct_sum(a: la.Matrix, b: la.Matrix) -> la.Matrix:
    n, m = len(a), len(b)
    return tuple(
        tuple(a[i][j] if i < n and j < n else b[i - n][j - n] if i >= n and j >= n else 0
              for j in range(n + m))
        for i in range(n + m)
    )


def sample_morphisms(count: int = 50) -> list[LatticeMap]:
    """Maps c^k, c^k P (from a re-presentation) and inclusions into direct sums."""
    rng = random.Random(SEED + 9)
    sources = [g for g in standard_presentations(6)] + [realize(n) for n in catalog().names()
                                                        if catalog()[n].vertex_count <= 6]
    maps = []
    while len(maps) < count:
        g = rng.choice(sources)
        c = coxeter_matrix(g)
        ck = la.matpow(c, rng.randrange(1, 12))
        kind = len(maps) % 3
        if kind == 0:
            maps.append(LatticeMap(ck, g, g))
        elif kind == 1:
            h, p = hurwitz_variant(g, rng)
            maps.append(LatticeMap(la.matmul(ck, p), h, g))
        else:
            extra = standard_grs("A", rng.randint(1, 2))
            tgt = new_grs(_direct_sum(g.cartan, extra.cartan))
            inc = tuple(tuple(ck[i]) if i < g.rank else (0,) * g.rank for i in range(tgt.rank))
            maps.append(LatticeMap(inc, g, tgt))
    return maps


def criterion_9() -> CriterionResult:
    collapse = LatticeMap(((1, 1, 1),), all_two_system(), standard_grs("A", 1))
    rep = is_morphism(collapse)
    kernel = la.integer_kernel(collapse.matrix, 3)
    in_radical = all(
        la.matvec(collapse.source.cartan, v) == (0, 0, 0) for v in kernel.vectors
    )
    collapse_ok = rep.ok is True and kernel.rank == 2 and in_radical
    good = 0
    failures = []
    for phi in sample_morphisms():
        r = is_morphism(phi)
        mono = la.integer_kernel(phi.matrix, phi.source.rank).rank == 0
        ident = all(
            morphism_reflection_identity(phi.matrix, phi.source, phi.target, a)
            for a in enumerate_roots(phi.source).positive()
        )
        if r.ok is True and mono and ident and radical(phi.source).rank == 0:
            good += 1
        else:
            failures.append((phi.source.label, r.failures))
    return CriterionResult(
        9, "morphism suite", collapse_ok and good == 50,
        f"collapse map morphism={rep.ok} kernel rank {kernel.rank} (in radical: {in_radical}); "
        f"{good}/50 sampled morphisms injective with reflection identity; failures {failures[:3]}",
    )


def criterion_10() -> CriterionResult:
    notes = []
    ok = True
    for kind, n in (("A", 2), ("A", 3), ("D", 4)):
        g = standard_grs(kind, n)
        try:
            good = solve_invariant_form(g) == g.cartan
        except GrsError as e:
            good = False
            notes.append(str(e))
        ok &= good
        notes.append(f"{g.label} {'unique' if good else 'FAILED'}")
    return CriterionResult(10, "invariant form is the Cartan form", ok, ", ".join(notes))


CRITERIA: dict[int, Callable[[], CriterionResult]] = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
    6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10,
}


def run_all(only: list[int] | None = None) -> list[CriterionResult]:
    return [CRITERIA[k]() for k in sorted(CRITERIA) if not only or k in only]
