"""Admissible representations, Carter diagrams and the classification map."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Sequence

from . import linalg as la
from .cartan_types import classical_root_count, parse_name, standard_grs
from .catalog import catalog, classify_diagram
from .diagrams import CarterDiagram
from .errors import (
    NameUnknown,
    NotPositiveDefinite,
    Reducible,
    SearchExhausted,
    VerificationFailure,
)
from .grs import (
    GrsPresentation,
    coxeter_matrix,
    new_grs,
    preserves_form,
    product,
    reflection_matrix,
)
from .linalg import Matrix, Vector
from .weyl import enumerate_roots, irreducible_components, subsystem_closure


@dataclass(frozen=True)
class AdmissibleRep:
    group1: tuple[Vector, ...]
    group2: tuple[Vector, ...]

    @property
    def roots(self) -> tuple[Vector, ...]:
        return self.group1 + self.group2

    def __len__(self) -> int:
        return len(self.group1) + len(self.group2)


@dataclass(frozen=True)
class AdmissibilityReport:
    ok: bool
    reasons: tuple[str, ...]


def rep_product(grs: GrsPresentation, rep: AdmissibleRep) -> Matrix:
    return product((reflection_matrix(grs, b) for b in rep.roots), grs.rank)


def verify_admissible(
    grs: GrsPresentation, w: Matrix, rep: AdmissibleRep, require_generation: bool = True
) -> AdmissibilityReport:
    reasons: list[str] = []
    roots = rep.roots
    if any(grs.norm(b) != 2 for b in roots):
        reasons.append("a root does not have norm 2")
        return AdmissibilityReport(False, tuple(reasons))
    for name, group in (("group1", rep.group1), ("group2", rep.group2)):
        for i, a in enumerate(group):
            for b in group[i + 1:]:
                if grs.pairing(a, b):
                    reasons.append(f"{name} not orthogonal: I({a}, {b}) = {grs.pairing(a, b)}")
    if roots and la.rank(roots) != len(roots):
        reasons.append("roots are linearly dependent")
    if rep_product(grs, rep) != w:
        reasons.append("reflection product differs from w")
    if require_generation:
        closure = subsystem_closure(grs, roots) if roots else ()
        full = enumerate_roots(grs)
        if len(closure) != len(full):
            reasons.append(f"generation fails: closure has {len(closure)} of {len(full)} roots")
    return AdmissibilityReport(not reasons, tuple(reasons))


def fixed_space(m: Matrix) -> tuple[Vector, ...]:
    return la.integer_kernel(la.sub(m, la.identity(len(m))), len(m)).vectors


def _peel_involution(
    grs: GrsPresentation, sigma: Matrix, candidates: Sequence[Vector], count: int
) -> Iterator[tuple[Vector, ...]]:
    """Write an involution as a product of reflections in orthogonal roots.

    Yields every decomposition in candidate order; the first one is the
    greedy choice (least root negated by the involution, strip, repeat).
    """
    ident = la.identity(grs.rank)

    def rec(cur: Matrix, start: int, out: list[Vector]):
        if len(out) == count:
            if cur == ident:
                yield tuple(out)
            return
        for idx in range(start, len(candidates)):
            a = candidates[idx]
            if la.matvec(cur, a) == tuple(-x for x in a):
                out.append(a)
                yield from rec(la.matmul(reflection_matrix(grs, a), cur), idx + 1, out)
                out.pop()

    yield from rec(sigma, 0, [])


def search_key(root: Sequence[int]) -> tuple:
    return (sum(root), tuple(-x for x in root))


def iter_representations(
    grs: GrsPresentation, w: Matrix, *, reverse: bool = False
) -> Iterator[AdmissibleRep]:
    """All two-group orthogonal representations of ``w`` of minimal length.

    Roots are positive, scanned by height and then with basis index 1 most
    significant, so the simple roots come first in basis order; ``reverse``
    scans the same list backwards.  Group 1 is grown one orthogonal root at a time, and each
    root must be orthogonal to the fixed space of the remaining factor,
    which is exactly when the reflection length drops by one.  Group 2 comes
    from decomposing the involution that is left over.  Group sizes run from
    half the length downwards.
    """
    n = grs.rank
    pos = sorted(enumerate_roots(grs).positive(), key=search_key)
    if reverse:
        pos.reverse()
    fix0 = fixed_space(w)
    length = n - len(fix0)
    if length == 0:
        yield AdmissibleRep((), ())
        return
    moved = [b for b in pos if all(grs.pairing(b, f) == 0 for f in fix0)]
    ident = la.identity(n)

    def grow(chosen: list[Vector], cur: Matrix, fix: tuple[Vector, ...], start: int, k1: int):
        if len(chosen) == k1:
            if la.matmul(cur, cur) == ident:
                for group2 in _peel_involution(grs, cur, moved, length - k1):
                    yield AdmissibleRep(tuple(chosen), group2)
            return
        for idx in range(start, len(moved)):
            b = moved[idx]
            if any(grs.pairing(b, a) for a in chosen):
                continue
            if any(grs.pairing(b, f) for f in fix):
                continue
            nxt = la.matmul(reflection_matrix(grs, b), cur)
            chosen.append(b)
            yield from grow(chosen, nxt, fixed_space(nxt), idx + 1, k1)
            chosen.pop()

    for k1 in range((length + 1) // 2, 0, -1):
        yield from grow([], w, fix0, 0, k1)


def admissible_representation(
    grs: GrsPresentation,
    w: Matrix | None = None,
    *,
    require_generation: bool = True,
    reverse: bool = False,
    accept: Callable[[AdmissibleRep], bool] | None = None,
) -> AdmissibleRep:
    """First representation of ``w`` (default: the Coxeter element) passing
    :func:`verify_admissible` and the optional ``accept`` filter."""
    if not la.is_positive_definite(grs.cartan):
        raise NotPositiveDefinite("admissible representations need a positive definite form")
    if w is None:
        w = coxeter_matrix(grs)
    if not preserves_form(grs, w):
        raise ValueError("w does not preserve the Cartan form")
    for rep in iter_representations(grs, w, reverse=reverse):
        if not verify_admissible(grs, w, rep, require_generation).ok:
            continue
        if accept is None or accept(rep):
            return rep
    raise SearchExhausted(f"no admissible representation of {w}")


def catalog_representation(
    grs: GrsPresentation, w: Matrix | None = None, *, reverse: bool = False
) -> AdmissibleRep:
    """Admissible representation whose diagram is one of the catalog diagrams.

    Some elements also admit representations with longer even cycles (a
    hexagon turns up for D_6(a_2)); those are skipped.
    """
    return admissible_representation(
        grs, w, reverse=reverse,
        accept=lambda rep: classify_diagram(diagram_of(grs, rep)) is not None,
    )


def diagram_of(grs: GrsPresentation, rep: AdmissibleRep, name: str | None = None) -> CarterDiagram:
    roots = rep.roots
    edges = []
    for i, a in enumerate(roots):
        for j in range(i + 1, len(roots)):
            p = grs.pairing(a, roots[j])
            if abs(p) > 1:
                raise VerificationFailure(f"pairing {p} between distinct roots of a representation")
            if p:
                edges.append((i, j))
    return CarterDiagram.from_edges(len(roots), edges, name)


# -- classification ---------------------------------------------------------

@dataclass(frozen=True)
class ComponentClass:
    indices: tuple[int, ...]
    name: str
    rep: AdmissibleRep
    diagram: CarterDiagram
    ambient_type: str
    root_count: int


def restrict(grs: GrsPresentation, indices: Sequence[int]) -> GrsPresentation:
    return new_grs([[grs.cartan[i][j] for j in indices] for i in indices])


def ambient_type(name: str) -> tuple[str, int]:
    kind, n, _ = parse_name(name)
    return kind, n


def classify_grs(grs: GrsPresentation) -> tuple[ComponentClass, ...]:
    """Catalog name of the Coxeter element's diagram for every irreducible component."""
    if not la.is_positive_definite(grs.cartan):
        raise NotPositiveDefinite(f"cannot classify {grs.cartan}: not positive definite")
    return _classify(grs.cartan)


@lru_cache(maxsize=512)
def _classify(cartan: Matrix) -> tuple[ComponentClass, ...]:
    grs = GrsPresentation(cartan)
    out = []
    for part in irreducible_components(grs).parts:
        sub = restrict(grs, part)
        rep = catalog_representation(sub)
        if len(rep) != sub.rank:
            raise VerificationFailure(f"Coxeter representation has {len(rep)} roots, rank {sub.rank}")
        diagram = diagram_of(sub, rep)
        name = classify_diagram(diagram)
        if name is None:
            raise VerificationFailure(f"diagram {sorted(diagram.edges)} is not in the catalog")
        kind, n = ambient_type(name)
        count = len(enumerate_roots(sub))
        if count != classical_root_count(kind, n):
            raise VerificationFailure(
                f"{name} needs a {kind}_{n} root system but found {count} roots"
            )
        out.append(ComponentClass(part, name, rep, diagram.with_name(name), f"{kind}_{n}", count))
    return tuple(out)


def classify_names(grs: GrsPresentation) -> list[str]:
    return [c.name for c in classify_grs(grs)]


# -- realization ------------------------------------------------------------

@dataclass(frozen=True)
class Realization:
    name: str
    ambient: GrsPresentation
    rep: AdmissibleRep
    element: Matrix

    def presentation(self) -> GrsPresentation:
        return new_grs(la.gram(self.ambient.cartan, self.rep.roots), self.name)


@lru_cache(maxsize=None)
def realize_in_ambient(name: str) -> Realization:
    """Find roots of the ambient classical system whose admissible diagram is ``name``.

    Vertices are split by 2-colouring, assigned in breadth-first order, and
    each takes the first positive root whose pairings with the vertices
    already placed match the adjacency (+-1 on edges, 0 otherwise).
    """
    cat = catalog()
    if name not in cat:
        raise NameUnknown(name)
    d = cat[name]
    kind, n = ambient_type(name)
    amb = standard_grs(kind, n)
    pos = enumerate_roots(amb).positive()
    images = {r: la.matvec(amb.cartan, r) for r in pos}
    adj = d.adjacency()
    color = d.two_coloring()
    order = [0]
    for v in order:
        for u in sorted(adj[v]):
            if u not in order:
                order.append(u)
    g1 = [v for v in range(d.vertex_count) if color[v] == 0]
    g2 = [v for v in range(d.vertex_count) if color[v] == 1]
    assigned: dict[int, Vector] = {}

    def pair(a: Vector, b: Vector) -> int:
        return sum(x * y for x, y in zip(a, images[b]) if x)

    def extend(k: int) -> Realization | None:
        if k == len(order):
            rep = AdmissibleRep(tuple(assigned[v] for v in g1), tuple(assigned[v] for v in g2))
            w = rep_product(amb, rep)
            if verify_admissible(amb, w, rep).ok:
                return Realization(name, amb, rep, w)
            return None
        v = order[k]
        used = set(assigned.values())
        for r in pos:
            if r in used:
                continue
            if all((abs(pair(r, assigned[u])) == 1) == (u in adj[v])
                   and abs(pair(r, assigned[u])) <= 1 for u in assigned):
                assigned[v] = r
                found = extend(k + 1)
                del assigned[v]
                if found is not None:
                    return found
        return None

    found = extend(0)
    if found is None:
        raise SearchExhausted(f"no realization of {name} inside {kind}_{n}")
    return found


def realize(name: str) -> GrsPresentation:
    """GRS presented on a realizing root tuple, basis ordered group 1 then group 2."""
    return realize_in_ambient(name).presentation()


# -- isomorphism ------------------------------------------------------------

def _check_irreducible_pd(grs: GrsPresentation) -> None:
    if not la.is_positive_definite(grs.cartan):
        raise NotPositiveDefinite("isomorphism test needs positive definite input")
    if len(irreducible_components(grs)) != 1:
        raise Reducible("isomorphism test is only defined for irreducible systems")


def find_grs_isomorphism(r1: GrsPresentation, r2: GrsPresentation) -> Matrix | None:
    """Brute-force isomorphism: basis of r1 to real roots of r2, isometric,
    unimodular, and intertwining the Coxeter matrices."""
    if r1.rank != r2.rank:
        return None
    roots2 = enumerate_roots(r2).roots
    if len(roots2) != len(enumerate_roots(r1)):
        return None
    n = r1.rank
    c1, c2 = coxeter_matrix(r1), coxeter_matrix(r2)
    chosen: list[Vector] = []

    def extend(i: int) -> Matrix | None:
        if i == n:
            phi = la.from_columns(chosen)
            if abs(la.det_exact(phi)) == 1 and la.matmul(phi, c1) == la.matmul(c2, phi):
                return phi
            return None
        for r in roots2:
            if all(r2.pairing(r, chosen[j]) == r1.cartan[i][j] for j in range(i)):
                chosen.append(r)
                got = extend(i + 1)
                chosen.pop()
                if got is not None:
                    return got
        return None

    return extend(0)


ORACLE_MAX_RANK = 5


def are_isomorphic_grs(
    r1: GrsPresentation, r2: GrsPresentation, oracle: bool | None = None
) -> bool:
    """Compare catalog names; for small ranks cross-check with the brute-force search."""
    _check_irreducible_pd(r1)
    _check_irreducible_pd(r2)
    answer = classify_names(r1) == classify_names(r2)
    if oracle is None:
        oracle = max(r1.rank, r2.rank) <= ORACLE_MAX_RANK
    if oracle:
        direct = find_grs_isomorphism(r1, r2) is not None
        if direct != answer:
            raise VerificationFailure(
                f"classification says {answer} but direct search says {direct}"
            )
    return answer


def morphism_reflection_identity(phi: Matrix, src: GrsPresentation, tgt: GrsPresentation,
                                 alpha: Sequence[int]) -> bool:
    """phi r_alpha == r_phi(alpha) phi as matrices."""
    lhs = la.matmul(phi, reflection_matrix(src, alpha))
    rhs = la.matmul(reflection_matrix(tgt, la.matvec(phi, alpha)), phi)
    return lhs == rhs

