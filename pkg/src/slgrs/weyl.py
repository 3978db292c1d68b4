"""Finite enumeration: real roots, Weyl groups, conjugacy and axiom checks."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence, Union

from . import linalg as la
from .errors import NotPositiveDefinite, SeedNotRoot, VerificationFailure
from .grs import GrsPresentation, Unknown, basis_reflections, reflect, reflection_matrix
from .linalg import Matrix, Vector

DEFAULT_GROUP_CAP = 10**6


def is_positive(v: Sequence[int]) -> bool:
    """Sign convention for picking one root out of each +-pair."""
    for x in v:
        if x:
            return x > 0
    return False


@dataclass(frozen=True)
class RootSet:
    roots: tuple[Vector, ...]
    complete: bool

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __contains__(self, v) -> bool:
        return tuple(v) in self.as_set()

    def as_set(self) -> frozenset[Vector]:
        return self._set

    @cached_property
    def _set(self) -> frozenset[Vector]:
        return frozenset(self.roots)

    def positive(self) -> tuple[Vector, ...]:
        return tuple(r for r in self.roots if is_positive(r))


def _require_pd(grs: GrsPresentation) -> None:
    if not la.is_positive_definite(grs.cartan):
        raise NotPositiveDefinite(f"Cartan form {grs.cartan} is not positive definite")


def _reflect_basis(cartan: Matrix, v: Vector) -> Iterable[Vector]:
    """Images of v under each basis reflection (only coordinate j moves)."""
    for j, row in enumerate(cartan):
        p = sum(a * b for a, b in zip(row, v) if b)
        if p:
            w = list(v)
            w[j] -= p
            yield tuple(w)


@lru_cache(maxsize=1024)
def _orbit(cartan: Matrix, depth: int | None) -> RootSet:
    n = len(cartan)
    basis = la.identity(n)
    seen = set(basis)
    frontier = sorted(basis)
    bound = 3**n + n
    steps = 0
    while frontier and (depth is None or steps < depth):
        new: set[Vector] = set()
        for v in frontier:
            for w in _reflect_basis(cartan, v):
                if w not in seen:
                    new.add(w)
        seen |= new
        frontier = sorted(new)
        steps += 1
        if depth is None and len(seen) > bound:
            raise VerificationFailure(f"root count exceeded 3^{n}+{n}")
    if frontier:
        # out of depth: complete only if the next layer brings nothing new
        complete = all(w in seen for v in frontier for w in _reflect_basis(cartan, v))
    else:
        complete = True
    return RootSet(tuple(sorted(seen)), complete)


def enumerate_roots(grs: GrsPresentation, depth: int | None = None) -> RootSet:
    """Weyl orbit of the root basis under basis reflections, in lexicographic order.

    Without ``depth`` the Cartan form must be positive definite, which makes
    the orbit finite.  With ``depth`` the breadth-first expansion stops after
    that many layers and ``complete`` tells whether closure was reached.
    """
    if depth is None:
        _require_pd(grs)
    return _orbit(grs.cartan, depth)


def positive_roots(grs: GrsPresentation) -> tuple[Vector, ...]:
    return enumerate_roots(grs).positive()


# -- Weyl group -------------------------------------------------------------

@dataclass(frozen=True)
class WeylGroupTable:
    elements: tuple[Matrix, ...]
    complete: bool
    cap: int
    inverses: dict = field(default_factory=dict, compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, m) -> bool:
        return m in self.inverses


def _left_reflect(cartan: Matrix, i: int, m: Matrix) -> Matrix:
    row = list(m[i])
    for k, c in enumerate(cartan[i]):
        if c:
            mk = m[k]
            for j in range(len(row)):
                row[j] -= c * mk[j]
    out = list(m)
    out[i] = tuple(row)
    return tuple(out)


def _right_reflect(cartan: Matrix, i: int, m: Matrix) -> Matrix:
    ci = cartan[i]
    return tuple(
        tuple(x - r[i] * ci[j] for j, x in enumerate(r)) if r[i] else r for r in m
    )


@lru_cache(maxsize=64)
def _weyl_group(cartan: Matrix, cap: int) -> WeylGroupTable:
    n = len(cartan)
    ident = la.identity(n)
    inverses = {ident: ident}
    order = [ident]
    frontier = [ident]
    complete = True
    while frontier:
        nxt = []
        for m in frontier:
            inv = inverses[m]
            for i in range(n):
                w = _left_reflect(cartan, i, m)
                if w in inverses:
                    continue
                if len(order) >= cap:
                    complete = False
                    break
                inverses[w] = _right_reflect(cartan, i, inv)
                order.append(w)
                nxt.append(w)
            if not complete:
                break
        if not complete:
            break
        frontier = nxt
    return WeylGroupTable(tuple(order), complete, cap, inverses)


def enumerate_weyl_group(grs: GrsPresentation, cap: int = DEFAULT_GROUP_CAP) -> WeylGroupTable:
    """Breadth-first products of basis reflections, deduplicated by matrix."""
    return _weyl_group(grs.cartan, cap)


def are_conjugate(
    grs: GrsPresentation, w1: Matrix, w2: Matrix, cap: int = DEFAULT_GROUP_CAP
) -> Union[bool, Unknown]:
    table = enumerate_weyl_group(grs, cap)
    for u in table.elements:
        if la.matmul(u, w1) == la.matmul(w2, u):
            return True
    return False if table.complete else Unknown(cap)


def conjugacy_class(
    grs: GrsPresentation, w: Matrix, cap: int = DEFAULT_GROUP_CAP
) -> frozenset[Matrix]:
    table = enumerate_weyl_group(grs, cap)
    if not table.complete:
        raise VerificationFailure(f"Weyl group exceeds cap {cap}")
    return frozenset(
        la.matmul(la.matmul(u, w), table.inverses[u]) for u in table.elements
    )


# -- axioms -----------------------------------------------------------------

@dataclass(frozen=True)
class AxiomReport:
    checks: dict
    complete: bool
    root_count: int

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failed(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]


def _proportional(a: Vector, b: Vector) -> bool:
    i = next(k for k, x in enumerate(a) if x)
    return all(a[i] * y == b[i] * x for x, y in zip(a, b))


def _root_words(grs: GrsPresentation, roots: RootSet) -> dict[Vector, tuple[int, tuple[int, ...]]]:
    """For each reachable root, (basis index, word) with root = r_word e_index."""
    n = grs.rank
    words: dict[Vector, tuple[int, tuple[int, ...]]] = {}
    frontier = []
    for i, e in enumerate(la.identity(n)):
        words[e] = (i, ())
        frontier.append(e)
    frontier.sort()
    while frontier:
        nxt = []
        for v in frontier:
            base, word = words[v]
            for j, e in enumerate(la.identity(n)):
                w = reflect(grs, e, v)
                if w not in words and w in roots:
                    words[w] = (base, (j,) + word)
                    nxt.append(w)
        frontier = sorted(nxt)
    return words


def check_axioms(grs: GrsPresentation, depth: int | None = None) -> AxiomReport:
    """Verify the generalized-root-system and classical root system axioms.

    Positive definite input gets the full check on the complete root set.
    Otherwise ``depth`` is required and only the checks that make sense on a
    truncated orbit are run.
    """
    pd = la.is_positive_definite(grs.cartan)
    if not pd and depth is None:
        raise NotPositiveDefinite("full axiom check needs a positive definite form")
    rs = enumerate_roots(grs) if pd else enumerate_roots(grs, depth=depth)
    roots = rs.roots
    rset = rs.as_set()
    n = grs.rank
    checks: dict[str, bool] = {}
    checks["basis_in_roots"] = all(e in rset for e in la.identity(n))
    checks["norm_two"] = all(grs.norm(a) == 2 for a in roots)
    checks["negation"] = all(reflect(grs, a, a) == tuple(-x for x in a) for a in roots)
    checks["reflection_involution"] = all(
        la.matmul(r, r) == la.identity(n)
        for r in (reflection_matrix(grs, a) for a in roots[: 4 * n])
    )

    if pd:
        checks["finite_bound"] = rs.complete and len(roots) <= 3**n + n
        checks["negation_closed"] = all(tuple(-x for x in a) in rset for a in roots)
        checks["real_span"] = la.rank(roots) == n
        checks["reflection_invariance"] = all(
            {reflect(grs, a, b) for b in roots} == rset for a in roots
        )
        bounds = mult = True
        for i, a in enumerate(roots):
            for b in roots[i + 1:]:
                p = grs.pairing(a, b)
                prop = _proportional(a, b)
                if not -2 <= p <= 2 or ((abs(p) == 2) != prop):
                    bounds = False
                if prop and b != tuple(-x for x in a):
                    mult = False
        checks["pairing_bounds"] = bounds
        checks["only_unit_multiples"] = mult
        words = _root_words(grs, rs)
        refl = basis_reflections(grs)
        ok = len(words) == len(roots)
        for a in roots[: 8 * n]:
            if not ok:
                break
            base, word = words[a]
            w = la.identity(n)
            for j in word:
                w = la.matmul(w, refl[j])
            winv = la.identity(n)
            for j in reversed(word):
                winv = la.matmul(winv, refl[j])
            ok = la.matmul(la.matmul(w, refl[base]), winv) == reflection_matrix(grs, a)
        checks["weyl_generated_by_basis"] = ok
    else:
        checks["reflections_preserve_norm"] = all(
            grs.norm(reflect(grs, a, b)) == 2 for a in roots[:50] for b in roots[:50]
        )
    return AxiomReport(checks, rs.complete, len(roots))


# -- decomposition and closure ---------------------------------------------

@dataclass(frozen=True)
class Components:
    parts: tuple[tuple[int, ...], ...]
    heuristic: bool

    def __len__(self) -> int:
        return len(self.parts)


def _union_find_parts(n: int, edges: Iterable[tuple[int, int]]) -> list[list[int]]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for x in range(n):
        groups.setdefault(find(x), []).append(x)
    return sorted(groups.values())


def irreducible_components(grs: GrsPresentation) -> Components:
    """Partition of basis indices into irreducible components.

    For positive definite input the graph is built on all real roots; for
    anything else only the basis graph is available and the answer is
    flagged heuristic.
    """
    n = grs.rank
    if not la.is_positive_definite(grs.cartan):
        edges = [(i, j) for i in range(n) for j in range(i) if grs.cartan[i][j]]
        parts = _union_find_parts(n, edges)
        return Components(tuple(tuple(p) for p in parts), True)
    roots = enumerate_roots(grs).positive()
    index = {r: k for k, r in enumerate(roots)}
    images = [la.matvec(grs.cartan, r) for r in roots]
    edges = [
        (a, b)
        for a in range(len(roots))
        for b in range(a)
        if any(x * y for x, y in zip(roots[b], images[a]))
    ]
    parts = _union_find_parts(len(roots), edges)
    owner = {k: pi for pi, p in enumerate(parts) for k in p}
    by_part: dict[int, list[int]] = {}
    for i, e in enumerate(la.identity(n)):
        by_part.setdefault(owner[index[e]], []).append(i)
    return Components(tuple(sorted(tuple(v) for v in by_part.values())), False)


def subsystem_closure(grs: GrsPresentation, seed: Sequence[Sequence[int]]) -> RootSet:
    """Smallest reflection-closed set of real roots containing +-seed."""
    full = enumerate_roots(grs).as_set()
    seeds = [tuple(s) for s in seed]
    for s in seeds:
        if s not in full:
            raise SeedNotRoot(f"{s} is not a real root")
    images = [la.matvec(grs.cartan, s) for s in seeds]
    seen = set(seeds)
    frontier = list(seeds)
    while frontier:
        nxt = []
        for v in frontier:
            for s, si in zip(seeds, images):
                p = sum(a * b for a, b in zip(v, si) if a)
                w = tuple(x - p * y for x, y in zip(v, s)) if p else v
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return RootSet(tuple(sorted(seen)), True)


# -- invariant forms --------------------------------------------------------

def _sym_index(n: int) -> dict[tuple[int, int], int]:
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    return {p: k for k, p in enumerate(pairs)}


def _form_row(index: dict[tuple[int, int], int], x: Sequence[int], y: Sequence[int]) -> list[int]:
    """Coefficients of J(x, y) in the unknowns J_ij (i <= j) of a symmetric form."""
    row = [0] * len(index)
    for i, a in enumerate(x):
        if not a:
            continue
        for j, b in enumerate(y):
            if b:
                row[index[(min(i, j), max(i, j))]] += a * b
    return row


def invariant_form_constraints(grs: GrsPresentation) -> tuple[list[list[int]], list[int]]:
    """Linear conditions on a symmetric form J: J(a, a) = 2 for every real root a
    and J(r_b x, r_b y) = J(x, y) for every basis reflection r_b and basis x, y."""
    _require_pd(grs)
    n = grs.rank
    index = _sym_index(n)
    rows: list[list[int]] = []
    rhs: list[int] = []
    for a in enumerate_roots(grs):
        rows.append(_form_row(index, a, a))
        rhs.append(2)
    for r in basis_reflections(grs):
        cols = la.columns(r)
        for i in range(n):
            for j in range(i, n):
                lhs = _form_row(index, cols[i], cols[j])
                lhs[index[(i, j)]] -= 1
                rows.append(lhs)
                rhs.append(0)
    return rows, rhs


def solve_invariant_form(grs: GrsPresentation) -> Matrix:
    """The unique symmetric form meeting :func:`invariant_form_constraints`.

    Raises VerificationFailure unless the solution is unique and equals the
    Cartan matrix.
    """
    n = grs.rank
    rows, rhs = invariant_form_constraints(grs)
    index = _sym_index(n)
    sol = la.solve_rational(rows, rhs, len(index))
    if not isinstance(sol, la.Solution) or not sol.is_integral:
        raise VerificationFailure(f"invariant form system gave {sol!r}")
    vals = sol.as_ints()
    j = tuple(tuple(vals[index[(min(a, b), max(a, b))]] for b in range(n)) for a in range(n))
    if j != grs.cartan:
        raise VerificationFailure(f"invariant form {j} differs from the Cartan matrix")
    return j
