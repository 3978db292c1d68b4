"""Simply-laced generalized root systems presented by integer Cartan data.

A presentation fixes the root lattice as Z^rank with the standard basis as
the ordered root basis.  Weyl group elements act on column vectors: column
``j`` of a matrix is the image of basis vector ``j``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence, Union

from . import linalg as la
from .errors import (
    BadDiagonal,
    NormNotTwo,
    NotSymmetric,
    ShapeError,
    TargetNotEnumerable,
    VerificationFailure,
)
from .linalg import KernelBasis, Matrix, Vector


@dataclass(frozen=True)
class GrsPresentation:
    cartan: Matrix
    label: str | None = field(default=None, compare=False)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    def basis(self) -> tuple[Vector, ...]:
        return la.identity(self.rank)

    def pairing(self, x: Sequence[int], y: Sequence[int]) -> int:
        return la.bilinear(self.cartan, x, y)

    def norm(self, x: Sequence[int]) -> int:
        return la.bilinear(self.cartan, x, x)


@dataclass(frozen=True)
class Unknown:
    """Result placeholder for a computation cut off at ``cap``."""

    cap: int

    def __str__(self) -> str:
        return f"unknown({self.cap})"


def new_grs(cartan: Iterable[Iterable[int]], label: str | None = None) -> GrsPresentation:
    m = la.as_matrix(cartan)
    if not la.is_square(m):
        raise ShapeError(f"Cartan matrix must be square, got {la.shape(m)}")
    if not la.is_symmetric(m):
        bad = next((i, j) for i in range(len(m)) for j in range(i) if m[i][j] != m[j][i])
        raise NotSymmetric(f"Cartan matrix not symmetric at {bad}")
    for i, row in enumerate(m):
        if row[i] != 2:
            raise BadDiagonal(f"I(alpha_{i + 1}, alpha_{i + 1}) = {row[i]}, expected 2")
    return GrsPresentation(m, label)


def reflection_matrix(grs: GrsPresentation, root: Sequence[int]) -> Matrix:
    """Matrix of r(x) = x - I(x, root) root."""
    root = tuple(root)
    if len(root) != grs.rank:
        raise ShapeError("root has wrong length")
    if grs.norm(root) != 2:
        raise NormNotTwo(f"{root} has Cartan norm {grs.norm(root)}")
    ir = la.matvec(grs.cartan, root)
    n = grs.rank
    return tuple(
        tuple(int(i == j) - root[i] * ir[j] for j in range(n)) for i in range(n)
    )


def reflect(grs: GrsPresentation, root: Sequence[int], v: Sequence[int]) -> Vector:
    c = grs.pairing(v, root)
    return tuple(x - c * r for x, r in zip(v, root))


@lru_cache(maxsize=4096)
def _basis_reflections(cartan: Matrix) -> tuple[Matrix, ...]:
    g = GrsPresentation(cartan)
    return tuple(reflection_matrix(g, e) for e in la.identity(len(cartan)))


def basis_reflections(grs: GrsPresentation) -> tuple[Matrix, ...]:
    return _basis_reflections(grs.cartan)


def product(mats: Iterable[Matrix], n: int) -> Matrix:
    out = la.identity(n)
    for m in mats:
        out = la.matmul(out, m)
    return out


@lru_cache(maxsize=4096)
def _coxeter(cartan: Matrix) -> Matrix:
    return product(_basis_reflections(cartan), len(cartan))


def coxeter_matrix(grs: GrsPresentation) -> Matrix:
    """r_1 r_2 ... r_rank in basis order."""
    return _coxeter(grs.cartan)


def element_order(m: Matrix, cap: int) -> Union[int, Unknown]:
    ident = la.identity(len(m))
    p = m
    for k in range(1, cap + 1):
        if p == ident:
            return k
        p = la.matmul(p, m)
    return Unknown(cap)


def coxeter_order(grs: GrsPresentation, cap: int = 10**4) -> Union[int, Unknown]:
    if cap < 1:
        raise ValueError("cap must be at least 1")
    return element_order(coxeter_matrix(grs), cap)


def preserves_form(grs: GrsPresentation, m: Matrix) -> bool:
    return la.matmul(la.matmul(la.transpose(m), grs.cartan), m) == grs.cartan


# -- Euler form -------------------------------------------------------------

def euler_form(grs: GrsPresentation) -> Matrix:
    """Upper unitriangular part of the Cartan matrix."""
    i_ = grs.cartan
    n = grs.rank
    return tuple(
        tuple(1 if i == j else (i_[i][j] if i < j else 0) for j in range(n))
        for i in range(n)
    )


def euler_identities_hold(grs: GrsPresentation, x: Matrix) -> bool:
    c = coxeter_matrix(grs)
    xt = la.transpose(x)
    return la.add(x, xt) == grs.cartan and la.matmul(x, c) == la.neg(xt)


def euler_constraints(grs: GrsPresentation) -> tuple[list[list[int]], list[int]]:
    """Linear system in the rank^2 entries of X (row-major).

    Encodes X + X^T = I and X C + X^T = 0.
    """
    n = grs.rank
    c = coxeter_matrix(grs)
    idx = lambda i, j: i * n + j  # noqa: E731
    rows: list[list[int]] = []
    rhs: list[int] = []
    for i in range(n):
        for j in range(n):
            row = [0] * (n * n)
            row[idx(i, j)] += 1
            row[idx(j, i)] += 1
            rows.append(row)
            rhs.append(grs.cartan[i][j])
    for i in range(n):
        for j in range(n):
            row = [0] * (n * n)
            for k in range(n):
                row[idx(i, k)] += c[k][j]
            row[idx(j, i)] += 1
            rows.append(row)
            rhs.append(0)
    return rows, rhs


class EulerNotUnique(VerificationFailure):
    """The Euler constraints have more than one solution.

    ``alternative`` is a second integral solution with determinant +-1 when
    one turns up among small multiples of the kernel directions, else None.
    """

    def __init__(self, message: str, nullity: int, alternative: Matrix | None):
        super().__init__(message)
        self.nullity = nullity
        self.alternative = alternative


def euler_solution_directions(grs: GrsPresentation) -> list[Matrix]:
    """Integral basis of the homogeneous Euler constraints, as matrices."""
    n = grs.rank
    rows, _ = euler_constraints(grs)
    return [
        tuple(tuple(v[i * n:(i + 1) * n]) for i in range(n))
        for v in la.integer_kernel(rows, n * n).vectors
    ]


def unimodular_alternative(grs: GrsPresentation, bound: int = 3) -> Matrix | None:
    """Another det +-1 solution X + sum t_k Y_k with 0 < max|t_k| <= bound, if any."""
    x = euler_form(grs)
    dirs = euler_solution_directions(grs)
    best = None
    for ts in itertools.product(range(-bound, bound + 1), repeat=len(dirs)):
        if not any(ts):
            continue
        cand = x
        for t, y in zip(ts, dirs):
            cand = la.add(cand, la.scale(t, y))
        if abs(la.det_exact(cand)) == 1:
            key = (max(map(abs, ts)), cand)
            if best is None or key < best:
                best = key
    return None if best is None else best[1]


def solve_euler_uniqueness(grs: GrsPresentation) -> Matrix:
    """Solve the Euler constraints exactly and insist on a unique integral answer."""
    n = grs.rank
    rows, rhs = euler_constraints(grs)
    sol = la.solve_rational(rows, rhs, n * n)
    if isinstance(sol, la.NonUnique):
        alt = unimodular_alternative(grs)
        msg = f"Euler system for {grs.cartan} has a {sol.nullity}-dimensional solution family"
        if alt is not None:
            msg += f"; {alt} is a second unimodular solution"
        raise EulerNotUnique(msg, sol.nullity, alt)
    if not isinstance(sol, la.Solution):
        raise VerificationFailure(f"Euler system for {grs.cartan} is inconsistent")
    if not sol.is_integral:
        raise VerificationFailure(f"Euler form of {grs.cartan} is not integral")
    vals = sol.as_ints()
    x = tuple(tuple(vals[i * n:(i + 1) * n]) for i in range(n))
    if x != euler_form(grs):
        raise VerificationFailure("solved Euler form disagrees with the constructive one")
    return x


def radical(grs: GrsPresentation) -> KernelBasis:
    return la.integer_kernel(grs.cartan, grs.rank)


# -- re-presentations -------------------------------------------------------

def present_on(
    grs: GrsPresentation, vectors: Sequence[Sequence[int]], label: str | None = None
) -> GrsPresentation:
    """GRS whose root basis is ``vectors`` (real roots of ``grs``), via its Gram matrix."""
    return new_grs(la.gram(grs.cartan, vectors), label)


def hurwitz_move(
    grs: GrsPresentation, basis: Sequence[Vector], i: int
) -> list[Vector]:
    """Replace (b_i, b_{i+1}) by (r_{b_i} b_{i+1}, b_i); the ordered reflection product is unchanged."""
    out = list(basis)
    out[i], out[i + 1] = reflect(grs, basis[i], basis[i + 1]), basis[i]
    return out


# -- morphisms --------------------------------------------------------------

@dataclass(frozen=True)
class LatticeMap:
    matrix: Matrix
    source: GrsPresentation
    target: GrsPresentation

    def __post_init__(self) -> None:
        if la.shape(self.matrix) != (self.target.rank, self.source.rank):
            raise ShapeError(
                f"map shape {la.shape(self.matrix)} does not match "
                f"{self.target.rank}x{self.source.rank}"
            )

    def __call__(self, v: Sequence[int]) -> Vector:
        return la.matvec(self.matrix, v)


@dataclass(frozen=True)
class MorphismReport:
    isometry: bool
    roots: bool | None
    commutes: bool
    depth: int | None = None
    failures: tuple[str, ...] = ()

    @property
    def ok(self) -> bool | None:
        """True, False, or None when root membership stayed undecided within ``depth``."""
        if not (self.isometry and self.commutes) or self.roots is False:
            return False
        return None if self.roots is None else True


def is_morphism(phi: LatticeMap, depth: int | None = None) -> MorphismReport:
    """Check the three morphism conditions.

    Root membership is only tested on basis images; the reflection identity
    phi r_a = r_phi(a) phi carries it to every real root.  For a target
    without a positive definite form, ``depth`` bounds the orbit search and an
    unresolved root leaves ``roots`` as None.
    """
    from .weyl import enumerate_roots

    src, tgt, m = phi.source, phi.target, phi.matrix
    failures: list[str] = []
    iso = la.matmul(la.matmul(la.transpose(m), tgt.cartan), m) == src.cartan
    if not iso:
        failures.append("isometry")
    comm = la.matmul(m, coxeter_matrix(src)) == la.matmul(coxeter_matrix(tgt), m)
    if not comm:
        failures.append("coxeter commutation")

    images = [phi(e) for e in src.basis()]
    if la.is_positive_definite(tgt.cartan):
        roots = enumerate_roots(tgt).as_set()
        bad = [v for v in images if v not in roots]
        root_ok: bool | None = not bad
        used_depth = None
    elif depth is None:
        raise TargetNotEnumerable("target is not positive definite; pass depth=")
    else:
        roots = enumerate_roots(tgt, depth=depth).as_set()
        bad = [v for v in images if tgt.norm(v) != 2]
        if bad:
            root_ok = False
        else:
            root_ok = True if all(v in roots for v in images) else None
        used_depth = depth
    if root_ok is False:
        failures.append(f"basis images not real roots: {bad}")
    elif root_ok is None:
        failures.append(f"root membership undecided within depth {depth}")
    return MorphismReport(iso, root_ok, comm, used_depth, tuple(failures))
