"""Root systems built directly from Euclidean coordinates.

These never touch Cartan matrices or reflections, so they serve as an
independent check on orbit enumeration.  Vectors are scaled by 2 so the
half-integer E_8 roots stay integral; every root then has squared length 8.
"""
from __future__ import annotations

import itertools


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def a_roots(n: int) -> list[tuple[int, ...]]:
    """e_i - e_j in R^(n+1), doubled."""
    out = []
    for i, j in itertools.permutations(range(n + 1), 2):
        v = [0] * (n + 1)
        v[i], v[j] = 2, -2
        out.append(tuple(v))
    return out


def d_roots(n: int) -> list[tuple[int, ...]]:
    """+-e_i +- e_j in R^n, doubled."""
    out = []
    for i, j in itertools.combinations(range(n), 2):
        for si, sj in itertools.product((2, -2), repeat=2):
            v = [0] * n
            v[i], v[j] = si, sj
            out.append(tuple(v))
    return out


def e8_roots() -> list[tuple[int, ...]]:
    """D_8 roots plus (+-1/2, ..., +-1/2) with an even number of minus signs, doubled."""
    out = d_roots(8)
    for signs in itertools.product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            out.append(signs)
    return out


def e7_roots() -> list[tuple[int, ...]]:
    """E_8 roots orthogonal to e_7 + e_8."""
    fixed = (0, 0, 0, 0, 0, 0, 2, 2)
    return [r for r in e8_roots() if _dot(r, fixed) == 0]


def e6_roots() -> list[tuple[int, ...]]:
    """E_8 roots with x_6 = x_7 = -x_8."""
    return [r for r in e8_roots() if r[5] == r[6] == -r[7]]


def model_roots(kind: str, n: int) -> list[tuple[int, ...]]:
    if kind == "A":
        return a_roots(n)
    if kind == "D":
        return d_roots(n)
    if kind == "E":
        return {6: e6_roots, 7: e7_roots, 8: e8_roots}[n]()
    raise ValueError(f"no coordinate model for {kind}_{n}")


def model_rank(roots) -> int:
    """Rank of the span, by exact integer elimination."""
    rows = [list(r) for r in roots]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x * p[c] - y * f for x, y in zip(rows[i], p)]
        rank += 1
    return rank
