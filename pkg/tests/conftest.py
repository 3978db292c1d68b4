from __future__ import annotations

import itertools
from fractions import Fraction

from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def leibniz_det(m) -> int:
    """Determinant as a signed sum over permutations (small matrices only)."""
    n = len(m)
    total = 0
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        prod = 1
        for i, p in enumerate(perm):
            prod *= m[i][p]
        total += sign * prod
    return total


def ldl_positive_definite(m) -> bool:
    """Symmetric Gaussian elimination over Q: positive definite iff every pivot is > 0."""
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    for k in range(n):
        if a[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    return True
