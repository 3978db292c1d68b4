"""Standard Cartan matrices of the simply-laced finite types (Bourbaki labelling)."""
from __future__ import annotations

import re

from .grs import GrsPresentation, new_grs
from .linalg import Matrix


def cartan_from_edges(n: int, edges) -> Matrix:
    m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in edges:
        m[i][j] = m[j][i] = -1
    return tuple(tuple(r) for r in m)


def dynkin_edges(kind: str, n: int) -> list[tuple[int, int]]:
    if kind == "A" and n >= 1:
        return [(i, i + 1) for i in range(n - 1)]
    if kind == "D" and n >= 4:
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if kind == "E" and n in (6, 7, 8):
        # 1-3-4-...-n with 2 hanging off 4 (0-based: 0-2-3-..., 1-3)
        return [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, n - 1)]
    raise ValueError(f"no simply-laced type {kind}_{n}")


def standard_grs(kind: str, n: int) -> GrsPresentation:
    return new_grs(cartan_from_edges(n, dynkin_edges(kind, n)), f"{kind}_{n}")


def classical_root_count(kind: str, n: int) -> int:
    if kind == "A":
        return n * (n + 1)
    if kind == "D":
        return 2 * n * (n - 1)
    return {6: 72, 7: 126, 8: 240}[n]


_TYPE = re.compile(r"^([ADE])_(\d+)(?:\(a_(\d+)\))?$")


def parse_name(name: str) -> tuple[str, int, int | None]:
    """'D_6(a_2)' -> ('D', 6, 2); 'A_3' -> ('A', 3, None)."""
    m = _TYPE.match(name)
    if not m:
        raise ValueError(f"not a diagram name: {name!r}")
    k = int(m.group(3)) if m.group(3) else None
    return m.group(1), int(m.group(2)), k


def standard_presentations(max_rank: int = 8) -> list[GrsPresentation]:
    out = [standard_grs("A", n) for n in range(1, max_rank + 1)]
    out += [standard_grs("D", n) for n in range(4, max_rank + 1)]
    out += [standard_grs("E", n) for n in (6, 7, 8) if n <= max_rank]
    return out
