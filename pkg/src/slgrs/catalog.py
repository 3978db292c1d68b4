"""Carter's list of admissible diagrams for simply-laced types up to rank 8."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .diagrams import CarterDiagram, diagrams_isomorphic, path
from .errors import VerificationFailure

MAX_RANK = 8


def d_series(n: int, name: str | None = None) -> CarterDiagram:
    """Path of n-1 vertices with an extra leaf on the second-to-last one."""
    edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    return CarterDiagram.from_edges(n, edges, name)


def d_series_a(n: int, k: int, name: str | None = None) -> CarterDiagram | None:
    """Square with a tail of k-1 vertices on one corner and n-k-3 on the opposite one.

    Returns None when the tail lengths would be negative (k > n-3).
    """
    left, right = k - 1, n - k - 3
    if left < 0 or right < 0:
        return None
    # square: 0 (corner carrying the left tail), 1, 2 (side corners), 3 (opposite corner)
    edges = [(0, 1), (0, 2), (1, 3), (2, 3)]
    prev = 0
    nxt = 4
    for _ in range(left):
        edges.append((prev, nxt))
        prev, nxt = nxt, nxt + 1
    prev = 3
    for _ in range(right):
        edges.append((prev, nxt))
        prev, nxt = nxt, nxt + 1
    return CarterDiagram.from_edges(n, edges, name)


def _labelled(name: str, edges: list[tuple[str, str]]) -> CarterDiagram:
    verts: list[str] = []
    for a, b in edges:
        for v in (a, b):
            if v not in verts:
                verts.append(v)
    ix = {v: i for i, v in enumerate(verts)}
    return CarterDiagram.from_edges(len(verts), [(ix[a], ix[b]) for a, b in edges], name)


# Vertex letters follow the node names of the published figures.
_E6_A1 = [("A", "F"), ("F", "E"), ("A", "D"), ("D", "B"), ("B", "F"), ("B", "G")]
_E6_A2 = [("A", "F"), ("F", "E"), ("A", "D"), ("D", "B"), ("B", "F"), ("B", "C"), ("C", "E")]
_E7_A4 = [
    ("A", "A1"), ("A", "A2"), ("A", "B"), ("A1", "C"), ("A2", "D"),
    ("B", "C"), ("B", "D"), ("C", "X"), ("D", "X"),
]
# front face A F B D, back face A1 F1 F2 D1; the dotted strokes are hidden cube edges
_E8_A8 = [
    ("A", "F"), ("A", "D"), ("D", "B"), ("B", "F"),
    ("A", "A1"), ("A1", "F1"), ("F1", "F2"), ("D", "D1"),
    ("B", "F2"), ("F", "F1"), ("A1", "D1"), ("F2", "D1"),
]


def _e_path(n: int) -> list[tuple[str, str]]:
    names = [f"p{i}" for i in range(n - 1)]
    return [(names[i], names[i + 1]) for i in range(n - 2)] + [(names[2], "q")]


E_TYPE_EDGES: dict[str, list[tuple[str, str]]] = {
    "E_6": _e_path(6),
    "E_6(a_1)": _E6_A1,
    "E_6(a_2)": _E6_A2,
    "E_7": _e_path(7),
    "E_7(a_1)": _E6_A1 + [("E", "T")],
    "E_7(a_2)": _E6_A1 + [("A", "V")],
    "E_7(a_3)": _E6_A2 + [("E", "W")],
    "E_7(a_4)": _E7_A4,
    "E_8": _e_path(8),
    "E_8(a_1)": _E6_A1 + [("E", "T"), ("T", "U")],
    "E_8(a_2)": _E6_A1 + [("D", "H"), ("E", "T")],
    "E_8(a_3)": _E6_A1 + [("A", "V"), ("D", "H")],
    "E_8(a_4)": _E6_A2 + [("E", "W"), ("W", "U")],
    "E_8(a_5)": _E6_A2 + [("E", "T"), ("D", "H")],
    "E_8(a_6)": _E6_A2 + [("E", "W"), ("W", "T"), ("T", "C")],
    "E_8(a_7)": _E7_A4 + [("X", "Y")],
    "E_8(a_8)": _E8_A8,
}


@dataclass(frozen=True)
class Catalog:
    entries: tuple[tuple[str, CarterDiagram], ...]
    # (dropped name, surviving name) for D_n(a_k) indices that repeat a diagram
    collisions: tuple[tuple[str, str], ...]
    # D_n(a_k) indices in the stated range with too few vertices for rank n
    skipped: tuple[str, ...]

    def names(self) -> list[str]:
        return [n for n, _ in self.entries]

    def __getitem__(self, name: str) -> CarterDiagram:
        for n, d in self.entries:
            if n == name:
                return d
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(n == name for n, _ in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def of_rank(self, rank: int) -> list[tuple[str, CarterDiagram]]:
        return [(n, d) for n, d in self.entries if d.vertex_count == rank]


def _build(max_rank: int) -> Catalog:
    entries: list[tuple[str, CarterDiagram]] = []
    collisions: list[tuple[str, str]] = []
    skipped: list[str] = []

    def add(d: CarterDiagram) -> None:
        for other_name, other in entries:
            if diagrams_isomorphic(d, other):
                collisions.append((d.name, other_name))
                return
        entries.append((d.name, d))

    for n in range(1, max_rank + 1):
        add(path(n, f"A_{n}"))
    for n in range(4, max_rank + 1):
        add(d_series(n, f"D_{n}"))
    for n in range(4, max_rank + 1):
        for k in range(1, (n + 1) // 2 + 1):
            d = d_series_a(n, k, f"D_{n}(a_{k})")
            if d is None:
                skipped.append(f"D_{n}(a_{k})")
            else:
                add(d)
    for name, edges in E_TYPE_EDGES.items():
        if int(name[2]) <= max_rank:
            add(_labelled(name, edges))
    cat = Catalog(tuple(entries), tuple(collisions), tuple(skipped))
    _self_check(cat)
    return cat


def _self_check(cat: Catalog) -> None:
    from .cartan_types import parse_name

    for i, (name, d) in enumerate(cat.entries):
        _, rank, _ = parse_name(name)
        if d.vertex_count != rank:
            raise VerificationFailure(f"{name} has {d.vertex_count} vertices")
        if not d.is_connected() or d.two_coloring() is None:
            raise VerificationFailure(f"{name} is not a connected bipartite graph")
        for other, e in cat.entries[:i]:
            if diagrams_isomorphic(d, e):
                raise VerificationFailure(f"{name} duplicates {other}")
    bad = [(a, b) for a, b in cat.collisions if not a.startswith("D_")]
    if bad:
        raise VerificationFailure(f"unexpected catalog collisions {bad}")


@lru_cache(maxsize=None)
def catalog(max_rank: int = MAX_RANK) -> Catalog:
    return _build(max_rank)


def classify_diagram(d: CarterDiagram) -> str | None:
    """Name of the unique catalog entry isomorphic to ``d``; None if absent."""
    for name, entry in catalog().entries:
        if entry.vertex_count == d.vertex_count and diagrams_isomorphic(d, entry):
            return name
    return None
