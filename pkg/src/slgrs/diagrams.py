"""Unlabelled simple graphs for admissible diagrams, with isomorphism testing."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable


@dataclass(frozen=True)
class CarterDiagram:
    vertex_count: int
    edges: frozenset[tuple[int, int]]
    name: str | None = field(default=None, compare=False)

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], name: str | None = None
    ) -> "CarterDiagram":
        norm = set()
        for a, b in edges:
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge {(a, b)} outside {n} vertices")
            norm.add((min(a, b), max(a, b)))
        return cls(n, frozenset(norm), name)

    def with_name(self, name: str | None) -> "CarterDiagram":
        return CarterDiagram(self.vertex_count, self.edges, name)

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adjacency()]

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return True
        adj = self.adjacency()
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.vertex_count

    def two_coloring(self) -> list[int] | None:
        """Breadth-first 2-colouring starting from the lowest vertex of each component."""
        adj = self.adjacency()
        color = [-1] * self.vertex_count
        for s in range(self.vertex_count):
            if color[s] != -1:
                continue
            color[s] = 0
            queue = [s]
            for v in queue:
                for w in sorted(adj[v]):
                    if color[w] == -1:
                        color[w] = 1 - color[v]
                        queue.append(w)
                    elif color[w] == color[v]:
                        return None
        return color

    def to_dot(self) -> str:
        title = (self.name or "diagram").replace('"', r"\"")
        lines = [f'graph "{title}" {{', '  node [shape=circle, label=""];']
        lines += [f"  v{i};" for i in range(self.vertex_count)]
        lines += [f"  v{a} -- v{b};" for a, b in sorted(self.edges)]
        lines.append("}")
        return "\n".join(lines) + "\n"


def path(n: int, name: str | None = None) -> CarterDiagram:
    return CarterDiagram.from_edges(n, [(i, i + 1) for i in range(n - 1)], name)


def cycle(n: int, name: str | None = None) -> CarterDiagram:
    return CarterDiagram.from_edges(n, [(i, (i + 1) % n) for i in range(n)], name)


def star(leaves: int, name: str | None = None) -> CarterDiagram:
    return CarterDiagram.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)], name)


def _signature(adj: list[set[int]], v: int) -> tuple:
    return (len(adj[v]), tuple(sorted(len(adj[w]) for w in adj[v])))


def find_isomorphism(d1: CarterDiagram, d2: CarterDiagram) -> dict[int, int] | None:
    """Backtracking search for a vertex bijection preserving adjacency."""
    n = d1.vertex_count
    if n != d2.vertex_count or len(d1.edges) != len(d2.edges):
        return None
    a1, a2 = d1.adjacency(), d2.adjacency()
    s1 = [_signature(a1, v) for v in range(n)]
    s2 = [_signature(a2, v) for v in range(n)]
    if sorted(s1) != sorted(s2):
        return None

    # visit vertices so that each one after the first touches a mapped vertex when possible
    order: list[int] = []
    remaining = set(range(n))
    while remaining:
        best = max(
            remaining,
            key=lambda v: (sum(w in order for w in a1[v]), s1[v], -v),
        )
        order.append(best)
        remaining.discard(best)

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        for u in range(n):
            if u in used or s2[u] != s1[v]:
                continue
            if any((mapping[w] in a2[u]) != (w in a1[v]) for w in mapping):
                continue
            mapping[v] = u
            used.add(u)
            if extend(k + 1):
                return True
            del mapping[v]
            used.discard(u)
        return False

    return dict(mapping) if extend(0) else None


def diagrams_isomorphic(d1: CarterDiagram, d2: CarterDiagram) -> bool:
    return find_isomorphism(d1, d2) is not None
