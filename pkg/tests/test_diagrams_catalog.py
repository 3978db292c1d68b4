from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from slgrs.catalog import E_TYPE_EDGES, catalog, classify_diagram, d_series, d_series_a
from slgrs.diagrams import (
    CarterDiagram,
    cycle,
    diagrams_isomorphic,
    find_isomorphism,
    path,
    star,
)


def brute_isomorphic(d1: CarterDiagram, d2: CarterDiagram) -> bool:
    if d1.vertex_count != d2.vertex_count:
        return False
    for perm in itertools.permutations(range(d1.vertex_count)):
        mapped = {(min(perm[a], perm[b]), max(perm[a], perm[b])) for a, b in d1.edges}
        if mapped == set(d2.edges):
            return True
    return False


@st.composite
def graphs(draw, n):
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return CarterDiagram.from_edges(n, chosen)


def test_isomorphism_examples():
    assert diagrams_isomorphic(path(3), CarterDiagram.from_edges(3, [(0, 2), (2, 1)]))
    assert not diagrams_isomorphic(path(4), cycle(4))
    assert not diagrams_isomorphic(star(3), path(4))


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(graphs(n), graphs(n))))
def test_isomorphism_matches_brute_force(pair):
    d1, d2 = pair
    assert diagrams_isomorphic(d1, d2) == brute_isomorphic(d1, d2)


@given(st.integers(1, 7).flatmap(lambda n: st.tuples(graphs(n), st.permutations(range(n)))))
def test_relabelled_graphs_map_back(pair):
    d, perm = pair
    moved = CarterDiagram.from_edges(d.vertex_count, [(perm[a], perm[b]) for a, b in d.edges])
    m = find_isomorphism(d, moved)
    assert m is not None
    assert {(min(m[a], m[b]), max(m[a], m[b])) for a, b in d.edges} == set(moved.edges)


def test_diagram_rejects_loops():
    with pytest.raises(ValueError):
        CarterDiagram.from_edges(2, [(1, 1)])
    with pytest.raises(ValueError):
        CarterDiagram.from_edges(2, [(0, 2)])


def test_two_coloring():
    assert cycle(3).two_coloring() is None
    assert cycle(4).two_coloring() == [0, 1, 0, 1]


def test_dot_output():
    dot = path(2, "A_2").to_dot()
    assert dot.startswith('graph "A_2" {')
    assert 'node [shape=circle, label=""];' in dot
    assert "v0 -- v1;" in dot and "->" not in dot


def test_catalog_size_and_order():
    cat = catalog()
    assert len(cat) == 39
    assert cat.names()[:8] == [f"A_{n}" for n in range(1, 9)]


def test_catalog_rank_examples():
    cat = catalog()
    assert [n for n, _ in cat.of_rank(1)] == ["A_1"]
    rank6 = {n for n, _ in cat.of_rank(6)}
    assert {"E_6", "E_6(a_1)", "E_6(a_2)"} <= rank6
    assert diagrams_isomorphic(cat["D_4"], star(3))
    assert diagrams_isomorphic(cat["D_4(a_1)"], cycle(4))


def test_catalog_rank_counts():
    counts = {r: len(catalog().of_rank(r)) for r in range(1, 9)}
    assert counts == {1: 1, 2: 1, 3: 1, 4: 3, 5: 3, 6: 7, 7: 9, 8: 14}


def test_catalog_pairwise_distinct():
    entries = catalog().entries
    for (n1, d1), (n2, d2) in itertools.combinations(entries, 2):
        assert not diagrams_isomorphic(d1, d2), (n1, n2)


def test_catalog_dedup_record():
    cat = catalog()
    assert set(cat.collisions) == {
        ("D_5(a_2)", "D_5(a_1)"),
        ("D_6(a_3)", "D_6(a_1)"),
        ("D_7(a_3)", "D_7(a_2)"),
        ("D_7(a_4)", "D_7(a_1)"),
        ("D_8(a_4)", "D_8(a_2)"),
    }
    assert cat.skipped == ("D_4(a_2)", "D_5(a_3)")


def test_d_series_shapes():
    assert diagrams_isomorphic(d_series(4), star(3))
    d = d_series_a(6, 2)
    assert sorted(d.degrees()) == [1, 1, 2, 2, 3, 3]
    assert d_series_a(5, 3) is None


def test_e_entries_match_transcribed_edges():
    cat = catalog()
    for name, edges in E_TYPE_EDGES.items():
        assert len(cat[name].edges) == len(edges)
    # the cube: 8 vertices, 12 edges, 3-regular
    assert cat["E_8(a_8)"].degrees() == [3] * 8


def test_classify_examples():
    assert classify_diagram(path(3)) == "A_3"
    assert classify_diagram(cycle(4)) == "D_4(a_1)"
    assert classify_diagram(cycle(3)) is None
    assert classify_diagram(cycle(6)) is None


def test_every_entry_classifies_to_itself():
    for name, d in catalog().entries:
        relabelled = CarterDiagram.from_edges(
            d.vertex_count, [(d.vertex_count - 1 - a, d.vertex_count - 1 - b) for a, b in d.edges]
        )
        assert classify_diagram(relabelled) == name
