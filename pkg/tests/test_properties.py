from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from slgrs import linalg as la
from slgrs.acceptance import hurwitz_variant, weyl_word
from slgrs.carter import realize
from slgrs.cartan_types import standard_grs, standard_presentations
from slgrs.catalog import catalog
from slgrs.grs import LatticeMap, euler_form, is_morphism, new_grs, radical, preserves_form
from slgrs.weyl import check_axioms, enumerate_roots

NAMES = catalog().names()
ALL2 = new_grs([[2, 2, 2]] * 3)


@st.composite
def cartan_data(draw, n_max=5):
    n = draw(st.integers(1, n_max))
    m = [[2] * n for _ in range(n)]
    for i in range(n):
        for j in range(i):
            m[i][j] = m[j][i] = draw(st.integers(-2, 2))
    return new_grs(m)


@given(st.sampled_from(NAMES), st.integers(0, 10**6))
def test_euler_form_transforms_under_re_presentation(name, seed):
    # Hurwitz moves and sign flips give P^T X P as the Euler form of the new basis
    g = realize(name)
    h, p = hurwitz_variant(g, random.Random(seed))
    assert la.matmul(la.matmul(la.transpose(p), euler_form(g)), p) == euler_form(h)


@given(cartan_data(), st.integers(0, 10**6))
def test_weyl_words_preserve_the_form(g, seed):
    w = weyl_word(g, random.Random(seed), 7)
    assert preserves_form(g, w)
    assert abs(la.det_exact(w)) == 1


@given(st.sampled_from(standard_presentations(7)), st.data())
def test_only_unit_multiples_of_roots(g, data):
    roots = enumerate_roots(g)
    a = data.draw(st.sampled_from(roots.roots))
    for k in range(-3, 4):
        assert (tuple(k * x for x in a) in roots) == (k in (1, -1))


@pytest.mark.parametrize("g", standard_presentations(7), ids=lambda g: g.label)
def test_axioms_for_standard_types(g):
    rep = check_axioms(g)
    assert rep.ok, rep.failed()


@given(st.lists(st.integers(-1, 1), min_size=3, max_size=3))
def test_morphism_kernel_lies_in_radical(row):
    phi = LatticeMap((tuple(row),), ALL2, standard_grs("A", 1))
    rep = is_morphism(phi)
    if rep.ok:
        for v in la.integer_kernel(phi.matrix, 3).vectors:
            assert la.matvec(ALL2.cartan, v) == (0, 0, 0)
    # only the maps sending every basis root to the same +-beta qualify
    assert rep.ok == (row in ([1, 1, 1], [-1, -1, -1]))


@given(cartan_data(4))
def test_radical_is_kernel_of_cartan(g):
    for v in radical(g).vectors:
        assert la.matvec(g.cartan, v) == (0,) * g.rank
    assert radical(g).rank == g.rank - la.rank(g.cartan)
