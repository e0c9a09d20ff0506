from __future__ import annotations

import random
from fractions import Fraction
from math import comb, factorial, prod

import pytest
from hypothesis import assume, given

import oracle
from conftest import complexes
from facering.complex import (
    boundary_of_simplex, cross_polytope_boundary, cycle, cyclic_polytope_boundary, from_facets,
    example_seven, path, simplex,
)
from facering.homology import GF2, GF3, QQ, reduced_betti
from facering.hochster import (
    ResourceLimit, ZeroIdeal, _CACHE, averaged_betti, betti_table, default_budget, hochster_is_cm,
    induced_betti, is_t_leray, regularity, shift_profile, subset_sweep,
)
from facering.sweep import random_pure_complex


def not_simplex(cx):
    return cx.n > 0 and not cx.is_simplex()


def test_four_cycle_table():
    t = betti_table(cycle(4))
    assert t.entries == {(1, 2): 2, (2, 4): 1}
    p = shift_profile(cycle(4))
    assert p.m == p.M == (2, 4)
    assert p.upper_skips == (1, 3)


def test_disjoint_edges_table():
    t = betti_table(from_facets(4, [(0, 1), (2, 3)]))
    assert t.entries == {(1, 2): 4, (2, 3): 4, (3, 4): 1}


def test_example_seven_shifts():
    p = shift_profile(example_seven())
    assert p.m == p.M == (3, 4, 6, 7)
    assert p.lower_skips == (1, 2, 5)
    assert p.upper_bound == p.lower_bound == 21


def test_cyclic_four_eight_shifts():
    p = shift_profile(cyclic_polytope_boundary(4, 8))
    assert p.m == p.M == (3, 4, 5, 8)


def test_octahedron_shifts():
    p = shift_profile(cross_polytope_boundary(3))
    assert p.m == p.M == (2, 4, 6)


def test_three_cycle_plus_vertex_goes_flat_past_codim():
    p = shift_profile(from_facets(4, [(0, 1), (1, 2), (0, 2), (3,)]))
    assert p.M == (3, 4, 4)
    assert p.codim == 2 and p.M[0] < p.M[1]


def test_regularity():
    assert regularity(path(3)) == 1
    assert regularity(cycle(5)) == 2
    assert regularity(simplex(3)) == 0
    assert is_t_leray(path(4), 1)


def test_simplex_has_zero_ideal():
    with pytest.raises(ZeroIdeal):
        shift_profile(simplex(2))
    assert betti_table(simplex(2)).length == 0


def test_table_grid_and_format():
    t = betti_table(cycle(4))
    assert t.as_grid() == [[1, 0, 0], [0, 2, 0], [0, 0, 1]]
    assert "2" in t.format()


def test_budget():
    assert default_budget(GF2) == 20 and default_budget(QQ) == 14 and default_budget(GF3) == 16
    with pytest.raises(ResourceLimit):
        subset_sweep(cycle(9), GF2, budget=8)


def test_averaged_betti():
    assert averaged_betti(cycle(4), 1, 4) == 1
    assert averaged_betti(cycle(4), 0, 2) == Fraction(2, 6)
    with pytest.raises(ValueError):
        averaged_betti(cycle(4), 0, 0)


@given(complexes(n_max=5))
def test_table_matches_reference(cx):
    assume(not_simplex(cx))
    for field in (GF2, QQ):
        assert betti_table(cx, field).entries == oracle.betti_table(cx.n, cx.facet_lists(), field.characteristic)


@given(complexes())
def test_hochster_average_consistency(cx):
    t = betti_table(cx)
    for p in range(cx.d):
        for m in range(1, cx.n + 1):
            assert t[m - p - 1, m] == comb(cx.n, m) * averaged_betti(cx, p, m)


@given(complexes())
def test_records_match_direct_homology(cx):
    sw = subset_sweep(cx, GF2, records=True)
    for w in range(1, 1 << cx.n):
        assert list(induced_betti(sw, w)) == list(reduced_betti(cx.induced(w)))


@given(complexes())
def test_max_shifts_increase(cx):
    assume(not_simplex(cx))
    p = shift_profile(cx)
    for i in range(min(p.codim, len(p.M)) - 1):
        assert p.M[i + 1] > p.M[i]


@given(complexes())
def test_product_skip_duality(cx):
    assume(not_simplex(cx))
    p = shift_profile(cx)
    assert len(p.upper_skips) == cx.d and p.upper_skips[0] == 1
    assert prod(p.M[:p.codim]) * prod(p.upper_skips) == factorial(cx.n)


@given(complexes())
def test_link_shifts_bounded(cx):
    assume(not_simplex(cx))
    p = shift_profile(cx)
    for face in cx.faces():
        if face == 0:
            continue
        lk = cx.link(face)
        if not not_simplex(lk):
            continue
        lp = shift_profile(lk)
        for i in range(min(lp.codim, len(lp.M))):
            assert lp.M[i] <= p.M[i]


@given(complexes())
def test_lower_skip_count(cx):
    assume(not_simplex(cx))
    p = shift_profile(cx)
    assert len(p.lower_skips) == cx.n - p.length


def test_worker_count_does_not_change_result():
    cx = random_pure_complex(random.Random(3), 10, 2, 30)
    results = []
    for w in (1, 2, 3):
        _CACHE.clear()
        sw = subset_sweep(cx, GF2, workers=w)
        results.append((sw.sums, sw.witness))
    assert results[0] == results[1] == results[2]


def test_hochster_cm_examples():
    assert hochster_is_cm(boundary_of_simplex(3))
    assert not hochster_is_cm(from_facets(4, [(0, 1), (2, 3)]))
    assert hochster_is_cm(cycle(6), GF3)
