from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from facering.classify import (
    Category, NotFlag, classify_flag, flag_complexes, join_constructions, pure_flag_exhaustive,
)
from facering.complex import clique_complex, cross_polytope_boundary, cycle, path, simplex
from facering.hochster import ResourceLimit, shift_profile


def test_four_cycle_tie_break():
    c = classify_flag(cycle(4))
    assert c.category is Category.CROSS_POLYTOPE_JOIN_SIMPLEX
    assert (c.s, c.simplex_dim) == (2, -1)
    assert "CycleJoinSimplex" in c.note


def test_six_cycle():
    c = classify_flag(cycle(6))
    assert c.category is Category.CYCLE_JOIN_SIMPLEX
    assert (c.cycle_length, c.simplex_dim) == (6, -1)
    p = shift_profile(cycle(6))
    assert p.m == p.M == (2, 3, 4, 6)


def test_path_is_one_leray():
    assert classify_flag(path(3)).category is Category.ONE_LERAY


def test_not_pure():
    # the 5-cycle with one chord has an impure resolution
    cx = clique_complex(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    assert classify_flag(cx).category is Category.NOT_PURE


def test_non_flag_rejected():
    with pytest.raises(NotFlag):
        classify_flag(cycle(3))


def test_join_records_partition():
    c = classify_flag(cycle(5).join(simplex(1)))
    assert c.category is Category.CYCLE_JOIN_SIMPLEX
    assert c.cone_vertices == (5, 6) and c.core_vertices == (0, 1, 2, 3, 4)


@pytest.mark.parametrize("base", [cycle(4), cycle(5), cycle(7), cross_polytope_boundary(3), path(4)],
                         ids=["c4", "c5", "c7", "oct", "p4"])
@given(k=st.integers(0, 2))
def test_join_with_simplex_shifts_simplex_dim(base, k):
    a, b = classify_flag(base), classify_flag(base.join(simplex(k)))
    assert a.category == b.category
    if a.category is not Category.ONE_LERAY:
        assert b.simplex_dim == a.simplex_dim + k + 1


def test_atlas_counts():
    # graphs up to isomorphism on 1..4 vertices: 1 + 2 + 4 + 11
    assert sum(1 for _ in flag_complexes(4)) == 18


@pytest.mark.parametrize("n_max", [4, 5, 6])
def test_certified(n_max):
    rec = pure_flag_exhaustive(n_max)
    assert rec.certified
    assert rec.categories.get("Unclassified", 0) == 0


def test_six_vertices_include_octahedron_and_hexagon():
    rec = pure_flag_exhaustive(6)
    assert rec.categories["CrossPolytopeJoinSimplex"] == 4  # 4-cycle, +pt, +edge, octahedron
    assert rec.categories["CycleJoinSimplex"] == 3  # 5-cycle, +pt, 6-cycle


def test_budget():
    with pytest.raises(ResourceLimit):
        pure_flag_exhaustive(8)


def test_constructions_are_pure():
    for label, cx in join_constructions(9):
        assert shift_profile(cx).is_pure, label


def test_one_leray_flag_shifts():
    for cx in flag_complexes(6):
        if cx.is_simplex():
            continue
        p = shift_profile(cx)
        if p.regularity <= 1:
            assert p.m == p.M == tuple(i + 1 for i in range(1, p.length + 1))
