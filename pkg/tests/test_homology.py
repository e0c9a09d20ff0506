from __future__ import annotations

import pytest
from hypothesis import given

import oracle
from conftest import complexes
from facering.complex import (
    boundary_of_simplex, cross_polytope_boundary, cycle, from_facets, projective_plane_six, simplex, torus_seven,
)
from facering.homology import GF2, GF3, MULTI_FIELDS, QQ, FieldSpec, boundary_matrix, euler_characteristic, reduced_betti


def test_field_parse():
    assert FieldSpec.parse("Q") == QQ
    assert FieldSpec.parse("3") == GF3
    with pytest.raises(ValueError):
        FieldSpec.parse("4")


def test_four_cycle():
    assert list(reduced_betti(cycle(4))) == [0, 0, 1]


def test_two_points():
    assert list(reduced_betti(from_facets(2, [(0,), (1,)]))) == [0, 1]


def test_empty_complex():
    assert list(reduced_betti(from_facets(0, []))) == [1]


@pytest.mark.parametrize("field", MULTI_FIELDS, ids=str)
@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_sphere(d, field):
    bv = reduced_betti(boundary_of_simplex(d), field)
    assert bv[d - 1] == 1 and sum(bv) == 1


def test_projective_plane_is_field_sensitive():
    rp2 = projective_plane_six()
    assert list(reduced_betti(rp2, GF2)) == [0, 0, 1, 1]
    assert list(reduced_betti(rp2, GF3)) == [0, 0, 0, 0]
    assert list(reduced_betti(rp2, QQ)) == [0, 0, 0, 0]


def test_torus():
    for f in MULTI_FIELDS:
        assert list(reduced_betti(torus_seven(), f)) == [0, 0, 2, 1]


def test_cross_polytope_sphere():
    assert list(reduced_betti(cross_polytope_boundary(3), QQ)) == [0, 0, 0, 1]


@pytest.mark.parametrize("field", MULTI_FIELDS, ids=str)
@given(cx=complexes())
def test_matches_reference(cx, field):
    ref = oracle.reduced_betti(oracle.all_faces(cx.facet_lists()), field.characteristic)
    assert list(reduced_betti(cx, field)) == ref


@given(complexes())
def test_euler_poincare(cx):
    d = cx.d
    f = cx.f_vector()
    for field in MULTI_FIELDS:
        bv = reduced_betti(cx, field)
        lhs = sum((-1) ** (d - i - 1) * f[i + 1] for i in range(-1, d))
        rhs = sum((-1) ** (d - i - 1) * bv[i] for i in range(0, d))
        assert lhs == rhs


@given(complexes(n_max=5))
def test_cone_is_acyclic(cx):
    for field in MULTI_FIELDS:
        assert reduced_betti(cx.cone(), field).is_zero()


@given(complexes())
def test_alternating_sum_is_field_independent(cx):
    sums = {reduced_betti(cx, f).alternating_sum() for f in MULTI_FIELDS}
    assert len(sums) == 1
    assert sums.pop() == euler_characteristic(cx) - 1


@given(complexes())
def test_boundary_squared_is_zero(cx):
    for k in range(1, cx.dim + 1):
        lo = boundary_matrix(cx, k - 1, QQ)
        hi = boundary_matrix(cx, k, QQ)
        for c in range(len(hi.col_faces)):
            for r in range(len(lo.row_faces)):
                assert sum(lo.entries[r][t] * hi.entries[t][c] for t in range(len(hi.row_faces))) == 0


def test_boundary_matrix_signs():
    bm = boundary_matrix(simplex(2), 2, QQ)
    # [012] -> [12] - [02] + [01]; rows in mask order 01, 02, 12
    assert bm.row_faces == (0b011, 0b101, 0b110)
    assert [row[0] for row in bm.entries] == [1, -1, 1]
    assert boundary_matrix(simplex(2), 2, GF3).entries[1][0] == 2
