"""Face rings of simplicial complexes: Betti tables, shifts and multiplicity bounds."""

from __future__ import annotations

__version__ = "0.1.0"

from .complex import (  # noqa: E402
    ComplexError, EmptyVertexSet, FaceNotInComplex, GhostVertex, SimplicialComplex, VertexOutOfRange,
    boundary_of_simplex, clique_complex, cross_polytope_boundary, cycle, cyclic_polytope_boundary,
    from_facets, example_seven, path, projective_plane_six, simplex, torus_seven,
)
from .homology import GF2, GF3, MULTI_FIELDS, QQ, BettiVector, FieldSpec, boundary_matrix, reduced_betti  # noqa: E402
from .hochster import (  # noqa: E402
    BettiTable, ResourceLimit, ShiftProfile, ZeroIdeal, averaged_betti, betti_table, hochster_is_cm,
    is_pure_resolution, is_quasi_pure, is_t_leray, regularity, shift_profile, subset_sweep,
)
from .cm import (  # noqa: E402
    cm_summary, connectivity_sequence, dehn_sommerville_defect, is_cohen_macaulay, is_gorenstein,
    is_gorenstein_star, is_homology_manifold, is_i_cm, is_orientable,
)
from .bounds import (  # noqa: E402
    bound_report, connectivity_lower_bound, cramer_facet_count, skip_expression, facet_gap_ratio, pure_multiplicity_formula_holds,
    multiplicity, skip_coefficients,
)
from .classify import Category, FlagClassification, NotFlag, classify_flag, pure_flag_exhaustive  # noqa: E402

__all__ = [name for name in dir() if not name.startswith("_")]
