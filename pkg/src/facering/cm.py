"""Cohen-Macaulay, Gorenstein* and homology-manifold predicates."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .complex import SimplicialComplex, members, popcount
from .homology import GF2, FieldSpec, euler_characteristic, reduced_betti
from .hochster import subset_sweep


def _link_condition(cx: SimplicialComplex, field: FieldSpec, include_empty: bool,
                    sphere: bool) -> bool:
    d = cx.d
    for face in cx.faces():
        if face == 0 and not include_empty:
            continue
        top = d - 1 - popcount(face)
        bv = reduced_betti(cx.link(face), field)
        if any(bv[p] for p in range(-1, top)):
            return False
        if sphere and bv[top] != 1:
            return False
    return True


def is_cohen_macaulay(cx: SimplicialComplex, field: FieldSpec = GF2) -> bool:
    """Reisner's criterion: ``bhat_p(lk F) = 0`` for ``p < d - 1 - |F|`` and every face F."""
    return _link_condition(cx, field, include_empty=True, sphere=False)


def is_gorenstein_star(cx: SimplicialComplex, field: FieldSpec = GF2) -> bool:
    """Every link (including the whole complex) is a homology sphere of the right dimension."""
    if not cx.is_pure():
        return False
    return _link_condition(cx, field, include_empty=True, sphere=True)


def is_homology_manifold(cx: SimplicialComplex, field: FieldSpec = GF2) -> bool:
    """Links of all nonempty faces are homology spheres; requires purity."""
    if not cx.is_pure():
        return False
    return _link_condition(cx, field, include_empty=False, sphere=True)


def is_orientable(cx: SimplicialComplex, field: FieldSpec = GF2) -> bool:
    """Connected homology manifold with top reduced homology of rank one."""
    if not is_homology_manifold(cx, field):
        return False
    bv = reduced_betti(cx, field)
    return bv[0] == 0 and bv[cx.d - 1] == 1


def cone_points(cx: SimplicialComplex) -> tuple[int, ...]:
    """Vertices contained in every facet."""
    common = cx.vertex_mask
    for f in cx.facets:
        common &= f
    return members(common)


def strip_cone_points(cx: SimplicialComplex) -> tuple[SimplicialComplex | None, tuple[int, ...]]:
    """Split ``cx = core * simplex``; ``core`` is None when ``cx`` is a simplex."""
    apex = cone_points(cx)
    if len(apex) == cx.n:
        return None, apex
    rest = cx.vertex_mask & ~sum(1 << v for v in apex)
    return cx.induced(rest), apex


def is_gorenstein(cx: SimplicialComplex, field: FieldSpec = GF2) -> bool:
    """Join of a simplex and a Gorenstein* complex (a simplex counts as Gorenstein)."""
    core, _ = strip_cone_points(cx)
    return core is None or is_gorenstein_star(core, field)


def dehn_sommerville_defect(cx: SimplicialComplex, k: int) -> int:
    """``h_{d-k} - h_k - (-1)^k C(d,k) (chi - (1 + (-1)^{d-1}))``; zero on homology manifolds."""
    d = cx.d
    if not 0 <= k <= d:
        raise ValueError(f"k={k} outside 0..{d}")
    h = cx.h_vector()
    chi = euler_characteristic(cx)
    return h[d - k] - h[k] - (-1) ** k * comb(d, k) * (chi - (1 + (-1) ** (d - 1)))


# -- CM connectivity ------------------------------------------------------------

def _projdim_table(cx: SimplicialComplex, field: FieldSpec, skeleton: int) -> tuple[list[int], list[int]]:
    """For every mask W: homological index bound and dimension of ``Skel_i(Gamma)[W]``.

    ``g[W]`` is the largest ``|U| - 1 - p`` with ``bhat_p(Skel_i Gamma[U]) != 0``
    over all ``U <= W``; by Hochster's formula this is the projective dimension
    of the face ring of ``Skel_i(Gamma)[W]``.
    """
    sw = subset_sweep(cx, field, records=True)
    n = cx.n
    size = 1 << n
    g = [-1] * size
    dims = [-1] * size
    for w in range(1, size):
        counts, ranks = sw.records[w]
        top = len(counts) - 2
        while top >= 0 and counts[top + 1] == 0:
            top -= 1
        top = min(top, skeleton)
        dims[w] = top
        # trailing 0: a skeleton has no boundary map above its top dimension
        r = [1] + [ranks[k] for k in range(1, top + 1)] + [0]
        card = popcount(w)
        best = -1
        for p in range(top + 1):
            if counts[p + 1] - r[p] - r[p + 1]:
                best = max(best, card - 1 - p)
        g[w] = best
    # subset-maximum transform
    for v in range(n):
        bit = 1 << v
        for w in range(size):
            if w & bit and g[w ^ bit] > g[w]:
                g[w] = g[w ^ bit]
    return g, dims


def is_i_cm(cx: SimplicialComplex, i: int, field: FieldSpec = GF2, *, skeleton: int | None = None) -> bool:
    """``Gamma[W]`` is CM of full dimension for every ``|W| > n - i``.

    With ``skeleton`` given, the test runs on ``Skel_skeleton(Gamma)``.
    Each ``Gamma[W]`` is checked through its own induced subcomplexes.
    """
    sk = cx.dim if skeleton is None else skeleton
    g, dims = _projdim_table(cx, field, sk)
    target = min(sk, cx.dim)
    return _is_j_cm(cx.n, g, dims, target, i)


def _is_j_cm(n: int, g: list[int], dims: list[int], target_dim: int, j: int) -> bool:
    for w in range(1, 1 << n):
        if popcount(w) > n - j:
            if dims[w] != target_dim:
                return False
            if g[w] > popcount(w) - (target_dim + 1):
                return False
    return True


def connectivity_sequence(cx: SimplicialComplex, field: FieldSpec = GF2) -> tuple[int, ...]:
    """``(q_0, ..., q_{d-1})``: q_i is the largest j with ``Skel_i`` j-CM (0 if not even CM)."""
    n = cx.n
    out = []
    for i in range(cx.d):
        g, dims = _projdim_table(cx, field, i)
        target = min(i, cx.dim)
        # the largest size s at which some W fails; q_i = n - s
        worst = 0
        for w in range(1, 1 << n):
            s = popcount(w)
            if s <= worst:
                continue
            if dims[w] != target or g[w] > s - (target + 1):
                worst = s
        out.append(n - worst)
    return tuple(out)


def is_cm_by_links_of_induced(cx: SimplicialComplex, w: int, field: FieldSpec = GF2) -> bool:
    """Reisner's criterion applied to ``Gamma[w]``; slow reference for :func:`is_i_cm`."""
    return is_cohen_macaulay(cx.induced(w), field)


@dataclass(frozen=True)
class CMSummary:
    field: FieldSpec
    cohen_macaulay: bool
    gorenstein_star: bool
    gorenstein: bool
    homology_manifold: bool
    orientable: bool


def cm_summary(cx: SimplicialComplex, field: FieldSpec = GF2) -> CMSummary:
    return CMSummary(field, is_cohen_macaulay(cx, field), is_gorenstein_star(cx, field),
                     is_gorenstein(cx, field), is_homology_manifold(cx, field),
                     is_orientable(cx, field))
