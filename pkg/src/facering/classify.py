"""Pure-resolution classification of flag complexes.

A flag complex with a pure resolution is 1-Leray, a cycle joined with a
simplex, or a cross-polytope boundary joined with a simplex.  The 4-cycle is
both a cycle and the square cross polytope; it is reported as the latter.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum

from .cm import strip_cone_points
from .complex import SimplicialComplex, clique_complex, cross_polytope_boundary, cycle, members, simplex
from .homology import GF2, FieldSpec
from .hochster import ResourceLimit, shift_profile, subset_sweep


class NotFlag(ValueError):
    pass


class Category(str, Enum):
    ONE_LERAY = "OneLeray"
    CYCLE_JOIN_SIMPLEX = "CycleJoinSimplex"
    CROSS_POLYTOPE_JOIN_SIMPLEX = "CrossPolytopeJoinSimplex"
    NOT_PURE = "NotPure"
    UNCLASSIFIED = "Unclassified"  # a pure flag complex outside all three families


@dataclass(frozen=True)
class FlagClassification:
    category: Category
    simplex_dim: int = -1
    cycle_length: int | None = None
    s: int | None = None
    cone_vertices: tuple[int, ...] = ()
    core_vertices: tuple[int, ...] = ()
    note: str = ""

    def describe(self) -> str:
        c = self.category
        if c is Category.CYCLE_JOIN_SIMPLEX:
            return f"{c.value}(cycle length {self.cycle_length}, simplex dim {self.simplex_dim})"
        if c is Category.CROSS_POLYTOPE_JOIN_SIMPLEX:
            return f"{c.value}(s={self.s}, simplex dim {self.simplex_dim})"
        return c.value


def _degrees(cx: SimplicialComplex) -> list[int]:
    deg = [0] * cx.n
    for a, b in cx.graph_edges():
        deg[a] += 1
        deg[b] += 1
    return deg


def is_cross_polytope_boundary(cx: SimplicialComplex) -> bool:
    """Flag complex whose non-edges form a perfect matching."""
    n = cx.n
    if n == 0 or n % 2 or not cx.is_flag():
        return False
    return all(x == n - 2 for x in _degrees(cx))


def is_cycle(cx: SimplicialComplex) -> bool:
    if cx.dim != 1 or cx.n < 3:
        return False
    if any(x != 2 for x in _degrees(cx)):
        return False
    # 2-regular; connected iff a single cycle
    from .homology import is_connected
    return is_connected(cx)


def classify_flag(cx: SimplicialComplex, field: FieldSpec = GF2) -> FlagClassification:
    if not cx.is_flag():
        raise NotFlag("classification applies to flag complexes only")
    if cx.n == 0 or cx.is_simplex():
        return FlagClassification(Category.ONE_LERAY, simplex_dim=cx.n - 1,
                                  cone_vertices=tuple(range(cx.n)))
    prof = shift_profile(cx, field)
    if not prof.is_pure:
        return FlagClassification(Category.NOT_PURE)
    core, apex = strip_cone_points(cx)
    sdim = len(apex) - 1
    core_vs = tuple(v for v in range(cx.n) if v not in apex)
    if prof.regularity <= 1:
        return FlagClassification(Category.ONE_LERAY, sdim, cone_vertices=apex, core_vertices=core_vs)
    assert core is not None
    if is_cross_polytope_boundary(core):
        note = "4-cycle: also CycleJoinSimplex(4)" if core.n == 4 else ""
        return FlagClassification(Category.CROSS_POLYTOPE_JOIN_SIMPLEX, sdim, s=core.n // 2,
                                  cone_vertices=apex, core_vertices=core_vs, note=note)
    if is_cycle(core):
        return FlagClassification(Category.CYCLE_JOIN_SIMPLEX, sdim, cycle_length=core.n,
                                  cone_vertices=apex, core_vertices=core_vs)
    return FlagClassification(Category.UNCLASSIFIED, sdim, cone_vertices=apex, core_vertices=core_vs)


# -- exhaustive certification -------------------------------------------------------

EXHAUSTIVE_LIMIT = 7


def flag_complexes(n_max: int):
    """Clique complexes of all graphs on 1..n_max vertices, one per isomorphism class."""
    if n_max <= EXHAUSTIVE_LIMIT:
        import networkx as nx
        for g in nx.graph_atlas_g():
            k = g.number_of_nodes()
            if 1 <= k <= n_max:
                yield clique_complex(k, g.edges())
        return
    yield from (clique_complex(k, e) for k, e in _graphs_by_augmentation(n_max))


def _graphs_by_augmentation(n_max: int):
    """Non-isomorphic graphs by vertex augmentation; used only past the atlas."""
    import networkx as nx
    from networkx.algorithms.graph_hashing import weisfeiler_lehman_graph_hash
    level = [nx.empty_graph(1)]
    for k in range(1, n_max + 1):
        if k > 1:
            buckets: dict[str, list] = {}
            nxt = []
            for g in level:
                for nbrs in range(1 << (k - 1)):
                    h = g.copy()
                    h.add_node(k - 1)
                    h.add_edges_from((k - 1, v) for v in members(nbrs))
                    key = weisfeiler_lehman_graph_hash(h)
                    bucket = buckets.setdefault(key, [])
                    if any(nx.is_isomorphic(h, o) for o in bucket):
                        continue
                    bucket.append(h)
                    nxt.append(h)
            level = nxt
        for g in level:
            yield k, list(g.edges())


@dataclass
class CertificationRecord:
    n_max: int
    field: str
    complexes_checked: int = 0
    pure: int = 0
    categories: dict[str, int] = field(default_factory=dict)
    unclassified: list[list[tuple[int, ...]]] = field(default_factory=list)
    witness_failures: list[list[tuple[int, ...]]] = field(default_factory=list)
    constructions_checked: int = 0
    construction_failures: list[str] = field(default_factory=list)
    elapsed_s: float = 0.0

    @property
    def certified(self) -> bool:
        return not (self.unclassified or self.witness_failures or self.construction_failures)


def _witness_ok(cx: SimplicialComplex, field: FieldSpec) -> bool:
    """Some induced subcomplex on ``Q_1 + 1`` vertices has nonzero first homology."""
    prof = shift_profile(cx, field)
    if len(prof.upper_skips) < 2:
        return False
    size = prof.upper_skips[1] + 1
    if size > cx.n:
        return False
    sw = subset_sweep(cx, field)
    return cx.d > 1 and sw.sums[1][size] > 0


def pure_flag_exhaustive(n_max: int, field: FieldSpec = GF2, *, force: bool = False,
                         construction_max: int = 9) -> CertificationRecord:
    """Check the flag classification on every flag complex with at most ``n_max`` vertices.

    Also checks the converse on constructed joins with at most ``construction_max``
    vertices.
    """
    if n_max > EXHAUSTIVE_LIMIT and not force:
        raise ResourceLimit(f"n_max={n_max} exceeds {EXHAUSTIVE_LIMIT}; pass force=True (--force on the command line) to run anyway")
    t0 = time.perf_counter()
    rec = CertificationRecord(n_max, field.name)
    for cx in flag_complexes(n_max):
        rec.complexes_checked += 1
        cls = classify_flag(cx, field)
        rec.categories[cls.category.value] = rec.categories.get(cls.category.value, 0) + 1
        if cls.category is Category.NOT_PURE:
            continue
        rec.pure += 1
        if cls.category is Category.UNCLASSIFIED:
            rec.unclassified.append(cx.facet_lists(one_based=True))
        if not cx.is_simplex() and shift_profile(cx, field).regularity > 1 and not _witness_ok(cx, field):
            rec.witness_failures.append(cx.facet_lists(one_based=True))
    for label, cx in join_constructions(construction_max):
        rec.constructions_checked += 1
        if not shift_profile(cx, field).is_pure:
            rec.construction_failures.append(label)
    rec.elapsed_s = time.perf_counter() - t0
    return rec


def join_constructions(max_vertices: int):
    """``cycle(k) * simplex`` and ``cross(s) * simplex`` with at most ``max_vertices`` vertices."""
    for k in range(4, max_vertices + 1):
        base = cycle(k)
        yield f"cycle({k})", base
        for j in range(0, max_vertices - k):
            yield f"cycle({k})*simplex({j})", base.join(simplex(j))
    for s in range(1, max_vertices // 2 + 1):
        base = cross_polytope_boundary(s)
        yield f"cross({s})", base
        for j in range(0, max_vertices - 2 * s):
            yield f"cross({s})*simplex({j})", base.join(simplex(j))
