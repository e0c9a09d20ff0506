"""Seeded random complexes and the invariant battery run over them.

Random model: pick ``n`` and a dimension ``k``, choose ``f`` distinct
``k``-faces of ``[n]`` uniformly, then add a singleton facet for every vertex
left uncovered.  Everything is driven by one ``random.Random(seed)`` so the
same arguments always give the same summary text.
"""

from __future__ import annotations

import json
import random
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, factorial, prod
from typing import Callable, Iterable

from .bounds import (
    InconsistentResult, bound_report, connectivity_lower_bound, cramer_facet_count, facet_gap_ratio,
    multiplicity, skip_averages_vanish, upper_bound_from_skips,
)
from .cm import connectivity_sequence, is_cohen_macaulay, is_gorenstein_star
from .complex import (
    SimplicialComplex, boundary_of_simplex, cross_polytope_boundary, cycle, cyclic_polytope_boundary,
    from_facets, example_seven, path, projective_plane_six, simplex, torus_seven,
)
from .homology import GF2, GF3, FieldSpec, reduced_betti
from .hochster import hochster_is_cm, shift_profile

INVARIANTS = (
    "h_sum",
    "euler_poincare",
    "cone_acyclic",
    "field_independent_euler",
    "upper_bound",
    "lower_bound_cm",
    "skip_sign_equivalence",
    "u_skip_identity",
    "product_skip_duality",
    "max_shifts_increase",
    "cramer_identity",
    "vanishing_averages_force_cm_pure",
    "three_dim_upper_bound",
    "large_first_shift_upper_bound",
    "link_shifts_bounded",
    "reisner_vs_hochster",
    "cm_lower_skips",
    "cm_h_nonnegative",
    "cm_connectivity_decreasing",
    "connectivity_bound_sign",
    "gorenstein_star_is_cm",
    "pure_multiplicity_formula",
)
AGGREGATE_INVARIANTS = ("facet_gap_ratio_constant", "facet_gap_ratio_positive")
BOUND_INVARIANTS = ("upper_bound", "lower_bound_cm")


# -- random model -------------------------------------------------------------------

def random_pure_complex(rng: random.Random, n: int, dim: int, facets: int | None = None) -> SimplicialComplex:
    """``facets`` distinct ``dim``-faces of ``[n]`` (uniform count if omitted) plus singletons."""
    if not 0 <= dim < n:
        raise ValueError(f"need 0 <= dim < n, got dim={dim}, n={n}")
    pool = list(combinations(range(n), dim + 1))
    f = rng.randint(1, len(pool)) if facets is None else facets
    if not 1 <= f <= len(pool):
        raise ValueError(f"facet count {f} outside 1..{len(pool)}")
    chosen = rng.sample(pool, f)
    covered = {v for face in chosen for v in face}
    chosen += [(v,) for v in range(n) if v not in covered]
    return from_facets(n, chosen)


def random_complexes(seed: int, count: int, n_range: tuple[int, int], dim_range: tuple[int, int],
                     facets: int | None = None) -> Iterable[tuple[random.Random, SimplicialComplex]]:
    rng = random.Random(seed)
    lo_n, hi_n = n_range
    lo_d, hi_d = dim_range
    if lo_n < 1 or lo_n > hi_n or lo_d < 0 or lo_d > hi_d:
        raise ValueError(f"bad ranges n={n_range} dim={dim_range}")
    if lo_d >= hi_n:
        raise ValueError(f"dimension {lo_d} needs more than {hi_n} vertices")
    for _ in range(count):
        n = rng.randint(max(lo_n, lo_d + 1), hi_n)
        dim = rng.randint(lo_d, min(hi_d, n - 1))
        f = facets if facets is None or facets <= comb(n, dim + 1) else comb(n, dim + 1)
        yield rng, random_pure_complex(rng, n, dim, f)


def generator_suite() -> list[tuple[str, SimplicialComplex]]:
    """Named complexes from every generator, small enough for the full battery."""
    out = [("example7", example_seven()), ("rp2", projective_plane_six()), ("torus7", torus_seven()),
           ("cyclic:4:8", cyclic_polytope_boundary(4, 8)), ("cyclic:4:7", cyclic_polytope_boundary(4, 7)),
           ("cyclic:2:6", cyclic_polytope_boundary(2, 6)), ("cyclic:3:7", cyclic_polytope_boundary(3, 7)),
           ("three-cycle+vertex", from_facets(4, [(0, 1), (1, 2), (0, 2), (3,)]))]
    out += [(f"simplex:{d}", simplex(d)) for d in range(0, 4)]
    out += [(f"boundary:{d}", boundary_of_simplex(d)) for d in range(1, 6)]
    out += [(f"cross:{s}", cross_polytope_boundary(s)) for s in range(1, 5)]
    out += [(f"cycle:{k}", cycle(k)) for k in range(3, 9)]
    out += [(f"path:{k}", path(k)) for k in range(2, 7)]
    return out


# -- the battery ----------------------------------------------------------------------

def _sizes_for_cramer(rng: random.Random, n: int, d: int, true_skips: tuple[int, ...], want: int = 3) -> list[tuple[int, ...]]:
    """Up to ``want`` distinct increasing size vectors in ``2..n``, true skips first when usable."""
    k = d - 1
    total = comb(n - 1, k)
    out: list[tuple[int, ...]] = []
    if true_skips and len(true_skips) == k and (k == 0 or true_skips[0] >= 2):
        out.append(tuple(true_skips))
    if total <= want + 1:
        for r in combinations(range(2, n + 1), k):
            if r not in out:
                out.append(r)
        return out
    while len(out) < want:
        r = tuple(sorted(rng.sample(range(2, n + 1), k)))
        if r not in out:
            out.append(r)
    return out


@dataclass
class InstanceResult:
    label: str
    n: int
    dim: int
    checks: dict[str, bool | None]
    facet_gaps: list[tuple[tuple[int, int, int, int], Fraction | None, bool]] = field(default_factory=list)


def _simplex_like(cx: SimplicialComplex) -> bool:
    return cx.n == 0 or cx.is_simplex()


def check_complex(cx: SimplicialComplex, field: FieldSpec = GF2, rng: random.Random | None = None,
                  label: str = "") -> InstanceResult:
    """Run every applicable invariant on one complex; ``None`` marks not applicable."""
    rng = rng or random.Random(0)
    n, d = cx.n, cx.d
    c: dict[str, bool | None] = dict.fromkeys(INVARIANTS)
    f = cx.f_vector()
    h = cx.h_vector()
    bv = reduced_betti(cx, field)
    e = multiplicity(cx)

    c["h_sum"] = sum(h) == f[-1]
    lhs = sum((-1) ** (d - i - 1) * f[i + 1] for i in range(-1, d))
    rhs = sum((-1) ** (d - i - 1) * bv[i] for i in range(0, d))
    c["euler_poincare"] = lhs == rhs
    c["cone_acyclic"] = reduced_betti(cx.cone(), field).is_zero()
    c["field_independent_euler"] = (reduced_betti(cx, GF2).alternating_sum()
                                    == reduced_betti(cx, GF3).alternating_sum() == bv.alternating_sum())

    cm = is_cohen_macaulay(cx, field)
    c["reisner_vs_hochster"] = cm == hochster_is_cm(cx, field)
    c["gorenstein_star_is_cm"] = (not is_gorenstein_star(cx, field)) or cm
    if cm:
        c["cm_h_nonnegative"] = all(x >= 0 for x in h)
        q = connectivity_sequence(cx, field)
        c["cm_connectivity_decreasing"] = q[0] == n and all(a > b for a, b in zip(q, q[1:]))
        try:
            connectivity_lower_bound(cx, field)
            c["connectivity_bound_sign"] = True
        except InconsistentResult:
            c["connectivity_bound_sign"] = False

    res_out = InstanceResult(label, n, cx.dim, c)
    if _simplex_like(cx):
        c["upper_bound"] = e == 1
        c["lower_bound_cm"] = e == 1
        return res_out

    prof = shift_profile(cx, field)
    rep = bound_report(cx, field)
    U = rep.U
    cod = prof.codim
    c["upper_bound"] = rep.upper_holds
    if cm:
        c["lower_bound_cm"] = rep.lower_holds
        c["cm_lower_skips"] = set(prof.lower_skips) == {n - qi + 1 for qi in q}
        if prof.is_pure:
            c["pure_multiplicity_formula"] = Fraction(e) == prof.lower_bound
    lhs7 = rep.skip_expression
    c["skip_sign_equivalence"] = ((lhs7 >= 0) == (e <= U)) and (lhs7 != 0 or e == U)
    c["u_skip_identity"] = U == upper_bound_from_skips(prof)
    c["product_skip_duality"] = Fraction(prod(prof.M[:cod])) == Fraction(factorial(n), prod(prof.upper_skips))
    c["max_shifts_increase"] = all(prof.M[i + 1] > prof.M[i] for i in range(min(cod, len(prof.M)) - 1))
    if skip_averages_vanish(cx, field):
        c["vanishing_averages_force_cm_pure"] = cm and prof.is_pure
    if cx.dim == 3:
        c["three_dim_upper_bound"] = e <= U and (e != U or (cm and prof.is_pure))
    if prof.M[0] >= d - 1:
        c["large_first_shift_upper_bound"] = e <= U
    c["link_shifts_bounded"] = _link_shifts_ok(cx, prof, field)

    if d >= 2:
        sizes = _sizes_for_cramer(rng, n, d, prof.upper_skips[1:])
        c["cramer_identity"] = all(cramer_facet_count(cx, r, field) == e for r in sizes)
        if cx.dim == 3:
            for r in sizes:
                hc = facet_gap_ratio(cx, r, field)
                res_out.facet_gaps.append(((n,) + tuple(r), hc.ratio, hc.both_zero))
    return res_out


def _link_shifts_ok(cx: SimplicialComplex, prof, field: FieldSpec) -> bool:
    for face in cx.faces():
        if face == 0:
            continue
        lk = cx.link(face)
        if _simplex_like(lk):
            continue
        lp = shift_profile(lk, field)
        top = min(lp.codim, len(lp.M), len(prof.M))
        if any(lp.M[i] > prof.M[i] for i in range(top)):
            return False
    return True


# -- the sweep --------------------------------------------------------------------------

@dataclass
class SweepSummary:
    seed: int
    count: int
    n_range: tuple[int, int]
    dim_range: tuple[int, int]
    fields: tuple[str, ...]
    include_generators: bool
    passed: dict[str, int] = field(default_factory=dict)
    failed: dict[str, int] = field(default_factory=dict)
    not_applicable: dict[str, int] = field(default_factory=dict)
    counterexamples: dict[str, list[dict]] = field(default_factory=dict)
    facet_gap_groups: dict[str, list[str]] = field(default_factory=dict)
    field_divergences: list[dict] = field(default_factory=list)
    instances: int = 0

    @property
    def bound_violations(self) -> int:
        return sum(self.failed.get(k, 0) for k in BOUND_INVARIANTS)

    @property
    def invariant_failures(self) -> int:
        return sum(self.failed.values())

    def to_dict(self) -> dict:
        return {
            "seed": self.seed, "count": self.count, "n_range": list(self.n_range),
            "dim_range": list(self.dim_range), "fields": list(self.fields),
            "include_generators": self.include_generators, "instances": self.instances,
            "passed": self.passed, "failed": self.failed, "not_applicable": self.not_applicable,
            "bound_violations": self.bound_violations, "counterexamples": self.counterexamples,
            "facet_gap_groups": self.facet_gap_groups, "field_divergences": self.field_divergences,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def format(self) -> str:
        lines = [f"sweep seed={self.seed} count={self.count} n={self.n_range[0]}..{self.n_range[1]} "
                 f"dim={self.dim_range[0]}..{self.dim_range[1]} fields={','.join(self.fields)} "
                 f"generators={'yes' if self.include_generators else 'no'}",
                 f"instances checked: {self.instances}"]
        for name in INVARIANTS + AGGREGATE_INVARIANTS:
            p, fl, na = self.passed.get(name, 0), self.failed.get(name, 0), self.not_applicable.get(name, 0)
            status = "FAIL" if fl else "ok"
            lines.append(f"  {name:<34} {status:<4} pass={p} fail={fl} n/a={na}")
        lines.append(f"bound violations: {self.bound_violations}")
        lines.append(f"invariant failures: {self.invariant_failures}")
        for key in sorted(self.facet_gap_groups):
            lines.append(f"  facet gap ratios {key}: {', '.join(self.facet_gap_groups[key])}")
        for name in sorted(self.counterexamples):
            for ex in self.counterexamples[name]:
                lines.append(f"  counterexample {name} [{ex['field']}] {ex['label']}: {ex['facets']}")
        for div in self.field_divergences:
            lines.append(f"  field divergence {div['label']}: {div['predicate']} {div['values']}")
        return "\n".join(lines)


MAX_COUNTEREXAMPLES = 5


def _record(summary: SweepSummary, res: InstanceResult, cx: SimplicialComplex, fld: FieldSpec) -> None:
    for name, ok in res.checks.items():
        if ok is None:
            summary.not_applicable[name] = summary.not_applicable.get(name, 0) + 1
        elif ok:
            summary.passed[name] = summary.passed.get(name, 0) + 1
        else:
            summary.failed[name] = summary.failed.get(name, 0) + 1
            bucket = summary.counterexamples.setdefault(name, [])
            if len(bucket) < MAX_COUNTEREXAMPLES:
                bucket.append({"label": res.label, "field": fld.name,
                               "facets": [list(f) for f in cx.facet_lists(one_based=True)]})


def _close_facet_gaps(summary: SweepSummary, groups: dict[tuple, set]) -> None:
    for name in AGGREGATE_INVARIANTS:
        summary.passed.setdefault(name, 0)
    for key in sorted(groups):
        ratios = groups[key]
        shown = sorted(ratios, key=lambda r: (r is None, r or 0))
        summary.facet_gap_groups[f"n={key[1]} R={key[2:]} [{key[0]}]"] = [
            "undefined" if r is None else str(r) for r in shown]
        defined = {r for r in ratios if r is not None}
        ok_const = len(defined) <= 1 and None not in ratios
        ok_pos = bool(defined) and all(r > 0 for r in defined)
        for name, ok in (("facet_gap_ratio_constant", ok_const), ("facet_gap_ratio_positive", ok_pos)):
            target = summary.passed if ok else summary.failed
            target[name] = target.get(name, 0) + 1


def run_sweep(seed: int = 1, count: int = 500, n_range: tuple[int, int] = (3, 8),
              dim_range: tuple[int, int] = (0, 3), fields: tuple[FieldSpec, ...] = (GF2,),
              facets: int | None = None, include_generators: bool = False,
              progress: Callable[[int], None] | None = None) -> SweepSummary:
    """Generate ``count`` random complexes and run the battery over each field."""
    summary = SweepSummary(seed, count, tuple(n_range), tuple(dim_range),
                           tuple(f.name for f in fields), include_generators)
    hgroups: dict[tuple, set] = defaultdict(set)
    items: list[tuple[str, random.Random, SimplicialComplex]] = []
    if include_generators:
        items += [(name, random.Random(seed), cx) for name, cx in generator_suite()]
    for k, (rng, cx) in enumerate(random_complexes(seed, count, n_range, dim_range, facets)):
        items.append((f"random#{k}", rng, cx))
    for idx, (label, rng, cx) in enumerate(items):
        # the same sub-seed for every field keeps the Cramer sizes aligned
        sub = rng.getrandbits(64)
        for fld in fields:
            res = check_complex(cx, fld, random.Random(sub), label)
            _record(summary, res, cx, fld)
            for key, ratio, both_zero in res.facet_gaps:
                if not both_zero:
                    hgroups[(fld.name,) + key].add(ratio)
        if len(fields) > 1:
            _note_divergence(summary, label, cx, fields)
        summary.instances += 1
        if progress:
            progress(idx)
    _close_facet_gaps(summary, hgroups)
    return summary


def _note_divergence(summary: SweepSummary, label: str, cx: SimplicialComplex, fields) -> None:
    from .cm import cm_summary
    sums = {f.name: cm_summary(cx, f) for f in fields}
    for pred in ("cohen_macaulay", "gorenstein_star", "homology_manifold", "orientable"):
        vals = {k: getattr(v, pred) for k, v in sums.items()}
        if len(set(vals.values())) > 1:
            summary.field_divergences.append({"label": label, "predicate": pred, "values": vals})
    bettis = {f.name: list(reduced_betti(cx, f)) for f in fields}
    if len({tuple(v) for v in bettis.values()}) > 1:
        summary.field_divergences.append({"label": label, "predicate": "reduced_betti", "values": bettis})


def facet_gap_ratios(seed: int, count: int, n: int = 7, sizes: tuple[int, int, int] = (3, 4, 5),
                  field: FieldSpec = GF2) -> list[tuple[SimplicialComplex, Fraction | None, bool]]:
    """Facet gap ratios at fixed ``(n, R)`` over ``count`` random 3-dimensional complexes."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        cx = random_pure_complex(rng, n, 3)
        hc = facet_gap_ratio(cx, sizes, field)
        out.append((cx, hc.ratio, hc.both_zero))
    return out


__all__ = [
    "INVARIANTS", "AGGREGATE_INVARIANTS", "random_pure_complex", "random_complexes", "generator_suite",
    "check_complex", "InstanceResult", "SweepSummary", "run_sweep", "facet_gap_ratios",
]
