"""Graded Betti numbers of S/I via Hochster's formula, and the shift sequences.

``beta_{i,j} = sum_{|W| = j} bhat_{j-i-1}(Gamma[W])``.  The whole module is
driven by one sweep over all vertex subsets that records, for every homology
degree ``p`` and subset size ``m``, the sum of ``bhat_p`` over induced
subcomplexes of size ``m``.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, prod
from threading import Lock

from .complex import SimplicialComplex, members, popcount
from .homology import GF2, BettiVector, FieldSpec, chain_data


class ResourceLimit(RuntimeError):
    """The 2^n subset sweep exceeds the configured vertex budget."""


class ZeroIdeal(ValueError):
    """The complex is a full simplex, so I = 0 and all shift sequences are empty."""


DEFAULT_BUDGET = {2: 20, 0: 14}
DEFAULT_BUDGET_ODD_P = 16


def default_budget(field: FieldSpec) -> int:
    return DEFAULT_BUDGET.get(field.characteristic, DEFAULT_BUDGET_ODD_P)


@dataclass
class SweepResult:
    """Aggregated induced-subcomplex homology of one complex over one field.

    ``sums[p][m]`` is the sum of ``bhat_p(Gamma[W])`` over ``|W| = m`` (p >= 0).
    ``witness[(p, m)]`` is the smallest mask ``W`` with ``bhat_p`` nonzero.
    ``records`` (optional) maps every mask to its face counts and boundary ranks.
    """

    n: int
    d: int
    field: FieldSpec
    sums: list[list[int]]
    witness: dict[tuple[int, int], int] = field(default_factory=dict)
    records: dict[int, tuple[tuple[int, ...], tuple[int, ...]]] | None = None

    def merge(self, other: "SweepResult") -> None:
        for p in range(self.d):
            row, orow = self.sums[p], other.sums[p]
            for m in range(self.n + 1):
                row[m] += orow[m]
        for key, w in other.witness.items():
            if key not in self.witness or w < self.witness[key]:
                self.witness[key] = w
        if other.records is not None:
            if self.records is None:
                self.records = {}
            self.records.update(other.records)


def _gray_chunk(cx: SimplicialComplex, field: FieldSpec, prefix: int, low_bits: int,
                keep_records: bool) -> SweepResult:
    """Sweep all masks ``prefix | g`` with ``g`` running over ``low_bits`` bits in Gray order."""
    ch = chain_data(cx)
    n, d = cx.n, cx.d
    res = SweepResult(n, d, field, [[0] * (n + 1) for _ in range(d)],
                      records={} if keep_records else None)
    layers = ch.layers
    # per vertex, per layer: the face indices containing that vertex
    touching = [[[j for j, m in enumerate(layer) if m >> v & 1] for layer in layers] for v in range(n)]

    w = prefix
    current = [{j for j, m in enumerate(layer) if m & ~w == 0} for layer in layers]

    def visit(w: int) -> None:
        if w == 0:
            return
        counts = tuple(len(s) for s in current)
        ranks = (0,) + tuple(ch.rank(k, current[k + 1], field) for k in range(1, d))
        bv = ch.betti_from(counts, ranks)
        size = popcount(w)
        for p in range(len(bv) - 1):
            b = bv[p]
            if b:
                res.sums[p][size] += b
                key = (p, size)
                if key not in res.witness or w < res.witness[key]:
                    res.witness[key] = w
        if keep_records:
            res.records[w] = (counts, ranks)

    visit(w)
    for step in range(1, 1 << low_bits):
        v = (step & -step).bit_length() - 1
        bit = 1 << v
        w ^= bit
        if w & bit:
            for k, layer in enumerate(layers):
                cur = current[k]
                for j in touching[v][k]:
                    if layer[j] & ~w == 0:
                        cur.add(j)
        else:
            for k in range(len(layers)):
                current[k].difference_update(touching[v][k])
        visit(w)
    return res


def _chunk_job(args):
    return _gray_chunk(*args)


_CACHE: dict[tuple, SweepResult] = {}
_CACHE_LOCK = Lock()
_CACHE_MAX = 2048


def subset_sweep(cx: SimplicialComplex, field: FieldSpec = GF2, *, budget: int | None = None,
                 workers: int | None = None, records: bool = False) -> SweepResult:
    """Homology of every induced subcomplex, aggregated by degree and size.

    ``workers > 1`` splits the sweep by the top vertex bits across processes.
    The merge is integer addition (and ``min`` for witnesses), so the result
    does not depend on the worker count.
    """
    limit = default_budget(field) if budget is None else budget
    if cx.n > limit:
        raise ResourceLimit(
            f"n={cx.n} exceeds the {field.name} budget of {limit} vertices; "
            "raise the budget explicitly (--budget on the command line) to run a 2^n sweep this large")
    key = (cx, field, records)
    with _CACHE_LOCK:
        hit = _CACHE.get(key) or (_CACHE.get((cx, field, True)) if not records else None)
    if hit is not None:
        return hit
    n = cx.n
    workers = workers or int(os.environ.get("FACERING_WORKERS", "1"))
    split = 0
    if workers > 1 and n >= 8:
        split = min(n - 4, max(1, (4 * workers - 1).bit_length()))
    low = n - split
    jobs = [(cx, field, prefix << low, low, records) for prefix in range(1 << split)]
    if len(jobs) == 1 or workers <= 1:
        parts = [_gray_chunk(*j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_chunk_job, jobs))
    res = SweepResult(n, cx.d, field, [[0] * (n + 1) for _ in range(cx.d)],
                      records={} if records else None)
    for part in parts:
        res.merge(part)
    with _CACHE_LOCK:
        if len(_CACHE) >= _CACHE_MAX:
            _CACHE.clear()
        _CACHE[key] = res
    return res


def induced_betti(sweep: SweepResult, w: int) -> BettiVector:
    """Reduced Betti vector of ``Gamma[w]`` from a sweep run with ``records=True``."""
    if sweep.records is None:
        raise ValueError("sweep was run without per-subset records")
    if w == 0:
        return BettiVector((1,))
    counts, ranks = sweep.records[w]
    ch_counts = counts
    # reuse the generic formula without touching the chain data
    top = len(ch_counts) - 2
    while top >= 0 and ch_counts[top + 1] == 0:
        top -= 1
    r = [1] + [ranks[k] for k in range(1, top + 1)] + [0]
    return BettiVector((0,) + tuple(ch_counts[p + 1] - r[p] - r[p + 1] for p in range(top + 1)))


# -- Betti tables -------------------------------------------------------------

@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers ``beta_{i,j}`` of S/I for ``i >= 1``; ``beta_{0,0} = 1``."""

    n: int
    d: int
    field: FieldSpec
    entries: dict[tuple[int, int], int]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if i == 0:
            return 1 if j == 0 else 0
        return self.entries.get((i, j), 0)

    @property
    def length(self) -> int:
        """Length ``l`` of the minimal free resolution (0 for the zero ideal)."""
        return max((i for i, _ in self.entries), default=0)

    @property
    def codim(self) -> int:
        return self.n - self.d

    def row(self, i: int) -> dict[int, int]:
        return {j: b for (ii, j), b in sorted(self.entries.items()) if ii == i}

    def total(self, i: int) -> int:
        return sum(self.row(i).values())

    def as_grid(self) -> list[list[int]]:
        """Macaulay2-style grid: ``grid[r][i] = beta_{i, i+r}`` for ``i = 0..l``."""
        l = self.length
        reg = max((j - i for i, j in self.entries), default=0)
        return [[self[i, i + r] for i in range(l + 1)] for r in range(reg + 1)]

    def format(self) -> str:
        grid = self.as_grid()
        l = self.length
        width = max([len(str(x)) for row in grid for x in row] + [len(str(l)), 1])
        lines = ["      " + " ".join(str(i).rjust(width) for i in range(l + 1))]
        for r, row in enumerate(grid):
            cells = " ".join(("." if x == 0 else str(x)).rjust(width) for x in row)
            lines.append(f"{r:>4}: {cells}")
        return "\n".join(lines)


def betti_table(cx: SimplicialComplex, field: FieldSpec = GF2, **kw) -> BettiTable:
    """Graded Betti table of the Stanley-Reisner ring by Hochster's formula."""
    sw = subset_sweep(cx, field, **kw)
    entries = {}
    for p in range(cx.d):
        for j in range(cx.n + 1):
            s = sw.sums[p][j]
            if s:
                entries[(j - p - 1, j)] = s
    return BettiTable(cx.n, cx.d, field, entries)


def averaged_betti(cx: SimplicialComplex, p: int, m: int, field: FieldSpec = GF2, **kw) -> Fraction:
    """Average of ``bhat_p`` over the size-``m`` induced subcomplexes."""
    if not 1 <= m <= cx.n:
        raise ValueError(f"subset size m={m} outside 1..{cx.n}")
    if p < 0:
        raise ValueError("homological degree must be >= 0")
    if p >= cx.d:
        return Fraction(0)
    sw = subset_sweep(cx, field, **kw)
    return Fraction(sw.sums[p][m], comb(cx.n, m))


# -- shifts ---------------------------------------------------------------------

@dataclass(frozen=True)
class ShiftProfile:
    """Minimal/maximal shifts (index 0 holds i = 1), skips and regularity."""

    n: int
    d: int
    m: tuple[int, ...]
    M: tuple[int, ...]
    length: int
    codim: int
    upper_skips: tuple[int, ...]
    lower_skips: tuple[int, ...]
    regularity: int

    def m_at(self, i: int) -> int:
        return self.m[i - 1]

    def M_at(self, i: int) -> int:
        return self.M[i - 1]

    @property
    def upper_bound(self) -> Fraction:
        c = self.codim
        return Fraction(prod(self.M[:c]), factorial(c))

    @property
    def lower_bound(self) -> Fraction:
        c = self.codim
        return Fraction(prod(self.m[:c]), factorial(c))

    @property
    def is_pure(self) -> bool:
        return self.m == self.M

    @property
    def is_quasi_pure(self) -> bool:
        return all(self.m[i + 1] >= self.M[i] for i in range(len(self.m) - 1))


def shifts_from_table(table: BettiTable) -> ShiftProfile:
    l = table.length
    if l == 0:
        raise ZeroIdeal("the Stanley-Reisner ideal is zero (complex is a simplex)")
    n, d = table.n, table.d
    rows = [[j for (i, j) in table.entries if i == k] for k in range(1, l + 1)]
    m = tuple(min(r) for r in rows)
    M = tuple(max(r) for r in rows)
    c = n - d
    upper = tuple(q for q in range(1, n + 1) if q not in set(M[:c]))
    lower = tuple(q for q in range(1, n + 1) if q not in set(m))
    reg = max(Mi - i for i, Mi in enumerate(M, start=1))
    return ShiftProfile(n, d, m, M, l, c, upper, lower, reg)


def shift_profile(cx: SimplicialComplex, field: FieldSpec = GF2, **kw) -> ShiftProfile:
    """Shift sequences and skips; raises :class:`ZeroIdeal` for a simplex."""
    if cx.n == 0 or cx.is_simplex():
        raise ZeroIdeal("the Stanley-Reisner ideal is zero (complex is a simplex)")
    return shifts_from_table(betti_table(cx, field, **kw))


def is_pure_resolution(cx: SimplicialComplex, field: FieldSpec = GF2, **kw) -> bool:
    return shift_profile(cx, field, **kw).is_pure


def is_quasi_pure(cx: SimplicialComplex, field: FieldSpec = GF2, **kw) -> bool:
    return shift_profile(cx, field, **kw).is_quasi_pure


def regularity(cx: SimplicialComplex, field: FieldSpec = GF2, **kw) -> int:
    """Castelnuovo-Mumford regularity of S/I (0 for a simplex)."""
    if cx.n == 0 or cx.is_simplex():
        return 0
    return shift_profile(cx, field, **kw).regularity


def is_t_leray(cx: SimplicialComplex, t: int, field: FieldSpec = GF2, **kw) -> bool:
    return regularity(cx, field, **kw) <= t


def hochster_is_cm(cx: SimplicialComplex, field: FieldSpec = GF2, **kw) -> bool:
    """CM test through induced subcomplexes: ``bhat_p(Gamma[W]) = 0`` whenever ``|W| > n - d + 1 + p``."""
    sw = subset_sweep(cx, field, **kw)
    n, d = cx.n, cx.d
    return all(sw.sums[p][j] == 0
               for p in range(d) for j in range(n + 1) if j > n - d + 1 + p)


__all__ = [
    "ResourceLimit", "ZeroIdeal", "SweepResult", "subset_sweep", "induced_betti",
    "BettiTable", "betti_table", "averaged_betti", "ShiftProfile", "shift_profile",
    "shifts_from_table", "is_pure_resolution", "is_quasi_pure", "regularity",
    "is_t_leray", "hochster_is_cm", "default_budget", "members",
]
