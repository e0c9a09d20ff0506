"""Multiplicity bounds and their skip-sequence reformulations.

All quantities are exact (``int`` or ``Fraction``).  Multiplicity of the face
ring is the number of facets of top dimension; ``U = prod M_i / c!`` and
``L = prod m_i / c!`` over the first ``c = n - d`` shifts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, prod
from typing import Sequence

from .cm import connectivity_sequence, is_cohen_macaulay
from .complex import SimplicialComplex
from .homology import GF2, FieldSpec
from .hochster import ShiftProfile, shift_profile, subset_sweep
from .linalg import SingularSystem, solve_exact


class NonIncreasingSkips(ValueError):
    pass


class NotCohenMacaulay(ValueError):
    pass


class PreconditionNotMet(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


class InconsistentResult(AssertionError):
    """Two independent routes to the same quantity disagreed."""


def multiplicity(cx: SimplicialComplex) -> int:
    return cx.f_vector()[-1]


def falling(n: int, k: int) -> int:
    return prod(range(n - k + 1, n + 1))


def _avg(cx: SimplicialComplex, field: FieldSpec, p: int, m: int) -> Fraction:
    if p >= cx.d or p < 0 or not 1 <= m <= cx.n:
        return Fraction(0)
    sw = subset_sweep(cx, field)
    return Fraction(sw.sums[p][m], comb(cx.n, m))


def _is_simplex(cx: SimplicialComplex) -> bool:
    return cx.n == 0 or cx.is_simplex()


# -- the skip reformulation ------------------------------------------------------

def skip_coefficients(q: Sequence[int]) -> list[int]:
    """``[c_1, ..., c_{d-1}]`` for upper skips ``q = (Q_0 = 1, Q_1, ..., Q_{d-1})``.

    ``c_i = prod_{u != i} Q_u (Q_u - 1) * prod_{u < v; u, v != i} (Q_v - Q_u)``
    with ``u, v`` ranging over ``1..d-1``.
    """
    q = list(q)
    if not q or q[0] != 1 or any(b <= a for a, b in zip(q, q[1:])):
        raise NonIncreasingSkips(f"skips must satisfy 1 = Q_0 < Q_1 < ...: got {q}")
    top = len(q) - 1
    out = []
    for i in range(1, top + 1):
        others = [q[u] for u in range(1, top + 1) if u != i]
        c = prod(x * (x - 1) for x in others)
        c *= prod(b - a for k, a in enumerate(others) for b in others[k + 1:])
        out.append(c)
    return out


def skip_expression(cx: SimplicialComplex, field: FieldSpec = GF2) -> Fraction:
    """``sum_i c_i sum_{j<i} (-1)^{i-j-1} A(j, Q_i)``; nonnegative iff ``e <= U``."""
    prof = shift_profile(cx, field)
    q = prof.upper_skips
    cs = skip_coefficients(q)
    total = Fraction(0)
    for i in range(1, len(q)):
        inner = sum(((-1) ** (i - j - 1)) * _avg(cx, field, j, q[i]) for j in range(i))
        total += cs[i - 1] * inner
    return total


def skip_averages_vanish(cx: SimplicialComplex, field: FieldSpec = GF2) -> bool:
    """Whether ``A(j, Q_i) = 0`` for all ``0 <= j < i <= d - 1``."""
    q = shift_profile(cx, field).upper_skips
    return all(_avg(cx, field, j, q[i]) == 0 for i in range(1, len(q)) for j in range(i))


def upper_bound_from_skips(prof: ShiftProfile) -> Fraction:
    """``n (n-1) ... (n-d+1) / (Q_1 ... Q_{d-1})``."""
    return Fraction(falling(prof.n, prof.d), prod(prof.upper_skips[1:]))


def euler_poincare_system(cx: SimplicialComplex, sizes: Sequence[int],
                          field: FieldSpec = GF2) -> tuple[list[list[Fraction]], list[Fraction]]:
    """Averaged Euler-Poincare equations in ``f_1..f_{d-1}``, one per subset size.

    Row for size ``R``: ``sum_{i>=1} (-1)^{d-i-1} C(R,i+1)/C(n,i+1) f_i =
    (-1)^d (R - 1) + sum_{i=0}^{d-1} (-1)^{d-i-1} A(i, R)`` (no truncation).
    """
    n, d = cx.n, cx.d
    a, b = [], []
    for r in sizes:
        a.append([Fraction((-1) ** (d - i - 1) * comb(r, i + 1), comb(n, i + 1)) for i in range(1, d)])
        rhs = Fraction((-1) ** d * (r - 1))
        rhs += sum((-1) ** (d - i - 1) * _avg(cx, field, i, r) for i in range(d))
        b.append(rhs)
    return a, b


def cramer_facet_count(cx: SimplicialComplex, sizes: Sequence[int], field: FieldSpec = GF2) -> Fraction:
    """Recover ``f_{d-1}`` from averaged Betti numbers at ``d - 1`` distinct sizes."""
    n, d = cx.n, cx.d
    sizes = list(sizes)
    if d <= 1:
        if sizes:
            raise ValueError("a 0-dimensional complex takes no sizes")
        return Fraction(n)
    if len(sizes) != d - 1:
        raise ValueError(f"need {d - 1} sizes, got {len(sizes)}")
    if len(set(sizes)) != len(sizes) or sorted(sizes) != sizes:
        raise SingularSystem(f"sizes must be strictly increasing: {sizes}")
    if sizes[0] < 2 or sizes[-1] > n:
        raise ValueError(f"sizes must lie in 2..{n}: {sizes}")
    a, b = euler_poincare_system(cx, sizes, field)
    return solve_exact(a, b)[-1]


@dataclass(frozen=True)
class FacetGapResult:
    gap: Fraction          # n(n-1)(n-2)(n-3)/(R1 R2 R3) - f_3
    weighted_sum: Fraction  # sum_{i,j} c_i (-1)^{i+j} A(j, R_i)
    ratio: Fraction | None
    both_zero: bool


def facet_gap_ratio(cx: SimplicialComplex, sizes: Sequence[int], field: FieldSpec = GF2) -> FacetGapResult:
    """Ratio between the facet gap and the weighted averaged-Betti sum, 3-dim complexes."""
    if cx.dim != 3:
        raise DimensionMismatch(f"needs a 3-dimensional complex, got dim {cx.dim}")
    r1, r2, r3 = sizes
    n = cx.n
    if not 2 <= r1 < r2 < r3 <= n:
        raise ValueError(f"need 2 <= R1 < R2 < R3 <= {n}: {sizes}")
    cs = skip_coefficients((1, r1, r2, r3))
    rs = (r1, r2, r3)
    weighted = sum(cs[i - 1] * (-1) ** (i + j) * _avg(cx, field, j, rs[i - 1])
                   for i in range(1, 4) for j in range(4))
    gap = Fraction(falling(n, 4), r1 * r2 * r3) - multiplicity(cx)
    ratio = gap / weighted if weighted else None
    return FacetGapResult(gap, Fraction(weighted), ratio, gap == 0 and weighted == 0)


# -- bound reports ----------------------------------------------------------------

@dataclass(frozen=True)
class BoundReport:
    field: FieldSpec
    e: int
    U: Fraction
    L: Fraction
    upper_holds: bool
    upper_equality: bool
    lower_holds: bool | None      # None: not applicable (not CM)
    lower_equality: bool | None
    skip_expression: Fraction
    is_cm: bool
    is_pure: bool


def bound_report(cx: SimplicialComplex, field: FieldSpec = GF2) -> BoundReport:
    e = multiplicity(cx)
    cm = is_cohen_macaulay(cx, field)
    if _is_simplex(cx):
        one = Fraction(1)
        return BoundReport(field, e, one, one, True, e == 1, True, e == 1, Fraction(0), cm, True)
    prof = shift_profile(cx, field)
    U, L = prof.upper_bound, prof.lower_bound
    lhs = skip_expression(cx, field)
    return BoundReport(
        field=field, e=e, U=U, L=L,
        upper_holds=e <= U, upper_equality=e == U,
        lower_holds=(e >= L) if cm else None,
        lower_equality=(e == L) if cm else None,
        skip_expression=lhs, is_cm=cm, is_pure=prof.is_pure,
    )


@dataclass(frozen=True)
class ConnectivityBoundResult:
    holds: bool
    gap: Fraction
    bound: Fraction
    q: tuple[int, ...]


def connectivity_lower_bound(cx: SimplicialComplex, field: FieldSpec = GF2) -> ConnectivityBoundResult:
    """Lower bound through the CM connectivity sequence; must agree with ``e >= L``."""
    if not is_cohen_macaulay(cx, field):
        raise NotCohenMacaulay("the lower-bound reformulation needs a Cohen-Macaulay complex")
    n, d = cx.n, cx.d
    q = connectivity_sequence(cx, field)
    bound = Fraction(falling(n, d), prod(n - qi + 1 for qi in q))
    gap = multiplicity(cx) - bound
    holds = gap >= 0
    if not _is_simplex(cx):
        rep = bound_report(cx, field)
        if rep.lower_holds != holds:
            raise InconsistentResult(f"connectivity bound {bound} and L={rep.L} disagree")
    return ConnectivityBoundResult(holds, gap, bound, q)


def pure_multiplicity_formula_holds(cx: SimplicialComplex, field: FieldSpec = GF2) -> bool:
    """``e = prod m_i / c!`` for a CM complex with a pure resolution."""
    if _is_simplex(cx):
        return multiplicity(cx) == 1
    prof = shift_profile(cx, field)
    if not prof.is_pure or not is_cohen_macaulay(cx, field):
        raise PreconditionNotMet("needs a Cohen-Macaulay complex with a pure resolution")
    return Fraction(multiplicity(cx)) == prof.lower_bound
