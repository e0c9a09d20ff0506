"""Exact rank and solve routines over GF(2), GF(p) and the rationals.

Matrices arrive column-wise, which is how boundary operators are built:

* GF(2): each column is an ``int`` whose set bits are the nonzero rows.
* GF(p) and Q: each column is a ``dict`` mapping row index to an integer entry.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence


class SingularSystem(ArithmeticError):
    """Raised when a square system has no unique solution."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    k = 3
    while k * k <= p:
        if p % k == 0:
            return False
        k += 2
    return True


def rank_gf2(columns: Iterable[int]) -> int:
    """Rank of bit-packed columns over GF(2).

    Keeps an XOR basis keyed by leading bit, so each reduction step is a
    single word-parallel XOR on Python ints.
    """
    basis: dict[int, int] = {}
    rank = 0
    for v in columns:
        while v:
            top = v.bit_length() - 1
            b = basis.get(top)
            if b is None:
                basis[top] = v
                rank += 1
                break
            v ^= b
    return rank


def rank_mod_p(columns: Iterable[Mapping[int, int]], p: int) -> int:
    """Rank of sparse integer columns reduced modulo the prime ``p``."""
    basis: dict[int, dict[int, int]] = {}
    rank = 0
    for col in columns:
        v = {r: x % p for r, x in col.items() if x % p}
        while v:
            top = max(v)
            b = basis.get(top)
            if b is None:
                inv = pow(v[top], p - 2, p)
                basis[top] = {r: (x * inv) % p for r, x in v.items()}
                rank += 1
                break
            f = v[top]
            for r, x in b.items():
                y = (v.get(r, 0) - f * x) % p
                if y:
                    v[r] = y
                else:
                    v.pop(r, None)
    return rank


def rank_bareiss(matrix: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination.

    All intermediate values stay integral; exact for arbitrary entries.
    """
    a = [list(row) for row in matrix]
    n_rows = len(a)
    if n_rows == 0:
        return 0
    n_cols = len(a[0])
    rank = 0
    prev = 1
    for c in range(n_cols):
        if rank == n_rows:
            break
        piv = next((r for r in range(rank, n_rows) if a[r][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pv = a[rank][c]
        for r in range(rank + 1, n_rows):
            f = a[r][c]
            row = a[r]
            prow = a[rank]
            for k in range(c + 1, n_cols):
                # exact division is guaranteed by Sylvester's identity
                row[k] = (pv * row[k] - f * prow[k]) // prev
            row[c] = 0
        prev = pv
        rank += 1
    return rank


def rank_rational(columns: Sequence[Mapping[int, int]]) -> int:
    """Rank over Q of sparse integer columns (dense Bareiss underneath)."""
    cols = [c for c in columns if c]
    if not cols:
        return 0
    rows = sorted({r for c in cols for r in c})
    index = {r: i for i, r in enumerate(rows)}
    # columns become rows: rank is transpose-invariant
    dense = []
    for c in cols:
        line = [0] * len(rows)
        for r, x in c.items():
            line[index[r]] = x
        dense.append(line)
    return rank_bareiss(dense)


def solve_exact(a: Sequence[Sequence[Fraction | int]], b: Sequence[Fraction | int]) -> list[Fraction]:
    """Solve the square system ``a x = b`` exactly with Gauss-Jordan over Q."""
    n = len(a)
    if any(len(row) != n for row in a) or len(b) != n:
        raise ValueError("solve_exact expects a square system")
    m = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(a, b)]
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            raise SingularSystem(f"no pivot in column {c}")
        m[c], m[piv] = m[piv], m[c]
        pv = m[c][c]
        m[c] = [x / pv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [m[r][n] for r in range(n)]


def det_exact(a: Sequence[Sequence[Fraction | int]]) -> Fraction:
    """Determinant by exact elimination (empty matrix has determinant 1)."""
    m = [[Fraction(x) for x in row] for row in a]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        pv = m[c][c]
        det *= pv
        for r in range(c + 1, n):
            f = m[r][c] / pv
            if f:
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return det
