"""Reduced simplicial homology ranks over GF(2), GF(p) or Q."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .complex import SimplicialComplex, members, popcount
from .linalg import is_prime, rank_gf2, rank_mod_p, rank_rational


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: ``GF(characteristic)``, or Q when ``characteristic == 0``."""

    characteristic: int = 2

    def __post_init__(self) -> None:
        if self.characteristic != 0 and not is_prime(self.characteristic):
            raise ValueError(f"{self.characteristic} is not prime")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    @property
    def name(self) -> str:
        return "Q" if self.is_rational else f"GF({self.characteristic})"

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        t = text.strip()
        if t.upper() in {"Q", "QQ", "0"}:
            return cls(0)
        return cls(int(t))

    def __str__(self) -> str:
        return self.name


GF2 = FieldSpec(2)
GF3 = FieldSpec(3)
QQ = FieldSpec(0)
MULTI_FIELDS = (GF2, GF3, QQ)


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers; ``bv[p]`` is the p-th one for ``p >= -1``."""

    values: tuple[int, ...]

    def __getitem__(self, p: int) -> int:
        i = p + 1
        return self.values[i] if 0 <= i < len(self.values) else 0

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def is_zero(self) -> bool:
        return not any(self.values)

    def alternating_sum(self) -> int:
        return sum((-1) ** (p - 1) * b for p, b in enumerate(self.values))


class ChainData:
    """Boundary columns of every face, indexed globally per dimension.

    Column of a ``k``-face lists its ``(k-1)``-faces by their index among all
    ``(k-1)``-faces of the ambient complex.  Restricting to an induced
    subcomplex is then a matter of selecting columns.
    """

    def __init__(self, cx: SimplicialComplex):
        self.cx = cx
        self.d = cx.d
        self.layers: list[tuple[int, ...]] = [cx.faces_of_dim(k) for k in range(-1, cx.dim + 1)]
        self.index = [{m: i for i, m in enumerate(layer)} for layer in self.layers]
        # bits[k][j] / signed[k][j]: boundary of the j-th k-face, k >= 1
        self.bits: list[list[int]] = [[] for _ in range(cx.d)]
        self.signed: list[list[dict[int, int]]] = [[] for _ in range(cx.d)]
        for k in range(1, cx.d):
            lower = self.index[k]
            for face in self.layers[k + 1]:
                b = 0
                col = {}
                for pos, v in enumerate(members(face)):
                    r = lower[face & ~(1 << v)]
                    b |= 1 << r
                    col[r] = -1 if pos % 2 else 1
                self.bits[k].append(b)
                self.signed[k].append(col)

    def rank(self, k: int, selected: Iterable[int], field: FieldSpec) -> int:
        """Rank of the boundary ``k``-faces -> ``(k-1)``-faces on ``selected`` columns."""
        if field.characteristic == 2:
            cols = self.bits[k]
            return rank_gf2(cols[j] for j in selected)
        cols = self.signed[k]
        chosen = [cols[j] for j in selected]
        if field.is_rational:
            return rank_rational(chosen)
        return rank_mod_p(chosen, field.characteristic)

    def betti_from(self, counts: Sequence[int], ranks: Sequence[int]) -> BettiVector:
        """Reduced Betti numbers from face counts ``f_{-1}..`` and ranks ``r_1..``.

        ``counts[k+1]`` is the number of k-faces; ``ranks[k]`` is the rank of
        the k-th boundary map for ``k >= 1``; the augmentation has rank 1
        whenever there is a vertex.
        """
        top = len(counts) - 2
        while top >= 0 and counts[top + 1] == 0:
            top -= 1
        if top < 0:
            return BettiVector((1,))
        r = [0] * (top + 2)  # r[k] = rank of d_k, k = 0..top+1
        r[0] = 1
        for k in range(1, top + 1):
            r[k] = ranks[k]
        vals = [0]
        for p in range(0, top + 1):
            vals.append(counts[p + 1] - r[p] - r[p + 1])
        return BettiVector(tuple(vals))

    def restricted(self, w: int, field: FieldSpec) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Face counts and boundary ranks of the induced subcomplex on mask ``w``."""
        sel = [[j for j, m in enumerate(layer) if m & ~w == 0] for layer in self.layers]
        counts = tuple(len(s) for s in sel)
        ranks = (0,) + tuple(self.rank(k, sel[k + 1], field) for k in range(1, self.d))
        return counts, ranks


@lru_cache(maxsize=4096)
def chain_data(cx: SimplicialComplex) -> ChainData:
    return ChainData(cx)


@dataclass(frozen=True)
class BoundaryMatrix:
    row_faces: tuple[int, ...]
    col_faces: tuple[int, ...]
    entries: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_faces), len(self.col_faces)

    def rank(self, field: FieldSpec) -> int:
        cols = [{r: self.entries[r][c] for r in range(len(self.row_faces)) if self.entries[r][c]}
                for c in range(len(self.col_faces))]
        if field.is_rational:
            return rank_rational(cols)
        return rank_mod_p(cols, field.characteristic)


def boundary_matrix(cx: SimplicialComplex, k: int, field: FieldSpec = GF2) -> BoundaryMatrix:
    """Matrix of the ``k``-th boundary map; ``k = 0`` is the augmentation.

    Rows are the (k-1)-faces, columns the k-faces, both in increasing mask
    order.  The sign of vertex ``v`` in ``F`` is ``(-1)**(position of v)``.
    Entries are reduced into ``0..p-1`` for GF(p).
    """
    if not 0 <= k <= cx.dim:
        raise ValueError(f"k={k} outside 0..{cx.dim}")
    rows = cx.faces_of_dim(k - 1)
    cols = cx.faces_of_dim(k)
    ridx = {m: i for i, m in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    p = field.characteristic
    for c, face in enumerate(cols):
        for pos, v in enumerate(members(face)):
            val = -1 if pos % 2 else 1
            mat[ridx[face & ~(1 << v)]][c] = val % p if p else val
    return BoundaryMatrix(rows, cols, tuple(tuple(r) for r in mat))


@lru_cache(maxsize=65536)
def _betti_cached(cx: SimplicialComplex, field: FieldSpec) -> BettiVector:
    if cx.n == 0:
        return BettiVector((1,))
    ch = chain_data(cx)
    counts, ranks = ch.restricted(cx.vertex_mask, field)
    return ch.betti_from(counts, ranks)


def reduced_betti(cx: SimplicialComplex, field: FieldSpec = GF2) -> BettiVector:
    """``(b_{-1}, b_0, ..., b_{d-1})`` of reduced homology over ``field``."""
    return _betti_cached(cx, field)


def euler_characteristic(cx: SimplicialComplex) -> int:
    """Non-reduced Euler characteristic ``sum_{i>=0} (-1)^i f_i``."""
    f = cx.f_vector()
    return sum((-1) ** i * f[i + 1] for i in range(cx.d))


def is_connected(cx: SimplicialComplex) -> bool:
    return cx.n >= 1 and reduced_betti(cx, GF2)[0] == 0


__all__ = [
    "FieldSpec", "GF2", "GF3", "QQ", "MULTI_FIELDS", "BettiVector", "ChainData",
    "chain_data", "BoundaryMatrix", "boundary_matrix", "reduced_betti",
    "euler_characteristic", "is_connected", "popcount",
]
