"""Immutable simplicial complexes on the vertex set {0, ..., n-1}.

Faces are packed into ``int`` bitmasks (bit ``v`` set iff vertex ``v`` is in
the face), so subset tests are a single ``a & ~b == 0``.  The empty face is
``0``.  Every vertex must be a face; isolated vertices show up as singleton
facets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


class ComplexError(ValueError):
    """Base class for invalid complex constructions."""


class VertexOutOfRange(ComplexError):
    pass


class GhostVertex(ComplexError):
    pass


class FaceNotInComplex(ComplexError):
    pass


class EmptyVertexSet(ComplexError):
    pass


def to_mask(face: Iterable[int]) -> int:
    m = 0
    for v in face:
        m |= 1 << v
    return m


def members(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex given by its vertex count and facets.

    ``facets`` is a sorted tuple of bitmasks, pairwise incomparable.  Use
    :func:`from_facets` rather than the constructor; it validates and
    canonicalizes.  ``labels`` records the original vertex names when the
    complex was produced by :meth:`induced` or :meth:`link`.
    """

    n: int
    facets: tuple[int, ...]
    labels: tuple[int, ...] | None = field(default=None, compare=False, repr=False)

    @property
    def dim(self) -> int:
        return max(popcount(f) for f in self.facets) - 1 if self.facets else -1

    @property
    def d(self) -> int:
        """Krull dimension of the face ring, ``dim + 1``."""
        return self.dim + 1

    @property
    def codim(self) -> int:
        return self.n - self.d

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def _faces_by_dim(self) -> tuple[tuple[int, ...], ...]:
        seen: set[int] = set()
        for f in self.facets:
            if f in seen:
                continue
            for s in submasks(f):
                seen.add(s)
        by_dim: list[list[int]] = [[] for _ in range(self.d + 1)]
        for s in seen:
            by_dim[popcount(s)].append(s)
        return tuple(tuple(sorted(x)) for x in by_dim)

    @cached_property
    def _face_set(self) -> frozenset[int]:
        return frozenset(m for layer in self._faces_by_dim for m in layer)

    def faces_of_dim(self, k: int) -> tuple[int, ...]:
        """All ``k``-dimensional faces as bitmasks (``k = -1`` gives the empty face)."""
        if k < -1 or k > self.dim:
            return ()
        return self._faces_by_dim[k + 1]

    def faces(self) -> Iterator[int]:
        for layer in self._faces_by_dim:
            yield from layer

    def is_face(self, face: int | Iterable[int]) -> bool:
        m = face if isinstance(face, int) else to_mask(face)
        return m in self._face_set

    def is_pure(self) -> bool:
        return all(popcount(f) == self.d for f in self.facets)

    def f_vector(self) -> tuple[int, ...]:
        """``(f_{-1}, f_0, ..., f_{d-1})``."""
        return tuple(len(layer) for layer in self._faces_by_dim)

    def h_vector(self) -> tuple[int, ...]:
        """``(h_0, ..., h_d)`` from the f-vector, exact integers."""
        d = self.d
        f = self.f_vector()
        return tuple(
            sum((-1) ** (i - j) * comb(d - j, d - i) * f[j] for j in range(i + 1))
            for i in range(d + 1)
        )

    def facet_lists(self, one_based: bool = False) -> list[tuple[int, ...]]:
        off = 1 if one_based else 0
        return [tuple(v + off for v in members(f)) for f in self.facets]

    # -- operations ---------------------------------------------------------

    def induced(self, vertices: int | Iterable[int]) -> "SimplicialComplex":
        """Induced subcomplex on ``vertices``, re-indexed to ``0..|W|-1``.

        The original labels are kept in ``labels``.
        """
        w = vertices if isinstance(vertices, int) else to_mask(vertices)
        if w == 0:
            raise EmptyVertexSet("induced subcomplex needs a nonempty vertex set")
        if w & ~self.vertex_mask:
            raise VertexOutOfRange(f"vertex set {members(w)} exceeds n={self.n}")
        keep = members(w)
        pieces = {f & w for f in self.facets}
        return _reindexed(keep, pieces, self.labels)

    def deletion(self, v: int) -> "SimplicialComplex":
        if not 0 <= v < self.n:
            raise VertexOutOfRange(f"vertex {v} not in 0..{self.n - 1}")
        return self.induced(self.vertex_mask & ~(1 << v))

    def link(self, face: int | Iterable[int]) -> "SimplicialComplex":
        """``lk(F) = {G - F : F <= G in the complex}``, re-indexed densely."""
        fm = face if isinstance(face, int) else to_mask(face)
        if not self.is_face(fm):
            raise FaceNotInComplex(f"{members(fm)} is not a face")
        pieces = {g & ~fm for g in self.facets if g & fm == fm}
        support = 0
        for p in pieces:
            support |= p
        return _reindexed(members(support), pieces, self.labels)

    def skeleton(self, i: int) -> "SimplicialComplex":
        if not 0 <= i <= max(self.dim, 0):
            raise ComplexError(f"skeleton index {i} outside 0..{self.dim}")
        if i >= self.dim:
            return self
        keep = list(self.faces_of_dim(i))
        low = [f for f in self.facets if popcount(f) <= i]
        return _canonical(self.n, keep + low, self.labels)

    def join(self, other: "SimplicialComplex") -> "SimplicialComplex":
        """Join on the disjoint union; ``other``'s vertices are shifted by ``n``."""
        if self.n + other.n > MAX_VERTICES:
            raise VertexOutOfRange("join exceeds the 64-vertex limit")
        facets = [a | (b << self.n) for a in self.facets for b in other.facets]
        return _canonical(self.n + other.n, facets)

    def cone(self) -> "SimplicialComplex":
        return self.join(simplex(0))

    # -- combinatorial predicates -------------------------------------------

    def minimal_nonfaces(self) -> tuple[int, ...]:
        """Minimal non-faces (generators of the Stanley-Reisner ideal)."""
        faces = self._face_set
        out = set()
        for g in faces:
            top = g.bit_length()
            for v in range(top, self.n):
                cand = g | (1 << v)
                if cand in faces or cand in out:
                    continue
                if all((cand & ~(1 << u)) in faces for u in members(cand)):
                    out.add(cand)
        return tuple(sorted(out, key=lambda m: (popcount(m), m)))

    def is_flag(self) -> bool:
        return all(popcount(m) == 2 for m in self.minimal_nonfaces())

    def is_r_neighborly(self, r: int) -> bool:
        if r > self.n:
            return False
        return all(to_mask(c) in self._face_set for c in combinations(range(self.n), r))

    def is_simplex(self) -> bool:
        return self.facets == (self.vertex_mask,)

    def graph_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(members(e) for e in self.faces_of_dim(1))  # type: ignore[misc]

    def __str__(self) -> str:
        body = " ".join("".join(str(v + 1) for v in f) if self.n < 10 else "-".join(map(str, f))
                        for f in self.facet_lists())
        return f"SimplicialComplex(n={self.n}, dim={self.dim}: {body})"


def _maximal(masks: Iterable[int]) -> tuple[int, ...]:
    ms = sorted(set(masks), key=lambda m: -popcount(m))
    kept: list[int] = []
    for m in ms:
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


def _canonical(n: int, masks: Iterable[int], labels: tuple[int, ...] | None = None) -> SimplicialComplex:
    facets = _maximal(masks)
    if n == 0:
        return SimplicialComplex(0, (0,), labels)
    return SimplicialComplex(n, facets, labels)


def _reindexed(keep: Sequence[int], pieces: Iterable[int], parent_labels: tuple[int, ...] | None) -> SimplicialComplex:
    pos = {v: i for i, v in enumerate(keep)}
    new = []
    for p in pieces:
        m = 0
        for v in members(p):
            m |= 1 << pos[v]
        new.append(m)
    labels = tuple(parent_labels[v] for v in keep) if parent_labels else tuple(keep)
    if not keep:
        return SimplicialComplex(0, (0,), ())
    # every kept vertex lies in some piece, so singletons are covered
    return _canonical(len(keep), new, labels)


def from_facets(n: int, facets: Iterable[Iterable[int] | int]) -> SimplicialComplex:
    """Build a complex on ``n`` vertices from (possibly redundant) facets.

    Non-maximal inputs are dropped.  Raises :class:`VertexOutOfRange` for a
    vertex ``>= n`` and :class:`GhostVertex` if some vertex lies in no facet.
    """
    if not 0 <= n <= MAX_VERTICES:
        raise VertexOutOfRange(f"n={n} outside 0..{MAX_VERTICES}")
    masks = []
    for f in facets:
        if isinstance(f, int):
            m = f
            if m < 0 or m >> n:
                raise VertexOutOfRange(f"facet mask {m:#x} has a vertex >= {n}")
        else:
            vs = list(f)
            bad = [v for v in vs if not 0 <= v < n]
            if bad:
                raise VertexOutOfRange(f"vertex {bad[0]} not in 0..{n - 1}")
            m = to_mask(vs)
        masks.append(m)
    covered = 0
    for m in masks:
        covered |= m
    if n == 0:
        return SimplicialComplex(0, (0,))
    missing = ((1 << n) - 1) & ~covered
    if missing:
        raise GhostVertex(f"vertices {list(members(missing))} appear in no facet")
    return _canonical(n, masks)


# -- generators -----------------------------------------------------------

def simplex(d: int) -> SimplicialComplex:
    """The full ``d``-simplex on ``d + 1`` vertices."""
    if d < 0:
        raise ComplexError("simplex dimension must be >= 0")
    return SimplicialComplex(d + 1, ((1 << (d + 1)) - 1,))


def boundary_of_simplex(d: int) -> SimplicialComplex:
    """Boundary of the ``d``-simplex: ``d + 1`` vertices, dimension ``d - 1``."""
    if d < 1:
        raise ComplexError("boundary_of_simplex needs d >= 1")
    full = (1 << (d + 1)) - 1
    return SimplicialComplex(d + 1, tuple(sorted(full & ~(1 << v) for v in range(d + 1))))


def cross_polytope_boundary(s: int) -> SimplicialComplex:
    """Boundary of the ``s``-dimensional cross polytope; antipodes are ``2i, 2i+1``."""
    if s < 1:
        raise ComplexError("cross polytope needs s >= 1")
    facets = []
    for choice in range(1 << s):
        facets.append(sum(1 << (2 * i + ((choice >> i) & 1)) for i in range(s)))
    return SimplicialComplex(2 * s, tuple(sorted(facets)))


def cycle(k: int) -> SimplicialComplex:
    if k < 3:
        raise ComplexError("cycle needs k >= 3")
    return from_facets(k, [(i, (i + 1) % k) for i in range(k)])


def path(k: int) -> SimplicialComplex:
    """Path graph on ``k >= 2`` vertices."""
    if k < 2:
        raise ComplexError("path needs k >= 2")
    return from_facets(k, [(i, i + 1) for i in range(k - 1)])


def gale_evenness_facets(d: int, n: int) -> list[tuple[int, ...]]:
    """Facets of the cyclic polytope C(d, n) by Gale's evenness condition."""
    out = []
    for s in combinations(range(n), d):
        members_ = set(s)
        ok = True
        outside = [v for v in range(n) if v not in members_]
        for a, b in zip(outside, outside[1:]):
            between = sum(1 for v in s if a < v < b)
            if between % 2:
                ok = False
                break
        if ok:
            out.append(s)
    return out


def cyclic_polytope_boundary(d: int, n: int) -> SimplicialComplex:
    """Boundary complex of the cyclic ``d``-polytope with ``n`` vertices."""
    if not (d >= 2 and n > d):
        raise ComplexError("cyclic polytope needs n > d >= 2")
    return from_facets(n, gale_evenness_facets(d, n))


EXAMPLE_SEVEN_FACETS = (
    "124 126 127 135 136 137 145 147 156 234 "
    "235 236 245 257 267 346 347 357 456 467 567"
).split()


def example_seven() -> SimplicialComplex:
    """Seven-vertex 2-complex with pure resolution m = M = (3, 4, 6, 7)."""
    return from_facets(7, [[int(c) - 1 for c in f] for f in EXAMPLE_SEVEN_FACETS])


def projective_plane_six() -> SimplicialComplex:
    """Six-vertex triangulation of the real projective plane."""
    tri = ["123", "134", "145", "156", "126", "235", "346", "245", "356", "246"]
    return from_facets(6, [[int(c) - 1 for c in f] for f in tri])


def torus_seven() -> SimplicialComplex:
    """Seven-vertex (Moebius-Kantor) torus."""
    facets = []
    for i in range(7):
        facets.append((i, (i + 1) % 7, (i + 3) % 7))
        facets.append((i, (i + 2) % 7, (i + 3) % 7))
    return from_facets(7, facets)


def clique_complex(n: int, edges: Iterable[tuple[int, int]]) -> SimplicialComplex:
    """Flag complex of a graph on ``n`` vertices (maximal cliques as facets)."""
    adj = [0] * n
    for a, b in edges:
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    cliques: list[int] = []

    # Bron-Kerbosch with pivoting on bitmasks
    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            cliques.append(r)
            return
        u = (p | x).bit_length() - 1
        for v in members(p & ~adj[u]):
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    expand(0, (1 << n) - 1, 0)
    return from_facets(n, cliques) if n else SimplicialComplex(0, (0,))
