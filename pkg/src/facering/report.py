"""Per-complex report document with a versioned, lossless JSON form."""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from . import __version__
from .bounds import bound_report
from .classify import classify_flag
from .cm import cm_summary
from .complex import SimplicialComplex, example_seven
from .homology import FieldSpec, reduced_betti
from .hochster import betti_table, shift_profile

SCHEMA = 1

# A claim printed alongside the seven-vertex example that its own facet list contradicts.
DOCUMENTED_F2_EXAMPLE_SEVEN = 12


def frac_str(x: Fraction | int) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_frac(s: str) -> Fraction:
    num, den = s.split("/")
    return Fraction(int(num), int(den))


@dataclass
class ShiftSection:
    m: list[int]
    M: list[int]
    length: int
    codim: int
    upper_skips: list[int]
    lower_skips: list[int]
    regularity: int
    pure: bool
    quasi_pure: bool


@dataclass
class BoundSection:
    e: int
    U: Fraction
    L: Fraction
    upper_holds: bool
    upper_equality: bool
    lower_holds: bool | None
    lower_equality: bool | None
    skip_expression: Fraction


@dataclass
class FieldSection:
    field: str
    reduced_betti: list[int]
    betti_table: list[list[int]]  # [i, j, beta_ij], sorted
    shifts: ShiftSection | None  # None for a simplex
    bounds: BoundSection
    cohen_macaulay: bool
    gorenstein_star: bool
    gorenstein: bool
    homology_manifold: bool
    orientable: bool
    classification: dict[str, Any] | None


@dataclass
class ReportDocument:
    source: str
    n: int
    d: int
    facets: list[list[int]]
    f_vector: list[int]
    h_vector: list[int]
    flag: bool
    fields: list[FieldSection]
    discrepancies: list[str] = field(default_factory=list)
    divergences: list[dict[str, Any]] = field(default_factory=list)
    elapsed_s: float = 0.0
    version: str = __version__
    schema: int = SCHEMA

    @property
    def violation(self) -> bool:
        """A counterexample to either bound was found (never expected)."""
        return any(not s.bounds.upper_holds or s.bounds.lower_holds is False for s in self.fields)

    # -- serialization ----------------------------------------------------------

    def to_dict(self) -> dict[str, Any]:
        return _encode(asdict(self))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ReportDocument":
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {data.get('schema')!r}")
        data = dict(data)
        sections = []
        for raw in data.pop("fields"):
            raw = dict(raw)
            b = dict(raw.pop("bounds"))
            for k in ("U", "L", "skip_expression"):
                b[k] = parse_frac(b[k])
            sh = raw.pop("shifts")
            sections.append(FieldSection(shifts=ShiftSection(**sh) if sh is not None else None,
                                         bounds=BoundSection(**b), **raw))
        return cls(fields=sections, **data)

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        return cls.from_dict(json.loads(text))

    # -- text -------------------------------------------------------------------

    def format(self) -> str:
        out = [f"complex: {self.source}  (n={self.n}, d={self.d}, dim={self.d - 1}, {len(self.facets)} facets)",
               f"f-vector (f_-1..): {self.f_vector}",
               f"h-vector: {self.h_vector}",
               f"flag: {'yes' if self.flag else 'no'}"]
        for s in self.fields:
            out.append(f"-- field {s.field}")
            out.append(f"  reduced Betti (b_-1..): {s.reduced_betti}")
            if s.shifts is None:
                out.append("  ideal is zero (simplex): empty shift sequences, U = L = 1")
            else:
                sh = s.shifts
                out.append(f"  m = {tuple(sh.m)}  M = {tuple(sh.M)}  length={sh.length} codim={sh.codim}")
                out.append(f"  upper skips {tuple(sh.upper_skips)}  lower skips {tuple(sh.lower_skips)}"
                           f"  regularity {sh.regularity}")
                out.append(f"  pure: {_yn(sh.pure)}  quasi-pure: {_yn(sh.quasi_pure)}")
                out.append("  Betti table (row r, column i holds beta_{i,i+r}):")
                out.extend("    " + line for line in _grid(s.betti_table))
            b = s.bounds
            out.append(f"  e = {b.e}  U = {_q(b.U)}  L = {_q(b.L)}  skip expression = {_q(b.skip_expression)}")
            out.append(f"  e <= U: {_yn(b.upper_holds)}{' (equality)' if b.upper_equality else ''}")
            if b.lower_holds is None:
                out.append("  e >= L: n/a (not Cohen-Macaulay)")
            else:
                out.append(f"  e >= L: {_yn(b.lower_holds)}{' (equality)' if b.lower_equality else ''}")
            out.append(f"  Cohen-Macaulay: {_yn(s.cohen_macaulay)}  Gorenstein*: {_yn(s.gorenstein_star)}"
                       f"  Gorenstein: {_yn(s.gorenstein)}")
            out.append(f"  homology manifold: {_yn(s.homology_manifold)}  orientable: {_yn(s.orientable)}")
            if s.classification is not None:
                out.append(f"  flag classification: {s.classification['describe']}")
        for note in self.discrepancies:
            out.append(f"DISCREPANCY: {note}")
        for div in self.divergences:
            out.append(f"field divergence: {div['predicate']} {div['values']}")
        return "\n".join(out)


def _yn(x: bool) -> str:
    return "yes" if x else "no"


def _q(x: Fraction) -> str:
    return str(x)


def _grid(entries: Sequence[Sequence[int]]) -> list[str]:
    table = {(i, j): b for i, j, b in entries}
    length = max((i for i, _, _ in entries), default=0)
    reg = max((j - i for i, j, _ in entries), default=0)
    rows = [[1 if (i, r) == (0, 0) else table.get((i, i + r), 0) for i in range(length + 1)]
            for r in range(reg + 1)]
    width = max([len(str(x)) for row in rows for x in row] + [len(str(length))])
    lines = ["      " + " ".join(str(i).rjust(width) for i in range(length + 1))]
    for r, row in enumerate(rows):
        lines.append(f"{r:>4}: " + " ".join(("." if x == 0 else str(x)).rjust(width) for x in row))
    return lines


def _encode(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return frac_str(obj)
    if isinstance(obj, dict):
        return {k: _encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_encode(v) for v in obj]
    return obj


# -- building ----------------------------------------------------------------------

def _field_section(cx: SimplicialComplex, fld: FieldSpec, budget: int | None) -> FieldSection:
    kw = {} if budget is None else {"budget": budget}
    table = betti_table(cx, fld, **kw)
    simplex = cx.n == 0 or cx.is_simplex()
    shifts = None
    if not simplex:
        p = shift_profile(cx, fld, **kw)
        shifts = ShiftSection(list(p.m), list(p.M), p.length, p.codim, list(p.upper_skips),
                              list(p.lower_skips), p.regularity, p.is_pure, p.is_quasi_pure)
    r = bound_report(cx, fld)
    bounds = BoundSection(r.e, r.U, r.L, r.upper_holds, r.upper_equality, r.lower_holds,
                          r.lower_equality, r.skip_expression)
    cms = cm_summary(cx, fld)
    classification = None
    if cx.is_flag():
        cl = classify_flag(cx, fld)
        classification = {"category": cl.category.value, "describe": cl.describe(),
                          "simplex_dim": cl.simplex_dim, "cycle_length": cl.cycle_length, "s": cl.s,
                          "cone_vertices": [v + 1 for v in cl.cone_vertices],
                          "core_vertices": [v + 1 for v in cl.core_vertices], "note": cl.note}
    return FieldSection(
        field=fld.name,
        reduced_betti=list(reduced_betti(cx, fld)),
        betti_table=[[i, j, b] for (i, j), b in sorted(table.entries.items())],
        shifts=shifts, bounds=bounds,
        cohen_macaulay=cms.cohen_macaulay, gorenstein_star=cms.gorenstein_star, gorenstein=cms.gorenstein,
        homology_manifold=cms.homology_manifold, orientable=cms.orientable,
        classification=classification,
    )


def discrepancies_for(cx: SimplicialComplex) -> list[str]:
    notes = []
    if cx == example_seven():
        f2 = cx.f_vector()[3]
        if f2 != DOCUMENTED_F2_EXAMPLE_SEVEN:
            notes.append(f"documented f_2 = {DOCUMENTED_F2_EXAMPLE_SEVEN} for the seven-vertex example; "
                         f"recomputed from its facet list: f_2 = {f2} (= U = 3*4*6*7/4!)")
    return notes


_PREDICATES = ("cohen_macaulay", "gorenstein_star", "gorenstein", "homology_manifold", "orientable")


def build_report(cx: SimplicialComplex, fields: Sequence[FieldSpec], source: str = "",
                 budget: int | None = None) -> ReportDocument:
    t0 = time.perf_counter()
    sections = [_field_section(cx, f, budget) for f in fields]
    divergences = []
    if len(sections) > 1:
        for pred in _PREDICATES:
            vals = {s.field: getattr(s, pred) for s in sections}
            if len(set(vals.values())) > 1:
                divergences.append({"predicate": pred, "values": vals})
        bettis = {s.field: s.reduced_betti for s in sections}
        if len({tuple(v) for v in bettis.values()}) > 1:
            divergences.append({"predicate": "reduced_betti", "values": bettis})
    return ReportDocument(
        source=source, n=cx.n, d=cx.d,
        facets=[list(f) for f in cx.facet_lists(one_based=True)],
        f_vector=list(cx.f_vector()), h_vector=list(cx.h_vector()), flag=cx.is_flag(),
        fields=sections, discrepancies=discrepancies_for(cx), divergences=divergences,
        elapsed_s=round(time.perf_counter() - t0, 6),
    )
