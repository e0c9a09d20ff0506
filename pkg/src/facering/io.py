"""Facet files: one facet per line, 1-based vertices, '#' comments, optional ``n <int>`` header."""

from __future__ import annotations

from pathlib import Path

from .complex import ComplexError, SimplicialComplex, from_facets


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_facets(text: str) -> SimplicialComplex:
    """Parse facet-file text into a complex (vertices become 0-based)."""
    declared: int | None = None
    facets: list[tuple[int, ...]] = []
    seen_facet = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if seen_facet or declared is not None:
                raise ParseError(lineno, "the 'n <int>' header must come before any facet")
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise ParseError(lineno, f"malformed header {line!r}; expected 'n <int>'")
            declared = int(tokens[1])
            if declared > 64:
                raise ParseError(lineno, f"n={declared} exceeds the 64-vertex limit")
            continue
        face = []
        for tok in tokens:
            try:
                v = int(tok)
            except ValueError:
                raise ParseError(lineno, f"not an integer: {tok!r}") from None
            if v <= 0:
                raise ParseError(lineno, f"vertex index {v} not allowed (1-based)")
            if declared is not None and v > declared:
                raise ParseError(lineno, f"vertex {v} exceeds declared n={declared}")
            if v > 64:
                raise ParseError(lineno, f"vertex {v} exceeds the 64-vertex limit")
            face.append(v - 1)
        if len(set(face)) != len(face):
            raise ParseError(lineno, "repeated vertex in facet")
        facets.append(tuple(face))
        seen_facet = True
    if not facets and not declared:
        raise ParseError(0, "no facets")
    n = declared if declared is not None else max(max(f) for f in facets) + 1
    # declared isolated vertices become singleton facets
    covered = {v for f in facets for v in f}
    facets.extend((v,) for v in range(n) if v not in covered)
    try:
        return from_facets(n, facets)
    except ComplexError as exc:
        raise ParseError(0, str(exc)) from exc


def read_facets(path: str | Path) -> SimplicialComplex:
    return parse_facets(Path(path).read_text(encoding="utf-8"))


def format_facets(cx: SimplicialComplex, header: bool = True) -> str:
    lines = [f"n {cx.n}"] if header else []
    lines += [" ".join(map(str, f)) for f in cx.facet_lists(one_based=True)]
    return "\n".join(lines) + "\n"


def write_facets(cx: SimplicialComplex, path: str | Path) -> None:
    Path(path).write_text(format_facets(cx), encoding="utf-8")
