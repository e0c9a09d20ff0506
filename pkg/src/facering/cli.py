"""Command line: ``facering report | sweep | certify-flag``.

Exit codes: 0 success, 1 input or budget error, 2 a bound violation was found.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from pathlib import Path
from typing import Callable, Sequence

from . import __version__
from .complex import (
    ComplexError, SimplicialComplex, boundary_of_simplex, cross_polytope_boundary, cycle,
    cyclic_polytope_boundary, example_seven, path, projective_plane_six, simplex, torus_seven,
)
from .homology import MULTI_FIELDS, FieldSpec
from .hochster import ResourceLimit
from .io import ParseError, read_facets

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2


class UsageError(ValueError):
    pass


GENERATORS: dict[str, tuple[int, Callable[..., SimplicialComplex], str]] = {
    "example7": (0, example_seven, "seven-vertex 2-dimensional example with 21 facets"),
    "rp2": (0, projective_plane_six, "six-vertex real projective plane"),
    "torus7": (0, torus_seven, "seven-vertex torus"),
    "simplex": (1, simplex, "simplex:d, the full d-simplex"),
    "boundary": (1, boundary_of_simplex, "boundary:d, boundary of the d-simplex"),
    "cross": (1, cross_polytope_boundary, "cross:s, boundary of the s-dimensional cross polytope"),
    "cycle": (1, cycle, "cycle:k, the k-cycle"),
    "path": (1, path, "path:k, the path on k vertices"),
    "cyclic": (2, cyclic_polytope_boundary, "cyclic:d:n, boundary of the cyclic d-polytope on n vertices"),
}


def parse_gen(spec: str) -> SimplicialComplex:
    name, *params = spec.split(":")
    if name not in GENERATORS:
        raise UsageError(f"unknown generator {name!r}; choose from {', '.join(sorted(GENERATORS))}")
    arity, fn, help_text = GENERATORS[name]
    if len(params) != arity:
        raise UsageError(f"generator {name!r} takes {arity} parameter(s): {help_text}")
    try:
        args = [int(p) for p in params]
    except ValueError:
        raise UsageError(f"generator parameters must be integers: {spec!r}") from None
    try:
        return fn(*args)
    except (ValueError, ComplexError) as exc:
        raise UsageError(f"{spec}: {exc}") from exc


def parse_fields(text: str) -> tuple[FieldSpec, ...]:
    if text.strip().lower() == "multi":
        return MULTI_FIELDS
    try:
        return (FieldSpec.parse(text),)
    except ValueError:
        raise UsageError(f"--field expects 2, an odd prime, Q or multi; got {text!r}") from None


def _load(args) -> tuple[SimplicialComplex, str]:
    if args.gen and args.path:
        raise UsageError("give either a facet file or --gen, not both")
    if args.gen:
        return parse_gen(args.gen), args.gen
    if not args.path:
        raise UsageError("need a facet file or --gen NAME[:PARAMS]")
    try:
        return read_facets(args.path), args.path
    except OSError as exc:
        raise UsageError(f"cannot read {args.path}: {exc.strerror}") from exc


def _write_json(path: str | None, text: str) -> None:
    if path is None:
        return
    if path == "-":
        sys.stdout.write(text + "\n")
    else:
        Path(path).write_text(text + "\n", encoding="utf-8")


def cmd_report(args) -> int:
    from .report import build_report
    cx, source = _load(args)
    doc = build_report(cx, parse_fields(args.field), source, budget=args.budget)
    if args.json != "-":
        print(doc.format())
        print(f"time: {doc.elapsed_s:.3f} s  (facering {__version__})")
    _write_json(args.json, doc.to_json())
    return EXIT_VIOLATION if doc.violation else EXIT_OK


def cmd_sweep(args) -> int:
    from .sweep import run_sweep
    if args.n_min > args.n_max or args.dim_min > args.dim_max or args.count < 0:
        raise UsageError("invalid sweep ranges")
    t0 = time.perf_counter()
    try:
        summary = run_sweep(args.seed, args.count, (args.n_min, args.n_max), (args.dim_min, args.dim_max),
                            parse_fields(args.field), facets=args.facets, include_generators=args.generators)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.json != "-":
        print(summary.format())
    # timing goes to stderr so stdout stays byte-identical across runs
    print(f"time: {time.perf_counter() - t0:.2f} s", file=sys.stderr)
    _write_json(args.json, summary.to_json())
    if summary.bound_violations or (args.strict and summary.invariant_failures):
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_certify_flag(args) -> int:
    import json
    from dataclasses import asdict
    from .classify import pure_flag_exhaustive
    fields = parse_fields(args.field)
    if len(fields) != 1:
        raise UsageError("certify-flag runs over a single field")
    rec = pure_flag_exhaustive(args.n_max, fields[0], force=args.force)
    if args.json != "-":
        print(f"flag complexes on <= {rec.n_max} vertices over {rec.field}: {rec.complexes_checked} checked, "
              f"{rec.pure} with a pure resolution")
        for cat in sorted(rec.categories):
            print(f"  {cat}: {rec.categories[cat]}")
        print(f"constructed joins checked: {rec.constructions_checked}")
        for label, items in (("unclassified", rec.unclassified), ("witness failure", rec.witness_failures),
                             ("impure construction", rec.construction_failures)):
            for item in items:
                print(f"  {label}: {item}")
        print("certified" if rec.certified else "NOT certified")
    _write_json(args.json, json.dumps({**asdict(rec), "certified": rec.certified}, indent=2, sort_keys=True))
    return EXIT_OK if rec.certified else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="facering", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"facering {__version__}")
    p.add_argument("--workers", type=int, default=None,
                   help="processes for the 2^n subset sweep (default 1)")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--field", default="2", help="2, an odd prime p, Q, or multi (GF(2), GF(3), Q)")
        sp.add_argument("--json", metavar="PATH", help="write the JSON document here ('-' for stdout only)")

    r = sub.add_parser("report", help="Betti table, shifts, bounds and predicates of one complex")
    r.add_argument("path", nargs="?", help="facet file (1-based vertices, '#' comments, optional 'n <int>')")
    r.add_argument("--gen", metavar="NAME[:PARAMS]",
                   help="built-in complex: " + ", ".join(sorted(GENERATORS)))
    r.add_argument("--budget", type=int, default=None, help="largest n allowed for the 2^n sweep")
    common(r)
    r.set_defaults(func=cmd_report)

    s = sub.add_parser("sweep", help="run the invariant battery on seeded random complexes")
    s.add_argument("--seed", type=int, default=1)
    s.add_argument("--count", type=int, default=500)
    s.add_argument("--n-min", type=int, default=3)
    s.add_argument("--n-max", type=int, default=8)
    s.add_argument("--dim-min", type=int, default=0)
    s.add_argument("--dim-max", type=int, default=3)
    s.add_argument("--facets", type=int, default=None, help="fixed facet count (default: uniform)")
    s.add_argument("--generators", action="store_true", help="also check every built-in generator")
    s.add_argument("--strict", action="store_true", help="exit 2 on any invariant failure, not only bounds")
    common(s)
    s.set_defaults(func=cmd_sweep)

    c = sub.add_parser("certify-flag", help="classify every flag complex with a pure resolution")
    c.add_argument("n_max", type=int, nargs="?", default=None)
    c.add_argument("--budget", type=int, default=None, help="same as n_max")
    c.add_argument("--force", action="store_true", help="run past the default limit of 7 vertices")
    common(c)
    c.set_defaults(func=cmd_certify_flag)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.workers:
        os.environ["FACERING_WORKERS"] = str(args.workers)
    if args.command == "certify-flag":
        args.n_max = args.n_max if args.n_max is not None else args.budget
        if args.n_max is None:
            parser.error("certify-flag needs n_max")
    try:
        return args.func(args)
    except (ParseError, UsageError, ComplexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
