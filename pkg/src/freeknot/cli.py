"""``freeknot`` command line."""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import formulas as F
from .appendix import load_appendix_rows, load_shape_corpus, reproduce
from .classify import KNOWN_SHARED, Unidentified, build_reference_table, default_table, load_pd_data
from .diagram import FreeDiagram, iter_pd_file, parse_diagram, shape_of
from .enumeration import ResultantDistribution, distribution, exact_decimal, expectation
from .errors import FreeKnotError
from .polynomial import parse as parse_poly
from .tangle import TangleWord, closure_of_word, make_2n, make_21n, make_foil, make_kn
from .verify import DEFAULT_RANGES, verify_formulas


def _table(args):
    if args.composite_budget == 9:
        return default_table()
    return build_reference_table(load_pd_data(), args.composite_budget, shared=KNOWN_SHARED)


def read_shape(path: str) -> FreeDiagram:
    """Read either the ``crossings: n`` format or a single PD line."""
    text = Path(path).read_text()
    first = next((ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")), "")
    name = Path(path).stem
    if first.strip().startswith("crossings"):
        return parse_diagram(text, name)[0]
    pds = list(iter_pd_file(text))
    if len(pds) != 1:
        raise FreeKnotError(f"{path}: expected one diagram, found {len(pds)}")
    return shape_of(pds[0])[0]


def report(dist: ResultantDistribution, xnum: dict[str, int]) -> dict:
    return {
        "shape": dist.shape_id,
        "n": dist.n,
        "counts": dict(dist.counts),
        "probabilities": {k: exact_decimal(p) for k, p in dist.probabilities().items()},
        "expectation": exact_decimal(expectation(dist, xnum)),
    }


def _emit_report(rep: dict, fmt: str, out) -> None:
    if fmt == "json":
        json.dump(rep, out, indent=2)
        out.write("\n")
        return
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["shape", "n", "class", "count", "probability"])
    for name, k in rep["counts"].items():
        w.writerow([rep["shape"], rep["n"], name, k, rep["probabilities"][name]])
    w.writerow([rep["shape"], rep["n"], "expectation", "", rep["expectation"]])


def _emit_rows(header, rows, fmt, out) -> None:
    if fmt == "json":
        json.dump([dict(zip(header, r)) for r in rows], out, indent=2)
        out.write("\n")
        return
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)


def _budget_note(d: FreeDiagram, args) -> None:
    if d.n > args.composite_budget:
        print(
            f"freeknot: note: {d.n} crossings exceed --composite-budget {args.composite_budget}; "
            "composite resultants above the budget would be unidentified",
            file=sys.stderr,
        )


def cmd_enumerate(args, out) -> int:
    d = read_shape(args.diagram)
    _budget_note(d, args)
    table = _table(args)
    dist = distribution(d, table, jobs=args.jobs, cache_dir=args.cache)
    _emit_report(report(dist, table.crossing_numbers()), args.format, out)
    return 0


def family_shape(kind: str, params: list[int], word: str | None) -> FreeDiagram:
    if word is not None:
        w = TangleWord.parse(word)
        return closure_of_word(w, str(w))[0]
    builders = {"foil": (make_foil, 1), "2n": (make_2n, 1), "kn": (make_kn, 2), "21n": (make_21n, 1)}
    if kind not in builders:
        raise FreeKnotError(f"unknown family {kind!r}; choose foil, 2n, kn, 21n or give --word")
    fn, arity = builders[kind]
    if len(params) != arity:
        raise FreeKnotError(f"family {kind} takes {arity} integer parameter(s)")
    return fn(*params)


def cmd_family(args, out) -> int:
    d = family_shape(args.kind, args.params, args.word)
    _budget_note(d, args)
    table = _table(args)
    dist = distribution(d, table, jobs=args.jobs, cache_dir=args.cache)
    _emit_report(report(dist, table.crossing_numbers()), args.format, out)
    return 0


def cmd_reproduce_appendix(args, out) -> int:
    rows = load_appendix_rows(Path(args.table).read_text() if args.table else None)
    corpus = load_shape_corpus(Path(args.shapes).read_text() if args.shapes else None)
    if args.pd_data:
        table = build_reference_table(Path(args.pd_data).read_text(), args.composite_budget, shared=KNOWN_SHARED)
    else:
        table = _table(args)
    cells = reproduce(rows, corpus, table, jobs=args.jobs, cache_dir=args.cache)
    header = ("knot", "column", "expected", "got", "mode", "status")
    body = [
        (c.knot, c.column, c.expected, exact_decimal(c.got), "exact" if c.exact else "tolerance", "ok" if c.ok else "MISMATCH")
        for c in cells
    ]
    _emit_rows(header, body, args.format, out)
    bad = sum(not c.ok for c in cells)
    print(f"{len(cells) - bad}/{len(cells)} cells match", file=sys.stderr)
    return 1 if bad else 0


def cmd_verify_formulas(args, out) -> int:
    ranges = {k: getattr(args, k.replace("2n", "two_n").replace("21n", "two_one_n")) for k in DEFAULT_RANGES}
    checks = verify_formulas(ranges, _table(args), jobs=args.jobs)
    header = ("theorem", "param", "formula", "enumerated", "status")
    rows = [c.row() for c in checks]
    for alpha in ("3/10", "2/5", "3/5", "7/10", "3/4"):
        steps = F.recursive_max_step(Fraction(alpha))
        rows.append(("recursive max step", f"alpha={alpha}", " ".join(map(str, steps)), "", "info"))
    _emit_rows(header, rows, args.format, out)
    bad = sum(not c.ok for c in checks)
    print(f"{len(checks) - bad}/{len(checks)} formula checks pass", file=sys.stderr)
    return 1 if bad else 0


def cmd_bounds_plot(args, out) -> int:
    rows = [
        (n, f"{up.numerator}/{up.denominator}", f"{lo.numerator}/{lo.denominator}", exact_decimal(up), exact_decimal(lo))
        for n, up, lo in F.bounds_series(args.n_max)
    ]
    _emit_rows(("n", "foil_trefoil", "two_n_trefoil", "foil_decimal", "two_n_decimal"), rows, args.format, out)
    return 0


def cmd_classify_jones(args, out) -> int:
    hit = _table(args).identify(parse_poly(args.polynomial))
    if isinstance(hit, Unidentified):
        out.write("unidentified\n")
        return 1
    if args.format == "json":
        json.dump({"name": hit.name, "crossing_number": hit.crossing_number, "jones_key": str(hit.jones_key)}, out)
        out.write("\n")
    else:
        out.write(f"{hit.name},{hit.crossing_number}\n")
    return 0


def _common(fmt: str = "json") -> argparse.ArgumentParser:
    # a fresh parent per subcommand: parents share their action objects
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default=fmt)
    common.add_argument("--cache", metavar="DIR", default=None, help="distribution cache directory")
    common.add_argument("--jobs", type=int, default=1, help="worker threads (>= 1)")
    common.add_argument("--composite-budget", type=int, default=9, help="largest composite crossing number in the table")
    return common


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="freeknot", description="Resultant knot distributions of free knot diagrams.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("enumerate", parents=[_common()], help="distribution of a diagram file")
    s.add_argument("diagram")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("family", parents=[_common()], help="distribution of a tangle family member")
    s.add_argument("kind", nargs="?", default=None, help="foil, 2n, kn or 21n")
    s.add_argument("params", nargs="*", type=int)
    s.add_argument("--word", default=None, help='Conway word, e.g. "2 1 5"')
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("reproduce-appendix", parents=[_common()], help="compare against the published tables")
    s.add_argument("--pd-data", default=None, help="signed PD file for the reference table")
    s.add_argument("--shapes", default=None, help="shape corpus file")
    s.add_argument("--table", default=None, help="appendix CSV")
    s.set_defaults(func=cmd_reproduce_appendix)

    s = sub.add_parser("verify-formulas", parents=[_common()], help="formulas against enumeration")
    s.add_argument("--foil", type=int, default=DEFAULT_RANGES["foil"], help="largest foil n")
    s.add_argument("--two-n", type=int, default=DEFAULT_RANGES["2n"], help="largest 2 n n")
    s.add_argument("--kn", type=int, default=DEFAULT_RANGES["kn"], help="largest k + n")
    s.add_argument("--two-one-n", type=int, default=DEFAULT_RANGES["21n"], help="largest 2 1 n n")
    s.set_defaults(func=cmd_verify_formulas)

    s = sub.add_parser("bounds-plot", parents=[_common("csv")], help="trefoil bound curves as exact rationals")
    s.add_argument("--n-max", type=int, default=75)
    s.set_defaults(func=cmd_bounds_plot)

    s = sub.add_parser("classify-jones", parents=[_common()], help="name a Jones polynomial in A")
    s.add_argument("polynomial")
    s.set_defaults(func=cmd_classify_jones)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if args.jobs < 1:
        print("freeknot: --jobs must be at least 1", file=sys.stderr)
        return 2
    try:
        return args.func(args, out)
    except (FreeKnotError, OSError) as exc:
        print(f"freeknot: {exc}", file=sys.stderr)
        return 2


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
