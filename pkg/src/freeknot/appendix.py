"""Reproduce the published probability tables from the shipped shape corpus.

A printed value that is a dyadic rational is taken as exact.  Anything
else is a rounded print and must agree to within 0.00005.
"""

from __future__ import annotations

import csv
import io
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .classify import ReferenceTable, default_table
from .diagram import CIRCLE, FreeDiagram, connected_sum, iter_pd_file
from .enumeration import (
    FIGURE_EIGHT,
    TREFOIL,
    UNKNOT,
    ResultantDistribution,
    distribution,
    exact_decimal,
    expectation,
)

__all__ = [
    "COLUMNS",
    "TOLERANCE",
    "AppendixRow",
    "Cell",
    "load_shape_corpus",
    "load_appendix_rows",
    "shape_for",
    "row_values",
    "compare_value",
    "reproduce",
]

COLUMNS = ("unknot_pct", "trefoil_pct", "fig8_pct", "expectation")
TOLERANCE = Fraction(5, 100000)


@dataclass(frozen=True)
class AppendixRow:
    knot: str
    values: tuple[str, str, str, str]


@dataclass(frozen=True)
class Cell:
    knot: str
    column: str
    expected: str
    got: Fraction
    exact: bool
    ok: bool

    def __str__(self):
        mode = "exact" if self.exact else "+-0.00005"
        status = "ok" if self.ok else "MISMATCH"
        return f"{self.knot:12s} {self.column:12s} expected {self.expected:>10s} got {exact_decimal(self.got):>12s} [{mode}] {status}"


def _read(name: str) -> str:
    return resources.files("freeknot.data").joinpath(name).read_text()


def load_shape_corpus(text: str | None = None) -> dict[str, FreeDiagram]:
    """Prime shapes by name; the circle stands for 0_1."""
    text = _read("rolfsen_shapes.txt") if text is None else text
    out = {}
    for pd in iter_pd_file(text):
        out[pd.name] = CIRCLE if not pd.crossings else FreeDiagram(pd.crossings, pd.name)
    return out


def load_appendix_rows(text: str | None = None) -> list[AppendixRow]:
    text = _read("appendix.csv") if text is None else text
    rows = []
    for rec in csv.DictReader(io.StringIO(text)):
        rows.append(AppendixRow(rec["knot"], tuple(rec[c].strip() for c in COLUMNS)))
    return rows


def shape_for(name: str, corpus: dict[str, FreeDiagram]) -> FreeDiagram:
    """Shape of a prime or ``#``-joined composite, summed at the lowest arcs."""
    parts = name.split("#")
    d = corpus[parts[0]]
    for p in parts[1:]:
        d = connected_sum(d, corpus[p])
    return FreeDiagram(d.crossings, name)


def row_values(dist: ResultantDistribution, xnum: dict[str, int]) -> tuple[Fraction, ...]:
    return (
        dist.probability(UNKNOT) * 100,
        dist.probability(TREFOIL) * 100,
        dist.probability(FIGURE_EIGHT) * 100,
        expectation(dist, xnum),
    )


def _is_dyadic(x: Fraction) -> bool:
    d = x.denominator
    return d & (d - 1) == 0


def compare_value(printed: str, got: Fraction) -> tuple[bool, bool]:
    """Return ``(exact_mode, ok)`` for one printed cell."""
    expected = Fraction(printed)
    if _is_dyadic(expected):
        return True, expected == got
    return False, abs(expected - got) <= TOLERANCE


def reproduce(
    rows: list[AppendixRow] | None = None,
    corpus: dict[str, FreeDiagram] | None = None,
    table: ReferenceTable | None = None,
    jobs: int = 1,
    cache_dir=None,
) -> list[Cell]:
    rows = load_appendix_rows() if rows is None else rows
    corpus = load_shape_corpus() if corpus is None else corpus
    table = table or default_table()
    xnum = table.crossing_numbers()

    def one(row: AppendixRow) -> list[Cell]:
        dist = distribution(shape_for(row.knot, corpus), table, cache_dir=cache_dir)
        cells = []
        for column, printed, got in zip(COLUMNS, row.values, row_values(dist, xnum)):
            exact, ok = compare_value(printed, got)
            cells.append(Cell(row.knot, column, printed, got, exact, ok))
        return cells

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(one, rows))
    else:
        parts = [one(r) for r in rows]
    return [c for part in parts for c in part]
