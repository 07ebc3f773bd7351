"""Cross-check the family formulas against exhaustive enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import formulas as F
from .classify import ReferenceTable, Unidentified, default_table
from .enumeration import UNKNOT, ResultantDistribution, distribution, expectation
from .statesum import build_state_table, jones, orientation
from .tangle import closure_of_word, make_2n, make_21n, make_foil, make_kn

__all__ = ["Check", "word_class", "verify_formulas", "DEFAULT_RANGES"]

DEFAULT_RANGES = {"foil": 11, "2n": 8, "kn": 9, "21n": 7}


@dataclass(frozen=True)
class Check:
    theorem: str
    param: str
    formula: object
    enumerated: object

    @property
    def ok(self) -> bool:
        return self.formula == self.enumerated

    def row(self) -> tuple[str, str, str, str, str]:
        return (self.theorem, self.param, str(self.formula), str(self.enumerated), "pass" if self.ok else "FAIL")


def word_class(word: tuple[int, ...], table: ReferenceTable | None = None) -> str:
    """Name of the knot closing the Conway word with its alternating crossings."""
    table = table or default_table()
    return _word_class(tuple(word), table)


@lru_cache(maxsize=None)
def _word_class(word: tuple[int, ...], table: ReferenceTable) -> str:
    if 0 in word[1:]:
        raise ValueError("zero entries are not needed for the family classes")
    if word in ((0,), (1,)) or word[0] == 0:
        return UNKNOT
    d, bits = closure_of_word(word)
    hit = table.identify(jones(build_state_table(d), orientation(d), bits))
    if isinstance(hit, Unidentified):
        raise LookupError(f"closure of {word} is not in the reference table")
    return hit.name


def _dist(d, table, jobs) -> ResultantDistribution:
    return distribution(d, table, jobs=jobs)


def verify_formulas(
    ranges: dict[str, int] | None = None,
    table: ReferenceTable | None = None,
    jobs: int = 1,
) -> list[Check]:
    """Formula value against enumerated value, one row per claim.

    ``ranges`` caps each family: foil n, 2 n n, k n total k + n, and
    2 1 n n.
    """
    r = dict(DEFAULT_RANGES, **(ranges or {}))
    table = table or default_table()
    xnum = table.crossing_numbers()
    out: list[Check] = []

    for n in range(3, r["foil"] + 1, 2):
        dist = _dist(make_foil(n), table, jobs)
        for k in range(1, n + 1, 2):
            name = word_class((k,), table)
            out.append(Check("foil count", f"n={n} k={k}", F.foil_count(n, k), dist.count(name)))
        out.append(Check("foil total", f"n={n}", sum(F.foil_count(n, k) for k in range(1, n + 1, 2)), dist.total))
        out.append(Check("foil expectation", f"n={n}", F.foil_expectation(n), expectation(dist, xnum)))

    for n in range(1, r["2n"] + 1):
        dist = _dist(make_2n(n), table, jobs)
        out.append(Check("2 n unknots", f"n={n}", F.two_n_unknot_count(n), dist.count(UNKNOT)))
        out.append(Check("2 n trefoils", f"n={n}", F.two_n_trefoil_count(n), dist.count(word_class((2, 1), table))))
        for k in range(n % 2, n + 1, 2):
            c_k, c_k1 = F.two_n_family_count(n, k)
            if k >= 1:
                got = dist.count(word_class((2, k), table))
                out.append(Check("2 n class 2 k", f"n={n} k={k}", c_k, got))
            if k >= 2:
                got = dist.count(word_class((2, k - 1), table))
                out.append(Check("2 n class 2 k-1", f"n={n} k={k}", c_k1, got))
        out.append(Check("2 n expectation", f"n={n}", F.two_n_expectation(n), expectation(dist, xnum)))

    kn_cases = [(k, n) for k in range(1, r["kn"]) for n in range(1, r["kn"]) if k + n <= r["kn"] and not (k % 2 and n % 2)]
    kn_dists = {}
    for k, n in kn_cases:
        kn_dists[(k, n)] = _dist(make_kn(k, n), table, jobs)
        out.append(Check("k n unknots", f"k={k} n={n}", F.kn_unknot_count(k, n), kn_dists[(k, n)].count(UNKNOT)))
    for k, n in kn_cases:
        if k < n:
            a, b = kn_dists[(k, n)], kn_dists[(n, k)]
            out.append(Check("k n symmetry", f"k={k} n={n}", dict(a.counts), dict(b.counts)))

    for n in range(1, r["21n"] + 1, 2):
        dist = _dist(make_21n(n), table, jobs)
        counts = F.twoonen_counts(n)
        out.append(Check("2 1 n unknots", f"n={n}", counts.unknots, dist.count(UNKNOT)))
        seen = dist.count(UNKNOT)
        for k, v in counts.kfoil.items():
            got = dist.count(word_class((k,), table))
            seen += got
            out.append(Check("2 1 n k-foils", f"n={n} k={k}", v, got))
        got = dist.count(word_class((2, 2), table))
        seen += got
        out.append(Check("2 1 n figure eights", f"n={n}", counts.fig8, got))
        for k, v in counts.two_one_k.items():
            got = dist.count(word_class((2, 1, k), table))
            seen += got
            out.append(Check("2 1 n class 2 1 k", f"n={n} k={k}", v, got))
        out.append(Check("2 1 n classified total", f"n={n}", counts.total, seen))
    return out
