"""Exact resultant distributions over all assignments of a shape."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Mapping

from . import __version__
from .classify import ReferenceTable, Unidentified, default_table
from .diagram import FreeDiagram, canonical_code, check, traversal
from .errors import MissingCrossingNumber, UnidentifiedResultant
from .statesum import build_state_table, jones, jones_counts, orientation

__all__ = [
    "ResultantDistribution",
    "distribution",
    "descent_unknot_assignments",
    "expectation",
    "trefoil_exists",
    "exact_decimal",
    "UNKNOT",
    "TREFOIL",
    "FIGURE_EIGHT",
]

UNKNOT = "0_1"
TREFOIL = "3_1"
FIGURE_EIGHT = "4_1"


@dataclass(frozen=True)
class ResultantDistribution:
    shape_id: str
    n: int
    counts: Mapping[str, int] = field(hash=False)

    def __post_init__(self):
        ordered = dict(sorted(self.counts.items(), key=lambda kv: _name_order(kv[0])))
        object.__setattr__(self, "counts", ordered)
        if sum(ordered.values()) != self.total:
            raise ValueError(f"counts sum to {sum(ordered.values())}, expected {self.total}")

    @property
    def total(self) -> int:
        return 1 << self.n

    def count(self, name: str) -> int:
        return self.counts.get(name, 0)

    def probability(self, name: str) -> Fraction:
        return Fraction(self.count(name), self.total)

    def probabilities(self) -> dict[str, Fraction]:
        return {k: Fraction(v, self.total) for k, v in self.counts.items()}


def _name_order(name: str):
    parts = []
    for piece in name.replace("|", "#").split("#"):
        head, _, tail = piece.partition("_")
        parts.append((int(head), int(tail)) if head.isdigit() and tail.isdigit() else (99, 0))
    return (sum(p[0] for p in parts), len(parts), parts, name)


def _cache_path(cache_dir: Path, d: FreeDiagram, table: ReferenceTable) -> Path:
    tag = repr((canonical_code(d), __version__, table.signature()))
    return cache_dir / (hashlib.sha256(tag.encode()).hexdigest() + ".json")


def distribution(
    d: FreeDiagram,
    table: ReferenceTable | None = None,
    jobs: int = 1,
    cache_dir: str | Path | None = None,
) -> ResultantDistribution:
    """Classify every one of the 2^n assignments of ``d`` and tally.

    Raises :class:`UnidentifiedResultant` listing any Jones value missing
    from the table.
    """
    check(d)
    table = table or default_table()
    shape_id = d.name or "shape"
    path = None
    if cache_dir is not None:
        path = _cache_path(Path(cache_dir), d, table)
        if path.exists():
            counts = json.loads(path.read_text())
            return ResultantDistribution(shape_id, d.n, counts)
    t = build_state_table(d)
    o = orientation(d)
    counts: dict[str, int] = {}
    missing = []
    for poly, k in jones_counts(t, o, jobs=jobs).items():
        hit = table.identify(poly)
        if isinstance(hit, Unidentified):
            missing.append(poly)
            continue
        counts[hit.name] = counts.get(hit.name, 0) + k
    if missing:
        raise UnidentifiedResultant(shape_id, sorted(missing))
    dist = ResultantDistribution(shape_id, d.n, counts)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(dist.counts, sort_keys=True))
    return dist


def descent_unknot_assignments(d: FreeDiagram) -> set[tuple[int, ...]]:
    """Climb-and-descend unknots, one per starting arc and direction.

    Walking from the chosen arc, the strand being travelled is made the
    overstrand at every crossing not yet assigned.
    """
    check(d)
    if d.n == 0:
        return {()}
    forward = traversal(d)
    backward = [(c, s_out, s_in) for c, s_in, s_out in reversed(forward)]
    out = set()
    for passages in (forward, backward):
        m = len(passages)
        for start in range(m):
            bits: dict[int, int] = {}
            for k in range(m):
                c, s_in, _ = passages[(start + k) % m]
                bits.setdefault(c, s_in % 2)
            out.add(tuple(bits[c] for c in range(d.n)))
    return out


def expectation(dist: ResultantDistribution, xnum: Mapping[str, int]) -> Fraction:
    total = Fraction(0)
    for name, k in dist.counts.items():
        if name not in xnum:
            raise MissingCrossingNumber(name)
        total += Fraction(k * xnum[name], dist.total)
    return total


def trefoil_exists(d: FreeDiagram, table: ReferenceTable | None = None) -> bool:
    if d.n < 3:
        return False
    return distribution(d, table).count(TREFOIL) > 0


def exact_decimal(x: Fraction, scale: int = 1) -> str:
    """Terminating decimal expansion of ``x * scale``; the denominator must
    have no prime factors other than 2 and 5."""
    x = Fraction(x) * scale
    num, den = x.numerator, x.denominator
    k = 0
    while den % 10 == 0:
        den //= 10
        k += 1
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        raise ValueError(f"{x} has no terminating decimal expansion")
    digits = k + max(twos, fives)
    scaled = num * 10**digits // x.denominator
    sign = "-" if scaled < 0 else ""
    s = str(abs(scaled)).rjust(digits + 1, "0")
    whole, frac = s[: len(s) - digits], s[len(s) - digits :]
    frac = frac.rstrip("0")
    return sign + whole + ("." + frac if frac else "")
