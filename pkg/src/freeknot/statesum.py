"""Kauffman bracket and Jones polynomial over every assignment of a shape.

All assignments of a shape smooth into the same 2^n states; only the
weights change.  The loop count of each state is computed once
(:func:`build_state_table`), after which the bracket of assignment ``a``
is ``sum_s A^(n - 2|s ^ a|) * (-A^2 - A^-2)^(loops(s) - 1)``.

State bit ``c`` = 0 joins slots (1,2),(3,0) at crossing ``c``; bit 1
joins (0,1),(2,3).  The A-smoothing joins each understrand slot to the
next slot counterclockwise, so with the (0,2) strand over (assignment
bit 0) it is the first of these and the all-A state of assignment ``a``
is ``a`` itself.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .diagram import FreeDiagram, _partners, bits_to_int, check, traversal
from .errors import LengthMismatch
from .polynomial import LOOP, LaurentPoly

__all__ = [
    "StateTable",
    "OrientationData",
    "build_state_table",
    "orientation",
    "bracket",
    "writhe",
    "jones",
    "bracket_rows",
    "jones_rows",
    "jones_counts",
]

_SMOOTHINGS = (((1, 2), (3, 0)), ((0, 1), (2, 3)))


@dataclass(frozen=True, eq=False)
class StateTable:
    shape: FreeDiagram
    loop_counts: np.ndarray

    @property
    def n(self) -> int:
        return self.shape.n


@dataclass(frozen=True)
class OrientationData:
    # arc label -> ((crossing, slot) it leaves from, (crossing, slot) it enters)
    arc_direction: dict
    # crossing signs for the all-zero assignment
    base_signs: tuple[int, ...]


def _loops(n_arcs: int, pairs: list[tuple[int, int]]) -> int:
    parent = list(range(n_arcs))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n_arcs
    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            comps -= 1
    return comps


def build_state_table(d: FreeDiagram) -> StateTable:
    check(d)
    n = d.n
    if n == 0:
        counts = np.ones(1, dtype=np.int16)
        counts.setflags(write=False)
        return StateTable(d, counts)
    index = {x: i for i, x in enumerate(d.arcs)}
    # per crossing, the arc pairs joined by each smoothing
    joins = []
    for labels in d.crossings:
        idx = [index[x] for x in labels]
        joins.append(
            [[(idx[p], idx[q]) for p, q in smoothing] for smoothing in _SMOOTHINGS]
        )
    counts = np.empty(1 << n, dtype=np.int16)
    n_arcs = len(index)
    for s in range(1 << n):
        pairs = []
        for c in range(n):
            pairs.extend(joins[c][(s >> c) & 1])
        counts[s] = _loops(n_arcs, pairs)
    counts.setflags(write=False)
    return StateTable(d, counts)


def orientation(d: FreeDiagram) -> OrientationData:
    if d.is_circle():
        return OrientationData({1: None}, ())
    partner = _partners(d)
    arc_direction = {}
    over_in: dict[int, int] = {}
    under_in: dict[int, int] = {}
    for c, s_in, s_out in traversal(d):
        label = d.crossings[c][s_out]
        arc_direction[label] = ((c, s_out), partner[(c, s_out)])
        (over_in if s_in % 2 == 0 else under_in)[c] = s_in
    signs = tuple(
        1 if under_in[c] == (over_in[c] + 1) % 4 else -1 for c in range(d.n)
    )
    return OrientationData(arc_direction, signs)


def _as_int(a: Sequence[int] | int, n: int) -> int:
    if isinstance(a, (int, np.integer)):
        if not 0 <= a < (1 << n) and not (n == 0 and a == 0):
            raise LengthMismatch(f"assignment {a} out of range for {n} crossings")
        return int(a)
    if len(a) != n:
        raise LengthMismatch(f"assignment has {len(a)} bits, shape has {n} crossings")
    return bits_to_int(a)


def _popcounts(n: int) -> np.ndarray:
    size = 1 << n
    pc = np.zeros(size, dtype=np.int16)
    for c in range(n):
        pc += (np.arange(size) >> c) & 1
    return pc


def _weight_matrix(n: int) -> np.ndarray:
    """Row ``d*(n+2) + L`` holds A^(n-2d) * loop^(L-1), columns offset by 3n."""
    width = 6 * n + 1
    rows = np.zeros(((n + 1) * (n + 2), width), dtype=np.int64)
    loop_pows = [LaurentPoly({0: 1})]
    for _ in range(n):
        loop_pows.append(loop_pows[-1] * LOOP)
    for d in range(n + 1):
        for L in range(1, n + 2):
            poly = loop_pows[L - 1].shift(n - 2 * d)
            for e, c in poly.items():
                rows[d * (n + 2) + L, e + 3 * n] = c
    return rows


def bracket_rows(t: StateTable, assignments: np.ndarray) -> np.ndarray:
    """Dense bracket coefficients for each assignment; column j is A^(j - 3n)."""
    n = t.n
    assignments = np.asarray(assignments, dtype=np.int64)
    if n == 0:
        return np.ones((len(assignments), 1), dtype=np.int64)
    states = np.arange(1 << n, dtype=np.int64)
    pc = _popcounts(n)
    loops = t.loop_counts.astype(np.int64)
    K = (n + 1) * (n + 2)
    weights = _weight_matrix(n)
    out = np.empty((len(assignments), 6 * n + 1), dtype=np.int64)
    chunk = max(1, (1 << 20) >> n)
    for lo in range(0, len(assignments), chunk):
        rows = assignments[lo : lo + chunk]
        dist = pc[rows[:, None] ^ states[None, :]].astype(np.int64)
        key = dist * (n + 2) + loops[None, :]
        key += (np.arange(len(rows), dtype=np.int64) * K)[:, None]
        hist = np.bincount(key.ravel(), minlength=len(rows) * K).reshape(len(rows), K)
        out[lo : lo + len(rows)] = hist @ weights
    return out


def _writhes(o: OrientationData, assignments: np.ndarray, n: int) -> np.ndarray:
    w = np.zeros(len(assignments), dtype=np.int64)
    for c, sign in enumerate(o.base_signs):
        bit = (assignments >> c) & 1
        w += sign * (1 - 2 * bit)
    return w


def jones_rows(t: StateTable, o: OrientationData, assignments: np.ndarray) -> np.ndarray:
    """Dense Jones coefficients in A; column j is A^(j - 6n)."""
    n = t.n
    assignments = np.asarray(assignments, dtype=np.int64)
    br = bracket_rows(t, assignments)
    if n == 0:
        return br
    w = _writhes(o, assignments, n)
    out = np.zeros((len(assignments), 12 * n + 1), dtype=np.int64)
    for value in np.unique(w):
        sel = w == value
        start = 3 * n - 3 * int(value)
        sign = -1 if value % 2 else 1
        out[sel, start : start + 6 * n + 1] = sign * br[sel]
    return out


def _row_to_poly(row: np.ndarray, offset: int) -> LaurentPoly:
    return LaurentPoly.from_dense(-offset, (int(x) for x in row))


def bracket(t: StateTable, a: Sequence[int] | int) -> LaurentPoly:
    value = _as_int(a, t.n)
    row = bracket_rows(t, np.array([value]))[0]
    return _row_to_poly(row, 3 * t.n)


def writhe(d: FreeDiagram, o: OrientationData, a: Sequence[int] | int) -> int:
    value = _as_int(a, d.n)
    return int(sum(s * (1 - 2 * ((value >> c) & 1)) for c, s in enumerate(o.base_signs)))


def jones(t: StateTable, o: OrientationData, a: Sequence[int] | int) -> LaurentPoly:
    value = _as_int(a, t.n)
    row = jones_rows(t, o, np.array([value]))[0]
    return _row_to_poly(row, 6 * t.n)


def jones_counts(
    t: StateTable,
    o: OrientationData,
    jobs: int = 1,
    chunks: int | None = None,
) -> dict[LaurentPoly, int]:
    """Tally Jones polynomials over all 2^n assignments.

    The assignment space is split into contiguous ranges that are
    evaluated independently and merged by summation.
    """
    n = t.n
    total = 1 << n
    if chunks is None:
        chunks = max(1, min(total, 4 * jobs))
    bounds = [total * k // chunks for k in range(chunks + 1)]
    ranges = [(bounds[k], bounds[k + 1]) for k in range(chunks) if bounds[k] < bounds[k + 1]]

    def work(r):
        rows = jones_rows(t, o, np.arange(r[0], r[1], dtype=np.int64))
        uniq, counts = np.unique(rows, axis=0, return_counts=True)
        offset = 6 * n if n else 0
        return {_row_to_poly(u, offset): int(k) for u, k in zip(uniq, counts)}

    if jobs > 1 and len(ranges) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(work, ranges))
    else:
        parts = [work(r) for r in ranges]
    merged: dict[LaurentPoly, int] = {}
    for part in parts:
        for poly, k in part.items():
            merged[poly] = merged.get(poly, 0) + k
    return merged
