"""Independent reference computations used only by the tests.

Nothing here imports the engine.  The bracket is resolved by the naive
skein recursion, one crossing at a time, on plain dict polynomials.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

DATA = Path(__file__).parent / "data"


def padd(p, q):
    out = dict(p)
    for e, c in q.items():
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def pmul(p, q):
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def shift(p, k):
    return {e + k: c for e, c in p.items()}


LOOP = {2: -1, -2: -1}


def _components(arcs, pairs):
    adj = {a: [] for a in arcs}
    for x, y in pairs:
        adj[x].append(y)
        adj[y].append(x)
    seen, comps = set(), 0
    for a in adj:
        if a in seen:
            continue
        comps += 1
        stack = [a]
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(adj[v])
    return comps


def naive_bracket(crossings, bits):
    """Bracket of a signed diagram by direct recursion over the crossings.

    ``bits[c]`` = 0 puts slots (0,2) over at crossing ``c``, 1 puts (1,3)
    over.  The A-smoothing joins each understrand slot to the next slot
    counterclockwise.  Returns ``{exponent: coefficient}``.
    """
    crossings = [tuple(c) for c in crossings]
    if not crossings:
        return {0: 1}
    arcs = sorted({x for c in crossings for x in c})

    def rec(i, pairs):
        if i == len(crossings):
            loops = _components(arcs, pairs)
            value = {0: 1}
            for _ in range(loops - 1):
                value = pmul(value, LOOP)
            return value
        c = crossings[i]
        under = (1, 3) if bits[i] == 0 else (0, 2)
        a_pairs = [(c[u], c[(u + 1) % 4]) for u in under]
        b_pairs = [(c[u], c[(u - 1) % 4]) for u in under]
        return padd(shift(rec(i + 1, pairs + a_pairs), 1), shift(rec(i + 1, pairs + b_pairs), -1))

    return rec(0, [])


def t_to_a(text):
    """Convert a KnotInfo-style Jones string in t to ``{A exponent: coeff}`` with t = A^-4."""
    s = text.replace(" ", "").replace("*", "")
    out = {}
    for sign, coef, var, exp in re.findall(r"([+-]?)(\d*)(t?)(?:\^\(?(-?\d+)\)?)?", s):
        if not (coef or var):
            continue
        c = int(coef) if coef else 1
        if sign == "-":
            c = -c
        e = (int(exp) if exp else 1) if var else 0
        out[-4 * e] = out.get(-4 * e, 0) + c
    return {e: c for e, c in out.items() if c}


def knotinfo_jones():
    """KnotInfo Jones polynomials of the primes through nine crossings, in A."""
    raw = json.loads((DATA / "knotinfo_jones.json").read_text())
    return {name: t_to_a(v) for name, v in raw.items()}
