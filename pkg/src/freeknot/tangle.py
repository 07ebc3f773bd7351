"""Conway rational tangles: words, fractions, Schubert equivalence and closures.

A tangle is held as a partial rotation system whose four boundary ends
are named NE, NW, SW, SE (counterclockwise).  Every crossing is stored
with its slots in the same compass order, so slots (0, 2) are the
NE-SW strand and (1, 3) the NW-SE strand.  A horizontal twist of
``a > 0`` crossings puts the NE-SW strand over everywhere (bit 0);
negative twists use bit 1.

A word ``[a1, ..., ak]`` is built left to right: start from the twist
``a1`` and, for each further entry, reflect the running tangle in its
NW-SE diagonal and add a horizontal twist on the right.  The fraction
is therefore ``ak + 1/(... + 1/a1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as _Q
from math import gcd
from typing import Iterable, Mapping, Sequence

from .diagram import CIRCLE, FreeDiagram, check, relabel_canonical
from .errors import MultiComponent, NonpositiveP, ParityViolation

__all__ = [
    "TangleWord",
    "Fraction",
    "Tangle",
    "INFINITY",
    "fraction",
    "schubert_equivalent",
    "twist",
    "build",
    "reflect",
    "rotate180",
    "add",
    "join",
    "numerator_closure",
    "closure_of_word",
    "make_foil",
    "make_2n",
    "make_kn",
    "make_21n",
    "four_tangle_layout",
]

ENDS = ("NE", "NW", "SW", "SE")


@dataclass(frozen=True)
class TangleWord:
    integers: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "integers", tuple(int(x) for x in self.integers))
        if not self.integers:
            raise ValueError("a tangle word needs at least one integer")

    @classmethod
    def parse(cls, text: str) -> "TangleWord":
        return cls(tuple(int(x) for x in text.split()))

    def __str__(self):
        return " ".join(str(x) for x in self.integers)


@dataclass(frozen=True)
class Fraction:
    """Reduced ``p/q`` with ``p >= 0``; the sign lives on ``q``.  Infinity is ``1/0``."""

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if p == 0 and q == 0:
            raise ZeroDivisionError("0/0 is not a tangle fraction")
        g = gcd(p, q)
        p, q = p // g, q // g
        if p < 0 or (p == 0 and q < 0):
            p, q = -p, -q
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    def __str__(self):
        if self.q < 0:
            return f"-{self.p}/{-self.q}"
        return f"{self.p}/{self.q}"


INFINITY = Fraction(1, 0)


def fraction(w: TangleWord | Sequence[int]) -> Fraction:
    ints = w.integers if isinstance(w, TangleWord) else tuple(w)
    if not ints:
        raise ValueError("empty tangle word")
    value: _Q | None = _Q(ints[0])  # None stands for infinity
    for a in ints[1:]:
        if value is None:
            value = _Q(a)  # 1/inf = 0
        elif value == 0:
            value = None
        else:
            value = a + 1 / value
    if value is None:
        return INFINITY
    return Fraction(value.numerator, value.denominator)


def schubert_equivalent(f1: Fraction, f2: Fraction, collapse_mirror: bool = False) -> bool:
    """Whether the numerator closures of two rational tangles are isotopic."""
    if f1.p <= 0 or f2.p <= 0:
        raise NonpositiveP(f"p must be positive, got {f1} and {f2}")
    if f1.p != f2.p:
        return False
    p = f1.p
    candidates = [f2.q]
    if collapse_mirror:
        candidates.append(p - f2.q)
    for q2 in candidates:
        if (f1.q - q2) % p == 0 or (f1.q * q2 - 1) % p == 0:
            return True
    return False


# -- tangle diagrams --------------------------------------------------------------


@dataclass(frozen=True)
class Tangle:
    crossings: tuple[tuple[int, int, int, int], ...]
    bits: tuple[int, ...]
    ends: Mapping[str, int]

    def labels(self) -> set[int]:
        out = {x for c in self.crossings for x in c}
        out.update(self.ends.values())
        return out

    def offset(self, k: int) -> "Tangle":
        return Tangle(
            tuple(tuple(x + k for x in c) for c in self.crossings),
            self.bits,
            {e: x + k for e, x in self.ends.items()},
        )


def twist(a: int) -> Tangle:
    """Horizontal integer tangle with ``|a|`` crossings."""
    m = abs(a)
    top = list(range(0, m + 1))
    bottom = list(range(m + 1, 2 * m + 2))
    crossings = tuple(
        (top[i], top[i - 1], bottom[i - 1], bottom[i]) for i in range(1, m + 1)
    )
    bit = 0 if a > 0 else 1
    ends = {"NW": top[0], "NE": top[m], "SW": bottom[0], "SE": bottom[m]}
    return Tangle(crossings, (bit,) * m, ends)


def reflect(t: Tangle) -> Tangle:
    """Turn over about the NW-SE diagonal (fraction ``F -> 1/F``).

    Reversing the slot order keeps each strand on its slot pair, and the
    turn over carries the overstrand to the former understrand's
    position, so the stored bits are unchanged.
    """
    crossings = tuple((a, d, c, b) for a, b, c, d in t.crossings)
    e = t.ends
    return Tangle(crossings, t.bits, {"NW": e["NW"], "SE": e["SE"], "NE": e["SW"], "SW": e["NE"]})


def rotate180(t: Tangle) -> Tangle:
    """Rotate by a half turn in the plane; crossing data is unchanged."""
    e = t.ends
    return Tangle(t.crossings, t.bits, {"NW": e["SE"], "SE": e["NW"], "NE": e["SW"], "SW": e["NE"]})


class _Labels:
    """Union-find over arc labels; joining two ends of one arc is a free loop."""

    def __init__(self):
        self.parent: dict[int, int] = {}

    def find(self, x: int) -> int:
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            raise MultiComponent("joining these ends closes off a crossingless loop")
        self.parent[ry] = rx


def join(
    parts: Sequence[Tangle],
    wires: Iterable[tuple[tuple[int, str], tuple[int, str]]],
    open_ends: Mapping[str, tuple[int, str]] | None = None,
) -> Tangle:
    """Wire ends of several tangles together.

    Each wire ``((i, end), (j, end))`` joins an end of ``parts[i]`` to an
    end of ``parts[j]``.  ``open_ends`` names the ends left on the
    boundary of the result; leave it out when everything is wired.
    """
    shifted = []
    k = 0
    for t in parts:
        shifted.append(t.offset(k))
        k += max(t.labels()) + 1
    uf = _Labels()
    for (i, a), (j, b) in wires:
        uf.union(shifted[i].ends[a], shifted[j].ends[b])
    crossings = tuple(
        tuple(uf.find(x) for x in c) for t in shifted for c in t.crossings
    )
    bits = tuple(b for t in shifted for b in t.bits)
    ends = {}
    for name, (i, e) in (open_ends or {}).items():
        ends[name] = uf.find(shifted[i].ends[e])
    return Tangle(crossings, bits, ends)


def add(t1: Tangle, t2: Tangle) -> Tangle:
    """Horizontal sum: ``t1`` on the left, ``t2`` on the right."""
    return join(
        [t1, t2],
        [((0, "NE"), (1, "NW")), ((0, "SE"), (1, "SW"))],
        {"NW": (0, "NW"), "SW": (0, "SW"), "NE": (1, "NE"), "SE": (1, "SE")},
    )


def build(w: TangleWord | Sequence[int]) -> Tangle:
    ints = w.integers if isinstance(w, TangleWord) else tuple(w)
    if not ints:
        raise ValueError("empty tangle word")
    t = twist(ints[0])
    for a in ints[1:]:
        t = add(reflect(t), twist(a))
    return t


def _to_diagram(t: Tangle, name: str) -> tuple[FreeDiagram, tuple[int, ...]]:
    if not t.crossings:
        return FreeDiagram(CIRCLE.crossings, name or CIRCLE.name), ()
    d = check(FreeDiagram(t.crossings, name))
    return relabel_canonical(d), t.bits


def numerator_closure(t: Tangle, name: str = "") -> tuple[FreeDiagram, tuple[int, ...]]:
    """Join NW to NE and SW to SE; returns the diagram and its assignment."""
    closed = join([t], [((0, "NW"), (0, "NE")), ((0, "SW"), (0, "SE"))])
    if not closed.crossings:
        # only the zero tangle has no crossings, and its closure is two circles
        raise MultiComponent("closure is a two-component unlink")
    return _to_diagram(closed, name)


def closure_of_word(w: TangleWord | Sequence[int], name: str = "") -> tuple[FreeDiagram, tuple[int, ...]]:
    return numerator_closure(build(w), name)


def make_foil(n: int) -> FreeDiagram:
    if n < 1 or n % 2 == 0:
        raise ParityViolation(f"foil needs odd n >= 1, got {n}")
    return closure_of_word([n], f"foil {n}")[0]


def make_2n(n: int) -> FreeDiagram:
    if n < 1:
        raise ParityViolation(f"2 n needs n >= 1, got {n}")
    return closure_of_word([2, n], f"2 {n}")[0]


def make_kn(k: int, n: int) -> FreeDiagram:
    if k < 1 or n < 1:
        raise ParityViolation(f"k n needs positive entries, got {k} {n}")
    if k % 2 and n % 2:
        raise ParityViolation(f"one of k, n must be even, got {k} {n}")
    return closure_of_word([k, n], f"{k} {n}")[0]


def make_21n(n: int) -> FreeDiagram:
    if n < 1 or n % 2 == 0:
        raise ParityViolation(f"2 1 n needs odd n >= 1, got {n}")
    return closure_of_word([2, 1, n], f"2 1 {n}")[0]


def four_tangle_layout(
    t1: Tangle, t2: Tangle, t3: Tangle, t4: Tangle, rotate_third: bool = False
) -> tuple[FreeDiagram, tuple[int, ...]]:
    """Closed diagram with ``t1 + t2`` on top, ``t3`` above ``t4`` below them.

    ``t1`` and ``t2`` are joined along their facing sides; the inner
    lower ends of the pair feed the top of ``t3``, the outer ones run
    down to the sides of ``t4``, and ``t3`` sits on top of ``t4``.  With
    ``rotate_third`` the middle tangle is turned by a half turn.
    """
    if rotate_third:
        t3 = rotate180(t3)
    wires = [
        ((0, "NE"), (1, "NW")),
        ((0, "SE"), (1, "SW")),
        ((0, "SW"), (2, "NW")),
        ((1, "SE"), (2, "NE")),
        ((2, "SW"), (3, "NW")),
        ((2, "SE"), (3, "NE")),
        ((0, "NW"), (3, "SW")),
        ((1, "NE"), (3, "SE")),
    ]
    closed = join([t1, t2, t3, t4], wires)
    return _to_diagram(closed, "four-tangle")
