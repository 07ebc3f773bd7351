"""Free knot diagrams stored as rotation systems.

A crossing is a 4-tuple of arc labels in counterclockwise order around
the vertex.  Slots 0 and 2 belong to one strand, slots 1 and 3 to the
other.  An assignment bit of 0 puts the (0, 2) strand over, 1 puts the
(1, 3) strand over.  Assignments and smoothing states are packed into
integers with crossing ``c`` at bit ``c``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import ArcMultiplicity, MultiComponent, NonPlanar, ParseError, UnknownArc

__all__ = [
    "FreeDiagram",
    "SignedDiagram",
    "ValidationResult",
    "LoopReport",
    "CIRCLE",
    "validate",
    "check",
    "shape_of",
    "assign",
    "find_length_one_loops",
    "add_kink",
    "connected_sum",
    "face_count",
    "traversal",
    "canonical_code",
    "isomorphic",
    "alternating_assignment",
    "bits_to_int",
    "int_to_bits",
    "parse_diagram",
    "format_diagram",
    "parse_pd_line",
    "format_pd_line",
    "iter_pd_file",
    "relabel_canonical",
]

Crossing = tuple[int, int, int, int]
Assignment = tuple[int, ...]
Dart = tuple[int, int]


@dataclass(frozen=True)
class FreeDiagram:
    crossings: tuple[Crossing, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "crossings", tuple(tuple(int(x) for x in c) for c in self.crossings)
        )
        for c in self.crossings:
            if len(c) != 4:
                raise ArcMultiplicity(f"crossing {c} does not have four slots")

    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def arc_count(self) -> int:
        return 2 * self.n if self.crossings else 1

    @property
    def arcs(self) -> list[int]:
        if not self.crossings:
            return [1]
        return sorted({x for c in self.crossings for x in c})

    def is_circle(self) -> bool:
        return not self.crossings

    def named(self, name: str) -> "FreeDiagram":
        return FreeDiagram(self.crossings, name)

    def __repr__(self):
        label = f"{self.name!r}, " if self.name else ""
        return f"FreeDiagram({label}n={self.n})"


CIRCLE = FreeDiagram((), "0_1")


@dataclass(frozen=True)
class SignedDiagram:
    """A knot diagram: crossings plus the overstrand slot pair at each."""

    crossings: tuple[Crossing, ...]
    over: tuple[str, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "crossings", tuple(tuple(int(x) for x in c) for c in self.crossings)
        )
        object.__setattr__(self, "over", tuple(self.over))
        if len(self.over) != len(self.crossings):
            raise ParseError("over/under data does not match crossing count")
        for o in self.over:
            if o not in ("02", "13"):
                raise ParseError(f"bad overstrand spec {o!r}")


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    error: type | None = None
    message: str = ""

    def __bool__(self):
        return self.ok

    def raise_for_error(self):
        if not self.ok:
            raise self.error(self.message)


@dataclass(frozen=True)
class LoopReport:
    crossing_id: int
    loop_length: int = 1


def bits_to_int(bits: Sequence[int]) -> int:
    return sum(1 << c for c, b in enumerate(bits) if b)


def int_to_bits(value: int, n: int) -> Assignment:
    return tuple((value >> c) & 1 for c in range(n))


# -- combinatorics of the map ------------------------------------------------


def _occurrences(d: FreeDiagram) -> dict[int, list[Dart]]:
    occ: dict[int, list[Dart]] = {}
    for c, labels in enumerate(d.crossings):
        for s, x in enumerate(labels):
            occ.setdefault(x, []).append((c, s))
    return occ


def _partners(d: FreeDiagram) -> dict[Dart, Dart]:
    partner = {}
    for x, ends in _occurrences(d).items():
        if len(ends) != 2:
            raise ArcMultiplicity(f"arc {x} appears in {len(ends)} slots")
        a, b = ends
        partner[a] = b
        partner[b] = a
    return partner


def _cycle_from(partner: dict[Dart, Dart], start: Dart) -> list[tuple[int, int, int]]:
    """Passages (crossing, in_slot, out_slot) entering ``start`` first."""
    passages = []
    c, s = start
    while True:
        out = (s + 2) % 4
        passages.append((c, s, out))
        c, s = partner[(c, out)]
        if (c, s) == start:
            return passages


def traversal(d: FreeDiagram) -> list[tuple[int, int, int]]:
    """Passages of the knot starting by entering crossing 0 at slot 0."""
    if d.is_circle():
        return []
    return _cycle_from(_partners(d), (0, 0))


def _count_faces(d: FreeDiagram, partner: dict[Dart, Dart]) -> int:
    seen = set()
    faces = 0
    for c in range(d.n):
        for s in range(4):
            if (c, s) in seen:
                continue
            faces += 1
            dart = (c, s)
            while dart not in seen:
                seen.add(dart)
                c2, s2 = partner[dart]
                dart = (c2, (s2 + 1) % 4)
    return faces


def face_count(d: FreeDiagram) -> int:
    if d.is_circle():
        return 2
    return _count_faces(d, _partners(d))


def validate(d: FreeDiagram) -> ValidationResult:
    if d.is_circle():
        return ValidationResult(True)
    occ = _occurrences(d)
    for x, ends in occ.items():
        if len(ends) != 2:
            return ValidationResult(
                False, ArcMultiplicity, f"arc {x} appears in {len(ends)} slots"
            )
    partner = _partners(d)
    cycle = _cycle_from(partner, (0, 0))
    if len(cycle) != 2 * d.n:
        return ValidationResult(
            False,
            MultiComponent,
            f"traversal closes after {len(cycle)} of {2 * d.n} passages (a link, not a knot)",
        )
    v, e = d.n, 2 * d.n
    f = _count_faces(d, partner)
    if v - e + f != 2:
        return ValidationResult(False, NonPlanar, f"V - E + F = {v - e + f}, expected 2")
    return ValidationResult(True)


def check(d: FreeDiagram) -> FreeDiagram:
    validate(d).raise_for_error()
    return d


def relabel_canonical(d: FreeDiagram) -> FreeDiagram:
    """Relabel arcs 1..2n in traversal order from crossing 0, slot 0."""
    if d.is_circle():
        return d
    partner = _partners(d)
    passages = _cycle_from(partner, (0, 0))
    new: dict[Dart, int] = {}
    label = 1
    # the arc entering (0, 0) is arc 1; each exit starts the next arc
    new[(0, 0)] = 1
    new[partner[(0, 0)]] = 1
    for c, s_in, s_out in passages[:-1]:
        label += 1
        new[(c, s_out)] = label
        new[partner[(c, s_out)]] = label
    crossings = tuple(tuple(new[(c, s)] for s in range(4)) for c in range(d.n))
    return FreeDiagram(crossings, d.name)


# -- signed diagrams ------------------------------------------------------------


def shape_of(pd: SignedDiagram) -> tuple[FreeDiagram, Assignment]:
    """Erase over/under data; the erased data comes back as an assignment."""
    d = FreeDiagram(pd.crossings, pd.name)
    check(d)
    bits = tuple(0 if o == "02" else 1 for o in pd.over)
    return d, bits


def assign(d: FreeDiagram, bits: Sequence[int]) -> SignedDiagram:
    if len(bits) != d.n:
        from .errors import LengthMismatch

        raise LengthMismatch(f"assignment has {len(bits)} bits, diagram has {d.n} crossings")
    return SignedDiagram(d.crossings, tuple("13" if b else "02" for b in bits), d.name)


# -- constructions ------------------------------------------------------------


def find_length_one_loops(d: FreeDiagram) -> list[LoopReport]:
    reports = []
    for c, labels in enumerate(d.crossings):
        if any(labels[s] == labels[(s + 1) % 4] for s in range(4)):
            reports.append(LoopReport(c, 1))
    return reports


def add_kink(d: FreeDiagram, arc: int) -> FreeDiagram:
    """Insert a loop of length one on ``arc``; the new crossing is appended last."""
    if d.is_circle():
        if arc != 1:
            raise UnknownArc(arc)
        return relabel_canonical(FreeDiagram(((1, 2, 2, 1),), d.name))
    occ = _occurrences(d)
    if arc not in occ:
        raise UnknownArc(arc)
    top = max(occ)
    loop, tail = top + 1, top + 2
    c_end, s_end = occ[arc][1]
    crossings = [list(c) for c in d.crossings]
    crossings[c_end][s_end] = tail
    crossings.append([arc, loop, loop, tail])
    return relabel_canonical(FreeDiagram(tuple(map(tuple, crossings)), d.name))


def connected_sum(
    d1: FreeDiagram, d2: FreeDiagram, arc1: int | None = None, arc2: int | None = None
) -> FreeDiagram:
    """Cut ``arc1`` of ``d1`` and ``arc2`` of ``d2`` and splice the ends crosswise.

    Arcs default to the lowest label of each diagram.
    """
    arc1 = min(d1.arcs) if arc1 is None else arc1
    arc2 = min(d2.arcs) if arc2 is None else arc2
    if arc1 not in d1.arcs:
        raise UnknownArc(arc1)
    if arc2 not in d2.arcs:
        raise UnknownArc(arc2)
    name = f"{d1.name}#{d2.name}" if d1.name and d2.name else ""
    if d2.is_circle():
        return FreeDiagram(d1.crossings, name or d1.name)
    if d1.is_circle():
        return FreeDiagram(d2.crossings, name or d2.name)
    offset = max(d1.arcs)
    second = [[x + offset for x in c] for c in d2.crossings]
    first = [list(c) for c in d1.crossings]
    occ1 = _occurrences(d1)[arc1]
    occ2 = _occurrences(d2)[arc2]
    spare = offset + max(d2.arcs) + 1
    # p joins r under the old label arc1; q joins s under a fresh label
    (qc, qs) = occ1[1]
    (rc, rs), (sc, ss) = occ2
    first[qc][qs] = spare
    second[rc][rs] = arc1
    second[sc][ss] = spare
    merged = FreeDiagram(tuple(map(tuple, first + second)), name)
    return relabel_canonical(check(merged))


def alternating_assignment(d: FreeDiagram) -> Assignment:
    """Assignment whose traversal alternates over, under, over, ..."""
    if d.is_circle():
        return ()
    bits: dict[int, int] = {}
    for t, (c, s_in, _) in enumerate(traversal(d)):
        over_here = t % 2 == 0
        strand = s_in % 2  # 0 -> (0,2) strand, 1 -> (1,3) strand
        bit = strand if over_here else 1 - strand
        if bits.setdefault(c, bit) != bit:
            raise ValueError("diagram admits no alternating assignment")
    return tuple(bits[c] for c in range(d.n))


def canonical_code(d: FreeDiagram, allow_reflection: bool = False) -> tuple:
    """Relabeling-invariant encoding of the rotation system.

    With ``allow_reflection`` a diagram and its planar mirror share a code.
    """
    if d.is_circle():
        return ()
    partner = _partners(d)
    directions = (1, -1) if allow_reflection else (1,)
    best = None
    for direction in directions:
        for c0 in range(d.n):
            for r0 in range(4):
                code = _bfs_code(d.n, partner, c0, r0, direction)
                if best is None or code < best:
                    best = code
    return best


def _bfs_code(n, partner, c0, r0, direction):
    order = {c0: 0}
    rot = {c0: r0}
    queue = [c0]
    code = []
    head = 0
    while head < len(queue):
        c = queue[head]
        head += 1
        for k in range(4):
            slot = (rot[c] + direction * k) % 4
            c2, j = partner[(c, slot)]
            if c2 not in order:
                order[c2] = len(order)
                rot[c2] = j
                queue.append(c2)
            code.append((order[c2], (direction * (j - rot[c2])) % 4))
    return tuple(code)


def isomorphic(d1: FreeDiagram, d2: FreeDiagram, allow_reflection: bool = True) -> bool:
    if d1.n != d2.n:
        return False
    return canonical_code(d1, allow_reflection) == canonical_code(d2, allow_reflection)


# -- text formats -------------------------------------------------------------

_HEADER = re.compile(r"^\s*crossings\s*:\s*(\d+)\s*$")
_ROW = re.compile(r"^\s*c(\d+)\s*:\s*(-?\d+)\s+(-?\d+)\s+(-?\d+)\s+(-?\d+)\s*(?:/over=(02|13))?\s*$")


def parse_diagram(text: str, name: str = "") -> tuple[FreeDiagram, Assignment | None]:
    """Parse the one-diagram-per-file format.

    Returns the free diagram and, when every row carries ``/over=``, the
    assignment it encodes.
    """
    lines = [
        (i, ln) for i, ln in enumerate(text.splitlines(), 1) if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise ParseError("empty diagram file", 1)
    lineno, header = lines[0]
    m = _HEADER.match(header)
    if not m:
        raise ParseError("expected 'crossings: n'", lineno)
    n = int(m.group(1))
    rows = lines[1:]
    if len(rows) != n:
        raise ParseError(f"header declares {n} crossings, found {len(rows)} rows", lineno)
    crossings = []
    overs = []
    for expected, (lineno, row) in enumerate(rows):
        m = _ROW.match(row)
        if not m:
            raise ParseError(f"malformed crossing row {row.strip()!r}", lineno)
        if int(m.group(1)) != expected:
            raise ParseError(f"expected c{expected}, got c{m.group(1)}", lineno)
        crossings.append(tuple(int(m.group(k)) for k in range(2, 6)))
        overs.append(m.group(6))
    d = FreeDiagram(tuple(crossings), name)
    try:
        check(d)
    except Exception as exc:
        raise type(exc)(f"{exc} (diagram starting line {lines[0][0]})") from None
    if n and all(o is not None for o in overs):
        return d, tuple(0 if o == "02" else 1 for o in overs)
    if any(o is not None for o in overs):
        raise ParseError("/over= must be given on every row or none", lines[0][0])
    return d, None


def format_diagram(d: FreeDiagram, bits: Sequence[int] | None = None) -> str:
    out = [f"crossings: {d.n}"]
    for c, labels in enumerate(d.crossings):
        row = f"c{c}: " + " ".join(str(x) for x in labels)
        if bits is not None:
            row += "/over=" + ("13" if bits[c] else "02")
        out.append(row)
    return "\n".join(out) + "\n"


_PD_LINE = re.compile(r"^\s*([^:\s]+)\s*:\s*((?:\([^)]*\)\s*)*)\s*(?:/over=([0-9,\s]*))?\s*$")


def parse_pd_line(line: str, lineno: int | None = None) -> SignedDiagram:
    """Parse ``name: (a,b,c,d)(e,f,g,h)/over=13,02``.

    Without ``/over=`` the standard PD convention applies: slot 0 is the
    incoming understrand, so the (1, 3) strand is over.
    """
    m = _PD_LINE.match(line)
    if not m:
        raise ParseError(f"malformed PD line {line.strip()!r}", lineno)
    name, body, over = m.groups()
    crossings = []
    for chunk in re.findall(r"\(([^)]*)\)", body):
        parts = [p for p in re.split(r"[,\s]+", chunk.strip()) if p]
        if len(parts) != 4 or not all(re.fullmatch(r"-?\d+", p) for p in parts):
            raise ParseError(f"crossing ({chunk}) needs four integer labels", lineno)
        crossings.append(tuple(int(p) for p in parts))
    if over is None or not over.strip():
        overs = ("13",) * len(crossings)
    else:
        overs = tuple(o.strip() for o in over.split(",") if o.strip())
    if len(overs) != len(crossings):
        raise ParseError(f"{name}: {len(overs)} over entries for {len(crossings)} crossings", lineno)
    try:
        return SignedDiagram(tuple(crossings), overs, name)
    except ParseError as exc:
        raise ParseError(str(exc), lineno) from None


def format_pd_line(pd: SignedDiagram) -> str:
    body = "".join("(" + ",".join(map(str, c)) + ")" for c in pd.crossings)
    return f"{pd.name}: {body}/over=" + ",".join(pd.over)


def iter_pd_file(text: str) -> Iterator[SignedDiagram]:
    """Parse every PD line; ``#`` starts a comment at line start or after blanks."""
    for lineno, line in enumerate(text.splitlines(), 1):
        line = re.sub(r"(^|\s)#.*$", "", line)
        if not line.strip():
            continue
        yield parse_pd_line(line, lineno)
