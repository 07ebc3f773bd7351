"""Name a Jones polynomial as a knot, with mirror images identified.

The reference table is derived entirely by the engine: primes come from
the shipped signed PD codes, composites are products of prime Jones
polynomials, and a handful of larger two-bridge knots (the ones the
tangle families produce past nine crossings) come from alternating
closures of their Conway words.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Iterable, Mapping

from .diagram import SignedDiagram, alternating_assignment, iter_pd_file, shape_of
from .errors import KeyCollision
from .polynomial import LaurentPoly, canonical_key
from .statesum import build_state_table, jones, orientation

__all__ = [
    "KnotClass",
    "Unidentified",
    "ReferenceTable",
    "build_reference_table",
    "default_table",
    "load_pd_data",
    "knot_jones",
    "EXTENSION_WORDS",
    "KNOWN_SHARED",
]

UNKNOT = "0_1"

# Two-bridge knots past nine crossings reached by the family generators:
# foils up to 13, 2 k up to 2 10, and 2 1 k for odd k up to 9.
EXTENSION_WORDS: tuple[tuple[int, ...], ...] = (
    (11,),
    (13,),
    (2, 8),
    (2, 9),
    (2, 10),
    (2, 1, 7),
    (2, 1, 9),
)


# Jones coincidences inside the nine-crossing budget.  Each pair has one
# crossing number, so the pair is kept as a single class named "a|b".
KNOWN_SHARED: frozenset[frozenset[str]] = frozenset(
    {frozenset({"4_1#4_1", "8_9"}), frozenset({"4_1#5_2", "9_12"})}
)


@dataclass(frozen=True)
class KnotClass:
    name: str
    crossing_number: int
    jones_key: LaurentPoly = field(compare=False)

    @property
    def components(self) -> tuple[str, ...]:
        return tuple(self.name.split("#"))

    @property
    def is_composite(self) -> bool:
        return "#" in self.name

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Unidentified:
    poly: LaurentPoly

    name = None

    def __str__(self):
        return f"unidentified({self.poly})"


class ReferenceTable:
    """Immutable map from mirror-collapsed Jones keys to knot classes."""

    def __init__(self, entries: Mapping[LaurentPoly, KnotClass]):
        self._entries = dict(entries)
        self._by_name: dict[str, KnotClass] = {}
        for k in self._entries.values():
            self._by_name.setdefault(k.name, k)
            if "|" in k.name:
                for alias in k.name.split("|"):
                    self._by_name.setdefault(alias, k)

    def identify(self, p: LaurentPoly) -> KnotClass | Unidentified:
        hit = self._entries.get(canonical_key(p))
        return hit if hit is not None else Unidentified(p)

    def __getitem__(self, name: str) -> KnotClass:
        return self._by_name[name]

    def __contains__(self, name: str) -> bool:
        return name in self._by_name

    def __len__(self) -> int:
        return len(self._entries)

    @property
    def entries(self) -> dict[LaurentPoly, KnotClass]:
        return dict(self._entries)

    def names(self) -> list[str]:
        return list(self._by_name)

    def crossing_numbers(self) -> dict[str, int]:
        return {name: k.crossing_number for name, k in self._by_name.items()}

    def signature(self) -> str:
        """Stable digest of the key set, used to tag caches."""
        import hashlib

        h = hashlib.sha256()
        for key, k in sorted(self._entries.items(), key=lambda kv: kv[0].key()):
            h.update(f"{k.name}={key}\n".encode())
        return h.hexdigest()[:16]


def knot_jones(pd: SignedDiagram) -> LaurentPoly:
    d, bits = shape_of(pd)
    return jones(build_state_table(d), orientation(d), bits)


def _crossing_number(name: str) -> int:
    return int(name.split("_")[0])


def _register(entries: dict, key: LaurentPoly, knot: KnotClass, shared=()) -> None:
    old = entries.get(key)
    if old is None:
        entries[key] = knot
        return
    names = set(old.name.split("|")) | {knot.name}
    if len(names) == 1:
        return
    if frozenset(names) in shared and old.crossing_number == knot.crossing_number:
        entries[key] = KnotClass("|".join(sorted(names)), knot.crossing_number, key)
        return
    raise KeyCollision(f"{knot.name} and {old.name} share Jones key {key}")


def build_reference_table(
    pd_data: str | Iterable[SignedDiagram],
    max_composite_crossings: int = 9,
    extensions: bool = True,
    shared: Iterable[frozenset[str]] = (),
) -> ReferenceTable:
    """Build the table from signed PD text (or parsed codes).

    Composites are every multiset of at least two nontrivial primes whose
    crossing numbers sum to at most ``max_composite_crossings``.  Each
    chirality pairing is registered under the one sorted name.  Two
    names meeting on one key raise :class:`KeyCollision` unless the pair
    is listed in ``shared``.
    """
    shared = frozenset(frozenset(g) for g in shared)
    pds = list(iter_pd_file(pd_data) if isinstance(pd_data, str) else pd_data)
    entries: dict[LaurentPoly, KnotClass] = {}
    primes: list[tuple[str, int, LaurentPoly]] = []
    for pd in pds:
        v = knot_jones(pd)
        cn = _crossing_number(pd.name) if pd.crossings else 0
        _register(entries, canonical_key(v), KnotClass(pd.name, cn, canonical_key(v)), shared)
        if cn > 0:
            primes.append((pd.name, cn, v))

    for size in itertools.count(2):
        combos = [
            c
            for c in itertools.combinations_with_replacement(primes, size)
            if sum(p[1] for p in c) <= max_composite_crossings
        ]
        if not combos:
            break
        for combo in combos:
            name = "#".join(sorted(p[0] for p in combo))
            cn = sum(p[1] for p in combo)
            # the first factor's chirality can be fixed; flip the rest freely
            for flips in itertools.product((False, True), repeat=size - 1):
                v = combo[0][2]
                for (_, _, w), flip in zip(combo[1:], flips):
                    v = v * (w.mirror() if flip else w)
                key = canonical_key(v)
                _register(entries, key, KnotClass(name, cn, key), shared)

    if extensions:
        from .tangle import closure_of_word

        for word in EXTENSION_WORDS:
            d, _ = closure_of_word(word)
            v = jones(build_state_table(d), orientation(d), alternating_assignment(d))
            key = canonical_key(v)
            name = "C(" + " ".join(str(a) for a in word) + ")"
            if entries.get(key, None) is not None:
                raise KeyCollision(f"{name} collides with {entries[key].name}")
            entries[key] = KnotClass(name, sum(word), key)

    return ReferenceTable(entries)


def load_pd_data() -> str:
    return resources.files("freeknot.data").joinpath("rolfsen_pd.txt").read_text()


@lru_cache(maxsize=None)
def default_table(max_composite_crossings: int = 9) -> ReferenceTable:
    return build_reference_table(load_pd_data(), max_composite_crossings, shared=KNOWN_SHARED)
