"""Integer Laurent polynomials in the bracket variable ``A``."""

from __future__ import annotations

import re
from typing import Iterable, Mapping

__all__ = [
    "LaurentPoly",
    "add",
    "mul",
    "monomial",
    "mirror",
    "canonical_key",
    "parse",
    "LOOP",
]


class LaurentPoly:
    """Immutable polynomial ``sum c_e * A^e`` with integer coefficients.

    Zero coefficients are never stored, so two polynomials are equal
    exactly when their coefficient maps are equal.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            e, c = int(e), int(c)
            acc[e] = acc.get(e, 0) + c
        self._terms = {e: c for e, c in sorted(acc.items()) if c != 0}
        self._hash = None

    @classmethod
    def from_dense(cls, low: int, coeffs: Iterable[int]) -> "LaurentPoly":
        """Build from a dense coefficient run starting at exponent ``low``."""
        return cls((low + i, c) for i, c in enumerate(coeffs) if c)

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def key(self) -> tuple[tuple[int, int], ...]:
        """Hashable, totally ordered form: sorted ``(exponent, coefficient)`` pairs."""
        return tuple(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def min_exp(self) -> int:
        return min(self._terms)

    def max_exp(self) -> int:
        return max(self._terms)

    def __getitem__(self, e: int) -> int:
        return self._terms.get(e, 0)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.key())
        return self._hash

    def __lt__(self, other: "LaurentPoly") -> bool:
        return self.key() < other.key()

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._terms.items()})
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative powers are only defined for monomials")
        result = LaurentPoly({0: 1})
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, d: int) -> "LaurentPoly":
        """Multiply by ``A^d``."""
        return LaurentPoly({e + d: c for e, c in self._terms.items()})

    def mirror(self) -> "LaurentPoly":
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def in_t(self) -> dict[int, int] | None:
        """Exponents after substituting ``A = t^(-1/4)``; None if not integral."""
        if any(e % 4 for e in self._terms):
            return None
        return {-e // 4: c for e, c in self._terms.items()}

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            sign = "-" if c < 0 else "+"
            parts.append((sign, f"{abs(c)}*A^{e}"))
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"LaurentPoly({self})"


def monomial(c: int, e: int) -> LaurentPoly:
    return LaurentPoly({e: c})


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def mirror(p: LaurentPoly) -> LaurentPoly:
    """Substitute ``A -> A^-1``."""
    return p.mirror()


def canonical_key(p: LaurentPoly) -> LaurentPoly:
    """The smaller of ``p`` and its mirror under the sorted-term order."""
    m = p.mirror()
    return m if m.key() < p.key() else p


# value of a free loop, -A^2 - A^-2
LOOP = LaurentPoly({2: -1, -2: -1})

_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*(A(?:\^\(?(-?\d+)\)?)?)?")


def parse(text: str) -> LaurentPoly:
    """Parse the ``c*A^e + ...`` rendering produced by ``str``.

    Also accepts bare ``A``, ``-A^-3`` and integer constants.
    """
    s = text.replace(" ", "")
    if s in ("", "0"):
        return LaurentPoly()
    terms: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
        sign, digits, var, exp = m.groups()
        if not digits and not var:
            raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
        c = int(digits) if digits else 1
        if sign == "-":
            c = -c
        e = 0
        if var:
            e = int(exp) if exp is not None else 1
        terms[e] = terms.get(e, 0) + c
        pos = m.end()
    return LaurentPoly(terms)
