"""Closed-form counts and probability laws for the tangle families and sums.

Everything returns exact integers or :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Mapping

from .errors import ParityViolation

__all__ = [
    "choose",
    "foil_count",
    "foil_expectation",
    "max_kfoil_probability",
    "two_n_unknot_count",
    "two_n_trefoil_count",
    "two_n_family_count",
    "two_n_expectation",
    "kn_unknot_count",
    "TwoOneNCounts",
    "twoonen_counts",
    "sum_unknot_law",
    "sum_prime_law",
    "sum_composite_law",
    "sum_convolution",
    "RecursiveSumParams",
    "recursive_prob",
    "recursive_max_step",
    "bounds_series",
]


def choose(n: int, x) -> int:
    """Binomial coefficient, zero unless ``x`` is an integer in ``[0, n]``."""
    x = Fraction(x)
    if x.denominator != 1 or not 0 <= x <= n:
        return 0
    return comb(n, int(x))


def _half(x: int) -> Fraction:
    return Fraction(x, 2)


def foil_count(n: int, k: int) -> int:
    """Left plus right k-foils from the free n-foil (k = 1 counts unknots)."""
    if n % 2 == 0 or k % 2 == 0 or not 1 <= k <= n:
        raise ParityViolation(f"foil counts need odd 1 <= k <= n, got n={n}, k={k}")
    return 2 * choose(n, _half(n - k))


def foil_expectation(n: int) -> Fraction:
    if n % 2 == 0:
        raise ParityViolation(f"foil needs odd n, got {n}")
    total = sum(k * choose(n, _half(n - k)) for k in range(3, n + 1, 2))
    return Fraction(total, 2 ** (n - 1))


def max_kfoil_probability(k: int) -> Fraction:
    if k % 2 == 0 or k < 3:
        raise ParityViolation(f"k must be odd and at least 3, got {k}")
    return Fraction(2 * choose(k * k, _half(k * k - k)), 2 ** (k * k))


# -- 2 n -----------------------------------------------------------------------


def two_n_unknot_count(n: int) -> int:
    if n < 1:
        raise ParityViolation(f"n must be positive, got {n}")
    if n % 2:
        return 2 ** (n + 1) + 2 * choose(n, _half(n - 1))
    return 2 ** (n + 1) + 2 * choose(n, _half(n))


def two_n_trefoil_count(n: int) -> int:
    """Trefoils from the free 2 n knot.

    The trefoil is the class 2 1.  For odd n it is the 2 k member of the
    k = 1 pair, for even n the 2 (k-1) member of the k = 2 pair.
    """
    if n < 1:
        raise ParityViolation(f"n must be positive, got {n}")
    if n % 2:
        return 2 * choose(n, _half(n - 1))
    return 2 * choose(n, _half(n - 2))


def two_n_family_count(n: int, k: int) -> tuple[int, int]:
    """Counts of resultant 2 k and 2 (k-1) knots; both ``2 C(n, (n-k)/2)``."""
    if (n - k) % 2 or not 0 <= k <= n:
        raise ParityViolation(f"need k = n mod 2 and 0 <= k <= n, got n={n}, k={k}")
    c = 2 * choose(n, _half(n - k))
    return c, c


def two_n_expectation(n: int) -> Fraction:
    """Expected crossing number of a resultant of the free 2 n knot.

    The class 2 j has crossing number j + 2 for j >= 2 and 3 for j = 1;
    2 0 is the unknot.
    """
    if n < 1:
        raise ParityViolation(f"n must be positive, got {n}")
    total = 0
    for k in range(n % 2, n + 1, 2):
        c = 2 * choose(n, _half(n - k))
        for j in (k, k - 1):
            if j >= 2:
                total += c * (j + 2)
            elif j == 1:
                total += c * 3
    return Fraction(total, 2 ** (n + 2))


# -- k n -----------------------------------------------------------------------


def kn_unknot_count(k: int, n: int) -> int:
    if k % 2 and n % 2:
        raise ParityViolation(f"one of k, n must be even, got {k} {n}")
    if k < 1 or n < 1:
        raise ParityViolation(f"k and n must be positive, got {k} {n}")
    if k % 2 == 0 and n % 2 == 0:
        ck, cn = choose(k, _half(k)), choose(n, _half(n))
        return 2**k * cn + 2**n * ck - cn * ck
    if k % 2 == 0:
        k, n = n, k
    return 2**k * choose(n, _half(n)) + 2 * choose(k, _half(k - 1)) * choose(n, _half(n - 2))


# -- 2 1 n ---------------------------------------------------------------------


@dataclass(frozen=True)
class TwoOneNCounts:
    n: int
    unknots: int
    kfoil: Mapping[int, int]  # odd k >= 3 -> count
    fig8: int
    two_one_k: Mapping[int, int]  # odd k >= 3 -> count

    @property
    def total(self) -> int:
        return self.unknots + sum(self.kfoil.values()) + self.fig8 + sum(self.two_one_k.values())


def twoonen_counts(n: int) -> TwoOneNCounts:
    if n < 1 or n % 2 == 0:
        raise ParityViolation(f"2 1 n needs odd n >= 1, got {n}")
    unknots = 12 * choose(n, _half(n - 1)) + 2 * choose(n, _half(n - 3))
    kfoil = {
        k: 8 * choose(n, _half(n - k))
        + 2 * choose(n, _half(n - k + 2))
        + 2 * choose(n, _half(n - k - 2))
        for k in range(3, n + 3, 2)
    }
    fig8 = 2 * choose(n, _half(n - 1))
    two_one_k = {k: 2 * choose(n, _half(n - k)) for k in range(3, n + 1, 2)}
    return TwoOneNCounts(n, unknots, kfoil, fig8, two_one_k)


# -- connected sums ------------------------------------------------------------


def sum_unknot_law(p1, p2) -> Fraction:
    return Fraction(p1) * Fraction(p2)


def sum_prime_law(u1, k1, u2, k2) -> Fraction:
    """P(S1 # S2 -> K) for a nontrivial prime K."""
    return Fraction(u1) * Fraction(k2) + Fraction(k1) * Fraction(u2)


def sum_composite_law(u1, u2, a1, b1, a2, b2, c1, c2, same_components: bool = False) -> Fraction:
    """P(S1 # S2 -> K3 # K4) for primes K3, K4.

    ``a`` and ``b`` are the probabilities of K3 and K4 from each side,
    ``c`` that of K3 # K4.  When K3 and K4 are the same knot the two
    cross terms describe one event, so it is counted once.
    """
    u1, u2, a1, b1, a2, b2, c1, c2 = map(Fraction, (u1, u2, a1, b1, a2, b2, c1, c2))
    cross = a1 * a2 if same_components else a1 * b2 + b1 * a2
    return u1 * c2 + c1 * u2 + cross


def sum_convolution(
    d1: Mapping[str, Fraction], d2: Mapping[str, Fraction], unknot: str = "0_1"
) -> dict[str, Fraction]:
    """Resultant law of a connected sum from the laws of its summands.

    Names are ``#``-joined prime names; the unknot is the identity.
    """
    out: dict[str, Fraction] = {}
    for x, p in d1.items():
        for y, q in d2.items():
            parts = sorted(
                part for name in (x, y) if name != unknot for part in name.split("#")
            )
            key = "#".join(parts) if parts else unknot
            out[key] = out.get(key, Fraction(0)) + Fraction(p) * Fraction(q)
    return out


# -- recursive sums ------------------------------------------------------------


@dataclass(frozen=True)
class RecursiveSumParams:
    alpha: Fraction
    beta: Fraction
    N: int

    def __post_init__(self):
        a, b = Fraction(self.alpha), Fraction(self.beta)
        if not (0 < a <= 1 and 0 <= b <= 1 and a + b <= 1):
            raise ValueError(f"need 0 < alpha <= 1, 0 <= beta, alpha + beta <= 1; got {a}, {b}")
        if self.N < 0:
            raise ValueError(f"N must be nonnegative, got {self.N}")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)


def recursive_prob(params: RecursiveSumParams) -> Fraction:
    """P(S^N -> K) for a prime K with P(S -> U) = alpha, P(S -> K) = beta."""
    if params.N == 0:
        return Fraction(0)
    return params.N * params.alpha ** (params.N - 1) * params.beta


def recursive_max_step(alpha) -> tuple[int, ...]:
    """Step(s) N at which N alpha^(N-1) peaks; a tie returns both steps."""
    alpha = Fraction(alpha)
    if not 0 < alpha < 1:
        raise ValueError(f"alpha must lie strictly between 0 and 1, got {alpha}")
    # N alpha^(N-1) grows while (N+1) alpha > N, i.e. N < alpha / (1 - alpha)
    ratio = alpha / (1 - alpha)
    floor = ratio.numerator // ratio.denominator
    if ratio.denominator == 1:
        return (floor, floor + 1)
    return (floor + 1,)


def bounds_series(n_max: int) -> list[tuple[int, Fraction, Fraction]]:
    """Trefoil probabilities of the n-foil (upper) and the 2 (n-2) knot (lower).

    For even n the upper curve repeats the (n-1)-foil, since the foil
    bound covers diagrams with n and n+1 crossings.
    """
    if n_max < 3:
        raise ValueError(f"n_max must be at least 3, got {n_max}")
    rows = []
    for n in range(3, n_max + 1):
        odd = n if n % 2 else n - 1
        upper = Fraction(foil_count(odd, 3), 2**odd)
        lower = Fraction(two_n_trefoil_count(n - 2), 2**n)
        rows.append((n, upper, lower))
    return rows
