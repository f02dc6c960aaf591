"""Alternating series, partial sums and self-contained enclosures of pi."""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from .numkernel import Enclosure


@dataclass(frozen=True)
class AlternatingSeries:
    """``offset + scale * sum_{p>=1} (-1)^(p-1) term(p)`` with ``term`` positive and decreasing.

    Only the signed sum is a partial sum in the usual sense; ``offset`` and
    ``scale`` let the accelerated pi series share the same machinery.
    """

    term: Callable[[int], Fraction]
    name: str
    offset: Fraction = Fraction(0)
    scale: Fraction = Fraction(1)

    def value(self, n: int) -> Fraction:
        """``offset + scale * S_n``."""
        return self.offset + self.scale * partial_sum(self, n)


@dataclass(frozen=True)
class PartialSumState:
    series: AlternatingSeries = field(repr=False)
    n: int = 0
    value: Fraction = Fraction(0)

    def advance(self) -> PartialSumState:
        p = self.n + 1
        sign = 1 if p % 2 else -1
        return PartialSumState(self.series, p, self.value + sign * self.series.term(p))


def madhava_term(p: int) -> Fraction:
    if p < 1:
        raise ValueError(f"term index must be >= 1, got {p}")
    return Fraction(1, 2 * p - 1)


def _cubic_term(p: int) -> Fraction:
    q = 2 * p + 1
    return Fraction(1, q**3 - q)


def _quintic_term(p: int) -> Fraction:
    # p counts terms from 1, so the odd number is 2p - 1
    q = 2 * p - 1
    return Fraction(1, q**5 + 4 * q)


def _septic_term(p: int) -> Fraction:
    return Fraction(1, p * (p + 1) * (2 * p + 1) * (4 * p * p + 5) * (4 * p * p + 8 * p + 9))


MADHAVA_LEIBNIZ = AlternatingSeries(madhava_term, "madhava-leibniz")
CUBIC_SERIES = AlternatingSeries(_cubic_term, "series-a", Fraction(3), Fraction(4))
QUINTIC_SERIES = AlternatingSeries(_quintic_term, "series-b", Fraction(0), Fraction(16))
SEPTIC_SERIES = AlternatingSeries(_septic_term, "series-c", Fraction(28, 9), Fraction(36))


def partial_sums(s: AlternatingSeries, n: int, start: PartialSumState | None = None) -> Iterator[Fraction]:
    """Yield ``S_k`` for k = start.n + 1, ..., n."""
    state = start if start is not None else PartialSumState(s)
    while state.n < n:
        state = state.advance()
        yield state.value


def partial_sum_state(s: AlternatingSeries, n: int, start: PartialSumState | None = None) -> PartialSumState:
    state = start if start is not None else PartialSumState(s)
    if state.n > n:
        raise ValueError(f"cannot rewind partial sum from n={state.n} to n={n}")
    while state.n < n:
        state = state.advance()
    return state


_PREFIX_CACHE: dict[AlternatingSeries, list[Fraction]] = {}


def partial_sum(s: AlternatingSeries, n: int, start: PartialSumState | None = None) -> Fraction:
    """Exact ``S_n``; resumes from ``start`` when given, else from a memo of earlier sums."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if start is not None:
        return partial_sum_state(s, n, start).value
    sums = _PREFIX_CACHE.setdefault(s, [Fraction(0)])
    while len(sums) <= n:
        p = len(sums)
        sums.append(sums[-1] + (1 if p % 2 else -1) * s.term(p))
    return sums[n]


def _terms_needed(s: AlternatingSeries, target: Fraction) -> int:
    """Smallest n >= 1 with ``scale * term(n + 1) <= target``."""
    hi = 1
    while s.scale * s.term(hi + 1) > target:
        hi *= 2
    lo = hi // 2
    # invariant: answer in (lo, hi]
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if s.scale * s.term(mid + 1) > target:
            lo = mid
        else:
            hi = mid
    return max(hi, 1)


def _digits_for(bound: Fraction) -> int:
    k = 0
    while Fraction(1, 10**k) > bound:
        k += 1
    return k


@functools.lru_cache(maxsize=64)
def limit_enclosure(s: AlternatingSeries, min_width: Fraction) -> Enclosure:
    """Certified enclosure of the series limit with width at most ``min_width``.

    The limit lies between ``S_n`` and ``S_{n+1}``.  Both sums are accumulated
    as fixed-point integers, each term rounded outward, so the bracket stays
    rigorous while avoiding huge common denominators.
    """
    min_width = Fraction(min_width)
    if min_width <= 0:
        raise ValueError("min_width must be positive")
    n = _terms_needed(s, min_width / 2)
    digits = _digits_for(min_width / (4 * s.scale * (n + 2)))
    unit = 10**digits
    lo = hi = 0
    for p in range(1, n + 2):
        t = s.term(p)
        floor_t = t.numerator * unit // t.denominator
        ceil_t = -(-t.numerator * unit // t.denominator)
        if p % 2:
            lo_next, hi_next = lo + floor_t, hi + ceil_t
        else:
            lo_next, hi_next = lo - ceil_t, hi - floor_t
        if p == n + 1:
            lower, upper = min(lo, lo_next), max(hi, hi_next)
        lo, hi = lo_next, hi_next
    enc = Enclosure(
        s.offset + s.scale * Fraction(lower, unit),
        s.offset + s.scale * Fraction(upper, unit),
    )
    assert enc.width <= min_width, (enc.width, min_width)
    return enc


def pi_enclosure(min_width: Fraction) -> Enclosure:
    """Enclosure of pi built from the seventh-order accelerated series."""
    return limit_enclosure(SEPTIC_SERIES, Fraction(min_width))


def pi_enclosure_quintic(min_width: Fraction) -> Enclosure:
    """Independent enclosure of pi from the fifth-order series, for cross-checks."""
    return limit_enclosure(QUINTIC_SERIES, Fraction(min_width))


@functools.lru_cache(maxsize=16)
def certified_pi(min_width: Fraction = Fraction(1, 10**30)) -> Enclosure:
    """Intersection of the two independent pi enclosures; raises if they disagree."""
    return pi_enclosure(min_width).intersect(pi_enclosure_quintic(min_width))


def remainder_magnitude(s: AlternatingSeries, n: int, ref: Enclosure) -> Enclosure:
    """Enclosure of ``rho_n = |sum - S_n|`` given an enclosure ``ref`` of the sum.

    ``ref`` must enclose the signed sum (without ``offset``/``scale``).  For a
    decreasing alternating series the sign of the remainder is ``(-1)^n``, so
    the result is a translate of ``ref`` and has the same width.
    """
    if not isinstance(ref, Enclosure) or ref.lower > ref.upper:
        raise ValueError(f"invalid reference enclosure {ref!r}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    diff = ref - partial_sum(s, n)
    return diff if n % 2 == 0 else -diff
