"""Series transformation by remainder correctors, Aitken's delta-squared and averaging."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, Union

from .numkernel import Enclosure
from .remainder import corrector_family
from .series import (
    CUBIC_SERIES,
    MADHAVA_LEIBNIZ,
    QUINTIC_SERIES,
    SEPTIC_SERIES,
    AlternatingSeries,
    partial_sum,
    remainder_magnitude,
)

CorrectorFamily = Callable[[int], Fraction]
SequenceLike = Union[Callable[[int], Fraction], Sequence[Fraction]]


class UndefinedTransformError(ZeroDivisionError):
    """Aitken's transform met a vanishing second difference."""

    def __init__(self, n: int, round_index: int | None = None):
        where = f" at n={n}" if round_index is None else f" at n={n} in round {round_index}"
        super().__init__("zero second difference" + where)
        self.n = n
        self.round_index = round_index


@dataclass(frozen=True)
class TransformedSeries:
    """``constant + sum_{p=1}^n (-1)^(p-1) term(p)``."""

    constant: Fraction
    term: Callable[[int], Fraction]
    source: str

    def partial_value(self, n: int) -> Fraction:
        total = self.constant
        for p in range(1, n + 1):
            total += self.term(p) if p % 2 else -self.term(p)
        return total

    def partial_values(self, n: int) -> list[Fraction]:
        """``[S''_1, ..., S''_n]``."""
        out, total = [], self.constant
        for p in range(1, n + 1):
            total += self.term(p) if p % 2 else -self.term(p)
            out.append(total)
        return out


def transform(u: AlternatingSeries, R: CorrectorFamily, name: str = "R") -> TransformedSeries:
    """Fold the corrector ``R`` into ``u``, giving terms ``v_p = R_p + R_{p+1} - u_{p+1}``.

    The n-th partial value equals ``S_{n+1} + (-1)^(n+1) R_{n+1}``.
    """

    def v(p: int) -> Fraction:
        return (R(p) + R(p + 1)) - u.term(p + 1)

    return TransformedSeries(u.term(1) - R(1), v, f"{u.name}/{name}")


def ml_transform(k: int) -> TransformedSeries:
    """Madhava-Leibniz series transformed by the k-th convergent corrector."""
    return transform(MADHAVA_LEIBNIZ, corrector_family(k), f"R{k}")


def series_a(n: int) -> Fraction:
    """``3 + 4 sum_{p=1}^n (-1)^(p-1) / ((2p+1)^3 - (2p+1))``."""
    return _value(CUBIC_SERIES, n)


def series_b(n: int) -> Fraction:
    """``16 sum_{p=0}^{n-1} (-1)^p / ((2p+1)^5 + 4(2p+1))``; ``n`` counts terms."""
    return _value(QUINTIC_SERIES, n)


def series_c(n: int) -> Fraction:
    return _value(SEPTIC_SERIES, n)


def _value(s: AlternatingSeries, n: int) -> Fraction:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return s.value(n)


SERIES = {"series-a": series_a, "series-b": series_b, "series-c": series_c}
SERIES_OBJECTS = {"series-a": CUBIC_SERIES, "series-b": QUINTIC_SERIES, "series-c": SEPTIC_SERIES}


def first_omitted_term(name: str, n: int) -> Fraction:
    """Bound on ``|series(n) - pi|`` from the alternating-series criterion."""
    s = SERIES_OBJECTS[name]
    return s.scale * s.term(n + 1)


def _getter(S: SequenceLike) -> Callable[[int], Fraction]:
    # sequences are 1-indexed: S[0] holds S_1
    if callable(S):
        return S
    return lambda k: S[k - 1]


def _delta2(s0: Fraction, s1: Fraction, s2: Fraction) -> Fraction | None:
    den = (s2 - s1) - (s1 - s0)
    if den == 0:
        return None
    return (s2 * s0 - s1 * s1) / den


def aitken_delta2(S: SequenceLike, n: int) -> Fraction:
    """``(S_n S_{n-2} - S_{n-1}^2) / ((S_n - S_{n-1}) - (S_{n-1} - S_{n-2}))``."""
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    get = _getter(S)
    out = _delta2(get(n - 2), get(n - 1), get(n))
    if out is None:
        raise UndefinedTransformError(n)
    return out


def aitken_corrector(n: int) -> Fraction:
    """``(2n - 3) / (4 (n - 1)(2n - 1))``, the corrector Aitken implicitly adds."""
    return Fraction(2 * n - 3, 4 * (n - 1) * (2 * n - 1))


def aitken_closed_form_ml(n: int) -> Fraction:
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    sign = 1 if n % 2 == 0 else -1
    return partial_sum(MADHAVA_LEIBNIZ, n) + sign * aitken_corrector(n)


def iterated_aitken(S: SequenceLike, rounds: int, n: int) -> Fraction:
    """Apply delta-squared ``rounds`` times; the result sits at index ``n`` of the last round."""
    if rounds < 1:
        raise ValueError(f"rounds must be >= 1, got {rounds}")
    if n < 2 * rounds + 1:
        raise ValueError(f"need n >= {2 * rounds + 1} for {rounds} rounds, got {n}")
    get = _getter(S)
    window = [get(k) for k in range(n - 2 * rounds, n + 1)]
    for r in range(1, rounds + 1):
        nxt = []
        for i in range(2, len(window)):
            val = _delta2(window[i - 2], window[i - 1], window[i])
            if val is None:
                raise UndefinedTransformError(n - (len(window) - 1 - i), r)
            nxt.append(val)
        window = nxt
    return window[-1]


def consecutive_mean(S: SequenceLike, n: int) -> Fraction:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    get = _getter(S)
    return (get(n - 1) + get(n)) / 2


def quality(R: CorrectorFamily, n: int, ref: Enclosure, u: AlternatingSeries = MADHAVA_LEIBNIZ) -> Enclosure:
    """Enclosure of ``R_n / rho_n - 1``; ``ref`` encloses the limit of ``u``."""
    rho = remainder_magnitude(u, n, ref)
    if rho.contains_zero():
        raise ZeroDivisionError(f"remainder enclosure {rho} contains zero; tighten the reference")
    return R(n) / rho - 1
