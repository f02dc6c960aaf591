"""Generalized continued fractions for the Madhava-Leibniz remainder.

The remainder ``rho_n = |pi/4 - S_n|`` has the expansion

    rho_n = (1/2) / (2n + 1^2 / (2n + 2^2 / (2n + ...)))

and its first three convergents are the historical correction terms
``1/(4n)``, ``n/(4n^2 + 1)`` and ``(n^2 + 1)/((4n^2 + 5) n)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .series import MADHAVA_LEIBNIZ, partial_sum

HISTORICAL_PI = Fraction(62832, 20000)


class ConvergentError(ZeroDivisionError):
    """A backward recurrence hit a zero denominator."""

    def __init__(self, level: int, name: str):
        super().__init__(f"zero denominator at level {level} while evaluating {name!r}")
        self.level = level


@dataclass(frozen=True)
class ContinuedFraction:
    """``a_0 / (b_0 + a_1 / (b_1 + a_2 / (b_2 + ...)))``."""

    partial_numerator: Callable[[int], Fraction]
    partial_denominator: Callable[[int], Fraction]
    name: str = "cf"


@dataclass(frozen=True, order=True)
class CorrectorOrder:
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"corrector order must be >= 1, got {self.k}")


def _order(order: CorrectorOrder | int) -> CorrectorOrder:
    return order if isinstance(order, CorrectorOrder) else CorrectorOrder(order)


def cf_convergent(cf: ContinuedFraction, depth: int) -> Fraction:
    """The ``depth``-th convergent (depth 1 is ``a_0/b_0``), by backward recurrence."""
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    a, b = cf.partial_numerator, cf.partial_denominator
    last = depth - 1
    den = Fraction(b(last))
    if den == 0:
        raise ConvergentError(last, cf.name)
    t = Fraction(a(last)) / den
    for j in range(last - 1, -1, -1):
        den = b(j) + t
        if den == 0:
            raise ConvergentError(j, cf.name)
        t = a(j) / den
    return t


def cf_convergents(cf: ContinuedFraction, depth: int) -> list[Fraction]:
    return [cf_convergent(cf, d) for d in range(1, depth + 1)]


def rho_fraction(n: int) -> ContinuedFraction:
    """Remainder expansion with ``a_0 = 1/2``, ``a_k = k^2``, ``b_k = 2n``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    two_n = Fraction(2 * n)
    return ContinuedFraction(
        lambda k: Fraction(1, 2) if k == 0 else Fraction(k * k),
        lambda k: two_n,
        f"rho_{n}",
    )


def rho_fraction_quarter(n: int) -> ContinuedFraction:
    """Equivalent expansion with ``a_0 = 1/4``, ``a_k = k^2/4``, ``b_k = n``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return ContinuedFraction(
        lambda k: Fraction(1, 4) if k == 0 else Fraction(k * k, 4),
        lambda k: Fraction(n),
        f"rho_{n}/quarter",
    )


def corrector_closed_form(n: int, k: int) -> Fraction:
    if k == 1:
        return Fraction(1, 4 * n)
    if k == 2:
        return Fraction(n, 4 * n * n + 1)
    if k == 3:
        return Fraction(n * n + 1, (4 * n * n + 5) * n)
    raise ValueError(f"closed form only known for k in 1..3, got {k}")


def corrector(n: int, order: CorrectorOrder | int) -> Fraction:
    """``R_n^(k)``: the k-th convergent of the remainder expansion."""
    return cf_convergent(rho_fraction(n), _order(order).k)


def corrector_family(order: CorrectorOrder | int) -> Callable[[int], Fraction]:
    """``n -> R_n^(k)`` as a term function; closed forms for k <= 3."""
    k = _order(order).k
    if k <= 3:
        return lambda n: corrector_closed_form(n, k)
    return lambda n: corrector(n, k)


def corrected_pi(n: int, order: CorrectorOrder | int) -> Fraction:
    """``4 (S_n + (-1)^n R_n^(k))``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    sign = 1 if n % 2 == 0 else -1
    return 4 * (partial_sum(MADHAVA_LEIBNIZ, n) + sign * corrector(n, order))


def brouncker_pi(depth: int) -> Fraction:
    """``4 - 4 * (depth-th convergent of rho_1)``, i.e. 4 - 2/(2 + 1^2/(2 + 2^2/(2 + ...)))."""
    return 4 - 4 * cf_convergent(rho_fraction(1), depth)


def historical_residual(n: int) -> Fraction:
    """The ``f_n`` with ``|62832/80000 - S_n| = 1/(4n + 1/(n + 1/f_n))``.

    The relation is inverted exactly; any zero or negative intermediate
    denominator means no such ``f_n`` exists and raises ``ValueError``.
    """
    return 1 / historical_residual_additive(n)


def historical_residual_additive(n: int) -> Fraction:
    """The ``g_n`` with ``|62832/80000 - S_n| = 1/(4n + 1/(n + g_n))``, i.e. ``1/f_n``."""
    if not 1 <= n <= 4:
        raise ValueError(f"n must lie in 1..4, got {n}")
    d = abs(HISTORICAL_PI / 4 - partial_sum(MADHAVA_LEIBNIZ, n))
    if d == 0:
        raise ValueError(f"zero residual at n={n}")
    inner = 1 / d - 4 * n
    if inner <= 0:
        raise ValueError(f"non-positive level-1 denominator {inner} at n={n}")
    tail = 1 / inner - n
    if tail <= 0:
        raise ValueError(f"non-positive level-2 denominator {tail} at n={n}")
    return tail
