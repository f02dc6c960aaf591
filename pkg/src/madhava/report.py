"""Convergence reports, certified error bounds and the historical comparison table."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .accel import SERIES
from .numkernel import DecimalRendering, Enclosure, Rounding, to_decimal
from .series import pi_enclosure

DEFAULT_ROWS = (2, 3, 4, 5, 10, 11, 20, 21, 40, 41, 70, 71)
TABLE_COLUMNS = ("series-a", "series-b", "series-c")

# Printed values, one tuple (a_n, b_n, c_n) per row.
PRINTED_TABLE: dict[int, tuple[str, str, str]] = {
    2: ("3.13333333333333", "3.1372549019608", "3.1414634146341"),
    3: ("3.1452380952382", "3.1423423423424", "3.1416149068323"),
    4: ("3.1396825396626", "3.141391941392", "3.1415873015673"),
    5: ("3.1427128427129", "3.1416627377024", "3.1415942744802"),
    10: ("3.1414067184965", "3.1415902423789", "3.1415926266579"),
    11: ("3.1417360992607", "3.1415941599212", "3.1415926683944"),
    20: ("3.1415657346587", "3.1415925761871", "3.1415926532636"),
    21: ("3.1416160719183", "3.1415927142891", "3.1415926538114"),
    40: ("3.1415890289487", "3.1415926511543", "3.141592653587"),
    41: ("3.1415960255683", "3.1415926557431", "3.1415926535923"),
    70: ("3.1415919552651", "3.1415926534413", "3.1415926535897"),
    71: ("3.1415933232242", "3.1415926537284", "3.1415926535898"),
}

# Cells whose printed string differs from the exact value truncated to the
# printed number of decimals.  Frozen from exact recomputation.
KNOWN_DEVIATIONS: frozenset[tuple[int, str]] = frozenset(
    {(2, "series-b")}
    | {(n, col) for n in (3, 4, 5, 11, 20, 21, 40, 41) for col in TABLE_COLUMNS}
    | {(10, "series-b"), (10, "series-c"), (70, "series-a"), (70, "series-b"),
       (71, "series-a"), (71, "series-b")}
)

# Oracle width for error bounds and digit counts; beyond this the c-series
# needs too many terms.
ORACLE_DIGITS = 40


def oracle_for(digits: int) -> Enclosure:
    return pi_enclosure(Fraction(1, 10 ** min(digits + 5, ORACLE_DIGITS)))


def abs_error_bound(value: Fraction, pi: Enclosure) -> Fraction:
    """Certified upper bound on ``|value - pi|``."""
    return max(abs(value - pi.lower), abs(value - pi.upper))


def correct_digits(value: Fraction, pi: Enclosure, max_digits: int) -> int:
    """Number of leading decimals of ``value`` (truncated) certified equal to those of pi."""
    best = 0
    for k in range(0, max_digits + 1):
        r = to_decimal(value, k).digits
        if r == to_decimal(pi.lower, k).digits == to_decimal(pi.upper, k).digits:
            best = k
        else:
            break
    return best


def _sci(x: Fraction, sig: int, up: bool) -> str:
    x = Fraction(x)
    if x == 0:
        return "0"
    if x < 0:
        raise ValueError("expected a non-negative bound")
    exp = 0
    while x >= 10 ** (exp + 1):
        exp += 1
    while x < Fraction(10) ** exp:
        exp -= 1
    mant = x / Fraction(10) ** (exp - sig + 1)
    m = -(-mant.numerator // mant.denominator) if up else mant.numerator // mant.denominator
    if m == 10**sig:
        m, exp = 10 ** (sig - 1), exp + 1
    s = str(m)
    return f"{s[0]}.{s[1:]}e{exp:+03d}" if sig > 1 else f"{s}e{exp:+03d}"


def sci_upper(x: Fraction, sig: int = 3) -> str:
    """Scientific notation rounded up, so the string never understates ``x``."""
    return _sci(x, sig, up=True)


def sci_lower(x: Fraction, sig: int = 3) -> str:
    return _sci(x, sig, up=False)


@dataclass(frozen=True)
class ReportRow:
    n: int
    value: Fraction
    rendering: DecimalRendering
    abs_error_bound: Fraction
    correct_digits: int


@dataclass(frozen=True)
class ConvergenceReport:
    method: str
    rows: tuple[ReportRow, ...]

    def __post_init__(self):
        ns = [r.n for r in self.rows]
        if ns != sorted(ns):
            raise ValueError("report rows must be sorted by n")


def make_row(n: int, value: Fraction, digits: int, rounding: Rounding | str = Rounding.TOWARD_ZERO,
             pi: Enclosure | None = None) -> ReportRow:
    pi = pi if pi is not None else oracle_for(digits)
    return ReportRow(
        n, value, to_decimal(value, digits, rounding), abs_error_bound(value, pi),
        correct_digits(value, pi, digits),
    )


def build_report(method: str, fn: Callable[[int], Fraction], rows: Iterable[int], digits: int,
                 rounding: Rounding | str = Rounding.TOWARD_ZERO) -> ConvergenceReport:
    pi = oracle_for(digits)
    return ConvergenceReport(
        method, tuple(make_row(n, fn(n), digits, rounding, pi) for n in sorted(set(rows)))
    )


def build_table(rows: Iterable[int] = DEFAULT_ROWS, digits: int = 13,
                rounding: Rounding | str = Rounding.TOWARD_ZERO) -> list[ConvergenceReport]:
    rows = list(rows)
    if not rows or min(rows) < 1:
        raise ValueError("table rows must be a non-empty list of integers >= 1")
    return [build_report(name, SERIES[name], rows, digits, rounding) for name in TABLE_COLUMNS]


def cell_matches(n: int, column: str) -> bool:
    """Exact value truncated to the printed scale equals the printed string."""
    printed = PRINTED_TABLE[n][TABLE_COLUMNS.index(column)]
    scale = len(printed.split(".")[1])
    return to_decimal(SERIES[column](n), scale).digits == printed


def significant_prefix(text: str, count: int) -> str:
    return text.replace("-", "").replace(".", "").lstrip("0")[:count]


def cell_agrees(n: int, column: str, significant: int = 10) -> bool:
    """First ``significant`` digits of the printed string equal those of the exact value."""
    printed = PRINTED_TABLE[n][TABLE_COLUMNS.index(column)]
    exact = to_decimal(SERIES[column](n), significant + 5).digits
    return significant_prefix(printed, significant) == significant_prefix(exact, significant)
