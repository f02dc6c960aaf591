"""Verification suites backing ``madhava verify``.

Each check returns a :class:`Check` with status PASS, WARN or FAIL.  WARN is
reserved for documented deviations of the historical table and for the
comparative claim against iterated delta-squared, which has no stated proof.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from . import accel, remainder
from .numkernel import Enclosure
from .report import (
    DEFAULT_ROWS,
    KNOWN_DEVIATIONS,
    PRINTED_TABLE,
    TABLE_COLUMNS,
    cell_agrees,
    cell_matches,
    sci_lower,
    sci_upper,
)
from .series import (
    MADHAVA_LEIBNIZ,
    certified_pi,
    partial_sum,
    pi_enclosure,
    pi_enclosure_quintic,
    remainder_magnitude,
)

PASS, WARN, FAIL = "PASS", "WARN", "FAIL"
MADHAVA_PI = Fraction(2827433388233, 900000000000)
REFERENCE_WIDTH = Fraction(1, 10**30)


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    detail: str = ""

    def line(self) -> str:
        return f"{self.status} {self.name}" + (f": {self.detail}" if self.detail else "")


def _bool(name: str, ok: bool, detail: str) -> Check:
    return Check(name, PASS if ok else FAIL, detail)


def reference_pi() -> Enclosure:
    return certified_pi(REFERENCE_WIDTH)


def quarter_pi() -> Enclosure:
    return reference_pi() / 4


def ml_sum(n: int) -> Fraction:
    return partial_sum(MADHAVA_LEIBNIZ, n)


def error_enclosure(value: Fraction, pi: Enclosure | None = None) -> Enclosure:
    """Enclosure of ``|value - pi|``."""
    return abs(value - (pi if pi is not None else reference_pi()))


# -- madhava suite ---------------------------------------------------------


def check_oracle_consistency() -> Check:
    c = pi_enclosure(REFERENCE_WIDTH)
    b = pi_enclosure_quintic(REFERENCE_WIDTH)
    return _bool("oracle-consistency", c.overlaps(b),
                 f"b/c enclosures of width <= 1e-30 overlap: {c.overlaps(b)}")


def check_madhava_approximation() -> Check:
    err = error_enclosure(MADHAVA_PI)
    ok = err.lower > Fraction(1, 10**12) and err.upper < Fraction(25, 10**13)
    return _bool("madhava-approximation", ok,
                 f"|2827433388233/900000000000 - pi| in [{sci_lower(err.lower)}, {sci_upper(err.upper)}]"
                 " within (1e-12, 2.5e-12)")


def check_raw_slow_convergence() -> Check:
    pi = reference_pi()
    worst_n, worst = 0, None
    for n in range(1, 1001):
        lo = error_enclosure(4 * ml_sum(n), pi).lower
        if worst is None or lo < worst:
            worst_n, worst = n, lo
    at_2000 = error_enclosure(4 * ml_sum(2000), pi).lower
    ok = worst >= Fraction(5, 10**4) and at_2000 >= Fraction(1, 10**4)
    return _bool("raw-slow-convergence", ok,
                 f"min_(n<=1000) |4S_n - pi| >= {sci_lower(worst)} (n={worst_n}); "
                 f"|4S_2000 - pi| >= {sci_lower(at_2000)}")


# -- identities suite ------------------------------------------------------


def check_remainder_pair_identity(n_max: int = 200) -> Check:
    ref = quarter_pi()
    for n in range(1, n_max + 1):
        s = remainder_magnitude(MADHAVA_LEIBNIZ, n, ref) + remainder_magnitude(MADHAVA_LEIBNIZ, n + 1, ref)
        if not s.contains(Fraction(1, 2 * n + 1)) or s.width >= Fraction(1, 10**20):
            return Check("remainder-pair-identity", FAIL, f"n={n}: {s} vs 1/{2 * n + 1}")
    return Check("remainder-pair-identity", PASS, f"rho_n + rho_(n+1) encloses 1/(2n+1), n=1..{n_max}")


def check_closed_form_correctors(n_max: int = 10_000) -> Check:
    for n in range(1, n_max + 1):
        cf = remainder.rho_fraction(n)
        for k in (1, 2, 3):
            if remainder.cf_convergent(cf, k) != remainder.corrector_closed_form(n, k):
                return Check("closed-form-correctors", FAIL, f"n={n}, k={k}")
    return Check("closed-form-correctors", PASS, f"k=1,2,3 exact for n=1..{n_max}")


def check_normalizations_agree(n_max: int = 50, depth_max: int = 8) -> Check:
    for n in range(1, n_max + 1):
        a, b = remainder.rho_fraction(n), remainder.rho_fraction_quarter(n)
        for d in range(1, depth_max + 1):
            if remainder.cf_convergent(a, d) != remainder.cf_convergent(b, d):
                return Check("normalizations-agree", FAIL, f"n={n}, depth={d}")
    return Check("normalizations-agree", PASS, f"k^2/(2n) and k^2/4/(n) forms equal, n<={n_max}, depth<={depth_max}")


def check_convergent_alternation(n_max: int = 50, depth_max: int = 8) -> Check:
    ref = quarter_pi()
    for n in range(1, n_max + 1):
        rho = remainder_magnitude(MADHAVA_LEIBNIZ, n, ref)
        cf = remainder.rho_fraction(n)
        for d in range(1, depth_max + 1):
            diff = remainder.cf_convergent(cf, d) - rho
            want = 1 if d % 2 else -1
            ok = diff.lower > 0 if want > 0 else diff.upper < 0
            if not ok:
                return Check("convergent-alternation", FAIL, f"n={n}, depth={d}: {diff}")
    return Check("convergent-alternation", PASS,
                 f"sign(convergent - rho_n) = (-1)^(depth+1), n<={n_max}, depth<={depth_max}")


def transformed_term_closed_form(k: int, p: int) -> Fraction:
    q = 2 * p + 1
    if k == 1:
        return Fraction(1, q**3 - q)
    if k == 2:
        return Fraction(-4, q**5 + 4 * q)
    raise ValueError(k)


def check_transform_terms(p_max: int = 1000) -> Check:
    for k in (1, 2):
        R = remainder.corrector_family(k)
        for p in range(1, p_max + 1):
            if (R(p) + R(p + 1)) - Fraction(1, 2 * p + 1) != transformed_term_closed_form(k, p):
                return Check("transform-closed-forms", FAIL, f"k={k}, p={p}")
    return Check("transform-closed-forms", PASS,
                 f"R1: 1/(q^3-q), R2: -4/(q^5+4q) with q=2p+1, p=1..{p_max}")


def check_transform_identity(n_max: int = 200) -> Check:
    for k in (1, 2, 3):
        R = remainder.corrector_family(k)
        values = accel.ml_transform(k).partial_values(n_max)
        for n in range(1, n_max + 1):
            sign = 1 if (n + 1) % 2 == 0 else -1
            if values[n - 1] != ml_sum(n + 1) + sign * R(n + 1):
                return Check("transform-identity", FAIL, f"k={k}, n={n}")
    return Check("transform-identity", PASS, f"S''_n = S_(n+1) + (-1)^(n+1) R_(n+1), k=1..3, n=1..{n_max}")


def check_aitken(n_max: int = 300) -> Check:
    for n in range(3, n_max + 1):
        if accel.aitken_delta2(ml_sum, n) != accel.aitken_closed_form_ml(n):
            return Check("aitken-closed-form", FAIL, f"n={n}")
    if accel.aitken_delta2(ml_sum, 3) != Fraction(19, 24):
        return Check("aitken-closed-form", FAIL, "n=3 differs from 19/24")
    geometric = [1 - Fraction(1, 2**k) for k in range(1, 8)]
    if accel.aitken_delta2(geometric, 3) != 1:
        return Check("aitken-closed-form", FAIL, "geometric sequence not sent to its limit")
    return Check("aitken-closed-form", PASS, f"delta2 = closed form for n=3..{n_max}; S'_3 = 19/24; geometric exact")


def check_aitken_equals_series_a(n_max: int = 100) -> Check:
    for n in range(1, n_max + 1):
        if accel.series_a(n) != 4 * accel.aitken_delta2(ml_sum, n + 2):
            return Check("aitken-series-a", FAIL, f"n={n}")
    return Check("aitken-series-a", PASS, f"a_n = 4 * delta2(S)_(n+2) for n=1..{n_max}")


# -- table suite -----------------------------------------------------------


def check_table_cells() -> Iterator[Check]:
    matches = 0
    for n in DEFAULT_ROWS:
        for col in TABLE_COLUMNS:
            printed = PRINTED_TABLE[n][TABLE_COLUMNS.index(col)]
            name = f"table[{n}][{col}]"
            if cell_matches(n, col):
                matches += 1
                yield Check(name, PASS, printed)
            elif (n, col) in KNOWN_DEVIATIONS and cell_agrees(n, col):
                yield Check(name, WARN, f"printed {printed}, known deviation; 10 significant digits agree")
            else:
                yield Check(name, FAIL, f"printed {printed} disagrees with exact value")
    yield Check("table-exact-matches", PASS if matches == len(DEFAULT_ROWS) * 3 else WARN,
                f"{matches}/{len(DEFAULT_ROWS) * 3} printed cells equal the truncated exact value")


def check_first_omitted_term(n_max: int = 500) -> Check:
    pi = reference_pi()
    for name in TABLE_COLUMNS:
        series = accel.SERIES_OBJECTS[name]
        for n in range(1, n_max + 1):
            err = error_enclosure(series.value(n), pi)
            if not err.upper <= accel.first_omitted_term(name, n):
                return Check("first-omitted-term-bound", FAIL, f"{name}, n={n}")
    return Check("first-omitted-term-bound", PASS, f"a, b, c errors below first omitted term, n=1..{n_max}")


def iterated_aitken_pi(n: int, rounds: int = 2) -> Fraction:
    return 4 * accel.iterated_aitken(ml_sum, rounds, n)


def comparison_errors(n: int) -> dict[str, Enclosure]:
    pi = reference_pi()
    return {
        "series-b": error_enclosure(accel.series_b(n), pi),
        "series-c": error_enclosure(accel.series_c(n), pi),
        "aitken-2": error_enclosure(iterated_aitken_pi(n), pi),
    }


def check_comparison(ns=(10, 20, 40)) -> Iterator[Check]:
    for n in ns:
        errs = comparison_errors(n)
        detail = ", ".join(f"|{k} - pi| <= {sci_upper(v.upper)}" for k, v in errs.items())
        ait = errs["aitken-2"]
        for name in ("series-b", "series-c"):
            certified = errs[name].upper <= ait.lower
            yield Check(f"beats-iterated-aitken[{name}][n={n}]", PASS if certified else WARN, detail)


SUITES: dict[str, Callable[[], Iterator[Check]]] = {}


def _suite(name):
    def register(fn):
        SUITES[name] = fn
        return fn
    return register


@_suite("madhava")
def madhava_suite() -> Iterator[Check]:
    yield check_oracle_consistency()
    yield check_madhava_approximation()
    yield check_raw_slow_convergence()


@_suite("identities")
def identities_suite() -> Iterator[Check]:
    yield check_remainder_pair_identity()
    yield check_closed_form_correctors()
    yield check_normalizations_agree()
    yield check_convergent_alternation()
    yield check_transform_terms()
    yield check_transform_identity()
    yield check_aitken()
    yield check_aitken_equals_series_a()


@_suite("table")
def table_suite() -> Iterator[Check]:
    yield from check_table_cells()
    yield check_first_omitted_term()
    yield from check_comparison()


def run_suite(name: str) -> Iterator[Check]:
    if name == "all":
        for key in ("madhava", "identities", "table"):
            yield from SUITES[key]()
        return
    if name not in SUITES:
        raise KeyError(name)
    yield from SUITES[name]()
