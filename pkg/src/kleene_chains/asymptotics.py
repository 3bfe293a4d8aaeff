"""Leading-order growth ``a_n ~ c * 3 * 12^(n-1) / sqrt(pi n^3)`` for every row-count sequence."""

from __future__ import annotations

import math
from dataclasses import dataclass

from kleene_chains.recurrence import CASE_FACTORS, base_sequences, convolve_at

SQRT7 = math.sqrt(7)
SQRT3 = math.sqrt(3)

# label -> (exact form, value); T2 and F share f's constant
_CONSTANTS: dict[str, tuple[str, float]] = {
    "g": ("1", 1.0),
    "t": ("(7+2*sqrt(7))/21", (7 + 2 * SQRT7) / 21),
    "f": ("(7-2*sqrt(7))/21", (7 - 2 * SQRT7) / 21),
    "u": ("1/3", 1 / 3),
    "T1": ("(14+sqrt(7))/63", (14 + SQRT7) / 63),
    "T2": ("(7-2*sqrt(7))/21", (7 - 2 * SQRT7) / 21),
    "T3": ("(11*sqrt(7)-28)/63", (11 * SQRT7 - 28) / 63),
    "T4": ("(5*sqrt(7)-7)/126", (5 * SQRT7 - 7) / 126),
    "T5": ("(35-5*sqrt(7))/126", (35 - 5 * SQRT7) / 126),
    "U1": ("(35-5*sqrt(7))/126", (35 - 5 * SQRT7) / 126),
    "U2": ("(5*sqrt(7)-7)/126", (5 * SQRT7 - 7) / 126),
    "U3": ("1/9", 1 / 9),
}
LABELS = tuple(_CONSTANTS)

# two-valued counterparts for the first three true-row cases
_TWO_VALUED: dict[str, tuple[str, float]] = {
    "T1": ("1/2", 0.5),
    "T2": ("(3-sqrt(3))/6", (3 - SQRT3) / 6),
    "T3": ("(2*sqrt(3)-3)/6", (2 * SQRT3 - 3) / 6),
}


@dataclass(frozen=True)
class AsymptoticConstant:
    label: str
    exact_form: str
    value: float


@dataclass(frozen=True)
class ConvergenceReport:
    label: str
    n: int
    exact: int
    estimate: float
    log_estimate: float
    ratio: float


@dataclass(frozen=True)
class Comparison:
    label: str
    two_valued: AsymptoticConstant
    three_valued: AsymptoticConstant
    percent_decrease: float


def _normalize(label: str) -> str:
    if label in _CONSTANTS:
        return label
    if label.upper() in _CONSTANTS and label.upper() != "F":
        return label.upper()
    raise KeyError(f"no asymptotic constant for {label!r}; known: {', '.join(LABELS)}")


def constant(label: str) -> AsymptoticConstant:
    label = _normalize(label)
    form, value = _CONSTANTS[label]
    return AsymptoticConstant(label, form, value)


def log_estimate(label: str, n: int) -> float:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    c = constant(label).value
    return (
        math.log(c)
        + math.log(3)
        + (n - 1) * math.log(12)
        - 0.5 * (math.log(math.pi) + 3 * math.log(n))
    )


def estimate(label: str, n: int) -> float:
    """``c * 3 * 12^(n-1) / sqrt(pi n^3)``; overflows to ``inf`` past float range, use :func:`log_estimate` there."""
    try:
        return math.exp(log_estimate(label, n))
    except OverflowError:
        return math.inf


def exact_value(label: str, n: int) -> int:
    label = _normalize(label)
    base = base_sequences(n)
    if label in CASE_FACTORS:
        left, right = CASE_FACTORS[label]
        return convolve_at(base[left], base[right], n)
    return base[label].value(n)


def convergence_report(label: str, n: int) -> ConvergenceReport:
    label = _normalize(label)
    exact = exact_value(label, n)
    # math.log accepts arbitrarily large ints, so the ratio never leaves float range
    log_est = log_estimate(label, n)
    ratio = math.exp(math.log(exact) - log_est)
    return ConvergenceReport(label, n, exact, estimate(label, n), log_est, ratio)


def scientific(log_value: float, digits: int = 10) -> str:
    """Render ``exp(log_value)`` as ``m.mmmme+XX`` without leaving float range."""
    exponent = math.floor(log_value / math.log(10))
    mantissa = round(math.exp(log_value - exponent * math.log(10)), digits - 1)
    if mantissa >= 10:
        mantissa, exponent = mantissa / 10, exponent + 1
    elif mantissa < 1:
        mantissa, exponent = mantissa * 10, exponent - 1
    return f"{mantissa:.{digits - 1}f}e{exponent:+d}"


def two_valued_comparison() -> list[Comparison]:
    rows = []
    for label, (form, value) in _TWO_VALUED.items():
        new = constant(label)
        rows.append(
            Comparison(
                label=label,
                two_valued=AsymptoticConstant(label, form, value),
                three_valued=new,
                percent_decrease=100 * (1 - new.value / value),
            )
        )
    return rows
