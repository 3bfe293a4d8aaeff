"""Truncated power series with exact rational coefficients, and the generating functions G, U, F, T.

A series of order N carries the coefficients of x^0..x^N. Arithmetic between
series of different orders is refused rather than silently truncated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, isqrt, log2
from typing import Iterable, Union

from kleene_chains.recurrence import CASE_FACTORS

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class PowerSeries:
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a power series needs at least the constant term")

    @classmethod
    def of(cls, values: Iterable[Scalar], order: int) -> "PowerSeries":
        """Series from leading coefficients, zero-padded (or cut) to ``order``."""
        vals = [Fraction(v) for v in values][: order + 1]
        vals += [Fraction(0)] * (order + 1 - len(vals))
        return cls(tuple(vals))

    @classmethod
    def constant(cls, c: Scalar, order: int) -> "PowerSeries":
        return cls.of([c], order)

    @classmethod
    def x(cls, order: int) -> "PowerSeries":
        return cls.of([0, 1], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return coeff(self, n)

    def _same_order(self, other: "PowerSeries") -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: "PowerSeries | Scalar") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            other = PowerSeries.constant(other, self.order)
        self._same_order(other)
        return PowerSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "PowerSeries":
        return PowerSeries(tuple(-a for a in self.coeffs))

    def __sub__(self, other: "PowerSeries | Scalar") -> "PowerSeries":
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "PowerSeries":
        return (-self) + other

    def __mul__(self, other: "PowerSeries | Scalar") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            c = Fraction(other)
            return PowerSeries(tuple(c * a for a in self.coeffs))
        self._same_order(other)
        a, b = self.coeffs, other.coeffs
        return PowerSeries(
            tuple(sum(a[i] * b[n - i] for i in range(n + 1)) for n in range(self.order + 1))
        )

    __rmul__ = __mul__

    def __truediv__(self, other: "PowerSeries | Scalar") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return self * (1 / Fraction(other))
        return self * ps_inverse(other)

    def truncate(self, order: int) -> "PowerSeries":
        return PowerSeries.of(self.coeffs, order)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __repr__(self) -> str:
        terms = [f"{c}*x^{i}" for i, c in enumerate(self.coeffs) if c]
        return f"PowerSeries({' + '.join(terms) or '0'}, order={self.order})"


def ps_add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    return a + b


def ps_sub(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    return a - b


def ps_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    return a * b


def ps_scale(a: PowerSeries, c: Scalar) -> PowerSeries:
    return a * Fraction(c)


def coeff(s: PowerSeries, n: int) -> Fraction:
    """``[x^n] s``."""
    if not 0 <= n <= s.order:
        raise IndexError(f"coefficient index {n} outside 0..{s.order}")
    return s.coeffs[n]


def ps_inverse(a: PowerSeries) -> PowerSeries:
    """Multiplicative inverse by the triangular coefficient recursion."""
    a0 = a.coeffs[0]
    if a0 == 0:
        raise ZeroDivisionError("series with zero constant term has no inverse")
    inv = [1 / a0]
    for n in range(1, a.order + 1):
        acc = sum(a.coeffs[k] * inv[n - k] for k in range(1, n + 1))
        inv.append(-acc / a0)
    return PowerSeries(tuple(inv))


def _rational_sqrt(q: Fraction) -> Fraction:
    if q <= 0:
        raise ValueError(f"constant term {q} has no positive square root")
    num, den = isqrt(q.numerator), isqrt(q.denominator)
    if num * num != q.numerator or den * den != q.denominator:
        raise ValueError(f"constant term {q} is not the square of a rational")
    return Fraction(num, den)


def ps_sqrt(a: PowerSeries) -> PowerSeries:
    """Square root with positive constant term, by Newton's iteration ``s <- (s + a/s)/2``.

    Each step doubles the number of correct coefficients, so
    ``ceil(log2(N + 1))`` steps reach order N.
    """
    s = PowerSeries((_rational_sqrt(a.coeffs[0]),))
    steps = ceil(log2(a.order + 1)) if a.order > 0 else 0
    for _ in range(steps):
        prec = min(2 * (s.order + 1) - 1, a.order)
        s = s.truncate(prec)
        s = (s + a.truncate(prec) / s) * Fraction(1, 2)
    return s.truncate(a.order)


@lru_cache(maxsize=8)
def _radicals(N: int) -> tuple[PowerSeries, PowerSeries]:
    x = PowerSeries.x(N)
    inner = ps_sqrt(1 - 12 * x)
    outer = ps_sqrt(5 + 24 * x + 4 * inner)
    return inner, outer


def build_G(N: int) -> PowerSeries:
    """``(1 - sqrt(1 - 12x)) / 2``, generating total rows."""
    inner, _ = _radicals(N)
    return (1 - inner) * Fraction(1, 2)


def build_U(N: int) -> PowerSeries:
    """``(1 - sqrt(1 - 12x)) / 6``, generating unknown rows."""
    inner, _ = _radicals(N)
    return (1 - inner) * Fraction(1, 6)


def build_F(N: int) -> PowerSeries:
    """``(-2 - sqrt(1-12x) + sqrt(5 + 24x + 4 sqrt(1-12x))) / 6``, generating false rows."""
    inner, outer = _radicals(N)
    return (-2 - inner + outer) * Fraction(1, 6)


def build_T(N: int) -> PowerSeries:
    """``(4 - sqrt(1-12x) - sqrt(5 + 24x + 4 sqrt(1-12x))) / 6``, generating true rows."""
    inner, outer = _radicals(N)
    return (4 - inner - outer) * Fraction(1, 6)


_BUILDERS = {"g": build_G, "u": build_U, "f": build_F, "t": build_T}


def build_base(name: str, N: int) -> PowerSeries:
    return _BUILDERS[name](N)


def build_sub_series(label: str, N: int) -> PowerSeries:
    """Product series for a root-split case, e.g. ``T4 = F*U`` or ``U3 = U^2``."""
    left, right = CASE_FACTORS[label.upper()]
    return build_base(left, N) * build_base(right, N)
