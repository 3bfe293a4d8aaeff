"""Exact integer sequences: Catalan numbers, row counts g/t/f/u and the nine root-split convolutions.

Everything is 1-indexed: a horizon-N table holds the values for n = 1..N.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

BASE_NAMES = ("g", "t", "f", "u", "catalan")

# (left sequence, right sequence) for each root-split case; the case's row
# count is the convolution sum over i of left_i * right_{n-i}
CASE_FACTORS: dict[str, tuple[str, str]] = {
    "T1": ("t", "t"),
    "T2": ("f", "t"),
    "T3": ("f", "f"),
    "T4": ("f", "u"),
    "T5": ("u", "t"),
    "F": ("t", "f"),
    "U1": ("t", "u"),
    "U2": ("u", "f"),
    "U3": ("u", "u"),
}
CASE_LABELS = tuple(CASE_FACTORS)


@dataclass(frozen=True)
class SequenceTable:
    name: str
    values: tuple[int, ...]

    @property
    def horizon(self) -> int:
        return len(self.values)

    def value(self, n: int) -> int:
        if not 1 <= n <= self.horizon:
            raise IndexError(f"{self.name}: n={n} outside 1..{self.horizon}")
        return self.values[n - 1]


def _check_horizon(N: int) -> None:
    if N < 1:
        raise ValueError(f"horizon must be at least 1, got {N}")


def catalan(n: int) -> int:
    """Number of bracketings of n terms, ``binomial(2n-2, n-1) / n``."""
    if n < 1:
        raise ValueError(f"catalan(n) needs n >= 1, got {n}")
    return comb(2 * n - 2, n - 1) // n


def catalan_seq(N: int) -> SequenceTable:
    _check_horizon(N)
    return SequenceTable("catalan", tuple(catalan(n) for n in range(1, N + 1)))


def _self_convolve(first: int, N: int) -> list[int]:
    vals = [first]
    for n in range(2, N + 1):
        vals.append(sum(vals[i - 1] * vals[n - i - 1] for i in range(1, n)))
    return vals


def g_seq(N: int, method: str = "closed") -> SequenceTable:
    """Total rows ``g_n = 3^n C_n``; ``method="recurrence"`` uses the convolution g_n = sum g_i g_{n-i}."""
    _check_horizon(N)
    if method == "closed":
        vals = [3**n * catalan(n) for n in range(1, N + 1)]
    elif method == "recurrence":
        vals = _self_convolve(3, N)
    else:
        raise ValueError(f"unknown method {method!r}")
    return SequenceTable("g", tuple(vals))


def u_seq(N: int, method: str = "closed") -> SequenceTable:
    """Unknown rows ``u_n = 3^(n-1) C_n``, or via ``u_n = sum u_i g_{n-i}``."""
    _check_horizon(N)
    if method == "closed":
        vals = [3 ** (n - 1) * catalan(n) for n in range(1, N + 1)]
    elif method == "recurrence":
        g = g_seq(N, method="recurrence").values
        vals = [1]
        for n in range(2, N + 1):
            vals.append(sum(vals[i - 1] * g[n - i - 1] for i in range(1, n)))
    else:
        raise ValueError(f"unknown method {method!r}")
    return SequenceTable("u", tuple(vals))


@lru_cache(maxsize=8)
def _f_values(N: int) -> tuple[int, ...]:
    # 2 C_k 3^(k-1) = g_k - u_k
    weight = [2 * catalan(k) * 3 ** (k - 1) for k in range(1, N + 1)]
    vals = [1]
    for n in range(2, N + 1):
        vals.append(
            sum(vals[i - 1] * (weight[n - i - 1] - vals[n - i - 1]) for i in range(1, n))
        )
    return tuple(vals)


def f_seq(N: int) -> SequenceTable:
    """False rows: ``f_n = sum f_i (2 C_{n-i} 3^(n-i-1) - f_{n-i})``, ``f_1 = 1``."""
    _check_horizon(N)
    return SequenceTable("f", _f_values(N))


def t_seq(N: int) -> SequenceTable:
    """True rows, the remainder ``g_n - f_n - u_n``."""
    g, f, u = g_seq(N).values, f_seq(N).values, u_seq(N).values
    return SequenceTable("t", tuple(a - b - c for a, b, c in zip(g, f, u)))


def convolve(a: SequenceTable, b: SequenceTable, name: str | None = None) -> SequenceTable:
    """``c_n = sum_{i=1}^{n-1} a_i b_{n-i}``; in particular ``c_1 = 0``."""
    if a.horizon != b.horizon:
        raise ValueError(f"horizon mismatch: {a.name} has {a.horizon}, {b.name} has {b.horizon}")
    av, bv = a.values, b.values
    vals = tuple(
        sum(av[i - 1] * bv[n - i - 1] for i in range(1, n)) for n in range(1, a.horizon + 1)
    )
    return SequenceTable(name or f"{a.name}*{b.name}", vals)


def convolve_at(a: SequenceTable, b: SequenceTable, n: int) -> int:
    """Single term of :func:`convolve`, O(n)."""
    if not 1 <= n <= min(a.horizon, b.horizon):
        raise ValueError(f"n={n} outside the common horizon")
    return sum(a.values[i - 1] * b.values[n - i - 1] for i in range(1, n))


@lru_cache(maxsize=16)
def _base(N: int) -> tuple[SequenceTable, ...]:
    g, f, u = g_seq(N), f_seq(N), u_seq(N)
    t = SequenceTable("t", tuple(a - b - c for a, b, c in zip(g.values, f.values, u.values)))
    return g, t, f, u, catalan_seq(N)


def base_sequences(N: int) -> dict[str, SequenceTable]:
    """g, t, f, u and catalan up to horizon N (cached; tables are immutable)."""
    _check_horizon(N)
    return dict(zip(BASE_NAMES, _base(N)))


def subsequences(N: int) -> dict[str, SequenceTable]:
    """The nine root-split sequences T1..T5, F, U1..U3 up to horizon N."""
    _check_horizon(N)
    base = base_sequences(N)
    return {
        label: convolve(base[left], base[right], name=label)
        for label, (left, right) in CASE_FACTORS.items()
    }


def sequence(name: str, N: int) -> SequenceTable:
    """Look up any named sequence; case labels are accepted in either case (``t1`` or ``T1``)."""
    if name in BASE_NAMES:
        return base_sequences(N)[name]
    label = name.upper()
    if label in CASE_FACTORS:
        left, right = CASE_FACTORS[label]
        base = base_sequences(N)
        return convolve(base[left], base[right], name=label)
    raise KeyError(name)
