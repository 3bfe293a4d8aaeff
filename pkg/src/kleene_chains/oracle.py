"""Brute-force row counts over every (bracketing, assignment) pair.

Two independent routes are provided. The naive route evaluates each formula
on each of the 3^n assignments. The memoized route pushes a value-count
vector (how many assignments of a subtree's variables give 0, 1, 2) up each
tree, which is valid because every variable occurs exactly once. Work is
split by bracketing index and folded by summation, so results do not depend
on the number of workers (``KLEENE_ORACLE_WORKERS``).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product

from kleene_chains.config import DEFAULT_LIMITS, Limits, oracle_workers
from kleene_chains.logic import IMPLIES, BracketTree, Leaf, Node, _evaluate, enumerate_trees
from kleene_chains.recurrence import CASE_LABELS

# (left value, right value) at the root for each case label
CASE_OF_PAIR: dict[tuple[int, int], str] = {
    (1, 1): "T1",
    (0, 1): "T2",
    (0, 0): "T3",
    (0, 2): "T4",
    (2, 1): "T5",
    (1, 0): "F",
    (1, 2): "U1",
    (2, 0): "U2",
    (2, 2): "U3",
}


class CapacityError(ValueError):
    """Requested n is above the configured oracle limit."""


@dataclass(frozen=True)
class RowCounts:
    t: int
    f: int
    u: int

    @property
    def g(self) -> int:
        return self.t + self.f + self.u

    def __add__(self, other: "RowCounts") -> "RowCounts":
        return RowCounts(self.t + other.t, self.f + other.f, self.u + other.u)

    @classmethod
    def from_vector(cls, vec: tuple[int, int, int]) -> "RowCounts":
        return cls(t=vec[1], f=vec[0], u=vec[2])


@dataclass(frozen=True)
class CaseCounts:
    counts: dict[str, int]

    def __getitem__(self, label: str) -> int:
        return self.counts[label]

    def __add__(self, other: "CaseCounts") -> "CaseCounts":
        return CaseCounts({k: self.counts[k] + other.counts[k] for k in CASE_LABELS})

    @classmethod
    def zero(cls) -> "CaseCounts":
        return cls({k: 0 for k in CASE_LABELS})

    def totals(self) -> RowCounts:
        return RowCounts(
            t=sum(self.counts[f"T{i}"] for i in range(1, 6)),
            f=self.counts["F"],
            u=sum(self.counts[f"U{i}"] for i in range(1, 4)),
        )


def _check_n(n: int, limit: int, minimum: int = 1) -> None:
    if n < minimum:
        raise ValueError(f"n must be at least {minimum}, got {n}")
    if n > limit:
        raise CapacityError(f"n={n} exceeds the oracle limit {limit}")


def value_vector(tree: BracketTree) -> tuple[int, int, int]:
    """Number of assignments of the tree's variables giving 0, 1 and 2."""
    if isinstance(tree, Leaf):
        return (1, 1, 1)
    left, right = value_vector(tree.left), value_vector(tree.right)
    out = [0, 0, 0]
    for a in range(3):
        for b in range(3):
            out[IMPLIES[a][b]] += left[a] * right[b]
    return (out[0], out[1], out[2])


# per-tree workers; module level so process pools can pickle them


def _naive_rows(tree: BracketTree) -> RowCounts:
    vec = [0, 0, 0]
    for assignment in product(range(3), repeat=tree.size):
        vec[_evaluate(tree, assignment)] += 1
    return RowCounts.from_vector(tuple(vec))


def _memo_rows(tree: BracketTree) -> RowCounts:
    return RowCounts.from_vector(value_vector(tree))


def _naive_cases(tree: Node) -> CaseCounts:
    counts = dict.fromkeys(CASE_LABELS, 0)
    for assignment in product(range(3), repeat=tree.size):
        pair = (_evaluate(tree.left, assignment), _evaluate(tree.right, assignment))
        counts[CASE_OF_PAIR[pair]] += 1
    return CaseCounts(counts)


def _memo_cases(tree: Node) -> CaseCounts:
    left, right = value_vector(tree.left), value_vector(tree.right)
    return CaseCounts({CASE_OF_PAIR[a, b]: left[a] * right[b] for a, b in CASE_OF_PAIR})


def _fold(fn, trees, zero, workers: int):
    if workers <= 1 or len(trees) < 2 * workers:
        results = map(fn, trees)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(fn, trees, chunksize=max(1, len(trees) // (4 * workers))))
    total = zero
    for r in results:
        total = total + r
    return total


def brute_force_counts(
    n: int, naive: bool = False, workers: int | None = None, limits: Limits = DEFAULT_LIMITS
) -> RowCounts:
    """Rows of all truth tables for n variables, split by formula value."""
    _check_n(n, limits.max_naive_n if naive else limits.max_oracle_n)
    workers = oracle_workers() if workers is None else workers
    return _fold(_naive_rows if naive else _memo_rows, enumerate_trees(n), RowCounts(0, 0, 0), workers)


def brute_force_case_counts(
    n: int, naive: bool = False, workers: int | None = None, limits: Limits = DEFAULT_LIMITS
) -> CaseCounts:
    """Rows classified by the pair (left subtree value, right subtree value) at the root."""
    _check_n(n, limits.max_naive_n if naive else limits.max_oracle_n, minimum=2)
    workers = oracle_workers() if workers is None else workers
    return _fold(_naive_cases if naive else _memo_cases, enumerate_trees(n), CaseCounts.zero(), workers)
