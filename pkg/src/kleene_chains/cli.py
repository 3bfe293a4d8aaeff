"""Command-line front end.

Usage:
    kleene-chains seq t --n 9 --format csv
    kleene-chains table --n 9
    kleene-chains verify --n-exhaustive 8 --n-identities 50
    kleene-chains truthtable --n 3
    kleene-chains asympt f --n 100 --n 500
    kleene-chains asympt compare2v

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 capacity.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass
from itertools import product
from typing import Iterable, Iterator

from kleene_chains import asymptotics, oracle, recurrence, series
from kleene_chains.config import DEFAULT_LIMITS
from kleene_chains.logic import enumerate_trees, evaluate

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3

SEQ_NAMES = ("g", "t", "f", "u", "catalan", "t1", "t2", "t3", "t4", "t5", "u1", "u2", "u3")
CLOSED_FORM = {"g", "u", "catalan"}


class UsageError(Exception):
    pass


class CapacityExceeded(Exception):
    pass


@dataclass(frozen=True)
class ExportRecord:
    sequence: str
    n: int
    value: str
    source: str


def export_records(name: str, N: int) -> list[ExportRecord]:
    if name not in SEQ_NAMES:
        raise UsageError(f"unknown sequence {name!r}; choose from {', '.join(SEQ_NAMES)}")
    if N < 1:
        raise UsageError("--n must be at least 1")
    if N > DEFAULT_LIMITS.max_horizon:
        raise CapacityExceeded(f"--n {N} exceeds the horizon limit {DEFAULT_LIMITS.max_horizon}")
    table = recurrence.sequence(name, N)
    source = "closed-form" if name in CLOSED_FORM else "recurrence"
    return [ExportRecord(name, n, str(v), source) for n, v in enumerate(table.values, start=1)]


def render_csv(records: Iterable[ExportRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "value"])
    for r in records:
        writer.writerow([r.n, r.value])
    return buf.getvalue()


def render_json(records: Iterable[ExportRecord]) -> str:
    return json.dumps([asdict(r) for r in records], indent=2) + "\n"


def read_csv(text: str) -> list[tuple[int, int]]:
    rows = list(csv.reader(io.StringIO(text)))
    if rows[0] != ["n", "value"]:
        raise ValueError(f"unexpected header {rows[0]}")
    return [(int(n), int(v)) for n, v in rows[1:]]


def render_table(N: int) -> str:
    base = recurrence.base_sequences(N)
    rows = [["n", *map(str, range(1, N + 1))]]
    for name in ("t", "f", "u", "g"):
        rows.append([f"{name}_n", *map(str, base[name].values)])
    widths = [max(len(r[i]) for r in rows) for i in range(N + 1)]
    lines = [" ".join(cell.rjust(w) for cell, w in zip(r, widths)) for r in rows]
    return "\n".join(lines) + "\n"


def parse_table(text: str) -> dict[str, list[int]]:
    out = {}
    for line in text.strip().splitlines():
        head, *cells = line.split()
        out[head] = [int(c) for c in cells]
    return out


def truthtable_rows(n: int) -> Iterator[tuple[str, str, int]]:
    for tree in enumerate_trees(n):
        formula = str(tree)
        for assignment in product(range(3), repeat=n):
            yield formula, "".join(map(str, assignment)), int(evaluate(tree, assignment))


# verification


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


def _first_mismatch(name: str, items: Iterable[tuple[int, object, object]]) -> Check:
    for n, got, want in items:
        if got != want:
            return Check(name, False, f"first mismatch at n={n}: {got} != {want}")
    return Check(name, True)


def _run_checks(n_exhaustive: int, n_identities: int, n_asymptotic: int) -> Iterator[Check]:
    limits = DEFAULT_LIMITS
    if n_exhaustive > limits.max_oracle_n:
        raise CapacityExceeded(
            f"--n-exhaustive {n_exhaustive} exceeds the oracle limit {limits.max_oracle_n}"
        )
    Ne, Ni = n_exhaustive, n_identities
    base = recurrence.base_sequences(max(Ne, Ni, 1))
    subs = recurrence.subsequences(max(Ne, Ni, 1))
    t, f, u, g = (base[k].values for k in "tfug")

    yield _first_mismatch(
        "tree count equals catalan(n)",
        ((n, len(enumerate_trees(n)), recurrence.catalan(n)) for n in range(1, min(Ne, 12) + 1)),
    )
    yield _first_mismatch(
        "oracle row counts equal recurrence (t, f, u, g)",
        (
            (n, (c.t, c.f, c.u, c.g), (t[n - 1], f[n - 1], u[n - 1], g[n - 1]))
            for n in range(1, Ne + 1)
            for c in [oracle.brute_force_counts(n)]
        ),
    )
    yield _first_mismatch(
        "oracle root-split counts equal the nine convolutions",
        (
            (n, oracle.brute_force_case_counts(n).counts, {k: s.values[n - 1] for k, s in subs.items()})
            for n in range(2, Ne + 1)
        ),
    )
    n_naive = min(Ne, 5)
    yield _first_mismatch(
        "naive enumeration equals memoized oracle",
        (
            (n, (oracle.brute_force_counts(n, naive=True), oracle.brute_force_case_counts(n, naive=True) if n > 1 else None),
             (oracle.brute_force_counts(n), oracle.brute_force_case_counts(n) if n > 1 else None))
            for n in range(1, n_naive + 1)
        ),
    )

    for name, builder in (("g", series.build_G), ("u", series.build_U), ("f", series.build_F), ("t", series.build_T)):
        s = builder(Ni)
        yield _first_mismatch(
            f"series {name.upper()} coefficients equal recurrence",
            ((n, s.coeffs[n], base[name].values[n - 1]) for n in range(1, Ni + 1)),
        )
    for label in recurrence.CASE_LABELS:
        s = series.build_sub_series(label, Ni)
        yield _first_mismatch(
            f"series {label} coefficients equal convolution",
            ((n, s.coeffs[n], subs[label].values[n - 1]) for n in range(1, Ni + 1)),
        )
    x = series.PowerSeries.x(Ni)
    G, U, F = series.build_G(Ni), series.build_U(Ni), series.build_F(Ni)
    yield _first_mismatch("U = x + U*G", ((n, a, b) for n, (a, b) in enumerate(zip(U.coeffs, (x + U * G).coeffs))))
    yield _first_mismatch(
        "F = 2*F*U - F^2 + x",
        ((n, a, b) for n, (a, b) in enumerate(zip(F.coeffs, (2 * F * U - F * F + x).coeffs))),
    )

    rng = range(1, Ni + 1)
    yield _first_mismatch("g = t + f + u", ((n, g[n - 1], t[n - 1] + f[n - 1] + u[n - 1]) for n in rng))
    yield _first_mismatch("2u = t + f", ((n, 2 * u[n - 1], t[n - 1] + f[n - 1]) for n in rng))
    yield _first_mismatch(
        "u = 3^(n-1) catalan(n)", ((n, u[n - 1], 3 ** (n - 1) * recurrence.catalan(n)) for n in rng)
    )
    yield _first_mismatch("g = 3^n catalan(n)", ((n, g[n - 1], 3**n * recurrence.catalan(n)) for n in rng))
    g_rec = recurrence.g_seq(Ni, method="recurrence").values
    u_rec = recurrence.u_seq(Ni, method="recurrence").values
    yield _first_mismatch("g convolution recurrence equals closed form", ((n, g_rec[n - 1], g[n - 1]) for n in rng))
    yield _first_mismatch("u convolution recurrence equals closed form", ((n, u_rec[n - 1], u[n - 1]) for n in rng))

    def sub(label: str, n: int) -> int:
        return subs[label].values[n - 1]

    rng2 = range(2, Ni + 1)
    yield _first_mismatch("t = T1+T2+T3+T4+T5", ((n, t[n - 1], sum(sub(f"T{i}", n) for i in range(1, 6))) for n in rng2))
    yield _first_mismatch("u = U1+U2+U3", ((n, u[n - 1], sum(sub(f"U{i}", n) for i in range(1, 4))) for n in rng2))
    yield _first_mismatch("f = F-case", ((n, f[n - 1], sub("F", n)) for n in rng2))
    yield _first_mismatch("T4 = U2", ((n, sub("T4", n), sub("U2", n)) for n in rng))
    yield _first_mismatch("T5 = U1", ((n, sub("T5", n), sub("U1", n)) for n in rng))
    yield _first_mismatch(
        "g = (T1+T2+T3) + 2(T4+T5) + U3 + F",
        (
            (n, g[n - 1], sub("T1", n) + sub("T2", n) + sub("T3", n) + 2 * (sub("T4", n) + sub("T5", n)) + sub("U3", n) + sub("F", n))
            for n in rng2
        ),
    )

    c = {label: asymptotics.constant(label).value for label in asymptotics.LABELS}
    sums = [
        ("c_f + c_t = 2/3", c["f"] + c["t"], 2 / 3),
        ("sum c_T = c_t", sum(c[f"T{i}"] for i in range(1, 6)), c["t"]),
        ("sum c_U = 1/3", sum(c[f"U{i}"] for i in range(1, 4)), 1 / 3),
    ]
    for name, got, want in sums:
        yield Check(name, abs(got - want) <= 1e-10 * abs(want), f"{got!r} vs {want!r}")
    for label in asymptotics.LABELS:
        rep = asymptotics.convergence_report(label, n_asymptotic)
        yield Check(
            f"asymptotic ratio for {label} within 1% at n={n_asymptotic}",
            abs(rep.ratio - 1) <= 0.01,
            f"ratio {rep.ratio:.6f}",
        )


def run_verify(n_exhaustive: int = 8, n_identities: int = 50, n_asymptotic: int = 500) -> list[Check]:
    return list(_run_checks(n_exhaustive, n_identities, n_asymptotic))


# argument handling


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_seq(args) -> int:
    records = export_records(args.name, args.n)
    _emit(render_csv(records) if args.format == "csv" else render_json(records), args.out)
    return EXIT_OK


def cmd_table(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    if args.n > DEFAULT_LIMITS.max_horizon:
        raise CapacityExceeded(f"--n {args.n} exceeds the horizon limit {DEFAULT_LIMITS.max_horizon}")
    _emit(render_table(args.n), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if min(args.n_exhaustive, args.n_identities) < 1:
        raise UsageError("verification horizons must be at least 1")
    checks = run_verify(args.n_exhaustive, args.n_identities, args.n_asymptotic)
    lines = [
        f"PASS {c.name}" if c.passed else f"FAIL {c.name}: {c.detail}" for c in checks
    ]
    failures = [c for c in checks if not c.passed]
    lines.append(f"{len(checks) - len(failures)}/{len(checks)} checks passed")
    _emit("\n".join(lines) + "\n", args.out)
    if failures:
        print(f"verification failed: {failures[0].name}: {failures[0].detail}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_truthtable(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    if args.n > args.limit:
        raise CapacityExceeded(f"--n {args.n} exceeds the truth-table limit {args.limit}")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["formula", "assignment", "value"])
    writer.writerows(truthtable_rows(args.n))
    _emit(buf.getvalue(), args.out)
    return EXIT_OK


def cmd_asympt(args) -> int:
    if args.name == "compare2v":
        lines = ["label,two_valued,three_valued,percent_decrease"]
        for row in asymptotics.two_valued_comparison():
            lines.append(
                f"{row.label},{row.two_valued.exact_form}={row.two_valued.value:.10f},"
                f"{row.three_valued.exact_form}={row.three_valued.value:.10f},{row.percent_decrease:.1f}%"
            )
        _emit("\n".join(lines) + "\n", args.out)
        return EXIT_OK
    try:
        const = asymptotics.constant(args.name)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    ns = args.n or [9]
    if max(ns) > DEFAULT_LIMITS.max_horizon:
        raise CapacityExceeded(f"--n {max(ns)} exceeds the horizon limit {DEFAULT_LIMITS.max_horizon}")
    if min(ns) < 1:
        raise UsageError("--n must be at least 1")
    lines = [f"# {const.label}: c = {const.exact_form} = {const.value:.12g}", "n,exact,estimate,ratio"]
    for n in ns:
        rep = asymptotics.convergence_report(const.label, n)
        lines.append(f"{n},{rep.exact},{asymptotics.scientific(rep.log_estimate)},{rep.ratio:.10f}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kleene-chains",
        description="Row counts of Kleene truth tables over bracketed implication chains.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", help="print a sequence for n = 1..N")
    p.add_argument("name", help=", ".join(SEQ_NAMES))
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("verify", help="cross-check oracle, recurrences, series and asymptotics")
    p.add_argument("--n-exhaustive", type=int, default=8)
    p.add_argument("--n-identities", type=int, default=50)
    p.add_argument("--n-asymptotic", type=int, default=500)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="t/f/u/g table for n = 1..N")
    p.add_argument("--n", type=int, default=9)
    p.add_argument("--out")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("truthtable", help="every row of every bracketing's truth table")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--limit", type=int, default=DEFAULT_LIMITS.max_truthtable_n)
    p.add_argument("--out")
    p.set_defaults(func=cmd_truthtable)

    p = sub.add_parser("asympt", help="asymptotic constant, estimate and ratio; 'compare2v' for the two-valued comparison")
    p.add_argument("name")
    p.add_argument("--n", type=int, action="append")
    p.add_argument("--out")
    p.set_defaults(func=cmd_asympt)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CapacityExceeded, oracle.CapacityError) as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY


if __name__ == "__main__":
    sys.exit(main())
