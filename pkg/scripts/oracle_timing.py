"""Wall-clock comparison of the naive and memoized oracle paths."""

import argparse
import time

from kleene_chains.oracle import brute_force_case_counts, brute_force_counts


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-n", type=int, default=7)
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    for n in range(2, args.max_n + 1):
        row = [f"n={n}"]
        for naive in (False, True):
            start = time.perf_counter()
            counts = brute_force_counts(n, naive=naive, workers=args.workers)
            brute_force_case_counts(n, naive=naive, workers=args.workers)
            row.append(f"{'naive' if naive else 'memo'} {time.perf_counter() - start:8.3f}s")
        print("  ".join(row), counts)


if __name__ == "__main__":
    main()
