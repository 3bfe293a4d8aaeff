"""Ratio exact/estimate for every labelled sequence over a range of n."""

import argparse

from kleene_chains.asymptotics import LABELS, convergence_report


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, nargs="+", default=[10, 50, 100, 250, 500, 1000])
    args = parser.parse_args()

    print("label," + ",".join(f"n={n}" for n in args.n))
    for label in LABELS:
        ratios = [convergence_report(label, n).ratio for n in args.n]
        print(label + "," + ",".join(f"{r:.6f}" for r in ratios))


if __name__ == "__main__":
    main()
