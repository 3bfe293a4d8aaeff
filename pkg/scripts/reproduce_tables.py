"""Print the t/f/u/g table and the nine root-split sequences, marking disagreements with the printed lists."""

import argparse

from kleene_chains.cli import render_table
from kleene_chains.published import PRINTED
from kleene_chains.recurrence import base_sequences, subsequences


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=11)
    args = parser.parse_args()

    print(render_table(args.n))
    computed = {**base_sequences(args.n), **subsequences(args.n)}
    for name, printed in PRINTED.items():
        values = computed[name].values
        marks = [
            f"{v}" if i >= len(printed) or printed[i] == v else f"{v} (printed {printed[i]})"
            for i, v in enumerate(values)
        ]
        print(f"{name:>3}: {', '.join(marks)}")


if __name__ == "__main__":
    main()
