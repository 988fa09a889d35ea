#!/usr/bin/env python3
"""Plot a `vpwave plotdata` CSV: first column is x, one line per other column."""

import argparse
import csv
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("csv", nargs="?", default="-", help="input CSV (default: stdin)")
    ap.add_argument("-o", "--out", default="plot.png")
    ap.add_argument("--stacked", action="store_true", help="one panel per column")
    args = ap.parse_args()

    fh = sys.stdin if args.csv == "-" else open(args.csv, newline="")
    rows = list(csv.reader(fh))
    header, data = rows[0], [[float(c) for c in r] for r in rows[1:] if r]
    xs = [r[0] for r in data]
    cols = header[1:]

    if args.stacked:
        fig, axes = plt.subplots(len(cols), 1, sharex=True, figsize=(7, 1.8 * len(cols)), squeeze=False)
        axes = axes[:, 0]
    else:
        fig, ax = plt.subplots(figsize=(7, 4))
        axes = [ax] * len(cols)
    for j, (ax, name) in enumerate(zip(axes, cols), start=1):
        ax.plot(xs, [r[j] for r in data], lw=1, label=name)
        ax.legend(loc="upper right", fontsize="small")
    axes[-1].set_xlabel(header[0])
    fig.tight_layout()
    fig.savefig(args.out, dpi=150)


if __name__ == "__main__":
    main()
