#!/usr/bin/env python3
"""Scatter plot of heuristic AUC against model AUC from `hyperlp scan` output."""

import argparse

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import pandas as pd  # noqa: E402


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("csv", help="scan CSV written by `hyperlp scan`")
    parser.add_argument("--out", default="scan.png", help="image path")
    args = parser.parse_args()

    rows = pd.read_csv(args.csv)
    rows = rows[rows["error"].isna()]
    scorers = sorted(rows["scorer"].unique())
    fig, axes = plt.subplots(1, len(scorers), figsize=(4.5 * len(scorers), 4.5), squeeze=False)
    for ax, scorer in zip(axes[0], scorers):
        sub = rows[rows["scorer"] == scorer]
        over = sub["overestimated"] == 1
        ax.scatter(sub.loc[~over, "model_auc"], sub.loc[~over, "heuristic_auc"], s=12, c="tab:blue")
        ax.scatter(sub.loc[over, "model_auc"], sub.loc[over, "heuristic_auc"], s=12, c="tab:red")
        ax.plot([0, 1], [0, 1], "k--", lw=0.8)
        ax.set_xlim(0, 1.02)
        ax.set_ylim(0, 1.02)
        ax.set_xlabel("model AUC")
        ax.set_ylabel(f"{scorer} AUC")
        ax.set_title(f"{scorer}: {int(over.sum())}/{len(sub)} above the model")
    fig.tight_layout()
    fig.savefig(args.out, dpi=150)


if __name__ == "__main__":
    main()
