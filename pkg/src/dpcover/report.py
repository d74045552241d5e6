"""Figure rendering for CLI reports.

Figures are written straight to files (Agg backend) so reports stay
scriptable; they accompany the csv/table output rather than replacing it.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def save_verification_plot(rows: list[dict], path: str) -> str:
    """Computed vs expected K4 extremal values per fold, parity-colored."""
    fig, ax = plt.subplots(figsize=(7.0, 4.4))
    even = [r for r in rows if r["m"] % 2 == 0]
    odd = [r for r in rows if r["m"] % 2 == 1]
    if even:
        ax.plot([r["m"] for r in even], [r["expected"] for r in even],
                "o-", color="tab:blue", markersize=4, label="expected (even fold)")
    if odd:
        ax.plot([r["m"] for r in odd], [r["expected"] for r in odd],
                "s-", color="tab:orange", markersize=4, label="expected (odd fold)")
    bad = [r for r in rows if not r["ok"]]
    if bad:
        ax.plot([r["m"] for r in bad], [r["value"] for r in bad],
                "x", color="red", markersize=9, label="mismatch")
    ax.set_xlabel("fold m")
    ax.set_ylabel("max proper colorings over full covers of K4")
    if len(rows) > 3:
        ax.set_yscale("log")
    ax.legend()
    ax.set_title("K4 extremal verification")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_histogram_plot(histogram: dict[int, int], path: str, title: str) -> str:
    """Frequency of coloring counts over the searched cover space."""
    fig, ax = plt.subplots(figsize=(7.0, 4.4))
    values = sorted(histogram)
    freqs = [histogram[v] for v in values]
    ax.bar(values, freqs, width=max(0.8, (values[-1] - values[0]) / max(len(values) * 2, 1)),
           color="tab:blue")
    ax.set_xlabel("proper colorings")
    ax.set_ylabel("covers")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
