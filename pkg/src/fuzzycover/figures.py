"""Figure rendering for report output.

Each function saves one PNG and returns the path written. matplotlib is
imported lazily with the Agg backend so the library core stays importable
without a display and without the plotting dependency loaded.

Grades are exact rationals everywhere else in the package; conversion to
float here is presentation only, at the pixel boundary.
"""

from __future__ import annotations

import os

from .approximation import ApproxPair
from .covering import FuzzyCovering
from .mapping import Partition
from .sets import FuzzySet


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def save_covering_heatmap(covering: FuzzyCovering, path: str) -> str:
    """Member-by-element grade heatmap."""
    plt = _pyplot()
    labels = covering.universe.labels
    grid = [[float(member(x)) for x in labels] for _, member in covering]
    fig, ax = plt.subplots(figsize=(1.2 + 0.6 * len(labels), 1.0 + 0.4 * len(covering)))
    image = ax.imshow(grid, cmap="viridis", vmin=0.0, vmax=1.0, aspect="auto")
    ax.set_xticks(range(len(labels)), labels)
    ax.set_yticks(range(len(covering)), covering.names)
    fig.colorbar(image, ax=ax, label="grade")
    ax.set_title("covering members")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return os.path.abspath(path)


def save_approximation_bars(target: FuzzySet, pair: ApproxPair, path: str) -> str:
    """Grouped bars: lower approximation, the set, upper approximation."""
    plt = _pyplot()
    labels = target.universe.labels
    positions = range(len(labels))
    width = 0.28
    fig, ax = plt.subplots(figsize=(1.5 + 0.9 * len(labels), 3.2))
    ax.bar([p - width for p in positions], [float(v) for v in pair.lower.values], width, label="lower")
    ax.bar(list(positions), [float(v) for v in target.values], width, label="set")
    ax.bar([p + width for p in positions], [float(v) for v in pair.upper.values], width, label="upper")
    ax.set_xticks(list(positions), labels)
    ax.set_ylim(0.0, 1.05)
    ax.set_ylabel("grade")
    ax.set_title("approximations")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return os.path.abspath(path)


def save_partition_chart(partition: Partition, path: str, title: str = "partition") -> str:
    """One horizontal band per block, elements annotated in place."""
    plt = _pyplot()
    blocks = partition.label_blocks()
    fig, ax = plt.subplots(figsize=(1.5 + 0.7 * len(partition.universe), 0.9 + 0.5 * len(blocks)))
    cmap = plt.get_cmap("tab10")
    for row, block in enumerate(blocks):
        for label in block:
            col = partition.universe.index(label)
            ax.barh(row, 1.0, left=col, color=cmap(row % 10), edgecolor="white")
            ax.text(col + 0.5, row, label, ha="center", va="center", color="white")
    ax.set_yticks(range(len(blocks)), [f"block {i + 1}" for i in range(len(blocks))])
    ax.set_xticks([])
    ax.set_xlim(0, len(partition.universe))
    ax.invert_yaxis()
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return os.path.abspath(path)
