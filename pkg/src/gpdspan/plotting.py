"""Figures written next to CLI tables.  matplotlib is imported lazily."""

from __future__ import annotations

from fractions import Fraction


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def _label(p) -> str:
    return "∅" if not p else "".join(map(str, p)) if max(p) < 10 else ",".join(map(str, p))


def block_figure(rows, cols, entries, path: str, title: str = "") -> None:
    """Heat map of an integer block with the entries printed in the cells."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(0.6 * len(cols) + 1.5, 0.6 * len(rows) + 1.2))
    data = [[float(v) for v in r] for r in entries]
    ax.imshow(data, cmap="Blues", vmin=0)
    for r, row in enumerate(entries):
        for c, v in enumerate(row):
            ax.text(c, r, str(v), ha="center", va="center", fontsize=9)
    ax.set_xticks(range(len(cols)), [_label(c) for c in cols], rotation=45)
    ax.set_yticks(range(len(rows)), [_label(r) for r in rows])
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def lattice_figure(levels, edges, path: str) -> None:
    """Young's lattice drawn level by level, smallest partitions at the bottom."""
    plt = _pyplot()
    pos = {}
    for y, level in enumerate(levels):
        for x, p in enumerate(level):
            pos[p] = (x - (len(level) - 1) / 2, y)
    width = max(len(level) for level in levels)
    fig, ax = plt.subplots(figsize=(1.0 * width + 1, 1.0 * len(levels) + 0.5))
    for a, b in edges:
        (x0, y0), (x1, y1) = pos[a], pos[b]
        ax.plot([x0, x1], [y0, y1], color="0.6", lw=0.8, zorder=1)
    for p, (x, y) in pos.items():
        ax.text(x, y, _label(p), ha="center", va="center", fontsize=8,
                bbox={"boxstyle": "round", "fc": "white", "ec": "0.3"}, zorder=2)
    ax.set_axis_off()
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)


def series_figure(values: list[Fraction], path: str, title: str = "", ylabel: str = "") -> None:
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(5, 3))
    ax.bar(range(len(values)), [float(v) for v in values], color="0.4")
    ax.set_xlabel("n")
    if ylabel:
        ax.set_ylabel(ylabel)
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
