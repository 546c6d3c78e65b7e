"""Matplotlib renderings of transition graphs and verification summaries.

Figures are written to files only; the Agg backend is selected on import
so nothing here needs a display.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from ..core import Network, config_str, decode, digit_matrix  # noqa: E402
from ..dynamics import components, single_coordinate_arcs  # noqa: E402

# Cube projection: node 1 to the right, node 2 up, node 3 on the diagonal,
# further nodes fanned out so vertices stay distinct.
_DIRECTIONS = [(2.0, 0.0), (0.0, 2.0), (1.0, 1.0), (4.5, 0.6), (0.6, 4.5), (3.2, 3.4)]

ARC_COLOR = "black"
MUTED = "0.65"


def _positions(f: Network) -> np.ndarray:
    if f.q == 2 and f.n <= len(_DIRECTIONS):
        d = digit_matrix(2, f.n).astype(float)
        return d @ np.array(_DIRECTIONS[: f.n])
    angles = 2 * np.pi * np.arange(f.size) / f.size
    return np.column_stack([np.cos(angles), np.sin(angles)]) * max(2.0, f.size / 6)


def transition_graph_figure(f: Network, title: str | None = None):
    """Single-coordinate arcs of the transition graph; unreachable fixed points muted."""
    pos = _positions(f)
    unreachable = set(components(f).unreachable_fixed)
    src, dst, _ = single_coordinate_arcs(f)
    arcs = set(zip(src.tolist(), dst.tolist()))

    fig, ax = plt.subplots(figsize=(5, 5))
    if f.q == 2:
        for a in range(f.size):
            for j in range(f.n):
                b = a ^ (1 << j)
                if a < b and (a, b) not in arcs and (b, a) not in arcs:
                    ax.plot(*zip(pos[a], pos[b]), color=MUTED, lw=1, zorder=1)
    for a, b in arcs:
        style = "<|-|>" if (b, a) in arcs else "-|>"
        if (b, a) in arcs and a > b:
            continue
        ax.annotate("", xy=pos[b], xytext=pos[a], zorder=2,
                    arrowprops=dict(arrowstyle=style, color=ARC_COLOR, lw=1.2, shrinkA=14, shrinkB=14))
    for k in range(f.size):
        color = MUTED if k in unreachable else ARC_COLOR
        ax.text(*pos[k], config_str(decode(k, f.q, f.n)), ha="center", va="center", color=color,
                family="monospace", zorder=3,
                bbox=dict(boxstyle="square,pad=0.25", fc="white", ec=color))
    ax.set_aspect("equal")
    ax.axis("off")
    ax.margins(0.12)
    if title:
        ax.set_title(title)
    return fig


def save_transition_graph(f: Network, path: str | Path, title: str | None = None) -> Path:
    fig = transition_graph_figure(f, title)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return Path(path)


def verification_figure(names: Sequence[str], cases: Sequence[int], passed: Sequence[bool], path: str | Path) -> Path:
    """Horizontal bars of cases checked per criterion, colored by outcome."""
    fig, ax = plt.subplots(figsize=(7, 0.45 * len(names) + 1.2))
    y = np.arange(len(names))
    colors = ["tab:green" if p else "tab:red" for p in passed]
    ax.barh(y, np.maximum(cases, 1), color=colors)
    ax.set_yticks(y, names)
    ax.invert_yaxis()
    ax.set_xscale("log")
    ax.set_xlabel("cases checked")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return Path(path)
