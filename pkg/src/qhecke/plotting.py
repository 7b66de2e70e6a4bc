"""Matplotlib rendering of module action graphs."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .hecke import CombModule, Label, label_str  # noqa: E402
from .permutation import length  # noqa: E402


def _ranks(m: CombModule) -> dict[Label, int]:
    if m.basis and isinstance(m.basis[0], tuple):
        base = min(length(b) for b in m.basis)
        return {b: length(b) - base for b in m.basis}
    # longest path from elements that no move reaches
    reached = {
        t for b in m.basis for i in range(1, m.n) if (t := m.act(i, b)) is not None and t != b
    }
    sources = [b for b in m.basis if b not in reached]
    rank = {b: 0 for b in sources}
    queue = deque(sources)
    while queue:
        b = queue.popleft()
        for i in range(1, m.n):
            t = m.act(i, b)
            if t is not None and t != b and rank.get(t, -1) < rank[b] + 1:
                rank[t] = rank[b] + 1
                queue.append(t)
    return {b: rank.get(b, 0) for b in m.basis}


def layout(m: CombModule) -> dict[Label, tuple[float, float]]:
    ranks = _ranks(m)
    levels: dict[int, list[Label]] = {}
    for b in m.basis:
        levels.setdefault(ranks[b], []).append(b)
    pos = {}
    for r, items in levels.items():
        items.sort(key=label_str)
        width = len(items)
        for k, b in enumerate(items):
            pos[b] = (k - (width - 1) / 2, -float(r))
    return pos


def render_action_graph(
    m: CombModule,
    path: str | Path,
    groups: Sequence[Iterable[Label]] | None = None,
    group_names: Sequence[str] | None = None,
    title: str | None = None,
) -> Path:
    """Draw the action graph: boxes for basis elements, arrows for moves.

    Fixing generators are listed under each node. When ``groups`` is given
    (for example the strata of a filtration) nodes are coloured by group.
    """
    pos = layout(m)
    colour = {}
    palette = plt.get_cmap("tab10")
    if groups:
        for g, members in enumerate(groups):
            for b in members:
                colour[b] = palette(g % 10)
    xs = [p[0] for p in pos.values()] or [0.0]
    ys = [p[1] for p in pos.values()] or [0.0]
    fig, ax = plt.subplots(
        figsize=(max(4.0, 2.2 * (max(xs) - min(xs) + 1)), max(3.0, 1.3 * (max(ys) - min(ys) + 1)))
    )
    for b in m.basis:
        for i in range(1, m.n):
            t = m.act(i, b)
            if t is None or t == b:
                continue
            (x0, y0), (x1, y1) = pos[b], pos[t]
            ax.annotate(
                "",
                xy=(x1, y1 + 0.18),
                xytext=(x0, y0 - 0.18),
                arrowprops=dict(arrowstyle="->", color="0.35", lw=0.9),
            )
            ax.text((x0 + x1) / 2, (y0 + y1) / 2, f"π{i}", fontsize=7, color="0.2",
                    ha="center", va="center", backgroundcolor="white")
    for b, (x, y) in pos.items():
        ax.text(x, y, label_str(b), ha="center", va="center", fontsize=8, family="monospace",
                bbox=dict(boxstyle="round,pad=0.25", fc=colour.get(b, "white"), alpha=0.35
                          if b in colour else 1.0, ec="0.3"))
        fixes = ",".join(str(i) for i in sorted(m.descent(b)))
        if fixes:
            ax.text(x, y - 0.3, f"fix {fixes}", ha="center", va="center", fontsize=6, color="0.3")
    if groups and group_names:
        for g, name in enumerate(group_names):
            ax.plot([], [], "s", color=palette(g % 10), alpha=0.5, label=name)
        ax.legend(loc="upper left", fontsize=7, frameon=False, bbox_to_anchor=(1.0, 1.0))
    ax.set_xlim(min(xs) - 0.8, max(xs) + 0.8)
    ax.set_ylim(min(ys) - 0.6, max(ys) + 0.5)
    ax.axis("off")
    if title:
        ax.set_title(title, fontsize=10)
    path = Path(path)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
