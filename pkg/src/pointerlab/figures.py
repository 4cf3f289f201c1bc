"""Figure rendering for the report path: every plot goes straight to a file.

Uses the Agg backend; nothing is ever shown interactively.
"""

from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .pointer import Grid

_FIGSIZE = (7.0, 4.2)


def _finish(fig, path: str) -> None:
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_profile(grid: Grid, intensity: np.ndarray, path: str,
                   title: str = "Pointer intensity profile") -> None:
    fig, ax = plt.subplots(figsize=_FIGSIZE)
    ax.plot(grid.points, intensity, lw=1.5)
    ax.set_xlabel("pointer position q")
    ax.set_ylabel("probability density")
    ax.set_title(title)
    ax.grid(True, alpha=0.3)
    _finish(fig, path)


def render_curve(gammas: Sequence[float], values: Sequence[float], path: str,
                 ylabel: str, title: str, logy: bool = False) -> None:
    fig, ax = plt.subplots(figsize=_FIGSIZE)
    if logy:
        ax.semilogy(gammas, values, marker="o", ms=3, lw=1.2)
    else:
        ax.plot(gammas, values, marker="o", ms=3, lw=1.2)
    ax.set_xlabel("coupling strength gamma")
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    ax.grid(True, alpha=0.3)
    _finish(fig, path)
