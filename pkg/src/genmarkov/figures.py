"""Figure rendering for the report paths (table heatmap, convergence decay).

Figures are written next to the delimited output; rendering is headless (Agg)
and deterministic in content.
"""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .limits import FamilyLimitReport  # noqa: E402
from .markov import TableBundle  # noqa: E402


def save_convergence_figure(report: FamilyLimitReport, path: Path) -> Path:
    fig, ax = plt.subplots(figsize=(6.0, 3.8))
    qs = [q for q, _, _ in report.rows]
    errs = [max(err, 1e-17) for _, _, err in report.rows]
    ax.semilogy(qs, errs, marker="o", ms=3, lw=1, label="generalized")
    oqs = [q for q, _, _ in report.ordinary_rows]
    oerrs = [max(err, 1e-17) for _, _, err in report.ordinary_rows]
    ax.semilogy(oqs, oerrs, marker="s", ms=3, lw=1, label="ordinary")
    ax.set_xlabel("q")
    ax.set_ylabel("|ratio - limit|")
    ax.set_title(f"consecutive-ratio error decay, family {report.family}")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_table_figure(bundle: TableBundle, path: Path) -> Path:
    n = bundle.max_q
    grid = [[float("nan")] * n for _ in range(n)]
    for cell in bundle.cells:
        grid[cell.p - 1][cell.q - 1] = math.log10(cell.value)
    fig, ax = plt.subplots(figsize=(5.2, 4.4))
    im = ax.imshow(grid, origin="upper", cmap="viridis")
    ax.set_xticks(range(n), [str(i + 1) for i in range(n)])
    ax.set_yticks(range(n), [str(i + 1) for i in range(n)])
    ax.set_xlabel("q")
    ax.set_ylabel("p")
    ax.set_title("log10 of the value at (q, p)")
    for cell in bundle.errata:
        ax.plot(cell.q - 1, cell.p - 1, marker="x", color="red", ms=10, mew=2)
    fig.colorbar(im, ax=ax, shrink=0.85)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
