"""Render scaling figures to files, alongside the delimited bench output."""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def _by_algo(rows):
    groups: dict[str, list] = {}
    for r in rows:
        groups.setdefault(r.algo, []).append(r)
    for rs in groups.values():
        rs.sort(key=lambda r: r.n)
    return groups


def save_scaling_figures(rows, outdir) -> list[Path]:
    """Write operation-count and stage-depth plots; returns the file paths."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    groups = _by_algo(rows)
    paths = []

    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    for algo, rs in sorted(groups.items()):
        ns = [r.n for r in rs]
        ax.loglog(ns, [r.muls for r in rs], "o-", label=f"{algo} muls")
        ax.loglog(ns, [r.adds for r in rs], "s--", alpha=0.6, label=f"{algo} adds")
    any_rows = next(iter(groups.values()))
    n0, m0 = any_rows[0].n, max(any_rows[0].muls, 1)
    ns = sorted({r.n for r in rows})
    ax.loglog(ns, [m0 * (n / n0) ** 4 for n in ns], ":", color="gray",
              label="slope-4 guide")
    ax.set_xlabel("matrix size n")
    ax.set_ylabel("ring operations")
    ax.set_title("operation counts")
    ax.legend(fontsize=8)
    ax.grid(True, which="both", alpha=0.3)
    ops_path = outdir / "operations.png"
    fig.savefig(ops_path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    paths.append(ops_path)

    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    for algo, rs in sorted(groups.items()):
        ax.plot([r.n for r in rs], [r.depth for r in rs], "o-", label=f"{algo} depth")
    ax.plot(ns, [12 * math.ceil(math.log2(n)) ** 2 for n in ns], ":",
            color="gray", label="12*ceil(log2 n)^2 guide")
    ax.set_xscale("log")
    ax.set_xlabel("matrix size n")
    ax.set_ylabel("stage depth")
    ax.set_title("critical-path depth")
    ax.legend(fontsize=8)
    ax.grid(True, which="both", alpha=0.3)
    depth_path = outdir / "depth.png"
    fig.savefig(depth_path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    paths.append(depth_path)

    return paths
