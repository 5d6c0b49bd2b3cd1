"""Figures written next to the CSV reports."""

from __future__ import annotations

import math
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

RC = {
    "font.size": 10,
    "axes.labelsize": 10,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "savefig.dpi": 150,
    "figure.autolayout": True,
    # fixed metadata so repeated runs give identical files
    "svg.hashsalt": "plgvc",
}


def figure_size(width=5.0):
    golden = (math.sqrt(5) - 1) / 2
    return width, width * golden


def figure_path(csv_path, suffix=".png") -> Path:
    return Path(csv_path).with_suffix(suffix)


def _save(fig, path) -> Path:
    path = Path(path)
    meta = {"Software": None} if path.suffix == ".png" else None
    fig.savefig(path, metadata=meta)
    plt.close(fig)
    return path


def plot_sweep(rows: Sequence, path) -> Path:
    """Both ratio bounds as functions of beta (refined curve only where defined)."""
    with plt.rc_context(RC):
        fig, ax = plt.subplots(figsize=figure_size())
        betas = [r.beta for r in rows]
        ax.plot(betas, [r.rho_first for r in rows], "k--", lw=1.2, label="first analysis")
        refined = [(r.beta, r.rho_refined_asymptotic) for r in rows if r.rho_refined_asymptotic is not None]
        if refined:
            bx, by = zip(*refined)
            ax.plot(bx, by, "k-", lw=1.2, label="refined analysis")
        ax.set_xlabel(r"$\beta$")
        ax.set_ylabel("expected approximation ratio bound")
        ax.legend(frameon=False)
        return _save(fig, path)


def plot_experiment(records: Sequence, path) -> Path:
    """Per-seed ratios against the analytic bounds of the run."""
    ok = [r for r in records if r.status == "ok" and r.ratio_lp is not None]
    with plt.rc_context(RC):
        fig, ax = plt.subplots(figsize=figure_size())
        seeds = list(range(len(ok)))
        ax.plot(seeds, [r.ratio_lp for r in ok], "o", ms=3, label="y(V) / x(V)")
        ax.plot(seeds, [r.ratio_composite for r in ok], "s", ms=3, mfc="none", label="2 - x(V*)/(2 x(V))")
        exact = [(i, r.ratio_exact) for i, r in enumerate(ok) if r.ratio_exact is not None]
        if exact:
            ex, ey = zip(*exact)
            ax.plot(ex, ey, "^", ms=3, label="y(V) / OPT")
        if ok:
            ax.axhline(ok[0].bound_rho_first, color="k", ls="--", lw=1, label="first bound")
            if ok[0].bound_rho_refined is not None:
                ax.axhline(ok[0].bound_rho_refined, color="k", ls="-", lw=1, label="refined bound")
        ax.set_xlabel("run")
        ax.set_ylabel("ratio")
        ax.legend(frameon=False, loc="center right")
        return _save(fig, path)
