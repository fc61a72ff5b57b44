"""Figures for sweep tables."""

from __future__ import annotations

from collections import Counter
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.ticker import MaxNLocator  # noqa: E402

from .io import SweepRow  # noqa: E402


def sweep_figure(rows: Sequence[SweepRow], path: str | Path, title: str | None = None) -> Path:
    """Formula value per instance (with oracle values where present) and rule usage counts."""
    path = Path(path)
    fig, (ax_val, ax_rule) = plt.subplots(1, 2, figsize=(11, 4), gridspec_kw={"width_ratios": [3, 2]})

    xs = range(len(rows))
    ax_val.plot(xs, [r.value for r in rows], "o-", ms=4, lw=1, label="formula")
    checked = [(i, int(r.oracle)) for i, r in enumerate(rows) if r.oracle.isdigit()]
    if checked:
        ax_val.plot([i for i, _ in checked], [v for _, v in checked], "x", ms=7, color="C3",
                    label="oracle")
    bad = [i for i, r in enumerate(rows) if r.agreement == "MISMATCH"]
    for i in bad:
        ax_val.axvline(i, color="C3", alpha=0.3)
    ax_val.set_xlabel("instance")
    ax_val.set_ylabel("R")
    ax_val.yaxis.set_major_locator(MaxNLocator(integer=True))
    if len(rows) <= 30:
        ax_val.set_xticks(list(xs))
        ax_val.set_xticklabels(["-".join(map(str, r.stars)) + ("" if r.s is None else f"|{r.s}")
                                for r in rows], rotation=70, fontsize=7)
    ax_val.legend(frameon=False)

    counts = Counter(r.rule for r in rows)
    names = sorted(counts)
    ax_rule.barh(names, [counts[n] for n in names], color="C0")
    ax_rule.set_xlabel("instances")
    ax_rule.tick_params(axis="y", labelsize=8)

    if title:
        fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
