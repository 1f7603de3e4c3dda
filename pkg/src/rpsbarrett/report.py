"""Delimited tables and matplotlib figures for benchmark output."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

STEP_ORDER = ["1", "2a", "2b", "3", "4a", "4b", "5", "6"]


def format_table(rows, columns, sep="\t"):
    lines = [sep.join(columns)]
    for row in rows:
        lines.append(sep.join(str(row[c]) for c in columns))
    return "\n".join(lines)


def write_table(rows, columns, path, sep="\t"):
    Path(path).write_text(format_table(rows, columns, sep) + "\n")


def plot_step_counts(rows, path):
    """Stacked MMULT count per step for each configuration."""
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    labels = [f"N={r['N']}" for r in rows]
    bottom = [0] * len(rows)
    for step in STEP_ORDER:
        heights = [r["steps"].get(step, (0, 0, 0))[1] for r in rows]
        if not any(heights):
            continue
        ax.bar(labels, heights, bottom=bottom, label=f"step {step}")
        bottom = [b + h for b, h in zip(bottom, heights)]
    ax.set_ylabel("MMULT per multiplication")
    ax.set_yscale("log" if max(bottom, default=1) > 1000 else "linear")
    ax.legend(fontsize=8, ncol=2)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_formula_check(rows, path):
    """Measured quotient / base-extension counts against closed forms."""
    fig, axes = plt.subplots(1, 2, figsize=(8.0, 3.6))
    ns = [r["N"] for r in rows]
    ax = axes[0]
    ax.plot(ns, [r["quot_measured"] for r in rows], "o", label="measured")
    ax.plot(ns, [r["quot_formula"] for r in rows], "-", label="(n - a/2 - 1/2) a")
    ax.set_title("quotient step 2a")
    ax = axes[1]
    ax.plot(ns, [r["bex_measured"] for r in rows], "o", label="measured")
    ax.plot(ns, [r["bex_schedule"] for r in rows], "-", label="schedule")
    ax.plot(ns, [r["bex_reference"] for r in rows], "--", label="reference formula")
    ax.set_title("base extension step 2b")
    for ax in axes:
        ax.set_xscale("log", base=2)
        ax.set_xlabel("N")
        ax.set_ylabel("MADD = MMULT")
        ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_timing(rows, path):
    fig, ax = plt.subplots(figsize=(5.0, 3.6))
    ax.loglog([r["N"] for r in rows], [r["ms_per_mpm"] for r in rows], "o-", base=2)
    ax.set_xlabel("N")
    ax.set_ylabel("ms per residue multiplication")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def write_bench_report(rows, columns, out_dir):
    """Write ``bench.tsv`` and the figures; returns the written paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = [out / "bench.tsv", out / "step_counts.png", out / "formula_check.png",
             out / "timing.png"]
    write_table(rows, columns, paths[0])
    plot_step_counts(rows, paths[1])
    plot_formula_check(rows, paths[2])
    plot_timing(rows, paths[3])
    return paths
