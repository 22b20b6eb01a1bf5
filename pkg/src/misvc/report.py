"""Search-tree growth experiment: delimited output plus rendered figures.

Solves batches of random connected 3-regular graphs, records per-instance
search statistics, and writes a CSV alongside matplotlib figures showing
how the number of search leaves scales with the initial measure. The
soft regression bound is leaves <= GROWTH_BOUND ** measure.
"""

from __future__ import annotations

import csv
import statistics
from dataclasses import dataclass
from pathlib import Path

from .generators import gen_connected_cubic
from .solver import SolveOptions, mis_solve

__all__ = ["GROWTH_BOUND", "GrowthRow", "GrowthReport", "run_growth_experiment"]

GROWTH_BOUND = 1.13

_CSV_FIELDS = ["n", "seed", "measure", "alpha", "nodes", "leaves", "max_depth", "growth"]


@dataclass(frozen=True)
class GrowthRow:
    n: int
    seed: int
    measure: int
    alpha: int
    nodes: int
    leaves: int
    max_depth: int
    growth: float


@dataclass(frozen=True)
class GrowthReport:
    rows: list[GrowthRow]
    median_growth: float
    max_growth: float
    bound_ok: bool
    csv_path: Path
    figure_paths: list[Path]


def run_growth_experiment(
    sizes: list[int],
    seeds_per_size: int,
    base_seed: int = 1,
    threshold: int = 15,
    out_dir: str | Path = "reports",
) -> GrowthReport:
    opts = SolveOptions(small_component_threshold=threshold)
    rows: list[GrowthRow] = []
    for n in sizes:
        for offset in range(seeds_per_size):
            seed = base_seed + offset
            g = gen_connected_cubic(n, n * 7919 + seed)
            result = mis_solve(g, opts)
            stats = result.stats
            growth = (
                stats.leaves ** (1.0 / stats.initial_measure)
                if stats.initial_measure > 0
                else 1.0
            )
            rows.append(
                GrowthRow(
                    n=n,
                    seed=seed,
                    measure=stats.initial_measure,
                    alpha=result.alpha,
                    nodes=stats.branch_nodes,
                    leaves=stats.leaves,
                    max_depth=stats.max_depth,
                    growth=growth,
                )
            )

    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / "growth.csv"
    _write_csv(csv_path, rows)
    figure_paths = _render_figures(out_dir, rows)

    growths = [r.growth for r in rows]
    return GrowthReport(
        rows=rows,
        median_growth=statistics.median(growths),
        max_growth=max(growths),
        bound_ok=all(r.growth <= GROWTH_BOUND for r in rows),
        csv_path=csv_path,
        figure_paths=figure_paths,
    )


def _write_csv(path: Path, rows: list[GrowthRow]) -> None:
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(_CSV_FIELDS)
        for r in rows:
            writer.writerow(
                [r.n, r.seed, r.measure, r.alpha, r.nodes, r.leaves, r.max_depth, f"{r.growth:.6f}"]
            )


def _render_figures(out_dir: Path, rows: list[GrowthRow]) -> list[Path]:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    scatter_path = out_dir / "growth.png"
    hist_path = out_dir / "growth_hist.png"

    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    measures = [r.measure for r in rows]
    leaves = [r.leaves for r in rows]
    ax.scatter(measures, leaves, s=18, alpha=0.7, label="observed leaves")
    if measures:
        xs = sorted(set(measures))
        ax.plot(
            xs,
            [GROWTH_BOUND**x for x in xs],
            "r--",
            label=f"{GROWTH_BOUND}^measure bound",
        )
    ax.set_yscale("log")
    ax.set_xlabel("initial measure")
    ax.set_ylabel("search leaves")
    ax.set_title("Search-tree size vs. measure")
    ax.legend()
    fig.tight_layout()
    fig.savefig(scatter_path, dpi=150)
    plt.close(fig)

    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    growths = [r.growth for r in rows]
    if growths:
        lo = min(growths + [1.0])
        hi = max(growths + [GROWTH_BOUND])
        bins = [lo + i * (hi - lo) / 30 for i in range(31)] if hi > lo else 10
        ax.hist(growths, bins=bins, color="steelblue", edgecolor="white")
    ax.axvline(GROWTH_BOUND, color="red", linestyle="--", label=f"bound {GROWTH_BOUND}")
    ax.set_xlabel("leaves ** (1 / measure)")
    ax.set_ylabel("instances")
    ax.set_title("Per-instance branching growth")
    ax.legend()
    fig.tight_layout()
    fig.savefig(hist_path, dpi=150)
    plt.close(fig)

    return [scatter_path, hist_path]
