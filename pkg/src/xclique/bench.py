"""Linearity benchmarks for the recognizer: instrumented step counts and
wall time across instance families, a least-squares fit of steps against
n + m, CSV output, and a rendered figure next to it.
"""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

import numpy as np

from .builders import cycle, path, sierpinski, subdivided_line_graph
from .graphs import Graph, GraphError
from .recognizer import recognize_with_steps

FAMILIES: dict[str, Callable[[int], Graph]] = {
    "path": path,
    "even-cycle": lambda n: cycle(n if n % 2 == 0 else n + 1),
    "sierpinski": lambda p: sierpinski(p, 3),
    "subdivided-line": lambda n: subdivided_line_graph(path(n)),
}


@dataclass(frozen=True)
class BenchRow:
    family: str
    n: int
    m: int
    steps: int
    millis: float


@dataclass(frozen=True)
class LinearFit:
    slope: float
    intercept: float
    r_squared: float


def run_bench(families: Iterable[str], sizes: Iterable[int]) -> list[BenchRow]:
    rows = []
    sizes = list(sizes)
    if sizes != sorted(sizes):
        raise GraphError("sizes must be ascending")
    for fam in families:
        try:
            build = FAMILIES[fam]
        except KeyError:
            raise GraphError(
                f"unknown family {fam!r}; choose from {sorted(FAMILIES)}"
            ) from None
        for size in sizes:
            g = build(size)
            t0 = time.perf_counter()
            _, steps = recognize_with_steps(g)
            millis = (time.perf_counter() - t0) * 1000.0
            rows.append(BenchRow(fam, g.n, g.m, steps, millis))
    return rows


def fit_steps(rows: Iterable[BenchRow]) -> LinearFit:
    """Least-squares fit steps = a * (n + m) + b with its R^2."""
    rows = list(rows)
    x = np.array([r.n + r.m for r in rows], dtype=float)
    y = np.array([r.steps for r in rows], dtype=float)
    a, b = np.polyfit(x, y, 1)
    pred = a * x + b
    ss_res = float(np.sum((y - pred) ** 2))
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    r2 = 1.0 if ss_tot == 0 else 1.0 - ss_res / ss_tot
    return LinearFit(slope=float(a), intercept=float(b), r_squared=r2)


def write_csv(rows: Iterable[BenchRow], path_out: str) -> None:
    with open(path_out, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["family", "n", "m", "steps", "millis"])
        for r in rows:
            writer.writerow([r.family, r.n, r.m, r.steps, f"{r.millis:.3f}"])


def render_plot(rows: Iterable[BenchRow], path_out: str,
                fits: Optional[dict[str, LinearFit]] = None) -> None:
    """Steps against n + m per family, log-log scatter with the fitted
    lines, written to path_out."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    rows = list(rows)
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    by_family: dict[str, list[BenchRow]] = {}
    for r in rows:
        by_family.setdefault(r.family, []).append(r)
    for fam, rs in by_family.items():
        xs = [r.n + r.m for r in rs]
        ys = [r.steps for r in rs]
        ax.plot(xs, ys, "o", label=fam, markersize=4)
        fit = (fits or {}).get(fam)
        if fit is None and len(rs) >= 2:
            fit = fit_steps(rs)
        if fit is not None:
            xf = np.linspace(min(xs), max(xs), 64)
            ax.plot(xf, fit.slope * xf + fit.intercept, "-", linewidth=1,
                    label=f"{fam} fit (R²={fit.r_squared:.4f})")
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("n + m")
    ax.set_ylabel("recognizer steps")
    ax.set_title("Recognition cost across instance families")
    ax.legend(fontsize=8)
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path_out, dpi=150)
    plt.close(fig)
