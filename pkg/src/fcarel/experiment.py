"""Experiment harness: selection sweeps emitting machine-readable CSV.

For every size 1..max_size and every requested method one record is
produced (random contributes a single mean/std summary per size). Output
is deterministic for a fixed seed except for the ``runtime_ms`` column,
which golden-file comparisons should drop.
"""

from __future__ import annotations

import csv
import io as _io
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .context import FormalContext
from .errors import ConceptCapacityError, DegenerateContextError, SelectionSizeError
from .selection import (
    DEFAULT_COMBINATION_GUARD,
    select_era,
    select_exhaustive,
    select_imrs,
    select_random,
)

METHODS = ("exhaustive", "imrs", "era-se", "era-oe", "random")
DEFAULT_METHODS = ("imrs", "era-se", "era-oe", "random")

CSV_HEADER = (
    "context_name",
    "method",
    "size",
    "attributes",
    "relevance",
    "relevance_exact",
    "score",
    "concepts_sub",
    "trials",
    "mean",
    "std",
    "runtime_ms",
    "error",
)


@dataclass(frozen=True)
class ExperimentRecord:
    """One row of the sweep: a (method, size) cell or its error marker."""

    context_name: str
    method: str
    size: int
    attributes: tuple[str, ...] = ()
    relevance: Optional[Fraction] = None
    score: Optional[float] = None
    concepts_sub: Optional[int] = None
    trials: Optional[int] = None
    mean: Optional[float] = None
    std: Optional[float] = None
    runtime_ms: int = 0
    error: Optional[str] = None

    def to_row(self) -> list[str]:
        def fmt(x):
            if x is None:
                return ""
            if isinstance(x, float):
                return repr(x)
            return str(x)

        return [
            self.context_name,
            self.method,
            str(self.size),
            ";".join(self.attributes),
            "" if self.relevance is None else repr(float(self.relevance)),
            "" if self.relevance is None else str(self.relevance),
            fmt(self.score),
            fmt(self.concepts_sub),
            fmt(self.trials),
            fmt(self.mean),
            fmt(self.std),
            str(self.runtime_ms),
            self.error or "",
        ]


def _error_marker(exc: Exception) -> str:
    if isinstance(exc, (SelectionSizeError, ConceptCapacityError)):
        return f"size-guard: {exc}"
    if isinstance(exc, DegenerateContextError):
        return f"degenerate: {exc}"
    raise exc


def _run_cell(
    ctx: FormalContext,
    name: str,
    method: str,
    size: int,
    seed: int,
    trials: Optional[int],
    guard: int,
) -> ExperimentRecord:
    start = time.perf_counter()
    try:
        if method == "random":
            baseline = select_random(ctx, size, trials=trials, seed=seed)
            runtime = int((time.perf_counter() - start) * 1000)
            return ExperimentRecord(
                context_name=name,
                method=method,
                size=size,
                trials=baseline.trials,
                mean=baseline.mean_relevance,
                std=baseline.std_relevance,
                runtime_ms=runtime,
            )
        if method == "exhaustive":
            result = select_exhaustive(ctx, size, guard=guard)
        elif method == "imrs":
            result = select_imrs(ctx, size)
        elif method == "era-se":
            result = select_era(ctx, size, kind="se")
        elif method == "era-oe":
            result = select_era(ctx, size, kind="oe")
        else:
            raise ValueError(f"unknown method {method!r}")
    except (SelectionSizeError, ConceptCapacityError, DegenerateContextError) as exc:
        runtime = int((time.perf_counter() - start) * 1000)
        return ExperimentRecord(
            context_name=name,
            method=method,
            size=size,
            runtime_ms=runtime,
            error=_error_marker(exc),
        )
    runtime = int((time.perf_counter() - start) * 1000)
    score = None
    if method.startswith("era-"):
        score = float(result.step_scores[-1])
    return ExperimentRecord(
        context_name=name,
        method=method,
        size=size,
        attributes=result.chosen_names,
        relevance=result.relevance.value,
        score=score,
        concepts_sub=result.sub_concept_count,
        runtime_ms=runtime,
    )


def run_experiment(
    ctx: FormalContext,
    context_name: str,
    max_size: int,
    methods: Sequence[str] = DEFAULT_METHODS,
    seed: int = 0,
    trials: Optional[int] = None,
    guard: int = DEFAULT_COMBINATION_GUARD,
) -> list[ExperimentRecord]:
    """Sweep sizes 1..max_size for each method, in (size, method) order.

    Selection errors (guard violations, degenerate entropy) do not abort
    the sweep; the affected row carries an error marker instead.
    """
    if not 1 <= max_size <= ctx.n_attributes:
        raise SelectionSizeError(
            f"max size must be in 1..{ctx.n_attributes}, got {max_size}"
        )
    for method in methods:
        if method not in METHODS:
            raise ValueError(f"unknown method {method!r}; choose from {METHODS}")
    records = []
    for size in range(1, max_size + 1):
        for method in methods:
            records.append(
                _run_cell(ctx, context_name, method, size, seed, trials, guard)
            )
    return records


def records_to_csv(records: Sequence[ExperimentRecord]) -> str:
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for record in records:
        writer.writerow(record.to_row())
    return buf.getvalue()


def plot_records(records: Sequence[ExperimentRecord], path) -> None:
    """Line chart of relevance versus subset size per method (SVG/PDF/PNG
    by extension). Random rows are drawn as mean with a std band."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    by_method: dict[str, list[ExperimentRecord]] = {}
    for rec in records:
        if rec.error:
            continue
        by_method.setdefault(rec.method, []).append(rec)

    fig, ax = plt.subplots(figsize=(6.5, 4.0))
    for method, recs in by_method.items():
        recs = sorted(recs, key=lambda r: r.size)
        xs = [r.size for r in recs]
        if method == "random":
            ys = [r.mean for r in recs]
            err = [r.std for r in recs]
            ax.errorbar(xs, ys, yerr=err, label="random (mean ± std)", capsize=3)
        else:
            ys = [float(r.relevance) for r in recs]
            ax.plot(xs, ys, marker="o", label=method)
    ax.set_xlabel("subset size")
    ax.set_ylabel("relative relevance")
    ax.set_ylim(0, 1)
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
