"""Attribute-subset selection strategies.

Four ways to pick n attributes:

* exhaustive search over all n-subsets (exact optimum, guarded),
* iterative greedy growth on exact relative relevance (IMRS),
* the same greedy scheme on the entropic relevance approximation (ERA),
* uniformly random subsets as a baseline.

Every selector clarifies the context first (relevance is a property of
attribute classes) and reports chosen attributes as indices into the
*original* context, mapped to class representatives. Scores are compared
exactly — rationals for relevance and for the object-entropy ERA — so
ties are broken deterministically by the smallest attribute index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .context import ClarificationMap, FormalContext
from .entropy import EntropyKind, object_entropy_exact, shannon_object_entropy
from .errors import DegenerateEntropyError, SelectionSizeError
from .lattice import ConceptSet, enumerate_concepts
from .relevance import Relevance, relevance_from_concepts

DEFAULT_COMBINATION_GUARD = 1_000_000

# two float ERA scores closer than this are treated as a tie
ERA_FLOAT_TOLERANCE = 1e-12

Score = Union[Fraction, float]


@dataclass(frozen=True)
class SelectionResult:
    """Outcome of one selection run.

    ``chosen`` lists original attribute indices in selection order;
    ``step_scores`` traces the winning score of each step (relevance
    fractions for exhaustive/IMRS, ERA scores for the entropic greedy).
    ``evaluations`` counts candidate scorings. ``sub_concept_count`` is
    the concept count of the kept subcontext when the method computed it.
    """

    method: str
    chosen: tuple[int, ...]
    chosen_names: tuple[str, ...]
    relevance: Relevance
    step_scores: tuple[Score, ...]
    evaluations: int
    sub_concept_count: Optional[int] = None

    @property
    def size(self) -> int:
        return len(self.chosen)


@dataclass(frozen=True)
class RandomBaseline:
    """Mean and spread of relative relevance over random n-subsets."""

    size: int
    trials: int
    seed: int
    mean_relevance: float
    std_relevance: float
    per_trial: tuple[tuple[tuple[int, ...], Relevance], ...] = field(repr=False)


def _prepare(ctx: FormalContext, n: int):
    """Clarify, bounds-check the size, and enumerate once."""
    clarified, cmap = ctx.clarify()
    m = clarified.n_attributes
    if not 1 <= n <= m:
        raise SelectionSizeError(
            f"selection size must be in 1..{m} (attribute classes), got {n}"
        )
    concepts = enumerate_concepts(clarified)
    return clarified, cmap, concepts


def _originals(cmap: ClarificationMap, order: Sequence[int]) -> tuple[int, ...]:
    return tuple(cmap.attribute_classes[j][0] for j in order)


def select_exhaustive(
    ctx: FormalContext, n: int, *, guard: int = DEFAULT_COMBINATION_GUARD
) -> SelectionResult:
    """Scan every n-subset for maximal relative relevance.

    Refuses to run when the number of candidate subsets exceeds
    ``guard``. Ties go to the lexicographically smallest index tuple;
    the lattice is enumerated once and candidates are scored with the
    survivor test only.
    """
    clarified, cmap, concepts = _prepare(ctx, n)
    m = clarified.n_attributes
    n_candidates = math.comb(m, n)
    if n_candidates > guard:
        raise SelectionSizeError(
            f"exhaustive search over C({m},{n}) = {n_candidates} subsets "
            f"exceeds the guard of {guard}"
        )
    best_surviving = None
    best = None
    evaluations = 0
    for combo in combinations(range(m), n):
        evaluations += 1
        surviving = concepts.surviving_extent_sum(combo)
        if best_surviving is None or surviving < best_surviving:
            best_surviving = surviving
            best = combo
    rel = Relevance(best_surviving, concepts.extent_sum)
    chosen = _originals(cmap, best)
    return SelectionResult(
        method="exhaustive",
        chosen=chosen,
        chosen_names=tuple(ctx.attributes[i] for i in chosen),
        relevance=rel,
        step_scores=(rel.value,),
        evaluations=evaluations,
    )


def select_imrs(ctx: FormalContext, n: int) -> SelectionResult:
    """Iterative greedy growth on exact relative relevance.

    Starts from the empty set and, for n steps, adds the attribute whose
    addition yields the highest relevance, scoring every remaining
    attribute exactly once per step, i.e. ``n*|M| - n*(n-1)/2``
    evaluations in total. Exact ties go to the smallest attribute index.
    """
    clarified, cmap, concepts = _prepare(ctx, n)
    m = clarified.n_attributes
    chosen_mask = 0
    order: list[int] = []
    steps: list[Fraction] = []
    evaluations = 0
    best_surviving = concepts.extent_sum
    for _ in range(n):
        step_best = None
        step_attr = None
        for cand in range(m):
            if chosen_mask >> cand & 1:
                continue
            evaluations += 1
            surviving = concepts._surviving_extent_sum_mask(chosen_mask | (1 << cand))
            if step_best is None or surviving < step_best:
                step_best = surviving
                step_attr = cand
        chosen_mask |= 1 << step_attr
        order.append(step_attr)
        best_surviving = step_best
        steps.append(Fraction(concepts.extent_sum - step_best, concepts.extent_sum))
    rel = Relevance(best_surviving, concepts.extent_sum)
    chosen = _originals(cmap, order)
    return SelectionResult(
        method="imrs",
        chosen=chosen,
        chosen_names=tuple(ctx.attributes[i] for i in chosen),
        relevance=rel,
        step_scores=tuple(steps),
        evaluations=evaluations,
    )


def _era_raw_score(
    ctx: FormalContext, keep: Iterable[int], kind: EntropyKind
) -> tuple[Score, int]:
    """(|B(sub)| * E(sub), |B(sub)|) for the kept attributes.

    Exact Fraction for the object entropy, float for the Shannon one.
    """
    sub = ctx.subcontext_keep(keep)
    count = len(enumerate_concepts(sub))
    if kind is EntropyKind.OBJECT:
        return count * object_entropy_exact(sub), count
    return count * shannon_object_entropy(sub), count


def _era_base(ctx: FormalContext, kind: EntropyKind) -> tuple[int, float]:
    count = len(enumerate_concepts(ctx))
    if kind is EntropyKind.OBJECT:
        base_entropy = float(object_entropy_exact(ctx))
    else:
        base_entropy = shannon_object_entropy(ctx)
    if base_entropy == 0.0:
        raise DegenerateEntropyError(
            "entropy of the base context is zero; ERA scores are undefined"
        )
    return count, base_entropy


def era_score(
    ctx: FormalContext,
    attrs: Iterable[int],
    kind: EntropyKind | str = EntropyKind.OBJECT,
    *,
    base: Optional[tuple[int, float]] = None,
) -> float:
    """Entropic relevance approximation of keeping exactly ``attrs``.

    The product of two quotients: concepts of the kept subcontext over
    concepts of the context, and entropy of the kept subcontext over
    entropy of the context. ``base`` may carry a precomputed
    ``(concept_count, entropy)`` pair for the full context. Raises
    :class:`DegenerateEntropyError` when the base entropy is zero.
    """
    kind = EntropyKind(kind)
    attrs = tuple(attrs)
    if not attrs:
        raise ValueError("era_score needs a non-empty attribute set")
    if base is None:
        base = _era_base(ctx, kind)
    base_count, base_entropy = base
    if base_entropy == 0.0:
        raise DegenerateEntropyError(
            "entropy of the base context is zero; ERA scores are undefined"
        )
    raw, _ = _era_raw_score(ctx, attrs, kind)
    return float(raw) / (base_count * base_entropy)


def _era_better(raw: Score, incumbent: Score, maximize: bool, exact: bool) -> bool:
    if exact:
        return raw > incumbent if maximize else raw < incumbent
    # float scores: treat near-equal as a tie (keep the earlier candidate)
    if maximize:
        return raw > incumbent + ERA_FLOAT_TOLERANCE
    return raw < incumbent - ERA_FLOAT_TOLERANCE


def select_era(
    ctx: FormalContext,
    n: int,
    kind: EntropyKind | str = EntropyKind.OBJECT,
    objective: str = "max",
    *,
    search: str = "greedy",
    guard: int = DEFAULT_COMBINATION_GUARD,
) -> SelectionResult:
    """Selection on the ERA score instead of exact relevance.

    The default search is the same iterative scheme as
    :func:`select_imrs`, but each step only enumerates the small kept
    subcontexts: the greedy order depends on the raw product
    ``|B(sub)| * E(sub)`` alone, because the base factor is the same for
    every candidate of a step. ``search="exhaustive"`` instead scores
    every n-subset (under the same combinatorial ``guard`` as
    :func:`select_exhaustive`). The exact relevance of the final set is
    computed once for reporting.

    ``objective`` is ``"max"`` (default) or ``"min"``. Maximizing rewards
    subcontexts that retain much structure; minimizing is provided for
    completeness but tends to pick irrelevant attributes (on the small
    water fixture it selects the full column whose relevance is zero).
    """
    kind = EntropyKind(kind)
    if objective not in ("max", "min"):
        raise ValueError(f"objective must be 'max' or 'min', got {objective!r}")
    if search not in ("greedy", "exhaustive"):
        raise ValueError(f"search must be 'greedy' or 'exhaustive', got {search!r}")
    maximize = objective == "max"
    clarified, cmap, concepts = _prepare(ctx, n)
    base_count, base_entropy = _era_base(clarified, kind)
    m = clarified.n_attributes
    exact = kind is EntropyKind.OBJECT
    base_factor = base_count * base_entropy
    evaluations = 0

    if search == "exhaustive":
        n_candidates = math.comb(m, n)
        if n_candidates > guard:
            raise SelectionSizeError(
                f"exhaustive search over C({m},{n}) = {n_candidates} subsets "
                f"exceeds the guard of {guard}"
            )
        best_raw = None
        best = None
        best_count = 0
        for combo in combinations(range(m), n):
            evaluations += 1
            raw, count = _era_raw_score(clarified, combo, kind)
            if best_raw is None or _era_better(raw, best_raw, maximize, exact):
                best_raw, best, best_count = raw, combo, count
        chosen = list(best)
        steps = [float(best_raw) / base_factor]
        final_count = best_count
    else:
        chosen = []
        steps = []
        final_count = 0
        for _ in range(n):
            step_raw = None
            step_attr = None
            step_count = 0
            for cand in range(m):
                if cand in chosen:
                    continue
                evaluations += 1
                raw, count = _era_raw_score(clarified, chosen + [cand], kind)
                if step_raw is None or _era_better(raw, step_raw, maximize, exact):
                    step_raw, step_attr, step_count = raw, cand, count
            chosen.append(step_attr)
            final_count = step_count
            steps.append(float(step_raw) / base_factor)

    rel = relevance_from_concepts(concepts, chosen)
    method = "era-se" if kind is EntropyKind.SHANNON_OBJECT else "era-oe"
    chosen_orig = _originals(cmap, chosen)
    return SelectionResult(
        method=method,
        chosen=chosen_orig,
        chosen_names=tuple(ctx.attributes[i] for i in chosen_orig),
        relevance=rel,
        step_scores=tuple(steps),
        evaluations=evaluations,
        sub_concept_count=final_count,
    )


def select_random(
    ctx: FormalContext,
    n: int,
    trials: Optional[int] = None,
    seed: int = 0,
) -> RandomBaseline:
    """Relative relevance of uniformly random n-subsets.

    Defaults to ``10 * |M|`` trials. Each trial draws its subset from an
    independent substream keyed by ``(seed, trial)``, so results do not
    depend on evaluation order and repeat runs are identical. Reports the
    mean and the population standard deviation.
    """
    if seed < 0:
        raise ValueError("seed must be non-negative")
    clarified, cmap, concepts = _prepare(ctx, n)
    m = clarified.n_attributes
    if trials is None:
        trials = 10 * m
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
    per_trial = []
    values = []
    for t in range(trials):
        rng = np.random.default_rng((seed, t))
        subset = tuple(sorted(int(i) for i in rng.choice(m, size=n, replace=False)))
        rel = relevance_from_concepts(concepts, subset)
        per_trial.append((_originals(cmap, subset), rel))
        values.append(float(rel.value))
    arr = np.asarray(values)
    spread = 0.0 if arr.min() == arr.max() else float(arr.std())
    return RandomBaseline(
        size=n,
        trials=trials,
        seed=seed,
        mean_relevance=float(arr.mean()),
        std_relevance=spread,
        per_trial=tuple(per_trial),
    )
