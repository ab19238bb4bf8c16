"""Context entropies driven by object-closure sizes.

Both functions look only at ``|g''|``, the size of each object's closure:

* Shannon object entropy: ``sum(-p * log2(p))`` with ``p = |g''|/|G|``.
  The plain sum is the default; ``normalized=True`` divides by ``|G|``.
* Object entropy: ``mean(1 - |g''|/|G|)``, always in ``[0, 1)``.

Closed forms on the standard scales are provided as an independent check
of the direct evaluators.
"""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction

from .context import FormalContext, ScaleKind
from .errors import DegenerateContextError


class EntropyKind(str, Enum):
    SHANNON_OBJECT = "se"
    OBJECT = "oe"


def _closure_sizes(ctx: FormalContext) -> list[int]:
    if ctx.n_objects == 0:
        raise DegenerateContextError("entropy is undefined on an empty object set")
    return ctx.object_closure_sizes()


def shannon_object_entropy(ctx: FormalContext, normalized: bool = False) -> float:
    """Shannon object entropy of the context.

    Terms with ``|g''| == |G|`` contribute zero (and ``p`` can never be
    zero because every object belongs to its own closure). ``normalized``
    divides the sum by ``|G|``.
    """
    sizes = _closure_sizes(ctx)
    n = ctx.n_objects
    total = 0.0
    for s in sizes:
        if s != n:
            p = s / n
            total -= p * math.log2(p)
    return total / n if normalized else total


def object_entropy(ctx: FormalContext) -> float:
    """Mean complement of the relative object-closure size."""
    return float(object_entropy_exact(ctx))


def object_entropy_exact(ctx: FormalContext) -> Fraction:
    """Object entropy as an exact rational (denominator ``|G|**2``).

    Used wherever entropy values are compared for equality, e.g. greedy
    tie-breaking.
    """
    sizes = _closure_sizes(ctx)
    n = ctx.n_objects
    return Fraction(sum(n - s for s in sizes), n * n)


def entropy(ctx: FormalContext, kind: EntropyKind | str, normalized: bool = False) -> float:
    """Dispatch on :class:`EntropyKind`; ``normalized`` only affects the
    Shannon variant."""
    kind = EntropyKind(kind)
    if kind is EntropyKind.SHANNON_OBJECT:
        return shannon_object_entropy(ctx, normalized=normalized)
    return object_entropy(ctx)


def scale_entropy(kind: ScaleKind | str, n: int, which: EntropyKind | str) -> float:
    """Closed-form entropy of the n-by-n ordinal/nominal/contranominal scale.

    Ordinal: the closure sizes are exactly 1..n, giving
    ``-sum((i/n) * log2(i/n))`` for the Shannon variant and
    ``(n - 1) / (2n)`` for the object variant. Nominal and contranominal
    scales both have singleton closures, giving ``log2(n)`` and
    ``(n - 1) / n``. Shannon values are the plain (unnormalized) sums.
    """
    kind = ScaleKind(kind)
    which = EntropyKind(which)
    if n < 1:
        raise ValueError(f"scale size must be at least 1, got {n}")
    if kind is ScaleKind.ORDINAL:
        if which is EntropyKind.SHANNON_OBJECT:
            return -sum(i / n * math.log2(i / n) for i in range(1, n))
        return (n - 1) / (2 * n)
    if which is EntropyKind.SHANNON_OBJECT:
        return math.log2(n)
    return (n - 1) / n
