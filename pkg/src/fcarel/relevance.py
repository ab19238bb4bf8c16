"""Exact attribute relevance.

An attribute is relevant to an object when dropping the attribute lowers
the object's extent label. Relative relevance r(N) generalizes this to a
number: one minus the share of extent mass carried by the concepts that
survive removing N from every intent. All values are exact rationals.

Relevance is a property of attribute *equivalence classes*: by default
the context is clarified first and an attribute stands for its class of
identical columns. Pass ``strict=True`` to reject unclarified input
instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from ._bits import iter_bits, mask_of
from .context import FormalContext
from .errors import DegenerateContextError, UnclarifiedContextError
from .lattice import ConceptSet, enumerate_concepts


@dataclass(frozen=True)
class Relevance:
    """Relative relevance as the exact pair (surviving mass, total mass).

    ``value`` is 1 - surviving/total in lowest terms; ``survival_ratio``
    is the complementary fraction t(N) = surviving/total. A value of 0
    means every concept survived.
    """

    surviving_extent_sum: int
    total_extent_sum: int

    def __post_init__(self):
        if self.total_extent_sum <= 0:
            raise DegenerateContextError(
                "relative relevance is undefined: total extent mass is zero"
            )
        if not 0 <= self.surviving_extent_sum <= self.total_extent_sum:
            raise ValueError("surviving extent mass out of range")

    @property
    def value(self) -> Fraction:
        return Fraction(
            self.total_extent_sum - self.surviving_extent_sum, self.total_extent_sum
        )

    @property
    def survival_ratio(self) -> Fraction:
        return Fraction(self.surviving_extent_sum, self.total_extent_sum)

    def __float__(self) -> float:
        return float(self.value)

    def __str__(self) -> str:
        return str(self.value)


def relevance_from_concepts(concepts: ConceptSet, attrs: Iterable[int]) -> Relevance:
    """Relative relevance of ``attrs`` given an already enumerated lattice."""
    return Relevance(
        surviving_extent_sum=concepts.surviving_extent_sum(attrs),
        total_extent_sum=concepts.extent_sum,
    )


def _clarified_for_relevance(
    ctx: FormalContext, attrs: Iterable[int], strict: bool
) -> tuple[FormalContext, frozenset[int]]:
    attr_set = frozenset(
        iter_bits(mask_of(attrs, ctx.n_attributes, "attribute index"))
    )
    if ctx.is_clarified:
        return ctx, attr_set
    if strict:
        raise UnclarifiedContextError(
            "context has duplicate rows or columns; clarify it first"
        )
    clarified, cmap = ctx.clarify()
    return clarified, cmap.map_attributes(attr_set)


def relative_relevance(
    ctx: FormalContext, attrs: Iterable[int], *, strict: bool = False
) -> Relevance:
    """Relative relevance r(N) of the attribute set ``attrs``.

    The context is clarified first (see module docstring); the result is
    exact. Raises :class:`DegenerateContextError` when the context has no
    objects, so no extent mass exists.
    """
    work, attr_set = _clarified_for_relevance(ctx, attrs, strict)
    if work.n_objects == 0:
        raise DegenerateContextError(
            "relative relevance is undefined on a context without objects"
        )
    return relevance_from_concepts(enumerate_concepts(work), attr_set)


def is_relevant(ctx: FormalContext, m: int, g: int) -> bool:
    """Whether removing attribute ``m`` lowers the extent label of object ``g``.

    Counts, among the concepts containing ``g``, those that do not
    survive the removal; the label drops exactly when that count is
    positive. Works on the context as given.
    """
    if not 0 <= m < ctx.n_attributes:
        raise IndexError(f"attribute index {m} out of range")
    if not 0 <= g < ctx.n_objects:
        raise IndexError(f"object index {g} out of range")
    concepts = enumerate_concepts(ctx)
    removed = 1 << m
    for ext, intent in zip(concepts._extents, concepts._intents):
        if ext >> g & 1 and not concepts._survives(ext, intent, removed):
            return True
    return False


def is_relevant_to_context(ctx: FormalContext, m: int) -> bool:
    """Whether attribute ``m`` is relevant to at least one object.

    Equivalent to ``relative_relevance(ctx, {m}).value > 0`` on a
    clarified context: some concept with a non-empty extent must die.
    """
    if not 0 <= m < ctx.n_attributes:
        raise IndexError(f"attribute index {m} out of range")
    concepts = enumerate_concepts(ctx)
    removed = 1 << m
    for ext, intent in zip(concepts._extents, concepts._intents):
        if ext and not concepts._survives(ext, intent, removed):
            return True
    return False


def is_irreducible(ctx: FormalContext, m: int) -> bool:
    """Whether column ``m`` is not an intersection of other columns.

    Purely structural, no lattice enumeration: intersect every other
    column containing ``m``'s column and compare (an empty collection
    intersects to the full object set). On a clarified context with a
    non-empty column ``m`` this coincides with relevance to the context;
    an attribute with an *empty* column can be irreducible while no
    object label changes, because only the empty-extent bottom concept
    disappears with it.
    """
    if not 0 <= m < ctx.n_attributes:
        raise IndexError(f"attribute index {m} out of range")
    col = ctx._cols[m]
    inter = (1 << ctx.n_objects) - 1
    for j, other in enumerate(ctx._cols):
        if j != m and other & col == col:
            inter &= other
    return inter != col
