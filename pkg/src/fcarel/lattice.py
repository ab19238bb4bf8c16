"""Concept enumeration and survivor bookkeeping.

``enumerate_concepts`` runs a canonical-closure depth-first search
(close-by-one over the attribute order): every closed pair is produced
exactly once, no candidate set is ever stored twice, and the result is
sorted into a canonical order so the output is reproducible bit for bit.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from ._bits import bitstring_key, indices_of, iter_bits, mask_of
from .context import FormalContext
from .errors import ConceptCapacityError

DEFAULT_CONCEPT_CAP = 5_000_000
CAP_ENV_VAR = "FCAREL_CONCEPT_CAP"


@dataclass(frozen=True)
class Concept:
    """A closed (extent, intent) pair, stored as index bitmasks."""

    extent_bits: int
    intent_bits: int

    @property
    def extent(self) -> frozenset[int]:
        return indices_of(self.extent_bits)

    @property
    def intent(self) -> frozenset[int]:
        return indices_of(self.intent_bits)

    @property
    def extent_size(self) -> int:
        return self.extent_bits.bit_count()

    @property
    def intent_size(self) -> int:
        return self.intent_bits.bit_count()


class ConceptSet:
    """All concepts of a context (or a survivor subset of them).

    Concepts are kept in canonical order: extents compared as big-endian
    bit-strings, so the bottom concept comes first and the top concept
    last. ``extent_sum`` is the total extent mass and ``labels[g]`` counts
    the concepts whose extent contains object ``g`` (the extent label of
    ``g``); the two satisfy ``extent_sum == sum(labels)``.
    """

    __slots__ = ("context", "concepts", "_extents", "_intents", "extent_sum", "labels")

    def __init__(self, context: FormalContext, pairs: Iterable[tuple[int, int]]):
        self.context = context
        n_obj = context.n_objects
        ordered = sorted(pairs, key=lambda p: bitstring_key(p[0], n_obj))
        self._extents = tuple(p[0] for p in ordered)
        self._intents = tuple(p[1] for p in ordered)
        self.concepts = tuple(Concept(e, i) for e, i in ordered)
        labels = [0] * n_obj
        total = 0
        for ext in self._extents:
            total += ext.bit_count()
            for g in iter_bits(ext):
                labels[g] += 1
        self.extent_sum = total
        self.labels = tuple(labels)

    def __len__(self) -> int:
        return len(self.concepts)

    def __iter__(self) -> Iterator[Concept]:
        return iter(self.concepts)

    def __getitem__(self, i) -> Concept:
        return self.concepts[i]

    @property
    def top(self) -> Concept:
        """The concept with the largest extent (last in canonical order)."""
        return self.concepts[-1]

    @property
    def bottom(self) -> Concept:
        """The concept with the smallest extent (first in canonical order)."""
        return self.concepts[0]

    # -- survivor tests --------------------------------------------------

    def _survives(self, ext: int, intent: int, removed: int) -> bool:
        if intent & removed == 0:
            return True
        cols = self.context._cols
        remaining = (1 << self.context.n_objects) - 1
        for m in iter_bits(intent & ~removed):
            remaining &= cols[m]
            if remaining == ext:
                return True
        return remaining == ext

    def survivors(self, attrs: Iterable[int]) -> "ConceptSet":
        """Concepts still closed after removing ``attrs`` from every intent.

        A concept survives when deriving its intent minus the removed
        attributes reproduces its extent; concepts whose intent does not
        meet ``attrs`` survive without any recomputation.
        """
        removed = mask_of(attrs, self.context.n_attributes, "attribute index")
        kept = [
            (e, i)
            for e, i in zip(self._extents, self._intents)
            if self._survives(e, i, removed)
        ]
        return ConceptSet(self.context, kept)

    def surviving_extent_sum(self, attrs: Iterable[int]) -> int:
        """Total extent mass of the survivors of removing ``attrs``."""
        removed = mask_of(attrs, self.context.n_attributes, "attribute index")
        return self._surviving_extent_sum_mask(removed)

    def _surviving_extent_sum_mask(self, removed: int) -> int:
        total = 0
        for e, i in zip(self._extents, self._intents):
            if self._survives(e, i, removed):
                total += e.bit_count()
        return total

    # -- export ----------------------------------------------------------

    def to_text(self) -> str:
        """One line per concept: extent indices, a tab, intent indices."""
        lines = []
        for e, i in zip(self._extents, self._intents):
            lines.append(
                " ".join(str(g) for g in iter_bits(e))
                + "\t"
                + " ".join(str(m) for m in iter_bits(i))
            )
        return "\n".join(lines) + ("\n" if lines else "")


def _concept_cap(cap: Optional[int]) -> int:
    if cap is not None:
        return cap
    env = os.environ.get(CAP_ENV_VAR)
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{CAP_ENV_VAR} must be an integer, got {env!r}") from None
    return DEFAULT_CONCEPT_CAP


def enumerate_concepts(ctx: FormalContext, cap: Optional[int] = None) -> ConceptSet:
    """Enumerate every formal concept of ``ctx`` exactly once.

    Depth-first canonical closure over the attribute order: a branch for
    attribute ``m`` is kept only when the new closure adds no attribute
    below ``m``, so no duplicate candidate is ever generated or stored.
    Raises :class:`ConceptCapacityError` when more than ``cap`` concepts
    appear (default 5,000,000, overridable with the ``FCAREL_CONCEPT_CAP``
    environment variable).
    """
    limit = _concept_cap(cap)
    cols = ctx._cols
    n_attr = ctx.n_attributes
    full_g = (1 << ctx.n_objects) - 1

    root_int = 0
    for j, col in enumerate(cols):
        if col == full_g:
            root_int |= 1 << j
    found = [(full_g, root_int)]
    stack = [(full_g, root_int, 0)]
    while stack:
        ext, intent, start = stack.pop()
        for m in range(start, n_attr):
            if intent >> m & 1:
                continue
            new_ext = ext & cols[m]
            new_int = intent | (1 << m)
            canonical = True
            for j in range(n_attr):
                if new_int >> j & 1:
                    continue
                if new_ext & cols[j] == new_ext:
                    if j < m:
                        canonical = False
                        break
                    new_int |= 1 << j
            if canonical:
                if len(found) >= limit:
                    raise ConceptCapacityError(
                        f"concept cap of {limit} exceeded "
                        f"(partial progress: {len(found)} concepts)",
                        count=len(found),
                    )
                found.append((new_ext, new_int))
                stack.append((new_ext, new_int, m + 1))
    return ConceptSet(ctx, found)


def extent_labels(concepts: ConceptSet) -> dict[int, int]:
    """Extent label of every object: how many concept extents contain it."""
    return dict(enumerate(concepts.labels))


def extent_sum(concepts: ConceptSet) -> int:
    """Total extent mass, the denominator of relative relevance."""
    return concepts.extent_sum


def surviving_concepts(
    concepts: ConceptSet, ctx: FormalContext, attrs: Iterable[int]
) -> ConceptSet:
    """Functional form of :meth:`ConceptSet.survivors` (``ctx`` must be the
    context the concepts were enumerated from)."""
    if ctx is not concepts.context and ctx != concepts.context:
        raise ValueError("concept set does not belong to this context")
    return concepts.survivors(attrs)
