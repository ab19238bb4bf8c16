"""Formal contexts: the cross-table of objects, attributes and incidence.

A :class:`FormalContext` is immutable. Incidence is stored twice, as one
bitmask per object row and one per attribute column, so derivation is a
chain of integer ANDs. All operations return new contexts.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Literal, Sequence

import numpy as np

from ._bits import indices_of, iter_bits, mask_of
from .errors import FormatError

Side = Literal["objects", "attributes"]


class ScaleKind(str, Enum):
    """The three standard n-by-n scale contexts."""

    ORDINAL = "ordinal"  # incidence g <= m
    NOMINAL = "nominal"  # incidence g == m
    CONTRANOMINAL = "contranominal"  # incidence g != m


@dataclass(frozen=True)
class ClarificationMap:
    """Which rows/columns were merged by :meth:`FormalContext.clarify`.

    Classes partition the original indices; members of a class have
    identical columns (attributes) or rows (objects). Each class is kept
    as a sorted tuple whose first member is the surviving representative,
    and classes are listed in representative order, i.e. class ``j`` of
    ``attribute_classes`` became attribute ``j`` of the clarified context.
    """

    attribute_classes: tuple[tuple[int, ...], ...]
    object_classes: tuple[tuple[int, ...], ...]

    @cached_property
    def _attr_target(self) -> dict[int, int]:
        return {m: j for j, cls in enumerate(self.attribute_classes) for m in cls}

    def attribute_index(self, original: int) -> int:
        """Clarified index of the class containing original attribute ``original``."""
        return self._attr_target[original]

    def attribute_representative(self, original: int) -> int:
        """Original index of the representative of ``original``'s class."""
        return self.attribute_classes[self._attr_target[original]][0]

    def map_attributes(self, originals: Iterable[int]) -> frozenset[int]:
        """Map a set of original attribute indices to clarified indices."""
        return frozenset(self._attr_target[m] for m in originals)

    @property
    def is_identity(self) -> bool:
        return all(len(c) == 1 for c in self.attribute_classes) and all(
            len(c) == 1 for c in self.object_classes
        )


def _validate_names(names: Sequence[str], what: str) -> tuple[str, ...]:
    out = tuple(str(n) for n in names)
    seen = set()
    for n in out:
        if n == "":
            raise FormatError(f"empty {what} name")
        if "\n" in n or "\r" in n:
            raise FormatError(f"{what} name contains a line break: {n!r}")
        if n in seen:
            raise FormatError(f"duplicate {what} name: {n!r}")
        seen.add(n)
    return out


class FormalContext:
    """An object set, an attribute set and a binary incidence relation.

    Parameters
    ----------
    objects, attributes:
        Names; each list must be free of duplicates.
    incidence:
        Anything convertible to a ``|G| x |M|`` boolean array: nested
        sequences, a numpy array, or an iterable of row strings over
        ``{'x', 'X', '1'}`` (incident) and ``{'.', '0'}`` (not incident).
    """

    __slots__ = ("_objects", "_attributes", "_rows", "_cols", "__weakref__")

    def __init__(self, objects: Sequence[str], attributes: Sequence[str], incidence):
        objs = _validate_names(objects, "object")
        attrs = _validate_names(attributes, "attribute")
        rows = _coerce_rows(incidence, len(objs), len(attrs))
        self._init_from(objs, attrs, rows)

    def _init_from(self, objects, attributes, rows):
        object.__setattr__(self, "_objects", objects)
        object.__setattr__(self, "_attributes", attributes)
        object.__setattr__(self, "_rows", tuple(rows))
        cols = [0] * len(attributes)
        for g, row in enumerate(rows):
            bit = 1 << g
            for m in iter_bits(row):
                cols[m] |= bit
        object.__setattr__(self, "_cols", tuple(cols))

    @classmethod
    def _from_rows(cls, objects, attributes, rows) -> "FormalContext":
        """Internal constructor for already-validated data."""
        ctx = cls.__new__(cls)
        ctx._init_from(tuple(objects), tuple(attributes), rows)
        return ctx

    def __setattr__(self, name, value):
        raise AttributeError("FormalContext is immutable")

    # -- basic views ---------------------------------------------------

    @property
    def objects(self) -> tuple[str, ...]:
        return self._objects

    @property
    def attributes(self) -> tuple[str, ...]:
        return self._attributes

    @property
    def n_objects(self) -> int:
        return len(self._objects)

    @property
    def n_attributes(self) -> int:
        return len(self._attributes)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self._objects), len(self._attributes))

    @property
    def incidence_count(self) -> int:
        return sum(r.bit_count() for r in self._rows)

    def incidence(self, g: int, m: int) -> bool:
        """Whether object ``g`` has attribute ``m`` (by index)."""
        if not 0 <= g < len(self._objects):
            raise IndexError(f"object index {g} out of range")
        if not 0 <= m < len(self._attributes):
            raise IndexError(f"attribute index {m} out of range")
        return bool(self._rows[g] >> m & 1)

    def incidence_matrix(self) -> np.ndarray:
        """The incidence relation as a ``|G| x |M|`` boolean array."""
        mat = np.zeros(self.shape, dtype=bool)
        for g, row in enumerate(self._rows):
            for m in iter_bits(row):
                mat[g, m] = True
        return mat

    def object_index(self, name: str) -> int:
        try:
            return self._objects.index(name)
        except ValueError:
            raise KeyError(f"unknown object {name!r}") from None

    def attribute_index(self, name: str) -> int:
        try:
            return self._attributes.index(name)
        except ValueError:
            raise KeyError(f"unknown attribute {name!r}") from None

    def attribute_indices(self, names: Iterable[str]) -> frozenset[int]:
        return frozenset(self.attribute_index(n) for n in names)

    def __eq__(self, other):
        if not isinstance(other, FormalContext):
            return NotImplemented
        return (
            self._objects == other._objects
            and self._attributes == other._attributes
            and self._rows == other._rows
        )

    def __hash__(self):
        return hash((self._objects, self._attributes, self._rows))

    def __repr__(self):
        g, m = self.shape
        return f"<FormalContext {g}x{m}, {self.incidence_count} incidences>"

    # -- derivation ----------------------------------------------------

    def _derive_objects_mask(self, object_mask: int) -> int:
        """Common attributes of the given objects (full M for the empty set)."""
        attrs = (1 << len(self._attributes)) - 1
        for g in iter_bits(object_mask):
            attrs &= self._rows[g]
            if not attrs:
                break
        return attrs

    def _derive_attributes_mask(self, attr_mask: int) -> int:
        """Common objects of the given attributes (full G for the empty set)."""
        objs = (1 << len(self._objects)) - 1
        for m in iter_bits(attr_mask):
            objs &= self._cols[m]
            if not objs:
                break
        return objs

    def derive(self, side: Side, indices: Iterable[int] = ()) -> frozenset[int]:
        """Apply the derivation operator once.

        ``derive("objects", A)`` returns the attributes common to all
        objects in ``A``; ``derive("attributes", B)`` the objects having
        every attribute in ``B``. The empty set derives to the full
        opposite set.
        """
        if side == "objects":
            mask = mask_of(indices, len(self._objects), "object index")
            return indices_of(self._derive_objects_mask(mask))
        if side == "attributes":
            mask = mask_of(indices, len(self._attributes), "attribute index")
            return indices_of(self._derive_attributes_mask(mask))
        raise ValueError(f"side must be 'objects' or 'attributes', got {side!r}")

    def closure(self, side: Side, indices: Iterable[int] = ()) -> frozenset[int]:
        """Apply the derivation operator twice: the closure of ``indices``."""
        if side == "objects":
            mask = mask_of(indices, len(self._objects), "object index")
            return indices_of(
                self._derive_attributes_mask(self._derive_objects_mask(mask))
            )
        if side == "attributes":
            mask = mask_of(indices, len(self._attributes), "attribute index")
            return indices_of(
                self._derive_objects_mask(self._derive_attributes_mask(mask))
            )
        raise ValueError(f"side must be 'objects' or 'attributes', got {side!r}")

    def object_closure_sizes(self) -> list[int]:
        """``|g''|`` for every object g, the ingredient of both entropies."""
        full = (1 << len(self._objects)) - 1
        out = []
        for row in self._rows:
            ext = full
            for m in iter_bits(row):
                ext &= self._cols[m]
            out.append(ext.bit_count())
        return out

    # -- context surgery -------------------------------------------------

    def subcontext_remove(self, attrs: Iterable[int]) -> "FormalContext":
        """Drop the given attributes; objects are kept unchanged."""
        drop = mask_of(attrs, len(self._attributes), "attribute index")
        keep = [m for m in range(len(self._attributes)) if not drop >> m & 1]
        return self._restrict_attributes(keep)

    def subcontext_keep(self, attrs: Iterable[int]) -> "FormalContext":
        """Restrict to the given attributes; objects are kept unchanged."""
        keep_mask = mask_of(attrs, len(self._attributes), "attribute index")
        return self._restrict_attributes(sorted(iter_bits(keep_mask)))

    def _restrict_attributes(self, keep: Sequence[int]) -> "FormalContext":
        names = tuple(self._attributes[m] for m in keep)
        rows = []
        for row in self._rows:
            new = 0
            for j, m in enumerate(keep):
                if row >> m & 1:
                    new |= 1 << j
            rows.append(new)
        return FormalContext._from_rows(self._objects, names, rows)

    def transpose(self) -> "FormalContext":
        """Swap objects and attributes; incidence is transposed."""
        return FormalContext._from_rows(self._attributes, self._objects, self._cols)

    # -- clarification and reduction -------------------------------------

    @property
    def is_clarified(self) -> bool:
        """True when all rows are pairwise distinct and all columns are too."""
        return len(set(self._rows)) == len(self._rows) and len(set(self._cols)) == len(
            self._cols
        )

    def clarify(self) -> tuple["FormalContext", ClarificationMap]:
        """Merge identical columns and identical rows.

        Keeps the smallest-index member of each class; the concept
        lattice of the result is isomorphic to the original one.
        """
        attr_classes = _partition_identical(self._cols)
        obj_classes = _partition_identical(self._rows)
        cmap = ClarificationMap(attr_classes, obj_classes)
        if cmap.is_identity:
            return self, cmap
        keep_obj = [c[0] for c in obj_classes]
        keep_attr = [c[0] for c in attr_classes]
        rows = []
        for g in keep_obj:
            row = self._rows[g]
            new = 0
            for j, m in enumerate(keep_attr):
                if row >> m & 1:
                    new |= 1 << j
            rows.append(new)
        ctx = FormalContext._from_rows(
            tuple(self._objects[g] for g in keep_obj),
            tuple(self._attributes[m] for m in keep_attr),
            rows,
        )
        return ctx, cmap

    def reduce(self) -> "FormalContext":
        """Drop every attribute whose column is an intersection of other columns.

        Works on the attribute-clarified context (clarifies first when
        needed); the concept lattice is preserved.
        """
        ctx = self
        if len(set(ctx._cols)) != len(ctx._cols):
            ctx, _ = ctx.clarify()
        full = (1 << len(ctx._objects)) - 1
        keep = []
        for m, col in enumerate(ctx._cols):
            inter = full
            for j, other in enumerate(ctx._cols):
                if j != m and other & col == col:
                    inter &= other
            if inter != col:
                keep.append(m)
        return ctx._restrict_attributes(keep)


def _partition_identical(masks: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    groups: dict[int, list[int]] = {}
    for i, m in enumerate(masks):
        groups.setdefault(m, []).append(i)
    classes = sorted(groups.values(), key=lambda c: c[0])
    return tuple(tuple(c) for c in classes)


def _coerce_rows(incidence, n_obj: int, n_attr: int) -> list[int]:
    rows: list[int] = []
    data = list(incidence)
    if len(data) != n_obj:
        raise FormatError(f"expected {n_obj} incidence rows, got {len(data)}")
    for g, row in enumerate(data):
        if isinstance(row, str):
            cells = list(row)
        else:
            cells = list(row)
        if len(cells) != n_attr:
            raise FormatError(
                f"incidence row {g} has {len(cells)} cells, expected {n_attr}"
            )
        mask = 0
        for m, cell in enumerate(cells):
            if isinstance(cell, str):
                if cell in ("x", "X", "1"):
                    mask |= 1 << m
                elif cell not in (".", "0"):
                    raise FormatError(f"illegal incidence cell {cell!r} in row {g}")
            elif cell:
                mask |= 1 << m
        rows.append(mask)
    return rows


def make_scale(kind: ScaleKind | str, n: int) -> FormalContext:
    """Build the n-by-n ordinal (<=), nominal (==) or contranominal (!=) scale.

    Objects and attributes are both named ``"1" .. "n"``.
    """
    kind = ScaleKind(kind)
    if n < 1:
        raise ValueError(f"scale size must be at least 1, got {n}")
    names = tuple(str(i + 1) for i in range(n))
    full = (1 << n) - 1
    if kind is ScaleKind.ORDINAL:
        rows = [full & ~((1 << g) - 1) for g in range(n)]
    elif kind is ScaleKind.NOMINAL:
        rows = [1 << g for g in range(n)]
    else:
        rows = [full ^ (1 << g) for g in range(n)]
    return FormalContext._from_rows(names, names, rows)
