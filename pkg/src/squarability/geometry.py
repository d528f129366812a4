"""Axis-aligned intervals, boxes and arrangements with exact rational coordinates.

Every predicate here compares :class:`fractions.Fraction` values, so no
classification ever depends on a floating point tolerance.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

from .errors import (
    DegenerateInterval,
    DimensionMismatch,
    EmptyIndexSet,
    IndexOutOfRange,
    SharedEndpoint,
)

RationalLike = Union[Fraction, int, str]

AXIS_NAMES = "xyzw"


def as_rational(value: RationalLike) -> Fraction:
    """Convert ``value`` to a Fraction, refusing floats (they are not exact)."""
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact coordinate {value!r}")
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def axis_name(axis: int) -> str:
    """Human name of a 1-based axis index (x, y, z, w, then a5, a6, ...)."""
    return AXIS_NAMES[axis - 1] if axis <= len(AXIS_NAMES) else f"a{axis}"


@dataclass(frozen=True)
class Interval:
    """Closed interval ``[lo, hi]`` with ``lo < hi``."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = as_rational(self.lo), as_rational(self.hi)
        if not lo < hi:
            raise DegenerateInterval(f"interval needs lo < hi, got [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def __iter__(self):
        yield self.lo
        yield self.hi

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"


class Relation(Enum):
    """Position of one interval relative to another with four distinct endpoints."""

    BEFORE = "before"
    AFTER = "after"
    OVERLAP_LOW = "overlap-low"
    OVERLAP_HIGH = "overlap-high"
    CONTAINS = "contains"
    INSIDE = "inside"

    @property
    def mirror(self) -> Relation:
        return _MIRROR[self]

    @property
    def disjoint(self) -> bool:
        return self in (Relation.BEFORE, Relation.AFTER)

    @property
    def nested(self) -> bool:
        return self in (Relation.CONTAINS, Relation.INSIDE)

    @property
    def overlapping(self) -> bool:
        return self in (Relation.OVERLAP_LOW, Relation.OVERLAP_HIGH)


_MIRROR = {
    Relation.BEFORE: Relation.AFTER,
    Relation.AFTER: Relation.BEFORE,
    Relation.OVERLAP_LOW: Relation.OVERLAP_HIGH,
    Relation.OVERLAP_HIGH: Relation.OVERLAP_LOW,
    Relation.CONTAINS: Relation.INSIDE,
    Relation.INSIDE: Relation.CONTAINS,
}


class Kind(Enum):
    DISJOINT = "disjoint"
    CORNER = "corner"
    SIDE_PIERCING = "side-piercing"
    CROSS = "cross"
    CONTAINMENT = "containment"
    # Non-disjoint pairs outside the plane; the relation tuple is the whole story.
    HIGHER_DIM = "higher-dim"


@dataclass(frozen=True)
class Box:
    """Axis-aligned box in d dimensions; a rectangle is a box with d = 2."""

    axes: tuple[Interval, ...]

    def __post_init__(self):
        axes = tuple(self.axes)
        if not axes:
            raise DimensionMismatch("a box needs at least one axis")
        for iv in axes:
            if not isinstance(iv, Interval):
                raise TypeError(f"expected Interval, got {type(iv).__name__}")
        object.__setattr__(self, "axes", axes)

    @classmethod
    def from_bounds(cls, *bounds: tuple[RationalLike, RationalLike]) -> Box:
        return cls(tuple(Interval(lo, hi) for lo, hi in bounds))

    @property
    def dim(self) -> int:
        return len(self.axes)

    # Plane notation: x is axis 1, y is axis 2.
    @property
    def l(self) -> Fraction:  # noqa: E743
        return self.axes[0].lo

    @property
    def r(self) -> Fraction:
        return self.axes[0].hi

    @property
    def b(self) -> Fraction:
        return self.axes[1].lo

    @property
    def t(self) -> Fraction:
        return self.axes[1].hi

    @property
    def w(self) -> Fraction:
        return self.axes[0].length

    @property
    def h(self) -> Fraction:
        return self.axes[1].length

    @property
    def sides(self) -> tuple[Fraction, ...]:
        return tuple(iv.length for iv in self.axes)

    @property
    def is_cube(self) -> bool:
        return len(set(self.sides)) == 1

    def __str__(self):
        return "×".join(str(iv) for iv in self.axes)


def rect(l: RationalLike, r: RationalLike, b: RationalLike, t: RationalLike) -> Box:  # noqa: E741
    """Rectangle ``[l, r] × [b, t]``."""
    return Box((Interval(l, r), Interval(b, t)))


@dataclass(frozen=True)
class Arrangement:
    """Indexed family of boxes sharing one dimension.

    Public indices are 1-based (box ``i`` is ``boxes[i - 1]``), matching the
    numbering used by sequences, size-order graphs and reports.
    """

    boxes: tuple[Box, ...]
    labels: tuple[str, ...] | None = None
    dimension: int | None = None

    def __post_init__(self):
        boxes = tuple(self.boxes)
        dims = {bx.dim for bx in boxes}
        if len(dims) > 1:
            raise DimensionMismatch(f"mixed dimensions {sorted(dims)}")
        dimension = self.dimension
        if boxes:
            (found,) = dims
            if dimension is not None and dimension != found:
                raise DimensionMismatch(f"declared dimension {dimension}, boxes have {found}")
            dimension = found
        elif dimension is None:
            dimension = 2
        labels = self.labels
        if labels is None:
            labels = tuple(str(i) for i in range(1, len(boxes) + 1))
        labels = tuple(labels)
        if len(labels) != len(boxes):
            raise ValueError(f"{len(labels)} labels for {len(boxes)} boxes")
        object.__setattr__(self, "boxes", boxes)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "dimension", dimension)

    def __len__(self) -> int:
        return len(self.boxes)

    def __iter__(self) -> Iterator[Box]:
        return iter(self.boxes)

    def box(self, i: int) -> Box:
        if not 1 <= i <= len(self.boxes):
            raise IndexOutOfRange(f"box index {i} outside 1..{len(self.boxes)}")
        return self.boxes[i - 1]

    def label(self, i: int) -> str:
        self.box(i)
        return self.labels[i - 1]

    def index(self, label: str) -> int:
        """1-based index of the box carrying ``label``."""
        try:
            return self.labels.index(label) + 1
        except ValueError:
            raise KeyError(label) from None

    def by_label(self, label: str) -> Box:
        return self.box(self.index(label))

    def indices(self) -> range:
        return range(1, len(self.boxes) + 1)

    def pairs(self) -> Iterator[tuple[int, int]]:
        """All index pairs ``i < j``."""
        return itertools.combinations(self.indices(), 2)


@dataclass(frozen=True)
class PairDescriptor:
    """Per-axis relations of box ``a`` to box ``b`` plus the derived kind."""

    relations: tuple[Relation, ...]
    kind: Kind

    @property
    def mirror(self) -> PairDescriptor:
        return PairDescriptor(tuple(r.mirror for r in self.relations), self.kind)


def interval_relation(p: Interval, q: Interval) -> Relation:
    """Relation of ``p`` to ``q``; all four endpoints must be distinct."""
    if len({p.lo, p.hi, q.lo, q.hi}) != 4:
        raise SharedEndpoint(f"intervals {p} and {q} share an endpoint")
    if p.hi < q.lo:
        return Relation.BEFORE
    if q.hi < p.lo:
        return Relation.AFTER
    if p.lo < q.lo:
        return Relation.CONTAINS if q.hi < p.hi else Relation.OVERLAP_LOW
    return Relation.INSIDE if p.hi < q.hi else Relation.OVERLAP_HIGH


def _kind(relations: Sequence[Relation]) -> Kind:
    if any(r.disjoint for r in relations):
        return Kind.DISJOINT
    if len(relations) != 2:
        return Kind.HIGHER_DIM
    first, second = relations
    nested = first.nested + second.nested
    if nested == 0:
        return Kind.CORNER
    if nested == 1:
        return Kind.SIDE_PIERCING
    return Kind.CONTAINMENT if first == second else Kind.CROSS


def _same_dimension(a: Box, b: Box) -> None:
    if a.dim != b.dim:
        raise DimensionMismatch(f"boxes of dimension {a.dim} and {b.dim}")


def classify_pair(a: Box, b: Box) -> PairDescriptor:
    """Describe how ``a`` meets ``b``.

    The relation tuple carries the orientation (which corner or side); the
    kind is one of the plane intersection types, ``DISJOINT``, or
    ``HIGHER_DIM`` for intersecting boxes when d != 2.
    """
    _same_dimension(a, b)
    relations = tuple(interval_relation(p, q) for p, q in zip(a.axes, b.axes))
    return PairDescriptor(relations, _kind(relations))


def intersects(a: Box, b: Box) -> bool:
    """Closed-box intersection test."""
    _same_dimension(a, b)
    return all(p.lo <= q.hi and q.lo <= p.hi for p, q in zip(a.axes, b.axes))


def _axis_indices(axes: int | Iterable[int], dimension: int) -> tuple[int, ...]:
    if isinstance(axes, int):
        axes = (axes,)
    chosen = tuple(sorted(set(axes)))
    if not chosen:
        raise EmptyIndexSet("projection needs at least one axis")
    for c in chosen:
        if not 1 <= c <= dimension:
            raise IndexOutOfRange(f"axis {c} outside 1..{dimension}")
    return chosen


def project(arr: Arrangement, axes: int | Iterable[int]) -> Arrangement:
    """Forget every coordinate whose 1-based axis index is not in ``axes``.

    A bare integer ``c`` is shorthand for the singleton ``{c}``.
    """
    chosen = _axis_indices(axes, arr.dimension)
    boxes = tuple(Box(tuple(bx.axes[c - 1] for c in chosen)) for bx in arr.boxes)
    return Arrangement(boxes, arr.labels, len(chosen))


@dataclass(frozen=True)
class Coincidence:
    """Boxes ``first`` and ``second`` both have a side at ``value`` on ``axis``."""

    axis: int
    value: Fraction
    first: int
    second: int

    def __str__(self):
        return f"axis {axis_name(self.axis)}: boxes {self.first} and {self.second} share {self.value}"


def axis_coincidences(arr: Arrangement, axis: int) -> list[Coincidence]:
    owners: dict[Fraction, list[int]] = defaultdict(list)
    for i, bx in zip(arr.indices(), arr.boxes):
        iv = bx.axes[axis - 1]
        owners[iv.lo].append(i)
        owners[iv.hi].append(i)
    report = []
    for value in sorted(owners):
        for first, second in itertools.combinations(owners[value], 2):
            report.append(Coincidence(axis, value, first, second))
    return report


def validate_general_position(arr: Arrangement) -> list[Coincidence]:
    """Every pair of boxes sharing a coordinate value on some axis.

    An empty list means the arrangement is in general position.
    """
    report = []
    for axis in range(1, arr.dimension + 1):
        report.extend(axis_coincidences(arr, axis))
    return report
