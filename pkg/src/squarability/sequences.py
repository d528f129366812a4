"""x- and y-sequences of a planar arrangement.

Listing all side coordinates on one axis in increasing order and writing the
owning rectangle's index in place of each coordinate gives a word of length
2n in which every index occurs twice.  Positions count from 1, so the interval
sums of the linear program run over plain position ranges.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, GeneralPositionViolation
from .geometry import Arrangement, axis_coincidences

_AXES = {"x": 1, "y": 2, 1: 1, 2: 2}


@dataclass(frozen=True)
class AxisSequence:
    entries: tuple[int, ...]
    pairs: dict[int, tuple[int, int]]

    @classmethod
    def from_entries(cls, entries) -> AxisSequence:
        entries = tuple(entries)
        seen: dict[int, list[int]] = {}
        for pos, i in enumerate(entries, start=1):
            seen.setdefault(i, []).append(pos)
        n = len(seen)
        if sorted(seen) != list(range(1, n + 1)) or any(len(p) != 2 for p in seen.values()):
            raise ValueError(f"not a double occurrence word over 1..n: {entries}")
        return cls(entries, {i: (p[0], p[1]) for i, p in sorted(seen.items())})

    @property
    def n(self) -> int:
        return len(self.pairs)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, position: int) -> int:
        """Entry at 1-based ``position``."""
        if position < 1:
            raise IndexError(position)
        return self.entries[position - 1]

    def __str__(self):
        return ",".join(map(str, self.entries))


def axis_sequence(arr: Arrangement, axis="x") -> AxisSequence:
    """Sequence of rectangle indices ordered by side coordinate along ``axis``.

    ``axis`` is ``"x"``/``"y"`` or 1/2.  Ties are refused rather than broken.
    """
    if arr.dimension != 2:
        raise DimensionMismatch(f"sequences are defined for planar arrangements, got d={arr.dimension}")
    try:
        c = _AXES[axis]
    except KeyError:
        raise ValueError(f"unknown axis {axis!r}") from None
    clashes = axis_coincidences(arr, c)
    if clashes:
        raise GeneralPositionViolation("; ".join(map(str, clashes)))
    endpoints = []
    for i, bx in zip(arr.indices(), arr.boxes):
        iv = bx.axes[c - 1]
        endpoints.append((iv.lo, i))
        endpoints.append((iv.hi, i))
    endpoints.sort()
    return AxisSequence.from_entries(i for _, i in endpoints)


def sequences_equal(s1: AxisSequence, s2: AxisSequence) -> bool:
    return s1.entries == s2.entries
