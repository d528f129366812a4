"""Checks that a candidate square arrangement stands in the required relation to its input.

The four variants, from strictest to weakest:

* ``order``     same x- and y-sequences;
* ``combequiv`` same pairwise relation tuples (same kind, same sides and corners);
* ``nopierce``  same intersection graph, and the candidate only has corner or
  containment intersections;
* ``graph``     same intersection graph.

Box ``i`` of the candidate is always compared with box ``i`` of the input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, GeneralPositionViolation, SharedEndpoint, SizeMismatch
from .geometry import Arrangement, Kind, classify_pair, intersects
from .sequences import axis_sequence, sequences_equal


def _same_size(inp: Arrangement, cand: Arrangement) -> None:
    if len(inp) != len(cand):
        raise SizeMismatch(f"input has {len(inp)} boxes, candidate {len(cand)}")


def _same_dimension(inp: Arrangement, cand: Arrangement) -> None:
    if inp.dimension != cand.dimension:
        raise DimensionMismatch(f"input is {inp.dimension}-dimensional, candidate {cand.dimension}")


def check_order_preserved(inp: Arrangement, cand: Arrangement) -> bool:
    _same_size(inp, cand)
    _same_dimension(inp, cand)
    xs, ys = axis_sequence(inp, "x"), axis_sequence(inp, "y")
    try:
        cx, cy = axis_sequence(cand, "x"), axis_sequence(cand, "y")
    except GeneralPositionViolation:
        # collinear sides in the candidate cannot realise a strict order
        return False
    return sequences_equal(xs, cx) and sequences_equal(ys, cy)


def check_combinatorial_equivalence(inp: Arrangement, cand: Arrangement) -> bool:
    _same_size(inp, cand)
    _same_dimension(inp, cand)
    for i, j in inp.pairs():
        try:
            theirs = classify_pair(cand.box(i), cand.box(j))
        except SharedEndpoint:
            return False
        if classify_pair(inp.box(i), inp.box(j)).relations != theirs.relations:
            return False
    return True


def _same_graph(inp: Arrangement, cand: Arrangement) -> bool:
    return all(
        intersects(inp.box(i), inp.box(j)) == intersects(cand.box(i), cand.box(j))
        for i, j in inp.pairs()
    )


def check_keep_intersections_no_piercing(inp: Arrangement, cand: Arrangement) -> bool:
    _same_size(inp, cand)
    if not _same_graph(inp, cand):
        return False
    for i, j in cand.pairs():
        a, b = cand.box(i), cand.box(j)
        if not intersects(a, b):
            continue
        try:
            kind = classify_pair(a, b).kind
        except SharedEndpoint:
            # touching sides are neither a clean corner nor a containment
            return False
        if kind not in (Kind.CORNER, Kind.CONTAINMENT):
            return False
    return True


def check_keep_intersection_graph(inp: Arrangement, cand: Arrangement) -> bool:
    _same_size(inp, cand)
    return _same_graph(inp, cand)


def check_is_squares(cand: Arrangement) -> bool:
    """True iff every box has all side lengths equal (squares, cubes, hypercubes)."""
    return all(bx.is_cube for bx in cand)


@dataclass(frozen=True)
class Inadmissible:
    first: int
    second: int
    kind: Kind

    def __str__(self):
        return f"boxes {self.first} and {self.second}: {self.kind.value}"


def check_admissible_input(arr: Arrangement) -> list[Inadmissible]:
    """Pairs meeting by side-piercing or cross intersection; empty iff admissible."""
    if arr.dimension != 2:
        raise DimensionMismatch("admissibility is defined for planar arrangements")
    report = []
    for i, j in arr.pairs():
        kind = classify_pair(arr.box(i), arr.box(j)).kind
        if kind in (Kind.SIDE_PIERCING, Kind.CROSS):
            report.append(Inadmissible(i, j, kind))
    return report


VARIANTS = {
    "order": check_order_preserved,
    "combequiv": check_combinatorial_equivalence,
    "nopierce": check_keep_intersections_no_piercing,
    "graph": check_keep_intersection_graph,
}
