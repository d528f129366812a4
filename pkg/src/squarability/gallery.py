"""Concrete arrangements realising the constructions of the squarability counterexamples.

Only the combinatorics of the original drawings matter, so every
constructor uses small hand-picked integer coordinates; the test suite
checks each one with the classifier and the decider.  Several layouts are
built from a quarter by 90 degree rotations about the centre of their
bounding square, which keeps the hand-written part small.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import GeneralPositionViolation, NonCornerIntersection, WiringConflict
from .geometry import (
    Arrangement,
    Box,
    Interval,
    Kind,
    Relation,
    classify_pair,
    intersects,
    rect,
    validate_general_position,
)


def rotate(bx: Box, centre) -> Box:
    """Rotate a rectangle clockwise by 90 degrees about ``(centre, centre)``."""
    c2 = 2 * Fraction(centre)
    return rect(bx.b, bx.t, c2 - bx.r, c2 - bx.l)


def _orbit(bx: Box, centre) -> list[Box]:
    out = [bx]
    for _ in range(3):
        out.append(rotate(out[-1], centre))
    return out


def fig2_pinwheel() -> Arrangement:
    """Four rectangles, each piercing a side of the next one cyclically."""
    return Arrangement(
        (rect(6, 18, 4, 8), rect(14, 17, 6, 22), rect(2, 16, 18, 21), rect(4, 8, 2, 20)),
        ("A", "B", "C", "D"),
    )


def fig3_cycle() -> Arrangement:
    """Four pairwise disjoint bars forcing w(A) > w(B) = h(B) > h(C) = ... > h(A).

    B lies inside A on x, C inside B on y, D inside C on x and A inside D on y.
    """
    return Arrangement(tuple(_orbit(rect(30, 85, 72, 80), 50)), ("A", "B", "C", "D"))


def fig4_combinatorial() -> Arrangement:
    """The four bars of :func:`fig3_cycle` plus the rectangles pinning w(A) > w(B).

    E1 and E2 straddle the bottom corners of B.  Y1 meets E1's top-left
    corner and A's bottom-left corner without touching B, so any
    combinatorially equivalent drawing keeps l(A) < r(Y1) < l(B); Y2 does
    the same on the right.
    """
    bars = [rect(2 * a, 2 * b, 2 * c, 2 * d) for a, b, c, d in
            [(30, 85, 72, 80), (72, 80, 15, 70), (15, 70, 20, 28), (20, 28, 30, 85)]]
    helpers = [rect(142, 150, 20, 120), rect(58, 143, 110, 152), rect(154, 176, 24, 100), rect(164, 180, 90, 154)]
    return Arrangement(tuple(bars + helpers), ("A", "B", "C", "D", "E1", "Y1", "E2", "Y2"))


# Σ-gadget, drawn in [0, 100]^2.  One quarter is written out, the other three
# follow by rotation: K -> L -> M -> N in the middle, A -> B -> C -> D at the
# corners and P -> Q -> R -> S along the edges.
GADGET_SIZE = 100
_QUARTER_MIDDLE = rect(36, 58, 56, 78)
_QUARTER_CORNER = rect(57, 96, 61, 97)
_QUARTER_EDGE = rect(20, 70, 85, 98)
# Where another rectangle's corner may sit inside A so that the quadrant
# beyond it meets only A and the outer rectangle.
_QUARTER_WINDOW = rect(70, 96, 80, 97)

GADGET_LABELS = ("O", "K", "L", "M", "N", "A", "B", "C", "D", "P", "Q", "R", "S")
# (x side, y side) of each corner -> label of the corner rectangle
GADGET_CORNERS = {(1, 1): "A", (1, -1): "B", (-1, -1): "C", (-1, 1): "D"}


def _gadget_windows() -> dict[tuple[int, int], Box]:
    windows = _orbit(_QUARTER_WINDOW, GADGET_SIZE // 2)
    return dict(zip([(1, 1), (1, -1), (-1, -1), (-1, 1)], windows))


def sigma_layout() -> Arrangement:
    """The Σ-gadget in its reference frame ``[0, 100]^2``."""
    half = GADGET_SIZE // 2
    boxes = [rect(0, GADGET_SIZE, 0, GADGET_SIZE)]
    for quarter in (_QUARTER_MIDDLE, _QUARTER_CORNER, _QUARTER_EDGE):
        boxes.extend(_orbit(quarter, half))
    return Arrangement(tuple(boxes), GADGET_LABELS)


def sigma_gadget() -> Arrangement:
    """Σ-gadget stretched to non-square proportions (x by 3/2)."""
    layout = sigma_layout()
    stretch = Fraction(3, 2)
    boxes = tuple(rect(bx.l * stretch, bx.r * stretch, bx.b, bx.t) for bx in layout)
    return Arrangement(boxes, layout.labels)


@dataclass(frozen=True)
class Wire:
    """Corner intersection between boxes ``first`` and ``second`` (1-based).

    ``corner`` is the corner of ``first`` involved, as (x side, y side) with
    +1 for the high end; ``second`` uses the opposite corner.
    """

    first: int
    second: int
    corner: tuple[int, int]


def corner_wiring(arr: Arrangement) -> list[Wire]:
    """All intersecting pairs, which must be corner intersections."""
    clashes = validate_general_position(arr)
    if clashes:
        raise GeneralPositionViolation("; ".join(map(str, clashes[:5])))
    wires = []
    used: dict[tuple[int, tuple[int, int]], int] = {}
    for i, j in arr.pairs():
        desc = classify_pair(arr.box(i), arr.box(j))
        if desc.kind is Kind.DISJOINT:
            continue
        if desc.kind is not Kind.CORNER:
            raise NonCornerIntersection(f"{arr.label(i)} and {arr.label(j)} meet by {desc.kind.value}")
        corner = tuple(1 if r is Relation.OVERLAP_LOW else -1 for r in desc.relations)
        for box, c in ((i, corner), (j, (-corner[0], -corner[1]))):
            if (box, c) in used:
                other = used[(box, c)]
                raise WiringConflict(
                    f"corner {c} of {arr.label(box)} is wanted by both {arr.label(other)} and "
                    f"{arr.label(j if box == i else i)}"
                )
            used[(box, c)] = j if box == i else i
        wires.append(Wire(i, j, corner))
    return wires


class _PiecewiseLinear:
    """Increasing piecewise linear map through the given (local, global) knots."""

    def __init__(self, knots: Sequence[tuple[Fraction, Fraction]]):
        self.knots = list(knots)

    def __call__(self, u: Fraction) -> Fraction:
        for (u0, g0), (u1, g1) in zip(self.knots, self.knots[1:]):
            if u0 <= u <= u1:
                return g0 + (g1 - g0) * (u - u0) / (u1 - u0)
        raise ValueError(f"{u} outside the map's domain")


# Relative positions tried inside an anchor window, most central first.
_WINDOW_SPOTS = [Fraction(1, 2), Fraction(2, 5), Fraction(3, 5), Fraction(1, 3), Fraction(2, 3),
                 Fraction(3, 7), Fraction(4, 7), Fraction(1, 4), Fraction(3, 4)]


def _axis_map(lo: Fraction, hi: Fraction, anchors, spot: Fraction, jitter: Fraction) -> _PiecewiseLinear:
    """Monotone map [0, 100] -> [lo, hi] sending each anchor's global value into its window.

    ``jitter`` differs per gadget so that separately placed gadgets do not
    land on common coordinates by accident.
    """
    knots = [(Fraction(0), lo)]
    if not anchors:
        knots.append((Fraction(GADGET_SIZE, 2), lo + (hi - lo) * (Fraction(1, 2) + jitter)))
    for g, (wlo, whi) in sorted(anchors):
        floor = max(wlo, knots[-1][0])
        if floor >= whi:
            raise WiringConflict("corner windows on one side of a gadget cannot be ordered")
        knots.append((floor + (whi - floor) * (spot + jitter), g))
    knots.append((Fraction(GADGET_SIZE), hi))
    return _PiecewiseLinear(knots)


def substitute_gadget(arr: Arrangement, gadget: Arrangement | None = None) -> Arrangement:
    """Replace every rectangle of ``arr`` by a Σ-gadget filling its box.

    Each corner intersection between X and Y is realised by Y's gadget
    reaching into the corner rectangle of X's gadget (and vice versa)
    without touching anything else of it.  The gadget is mapped into each
    box by a monotone piecewise linear map per axis, so its own pairwise
    relations are untouched.  The result is checked before it is returned.
    """
    layout = gadget if gadget is not None else sigma_layout()
    wires = corner_wiring(arr)
    windows = _gadget_windows()

    anchors: dict[int, tuple[list, list]] = {i: ([], []) for i in arr.indices()}
    for w in wires:
        for me, other, (sx, sy) in ((w.first, w.second, w.corner), (w.second, w.first, (-w.corner[0], -w.corner[1]))):
            ob = arr.box(other)
            win = windows[(sx, sy)]
            px = ob.l if sx > 0 else ob.r
            py = ob.b if sy > 0 else ob.t
            anchors[me][0].append((px, (win.l, win.r)))
            anchors[me][1].append((py, (win.b, win.t)))

    last_error = None
    for spot in _WINDOW_SPOTS:
        try:
            result = _place(arr, layout, anchors, spot)
            _check_substitution(arr, result, wires, len(layout))
            return result
        except WiringConflict as exc:
            last_error = exc
    raise last_error


def _place(arr: Arrangement, layout: Arrangement, anchors, spot: Fraction) -> Arrangement:
    boxes, labels = [], []
    for i in arr.indices():
        target = arr.box(i)
        jitter = Fraction(1, 40 + 7 * i)
        fx = _axis_map(target.l, target.r, anchors[i][0], spot, jitter)
        fy = _axis_map(target.b, target.t, anchors[i][1], spot, -jitter)
        for bx, name in zip(layout, layout.labels):
            boxes.append(Box((Interval(fx(bx.l), fx(bx.r)), Interval(fy(bx.b), fy(bx.t)))))
            labels.append(f"{arr.label(i)}.{name}")
    return Arrangement(tuple(boxes), tuple(labels))


def _check_substitution(arr: Arrangement, result: Arrangement, wires: list[Wire], size: int) -> None:
    clashes = validate_general_position(result)
    if clashes:
        raise WiringConflict(f"placed gadgets are not in general position: {clashes[0]}")
    allowed = set()
    for w in wires:
        for x, y, c in ((w.first, w.second, w.corner), (w.second, w.first, (-w.corner[0], -w.corner[1]))):
            allowed.add((x, y, GADGET_CORNERS[c]))
    outer = GADGET_LABELS[0]

    def member(k: int) -> tuple[int, str]:
        return (k - 1) // size + 1, result.labels[k - 1].rsplit(".", 1)[1]

    for p, q in result.pairs():
        (gp, mp), (gq, mq) = member(p), member(q)
        if gp == gq:
            continue
        wired = intersects(arr.box(gp), arr.box(gq))
        expected = wired and mp in (outer, _corner_for(allowed, gp, gq)) and mq in (outer, _corner_for(allowed, gq, gp))
        desc = classify_pair(result.box(p), result.box(q))
        if (desc.kind is not Kind.DISJOINT) != expected:
            raise WiringConflict(f"{result.labels[p - 1]} and {result.labels[q - 1]}: unexpected {desc.kind.value}")
        if expected and desc.kind is not Kind.CORNER:
            raise WiringConflict(f"{result.labels[p - 1]} and {result.labels[q - 1]} meet by {desc.kind.value}")


def _corner_for(allowed: set, me: int, other: int) -> str | None:
    for x, y, name in allowed:
        if x == me and y == other:
            return name
    return None


def fig8_base() -> Arrangement:
    """Eight positions: the bars A, B, C, D and the helpers 1-4 around B.

    1 and 2 sit on B's top corners, 3 and 4 on their opposite corners, and
    A meets 3 and 4 at its bottom corners.  With gadgets in positions 1 and
    2 this forces l(A) < r(3) < l(B) and r(B) < l(4) < r(A).
    """
    boxes = [
        rect(70, 130, 85, 105),   # A
        rect(90, 110, 10, 60),    # B
        rect(10, 85, 15, 30),     # C
        rect(20, 35, 35, 110),    # D
        rect(75, 95, 55, 75),     # 1
        rect(105, 125, 57, 77),   # 2
        rect(60, 80, 70, 90),     # 3
        rect(120, 140, 72, 92),   # 4
    ]
    return Arrangement(tuple(boxes), ("A", "B", "C", "D", "1", "2", "3", "4"))


def fig8_composed() -> Arrangement:
    """:func:`fig8_base` with a Σ-gadget in every position (104 rectangles)."""
    return substitute_gadget(fig8_base())


def fig9_boxes3d() -> Arrangement:
    """Three boxes in R^3, each pair meeting with one piercing an edge of the other.

    Projected to axis 1, B is inside A; to axis 2, C inside B; to axis 3, A inside C.
    """
    long_, short, mid = (1, 11), (3, 6), (5, 13)
    return Arrangement(
        (
            Box.from_bounds(long_, mid, short),
            Box.from_bounds(short, long_, mid),
            Box.from_bounds(mid, short, long_),
        ),
        ("A", "B", "C"),
    )


def bipartite_grid(m: int) -> Arrangement:
    """m vertical bars crossing m horizontal bars: intersection graph K_{m,m}."""
    if m < 1:
        raise ValueError("m must be at least 1")
    vertical = [rect(m + 3 * i + 1, m + 3 * i + 2, m - i, 4 * m + i) for i in range(m)]
    horizontal = [rect(m - j, 4 * m + j, m + 3 * j + 1, m + 3 * j + 2) for j in range(m)]
    labels = [f"V{i + 1}" for i in range(m)] + [f"H{j + 1}" for j in range(m)]
    return Arrangement(tuple(vertical + horizontal), tuple(labels))


GALLERY: dict[str, Callable[[], Arrangement]] = {
    "fig2": fig2_pinwheel,
    "fig3": fig3_cycle,
    "fig4": fig4_combinatorial,
    "sigma": sigma_gadget,
    "fig8": fig8_composed,
    "fig9": fig9_boxes3d,
}


def gallery(name: str) -> Arrangement:
    """Look up a named arrangement; ``bipartite:<m>`` builds :func:`bipartite_grid`."""
    if name.startswith("bipartite:"):
        try:
            m = int(name.split(":", 1)[1])
        except ValueError:
            raise KeyError(name) from None
        return bipartite_grid(m)
    try:
        return GALLERY[name]()
    except KeyError:
        raise KeyError(f"unknown gallery item {name!r}") from None


def gallery_names() -> list[str]:
    return list(GALLERY) + ["bipartite:<m>"]
