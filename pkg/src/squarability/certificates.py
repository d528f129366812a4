"""Size-order certificates, a tiny exact Ramsey table, and the neighbour-size lemma checker.

If box i lies strictly inside box j on some axis, then in any arrangement of
hypercubes that keeps the per-axis nesting, the side of i is strictly
smaller than the side of j.  Collecting these forced inequalities gives a
directed graph; a directed cycle is a proof that no such hypercube
arrangement exists.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import GeneralPositionViolation, InvalidInstance, TooFewNeighbors, Unsupported
from .geometry import Arrangement, Box, Relation, axis_name, intersects, interval_relation, validate_general_position


@dataclass(frozen=True)
class Reason:
    """Box ``inner`` is inside box ``outer`` on ``axis`` (1-based)."""

    axis: int
    relation: Relation = Relation.INSIDE

    def __str__(self):
        return f"{self.relation.value} on {axis_name(self.axis)}"


@dataclass(frozen=True)
class SizeOrderGraph:
    n: int
    # (i, j) -> reasons; i's hypercube side must be strictly smaller than j's
    edges: dict[tuple[int, int], tuple[Reason, ...]] = field(default_factory=dict)

    def successors(self, i: int) -> list[int]:
        return sorted(j for (a, j) in self.edges if a == i)

    def __contains__(self, edge) -> bool:
        return edge in self.edges


def build_size_order(arr: Arrangement) -> SizeOrderGraph:
    clashes = validate_general_position(arr)
    if clashes:
        raise GeneralPositionViolation("; ".join(map(str, clashes[:5])))
    edges: dict[tuple[int, int], list[Reason]] = {}
    for i, j in arr.pairs():
        for c, (p, q) in enumerate(zip(arr.box(i).axes, arr.box(j).axes), start=1):
            rel = interval_relation(p, q)
            if rel is Relation.INSIDE:
                edges.setdefault((i, j), []).append(Reason(c))
            elif rel is Relation.CONTAINS:
                edges.setdefault((j, i), []).append(Reason(c))
    return SizeOrderGraph(len(arr), {e: tuple(r) for e, r in sorted(edges.items())})


@dataclass(frozen=True)
class CycleCertificate:
    """Closed walk ``cycle[0] -> cycle[1] -> ... -> cycle[-1] == cycle[0]``."""

    cycle: tuple[int, ...]
    reasons: tuple[tuple[Reason, ...], ...]

    def __len__(self) -> int:
        return len(self.cycle) - 1

    def describe(self, arr: Arrangement | None = None) -> str:
        name = (lambda i: arr.label(i)) if arr is not None else str
        steps = []
        for (i, j), why in zip(zip(self.cycle, self.cycle[1:]), self.reasons):
            axes = ", ".join(axis_name(r.axis) for r in why)
            steps.append(f"side({name(i)}) < side({name(j)})  [{name(i)} inside {name(j)} on {axes}]")
        return "\n".join(steps)


def find_cycle(g: SizeOrderGraph) -> CycleCertificate | None:
    """First directed cycle met by a DFS that tries lower indices first."""
    WHITE, GREY, BLACK = 0, 1, 2
    colour = [WHITE] * (g.n + 1)
    succ = {i: g.successors(i) for i in range(1, g.n + 1)}
    for root in range(1, g.n + 1):
        if colour[root] != WHITE:
            continue
        path = [root]
        stack = [iter(succ[root])]
        colour[root] = GREY
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                colour[path.pop()] = BLACK
                stack.pop()
            elif colour[nxt] == GREY:
                cycle = tuple(path[path.index(nxt):]) + (nxt,)
                reasons = tuple(g.edges[e] for e in zip(cycle, cycle[1:]))
                return CycleCertificate(cycle, reasons)
            elif colour[nxt] == WHITE:
                colour[nxt] = GREY
                path.append(nxt)
                stack.append(iter(succ[nxt]))
    return None


def certify(arr: Arrangement) -> CycleCertificate | None:
    return find_cycle(build_size_order(arr))


def ramsey_lookup(k: int, d: int) -> int:
    """Smallest N such that every d-colouring of K_N has a monochromatic K_k.

    Only values known exactly and needed here are served: one colour gives
    N = k, and two colours with triangles give 6.
    """
    if k >= 1 and d == 1:
        return k
    if (k, d) == (3, 2):
        return 6
    raise Unsupported(f"R({k},{d}) is not in the exact table")


@dataclass(frozen=True)
class NeighborhoodInstance:
    center: Box
    neighbors: tuple[Box, ...]
    k: int

    @property
    def d(self) -> int:
        return self.center.dim


@dataclass(frozen=True)
class LemmaViolation:
    """No neighbour is more than k times smaller than the centre."""

    center_side: Fraction
    smallest_side: Fraction
    k: int

    def __str__(self):
        return f"smallest neighbour side {self.smallest_side} × {self.k} >= centre side {self.center_side}"


def _check_instance(inst: NeighborhoodInstance) -> None:
    boxes = (inst.center,) + tuple(inst.neighbors)
    if any(bx.dim != inst.d for bx in boxes):
        raise InvalidInstance("mixed dimensions")
    if not all(bx.is_cube for bx in boxes):
        raise InvalidInstance("every box must be a hypercube")
    for idx, nb in enumerate(inst.neighbors):
        if not intersects(nb, inst.center):
            raise InvalidInstance(f"neighbour {idx} misses the centre")
    for i in range(len(inst.neighbors)):
        for j in range(i + 1, len(inst.neighbors)):
            if intersects(inst.neighbors[i], inst.neighbors[j]):
                raise InvalidInstance(f"neighbours {i} and {j} intersect")


def check_neighbor_size_lemma(inst: NeighborhoodInstance) -> int | LemmaViolation:
    """0-based index of a neighbour whose side times k is below the centre's side.

    Requires at least R(k + 2, d) pairwise disjoint hypercube neighbours; the
    smallest qualifying neighbour is returned.
    """
    if inst.k < 1:
        raise InvalidInstance("k must be positive")
    needed = ramsey_lookup(inst.k + 2, inst.d)
    if len(inst.neighbors) < needed:
        raise TooFewNeighbors(f"{len(inst.neighbors)} neighbours, need R({inst.k + 2},{inst.d}) = {needed}")
    _check_instance(inst)
    side = inst.center.sides[0]
    best = min(range(len(inst.neighbors)), key=lambda i: (inst.neighbors[i].sides[0], i))
    smallest = inst.neighbors[best].sides[0]
    if smallest * inst.k < side:
        return best
    return LemmaViolation(side, smallest, inst.k)
