"""Brute-force ground truth: classify every bipartition by exact LP."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .certificate import Partition
from .errors import InvalidInputError
from .geometry import Point, PointSet, as_point
from .lp import FeasibilitySystem, lp_feasible, lp_optimize

EMPTY, SINGLE, MULTI = "empty", "single", "multi"


@dataclass(frozen=True)
class IntersectionInfo:
    kind: str
    point: Point | None = None


@dataclass
class OracleReport:
    instance: PointSet
    radon_partitions: list[tuple[Partition, Point]] = field(default_factory=list)
    intersecting_partitions: int = 0
    candidates: int = 0


def _intersection_system(P: list[Point], Q: list[Point]) -> FeasibilitySystem:
    # variables: lambda (|P|), mu (|Q|)
    d = len(P[0])
    zero, one = Fraction(0), Fraction(1)
    rows = [[p[k] for p in P] + [-q[k] for q in Q] for k in range(d)]
    rows.append([one] * len(P) + [zero] * len(Q))
    rows.append([zero] * len(P) + [one] * len(Q))
    return FeasibilitySystem(rows, [zero] * d + [one, one], len(P) + len(Q))


def hulls_intersection_info(P: Sequence[Sequence], Q: Sequence[Sequence]) -> IntersectionInfo:
    """Is hull(P) & hull(Q) empty, a single point, or more?

    Decided by bounding every coordinate of the common point from both
    sides; the intersection is a single point iff all bounds meet.
    """
    P = [as_point(p) for p in P]
    Q = [as_point(q) for q in Q]
    if not P or not Q:
        raise InvalidInputError("hulls_intersection_info needs nonempty point lists")
    d = len(P[0])
    if any(len(x) != d for x in P + Q):
        raise InvalidInputError("hulls_intersection_info: dimension mismatch")
    sys = _intersection_system(P, Q)
    if lp_feasible(sys) is None:
        return IntersectionInfo(EMPTY)
    point = []
    for k in range(d):
        objective = [p[k] for p in P] + [Fraction(0)] * len(Q)
        lo = lp_optimize(sys, objective, "min")
        hi = lp_optimize(sys, objective, "max")
        if lo.value != hi.value:
            return IntersectionInfo(MULTI)
        point.append(lo.value)
    return IntersectionInfo(SINGLE, tuple(point))


def canonical_bipartitions(n: int):
    """All bipartitions of 1..n with label 1 on side I and both sides nonempty."""
    rest = list(range(2, n + 1))
    for size in range(0, n - 1):
        for extra in combinations(rest, size):
            side_I = (1,) + extra
            side_J = tuple(i for i in rest if i not in extra)
            yield Partition(side_I, side_J)


def brute_force_radon(ps: PointSet) -> OracleReport:
    if len(ps) < 2:
        raise InvalidInputError("need at least two points to bipartition")
    report = OracleReport(ps)
    for part in canonical_bipartitions(len(ps)):
        report.candidates += 1
        info = hulls_intersection_info(ps.select(part.side_I), ps.select(part.side_J))
        if info.kind != EMPTY:
            report.intersecting_partitions += 1
        if info.kind == SINGLE:
            report.radon_partitions.append((part, info.point))
    report.radon_partitions.sort(key=lambda pw: (pw[0].side_I, pw[0].side_J))
    return report
