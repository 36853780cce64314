"""Radon partitions by induction on dimension.

For d = 1 the middle point is split off from the two outer points.  For
d >= 2 the lexicographically largest point (the apex) is separated from the
rest by a hyperplane; every other point is replaced by the crossing of its
segment to the apex with that hyperplane, giving d+1 points in d-1
dimensions.  The sub-problem's partition I' | J' and witness Y' are pulled
back: the ray from the apex through Y' meets both hull(I) and hull(J), and
the nearer of the two hits is the new witness, with the apex joining the
far side.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .certificate import Partition, RadonCertificate
from .errors import DegenerateInputError, InvalidInputError, InvariantError
from .geometry import (
    Chart,
    Hyperplane,
    Point,
    PointSet,
    build_chart,
    chart_down,
    chart_up,
    general_position_violation,
    hull_membership,
    ray_hit,
    segment_hyperplane_intersection,
    separating_hyperplane,
)


@dataclass(frozen=True)
class ProjectionRecord:
    apex: int
    hyperplane: Hyperplane
    chart: Chart
    projected: PointSet
    label_map: dict[int, int]  # projected label -> original label


@dataclass(frozen=True)
class LiftTrace:
    instance: PointSet  # the point set at this level of the recursion
    apex: int
    sub_witness: Point  # Y' on the hyperplane, in ambient coordinates
    y1: Point
    y2: Point
    t1: Fraction
    t2: Fraction
    side_1: tuple[int, ...]  # labels (at this level) whose hull contains y1
    side_2: tuple[int, ...]
    near_side: int  # 1 or 2


def _is_nearer(t1: Fraction, t2: Fraction) -> bool:
    return t1 < t2


def choose_apex(ps: PointSet) -> int:
    """Label of the lexicographically largest point."""
    return max(ps.labels, key=lambda i: ps[i])


def project_through_apex(ps: PointSet, apex: int) -> ProjectionRecord:
    if ps.dim < 2:
        raise InvalidInputError("projection needs dimension >= 2")
    h = separating_hyperplane(ps, apex)
    chart = build_chart(h)
    top = ps[apex]
    label_map = {}
    projected = []
    for i in ps.labels:
        if i == apex:
            continue
        x = segment_hyperplane_intersection(top, ps[i], h)
        if x is None:
            raise InvariantError(f"segment {apex}-{i} does not cross the separating hyperplane")
        projected.append(chart_down(chart, x))
        label_map[len(projected)] = i
    sub = PointSet(projected, dim=ps.dim - 1)
    bad = general_position_violation(sub)
    if bad is not None:
        raise InvariantError(
            f"projected points {tuple(label_map[j] for j in bad)} lost general position"
        )
    return ProjectionRecord(apex, h, chart, sub, label_map)


def _base_case(ps: PointSet) -> tuple[Partition, Point]:
    order = sorted(ps.labels, key=lambda i: ps[i])
    return Partition.canonical([order[0], order[2]], [order[1]]), ps[order[1]]


def _certify(ps: PointSet, part: Partition, witness: Point) -> RadonCertificate:
    coeffs = []
    for side in (part.side_I, part.side_J):
        c = hull_membership(witness, ps.select(side))
        if c is None:
            raise InvariantError(f"witness is not in the hull of side {side}")
        coeffs.append(c)
    return RadonCertificate(part, witness, coeffs[0], coeffs[1])


def _solve(ps: PointSet, trace: list | None) -> tuple[Partition, Point]:
    if ps.dim == 1:
        return _base_case(ps)
    apex = choose_apex(ps)
    rec = project_through_apex(ps, apex)
    if trace is not None:
        trace.append(rec)
    sub_part, sub_witness = _solve(rec.projected, trace)
    side_1 = tuple(rec.label_map[j] for j in sub_part.side_I)
    side_2 = tuple(rec.label_map[j] for j in sub_part.side_J)
    y_prime = chart_up(rec.chart, sub_witness)
    top = ps[apex]
    hit1 = ray_hit(top, y_prime, ps.select(side_1))
    hit2 = ray_hit(top, y_prime, ps.select(side_2))
    if hit1 is None or hit2 is None:
        raise InvariantError(f"ray from apex {apex} through Y' misses a sub-simplex")
    (t1, y1), (t2, y2) = hit1, hit2
    if t1 == t2:
        raise InvariantError(f"ray from apex {apex} hits both sub-simplices at t={t1}")
    near = 1 if _is_nearer(t1, t2) else 2
    if trace is not None:
        trace.append(LiftTrace(ps, apex, y_prime, y1, y2, t1, t2, side_1, side_2, near))
    if near == 1:
        return Partition.canonical(side_1, side_2 + (apex,)), y1
    return Partition.canonical(side_2, side_1 + (apex,)), y2


def radon_recursive(ps: PointSet, trace: list | None = None) -> RadonCertificate:
    """Radon certificate by dimension reduction.

    If ``trace`` is a list, every ProjectionRecord and LiftTrace produced on
    the way down and back up is appended to it (outermost level first for
    projections, innermost first for lifts).
    """
    if len(ps) != ps.dim + 2:
        raise InvalidInputError(f"need {ps.dim + 2} points in dimension {ps.dim}, got {len(ps)}")
    bad = general_position_violation(ps)
    if bad is not None:
        raise DegenerateInputError(f"points {bad} are affinely dependent", subset=bad)
    part, witness = _solve(ps, trace)
    return _certify(ps, part, witness)
