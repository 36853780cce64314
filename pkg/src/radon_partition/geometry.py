"""Exact geometric kernel: points, predicates, hyperplanes and charts.

Coordinates are ``fractions.Fraction`` throughout; a point is a plain tuple of
them.  Nothing here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DegenerateInputError, InvalidInputError
from .lp import FeasibilitySystem, lp_feasible, lp_optimize

Point = tuple[Fraction, ...]

__all__ = [
    "Point",
    "PointSet",
    "Hyperplane",
    "Chart",
    "as_point",
    "dot",
    "orientation",
    "general_position_violation",
    "is_general_position",
    "separating_hyperplane",
    "segment_hyperplane_intersection",
    "hull_membership",
    "ray_hit",
    "ray_simplex_intersection",
    "build_chart",
    "chart_down",
    "chart_up",
    "combine",
]


def as_point(coords: Iterable) -> Point:
    return tuple(Fraction(c) for c in coords)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def combine(coeffs: Sequence[Fraction], points: Sequence[Point]) -> Point:
    """Weighted sum of points."""
    dim = len(points[0])
    return tuple(
        sum((c * p[k] for c, p in zip(coeffs, points)), Fraction(0)) for k in range(dim)
    )


@dataclass(frozen=True)
class PointSet:
    """Labelled configuration of distinct points in R^dim (labels are 1-based)."""

    dim: int
    points: tuple[Point, ...]

    def __init__(self, points: Iterable[Iterable], dim: int | None = None):
        pts = tuple(as_point(p) for p in points)
        if dim is None:
            if not pts:
                raise InvalidInputError("cannot infer dimension of an empty point set")
            dim = len(pts[0])
        if dim < 1:
            raise InvalidInputError(f"dimension must be >= 1, got {dim}")
        for i, p in enumerate(pts, start=1):
            if len(p) != dim:
                raise InvalidInputError(f"point {i} has dimension {len(p)}, expected {dim}")
        seen: dict[Point, int] = {}
        for i, p in enumerate(pts, start=1):
            if p in seen:
                raise InvalidInputError(f"points {seen[p]} and {i} coincide")
            seen[p] = i
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)

    @property
    def labels(self) -> range:
        return range(1, len(self.points) + 1)

    def __getitem__(self, label: int) -> Point:
        if not 1 <= label <= len(self.points):
            raise InvalidInputError(f"label {label} out of range 1..{len(self.points)}")
        return self.points[label - 1]

    def select(self, labels: Iterable[int]) -> list[Point]:
        return [self[i] for i in labels]


@dataclass(frozen=True)
class Hyperplane:
    """The set ``{x : normal . x == offset}``."""

    normal: Point
    offset: Fraction

    def __post_init__(self):
        object.__setattr__(self, "normal", as_point(self.normal))
        object.__setattr__(self, "offset", Fraction(self.offset))
        if not self.normal or all(v == 0 for v in self.normal):
            raise InvalidInputError("hyperplane normal must have a nonzero entry")

    @property
    def dim(self) -> int:
        return len(self.normal)

    def side(self, x: Sequence[Fraction]) -> int:
        v = dot(self.normal, x) - self.offset
        return (v > 0) - (v < 0)


@dataclass(frozen=True)
class Chart:
    """Affine coordinates on a hyperplane.

    ``pivot`` is the eliminated coordinate; the remaining coordinates of a
    point on the hyperplane are its chart coordinates.
    """

    hyperplane: Hyperplane
    origin: Point
    basis: tuple[Point, ...]
    pivot: int


def _det(rows: list[list[Fraction]]) -> Fraction:
    m = [list(r) for r in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        r = next((i for i in range(c, n) if m[i][c] != 0), None)
        if r is None:
            return Fraction(0)
        if r != c:
            m[c], m[r] = m[r], m[c]
            det = -det
        piv = m[c][c]
        det *= piv
        for i in range(c + 1, n):
            f = m[i][c]
            if f:
                f /= piv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det


def orientation(simplex_points: Sequence[Sequence]) -> int:
    """Sign of det[p_1 - p_0, ..., p_d - p_0] for d+1 points in R^d."""
    pts = [as_point(p) for p in simplex_points]
    if not pts:
        raise InvalidInputError("orientation needs d+1 points, got none")
    d = len(pts[0])
    if len(pts) != d + 1 or any(len(p) != d for p in pts):
        raise InvalidInputError(
            f"orientation needs {d + 1} points of dimension {d}, "
            f"got {len(pts)} points of dimensions {sorted({len(p) for p in pts})}"
        )
    base = pts[0]
    det = _det([[a - b for a, b in zip(p, base)] for p in pts[1:]])
    return (det > 0) - (det < 0)


def general_position_violation(ps: PointSet) -> tuple[int, ...] | None:
    """First (lexicographic) affinely dependent (d+1)-subset of labels, if any."""
    k = ps.dim + 1
    if len(ps) < k:
        return None
    for subset in combinations(ps.labels, k):
        if orientation(ps.select(subset)) == 0:
            return subset
    return None


def is_general_position(ps: PointSet) -> bool:
    return general_position_violation(ps) is None


def separating_hyperplane(ps: PointSet, apex: int) -> Hyperplane:
    """Hyperplane with the apex strictly above and all other points strictly below.

    The normal is a vertex of ``{n : n.(A_apex - A_i) >= 1 for i != apex}``;
    the offset sits halfway between the apex and the highest other point.
    """
    top = ps[apex]
    others = [ps[i] for i in ps.labels if i != apex]
    d = ps.dim
    # variables: n+ (d), n- (d), slack (len(others))
    rows = []
    for k, q in enumerate(others):
        diff = [a - b for a, b in zip(top, q)]
        slack = [Fraction(0)] * len(others)
        slack[k] = Fraction(-1)
        rows.append(diff + [-v for v in diff] + slack)
    sol = lp_feasible(FeasibilitySystem(rows, [1] * len(others), 2 * d + len(others)))
    if sol is None:
        raise DegenerateInputError(
            f"point {apex} is not a vertex of the convex hull; no strict separator exists",
            subset=(apex,),
        )
    normal = tuple(sol[k] - sol[d + k] for k in range(d))
    high = max(dot(normal, q) for q in others)
    return Hyperplane(normal, (dot(normal, top) + high) / 2)


def segment_hyperplane_intersection(a: Sequence, b: Sequence, h: Hyperplane) -> Point | None:
    a, b = as_point(a), as_point(b)
    if len(a) != h.dim or len(b) != h.dim:
        raise InvalidInputError("segment and hyperplane dimensions differ")
    fa = dot(h.normal, a) - h.offset
    fb = dot(h.normal, b) - h.offset
    if (fa > 0) == (fb > 0) or fa == 0 or fb == 0:
        return None
    t = fa / (fa - fb)
    return tuple(x + t * (y - x) for x, y in zip(a, b))


def hull_membership(x: Sequence, generators: Sequence[Sequence]) -> tuple[Fraction, ...] | None:
    """Barycentric coefficients expressing x over the generators, or None."""
    x = as_point(x)
    gens = [as_point(g) for g in generators]
    if not gens:
        return None
    if any(len(g) != len(x) for g in gens):
        raise InvalidInputError("hull_membership: dimension mismatch")
    rows = [[g[k] for g in gens] for k in range(len(x))]
    rows.append([Fraction(1)] * len(gens))
    return lp_feasible(FeasibilitySystem(rows, list(x) + [1], len(gens)))


def ray_hit(origin: Sequence, through: Sequence, generators: Sequence[Sequence]) -> tuple[Fraction, Point] | None:
    """Smallest ``t >= 0`` with ``origin + t (through - origin)`` in the hull.

    Returns ``(t, point)`` or None when the ray misses the hull.
    """
    o, p = as_point(origin), as_point(through)
    gens = [as_point(g) for g in generators]
    if o == p:
        raise InvalidInputError("ray origin and through-point coincide")
    if any(len(g) != len(o) for g in gens) or len(p) != len(o):
        raise InvalidInputError("ray_simplex_intersection: dimension mismatch")
    direction = [b - a for a, b in zip(o, p)]
    # variables: mu_1..mu_m, t;  sum mu_j g_j - t dir = origin, sum mu_j = 1
    m = len(gens)
    rows = [[g[k] for g in gens] + [-direction[k]] for k in range(len(o))]
    rows.append([Fraction(1)] * m + [Fraction(0)])
    sys = FeasibilitySystem(rows, list(o) + [1], m + 1)
    res = lp_optimize(sys, [0] * m + [1], "min")
    if not res.optimal:
        return None
    t = res.value
    return t, tuple(a + t * v for a, v in zip(o, direction))


def ray_simplex_intersection(origin: Sequence, through: Sequence, generators: Sequence[Sequence]) -> Point | None:
    hit = ray_hit(origin, through, generators)
    return None if hit is None else hit[1]


def build_chart(h: Hyperplane) -> Chart:
    """Chart eliminating the coordinate with the largest |normal_k| (first on ties)."""
    d = h.dim
    if d < 2:
        raise InvalidInputError("charts need ambient dimension >= 2")
    k = max(range(d), key=lambda j: (abs(h.normal[j]), -j))
    nk = h.normal[k]
    origin = [Fraction(0)] * d
    origin[k] = h.offset / nk
    basis = []
    for j in range(d):
        if j == k:
            continue
        v = [Fraction(0)] * d
        v[j] = Fraction(1)
        v[k] = -h.normal[j] / nk
        basis.append(tuple(v))
    return Chart(h, tuple(origin), tuple(basis), k)


def chart_down(c: Chart, x: Sequence) -> Point:
    x = as_point(x)
    if len(x) != c.hyperplane.dim:
        raise InvalidInputError("chart_down: dimension mismatch")
    if c.hyperplane.side(x) != 0:
        raise InvalidInputError(f"point {tuple(map(str, x))} is not on the chart's hyperplane")
    return tuple(v for j, v in enumerate(x) if j != c.pivot)


def chart_up(c: Chart, y: Sequence) -> Point:
    y = as_point(y)
    if len(y) != len(c.basis):
        raise InvalidInputError("chart_up: dimension mismatch")
    out = list(c.origin)
    for coef, vec in zip(y, c.basis):
        if coef:
            out = [a + coef * b for a, b in zip(out, vec)]
    return tuple(out)
