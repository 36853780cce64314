"""Radon partitions from the affine dependence of d+2 points (the classical route)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .certificate import Partition, RadonCertificate
from .errors import DegenerateInputError, InvalidInputError
from .geometry import PointSet, combine


@dataclass(frozen=True)
class AffineDependence:
    coefficients: tuple[Fraction, ...]

    def holds_for(self, ps: PointSet) -> bool:
        lam = self.coefficients
        if len(lam) != len(ps) or all(c == 0 for c in lam):
            return False
        if sum(lam, Fraction(0)) != 0:
            return False
        return all(v == 0 for v in combine(lam, ps.points))


def nullspace_vector(rows: list[list[Fraction]], ncols: int) -> list[Fraction] | None:
    """A nonzero kernel vector of the matrix, from its reduced row echelon form.

    The free variable is the first non-pivot column; pivots are the first
    nonzero entry found scanning down each column.
    """
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = next((c for c in range(ncols) if c not in pivots), None)
    if free is None:
        return None
    x = [Fraction(0)] * ncols
    x[free] = Fraction(1)
    for row, c in zip(m, pivots):
        x[c] = -row[free]
    return x


def affine_dependence(ps: PointSet) -> AffineDependence:
    """Nonzero lambda with sum(lambda) = 0 and sum(lambda_i A_i) = 0.

    Normalised so the first nonzero coefficient is +1.
    """
    if len(ps) != ps.dim + 2:
        raise InvalidInputError(f"need {ps.dim + 2} points in dimension {ps.dim}, got {len(ps)}")
    n = len(ps)
    rows = [[p[k] for p in ps.points] for k in range(ps.dim)]
    rows.append([Fraction(1)] * n)
    lam = nullspace_vector(rows, n)
    assert lam is not None  # more columns than rows
    lead = next(c for c in lam if c != 0)
    return AffineDependence(tuple(c / lead for c in lam))


def radon_from_dependence(ps: PointSet, dep: AffineDependence) -> RadonCertificate:
    lam = dep.coefficients
    zeros = tuple(i for i, c in zip(ps.labels, lam) if c == 0)
    if zeros:
        raise DegenerateInputError(
            f"affine dependence vanishes on labels {zeros}; points are not in general position",
            subset=tuple(i for i in ps.labels if i not in zeros),
        )
    pos = [i for i, c in zip(ps.labels, lam) if c > 0]
    neg = [i for i, c in zip(ps.labels, lam) if c < 0]
    total = sum((lam[i - 1] for i in pos), Fraction(0))
    weights = {i: abs(lam[i - 1]) / total for i in ps.labels}
    part = Partition.canonical(pos, neg)
    coeffs_I = tuple(weights[i] for i in part.side_I)
    coeffs_J = tuple(weights[i] for i in part.side_J)
    witness = combine([weights[i] for i in pos], ps.select(pos))
    return RadonCertificate(part, witness, coeffs_I, coeffs_J)


def radon_algebraic(ps: PointSet) -> RadonCertificate:
    return radon_from_dependence(ps, affine_dependence(ps))
