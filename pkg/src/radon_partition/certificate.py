from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import InvalidInputError
from .geometry import Point, PointSet, combine


@dataclass(frozen=True)
class Partition:
    """Unordered bipartition of labels, stored with label 1 in ``side_I``."""

    side_I: tuple[int, ...]
    side_J: tuple[int, ...]

    @classmethod
    def canonical(cls, a: Iterable[int], b: Iterable[int]) -> "Partition":
        a, b = tuple(sorted(set(a))), tuple(sorted(set(b)))
        if not a or not b:
            raise InvalidInputError("both sides of a partition must be nonempty")
        if set(a) & set(b):
            raise InvalidInputError(f"sides overlap: {sorted(set(a) & set(b))}")
        if 1 in b:
            a, b = b, a
        return cls(a, b)

    def covers(self, n: int) -> bool:
        return set(self.side_I) | set(self.side_J) == set(range(1, n + 1))

    def as_lists(self) -> list[list[int]]:
        return [list(self.side_I), list(self.side_J)]


@dataclass(frozen=True)
class RadonCertificate:
    partition: Partition
    witness: Point
    coeffs_I: tuple[Fraction, ...]
    coeffs_J: tuple[Fraction, ...]

    def violations(self, ps: PointSet) -> list[str]:
        """Everything wrong with this certificate for ``ps``; empty when valid."""
        out = []
        p = self.partition
        if not p.covers(len(ps)) or 1 not in p.side_I:
            out.append("partition is not a canonical bipartition of all labels")
        for name, side, coeffs in (("I", p.side_I, self.coeffs_I), ("J", p.side_J, self.coeffs_J)):
            if len(coeffs) != len(side):
                out.append(f"coeffs_{name} has {len(coeffs)} entries for {len(side)} points")
                continue
            if any(c < 0 for c in coeffs):
                out.append(f"coeffs_{name} has a negative entry")
            if sum(coeffs, Fraction(0)) != 1:
                out.append(f"coeffs_{name} sums to {sum(coeffs, Fraction(0))}, not 1")
            if combine(coeffs, ps.select(side)) != self.witness:
                out.append(f"coeffs_{name} do not reproduce the witness")
        return out

    def is_valid(self, ps: PointSet) -> bool:
        return not self.violations(ps)
