"""Instance generation, cross-verification and fuzzing."""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import algebraic, recursive
from .errors import DegenerateInputError, GeneratorFailure, InvalidInputError, InvariantError
from .formats import (
    certificate_to_dict,
    dumps_instance,
    format_rational,
    instance_digest,
)
from .geometry import PointSet, general_position_violation
from .oracle import OracleReport, brute_force_radon
from .prng import SplitMix64, derive_seed

MAX_ATTEMPTS = 1000
MAX_FUZZ_DIM = 8


def gen(dim: int, seed: int, bound: int) -> tuple[PointSet, dict]:
    """d+2 random rational points in general position.

    Each coordinate draws a numerator in [-bound, bound] and then a
    denominator in [1, min(bound, 100)], point by point; whole sets are
    redrawn until they are in general position.
    """
    if dim < 1 or bound < 1:
        raise ValueError(f"need dim >= 1 and bound >= 1, got dim={dim}, bound={bound}")
    rng = SplitMix64(seed)
    den_max = min(bound, 100)
    for attempt in range(1, MAX_ATTEMPTS + 1):
        pts = [
            [Fraction(rng.randint(-bound, bound), rng.randint(1, den_max)) for _ in range(dim)]
            for _ in range(dim + 2)
        ]
        try:
            ps = PointSet(pts, dim=dim)
        except InvalidInputError:
            continue
        if general_position_violation(ps) is None:
            meta = {"generator": "splitmix64", "seed": seed, "bound": bound, "attempts": attempt}
            return ps, meta
    raise GeneratorFailure(f"no general-position sample after {MAX_ATTEMPTS} attempts")


@dataclass
class VerifyReport:
    digest: str
    verdict: str  # "pass" | "fail"
    reason: str = ""
    algebraic: object = None
    recursive: object = None
    oracle: OracleReport | None = None
    certificate_violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self) -> dict:
        out = {"instance_digest": self.digest, "verdict": self.verdict}
        if self.reason:
            out["reason"] = self.reason
        for name in ("algebraic", "recursive"):
            cert = getattr(self, name)
            out[name] = certificate_to_dict(cert) if cert is not None else None
        if self.oracle is not None:
            out["oracle"] = {
                "candidates": self.oracle.candidates,
                "intersecting_partitions": self.oracle.intersecting_partitions,
                "radon_partitions": [
                    {"partition": p.as_lists(), "witness": [format_rational(c) for c in w]}
                    for p, w in self.oracle.radon_partitions
                ],
            }
        if self.certificate_violations:
            out["certificate_violations"] = self.certificate_violations
        return out


def verify_instance(ps: PointSet) -> VerifyReport:
    """Run both algorithms and the oracle; pass iff all three agree exactly."""
    report = VerifyReport(instance_digest(ps), "fail")
    if len(ps) != ps.dim + 2:
        raise InvalidInputError(f"need {ps.dim + 2} points in dimension {ps.dim}, got {len(ps)}")
    report.oracle = brute_force_radon(ps)
    bad = general_position_violation(ps)
    if bad is not None:
        report.reason = f"degenerate: points {list(bad)} are affinely dependent"
        return report
    try:
        report.algebraic = algebraic.radon_algebraic(ps)
        report.recursive = recursive.radon_recursive(ps)
    except (DegenerateInputError, InvariantError) as exc:
        report.reason = f"{type(exc).__name__}: {exc}"
        return report
    for name in ("algebraic", "recursive"):
        for v in getattr(report, name).violations(ps):
            report.certificate_violations.append(f"{name}: {v}")
    if report.certificate_violations:
        report.reason = report.certificate_violations[0]
        return report
    found = report.oracle.radon_partitions
    if len(found) != 1:
        report.reason = f"oracle found {len(found)} radon partitions"
        return report
    part, witness = found[0]
    for name in ("algebraic", "recursive"):
        cert = getattr(report, name)
        if cert.partition != part:
            report.reason = f"{name} partition {cert.partition.as_lists()} != oracle {part.as_lists()}"
            return report
        if cert.witness != witness:
            report.reason = f"{name} witness differs from oracle witness"
            return report
    report.verdict = "pass"
    return report


def parse_dims(text: str) -> range:
    """``"A..B"`` (inclusive) or a single ``"A"``."""
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise InvalidInputError(f"bad dimension range {text!r}; expected A..B") from None
    if not 1 <= a <= b <= MAX_FUZZ_DIM:
        raise InvalidInputError(f"dimension range must lie within 1..{MAX_FUZZ_DIM}, got {text!r}")
    return range(a, b + 1)


@dataclass
class FuzzOutcome:
    dim: int
    index: int
    seed: int
    passed: bool
    reason: str
    seconds: float
    certificate_violations: int


def instance_seed(seed: int, dim: int, index: int) -> int:
    return derive_seed(seed, dim, index)


def _fuzz_one(args: tuple[int, int, int, int]) -> FuzzOutcome:
    dim, index, seed, bound = args
    start = time.perf_counter()
    s = instance_seed(seed, dim, index)
    ps, _ = gen(dim, s, bound)
    rep = verify_instance(ps)
    return FuzzOutcome(
        dim, index, s, rep.passed, rep.reason, time.perf_counter() - start,
        len(rep.certificate_violations),
    )


@dataclass
class FuzzSummary:
    outcomes: list[FuzzOutcome]
    replay_file: Path | None = None

    @property
    def all_passed(self) -> bool:
        return all(o.passed for o in self.outcomes)

    def per_dim(self) -> dict[int, tuple[int, int, float]]:
        rows: dict[int, list] = {}
        for o in self.outcomes:
            row = rows.setdefault(o.dim, [0, 0, 0.0])
            row[0] += o.passed
            row[1] += 1
            row[2] += o.seconds
        return {d: tuple(v) for d, v in rows.items()}

    def table(self) -> str:
        lines = [f"{'dim':>3}  {'pass':>6}  {'total':>6}  {'seconds':>9}  {'cumulative':>10}"]
        cum = 0.0
        for d, (ok, total, secs) in sorted(self.per_dim().items()):
            cum += secs
            lines.append(f"{d:>3}  {ok:>6}  {total:>6}  {secs:>9.2f}  {cum:>10.2f}")
        ok = sum(o.passed for o in self.outcomes)
        lines.append(f"all  {ok:>6}  {len(self.outcomes):>6}  {'':>9}  {cum:>10.2f}")
        if self.replay_file is not None:
            lines.append(f"first failure written to {self.replay_file}")
        return "\n".join(lines)


def fuzz(
    dims: range,
    instances: int,
    seed: int,
    bound: int = 10,
    jobs: int = 1,
    replay_dir: str | os.PathLike | None = None,
) -> FuzzSummary:
    """Generate and verify ``instances`` instances per dimension.

    Results come back in (dim, index) order whatever ``jobs`` is.  The first
    failing instance is written to ``replay_dir`` (default: $RADON_REPLAY_DIR,
    else the working directory).
    """
    tasks = [(d, i, seed, bound) for d in dims for i in range(instances)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_fuzz_one, tasks, chunksize=8))
    else:
        outcomes = [_fuzz_one(t) for t in tasks]
    summary = FuzzSummary(outcomes)
    failed = next((o for o in outcomes if not o.passed), None)
    if failed is not None:
        out_dir = Path(replay_dir or os.environ.get("RADON_REPLAY_DIR") or ".")
        out_dir.mkdir(parents=True, exist_ok=True)
        ps, meta = gen(failed.dim, failed.seed, bound)
        meta.update({"fuzz_seed": seed, "fuzz_index": failed.index, "reason": failed.reason})
        path = out_dir / f"radon-fail-d{failed.dim}-i{failed.index}-s{seed}.json"
        path.write_text(dumps_instance(ps, meta))
        summary.replay_file = path
    return summary
