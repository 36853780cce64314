"""Exit criteria.  Every check is exact; each test logs one PASS/FAIL line."""

import json
from fractions import Fraction as F

import pytest
import sympy

from radon_partition.algebraic import radon_algebraic
from radon_partition.cli import main
from radon_partition.geometry import PointSet, chart_up, hull_membership
from radon_partition.harness import fuzz, gen, instance_seed
from radon_partition.oracle import EMPTY, SINGLE, canonical_bipartitions, hulls_intersection_info
from radon_partition.prng import SplitMix64, derive_seed
from radon_partition.recursive import LiftTrace, ProjectionRecord, radon_recursive

SEED = 20261016
BOUND = 10

# every certificate produced in this module, checked again by criterion 3
_EMITTED: list = []


def _record(log, n, title, violations, detail=""):
    status = "PASS" if not violations else "FAIL"
    log.append(f"[{status}] criterion {n}: {title} -- {detail or f'{len(violations)} violations'}")
    assert not violations, violations[:5]


def _emit(ps, *certs):
    for c in certs:
        _EMITTED.append((ps, c))
    return certs


def _cert_problems(ps, cert):
    """Independent certificate check: sign, sum, and exact reproduction of the witness."""
    out = []
    for side, coeffs in ((cert.partition.side_I, cert.coeffs_I), (cert.partition.side_J, cert.coeffs_J)):
        if len(side) != len(coeffs) or min(coeffs) < 0 or sum(coeffs) != 1:
            out.append("bad coefficients")
            continue
        for k in range(ps.dim):
            if sum(c * ps[i][k] for c, i in zip(coeffs, side)) != cert.witness[k]:
                out.append("combination misses witness")
                break
    return out


def _instances(dims, per_dim, tag):
    for d in dims:
        for i in range(per_dim):
            yield gen(d, derive_seed(SEED, tag, d, i), BOUND)[0]


@pytest.fixture(scope="module")
def sweep():
    return fuzz(range(1, 7), 500, seed=0, bound=BOUND)


@pytest.mark.slow
def test_criterion_1_quantitative_radon_sweep(sweep, acceptance_log):
    failures = [f"d={o.dim} i={o.index}: {o.reason}" for o in sweep.outcomes if not o.passed]
    ok = len(sweep.outcomes) - len(failures)
    seconds = sum(o.seconds for o in sweep.outcomes)
    _record(acceptance_log, 1, "fuzz --dims 1..6 --instances 500", failures + (["too few"] if ok != 3000 else []),
            f"{ok}/{len(sweep.outcomes)} pass in {seconds:.0f}s")


def test_criterion_2_base_case(acceptance_log):
    bad = []
    for ps in _instances([1], 100, 2):
        cert = radon_recursive(ps)
        alg = radon_algebraic(ps)
        _emit(ps, cert, alg)
        order = sorted(ps.labels, key=lambda i: ps[i][0])
        middle = order[1]
        expect = sorted([order[0], order[2]])
        for c in (cert, alg):
            sides = [list(c.partition.side_I), list(c.partition.side_J)]
            if sorted(sides) != sorted([expect, [middle]]) or c.witness != ps[middle]:
                bad.append(ps.points)
    _record(acceptance_log, 2, "1-D base case isolates the middle point", bad)


def test_criterion_4_and_5_projection_and_lift(acceptance_log):
    proj_bad, lift_bad = [], []
    n_proj = n_lift = 0
    for ps in _instances(range(2, 7), 100, 4):
        trace = []
        try:
            cert = radon_recursive(ps, trace)
        except Exception as exc:  # an internal invariant tripped
            proj_bad.append(f"{ps.points}: {exc}")
            continue
        _emit(ps, cert)
        levels = {ps.dim: ps}
        for rec in trace:
            if not isinstance(rec, ProjectionRecord):
                continue
            n_proj += 1
            level = levels[rec.projected.dim + 1]
            levels[rec.projected.dim] = rec.projected
            sub = rec.projected
            for drop in range(len(sub)):
                if _dependent([p for j, p in enumerate(sub.points) if j != drop]):
                    proj_bad.append(f"projected set not in general position at d={sub.dim}")
            apex = level[rec.apex]
            for j, i in rec.label_map.items():
                x = chart_up(rec.chart, sub[j])
                a = level[i]
                k = next(k for k in range(level.dim) if a[k] != apex[k])
                s = (x[k] - apex[k]) / (a[k] - apex[k])
                on_segment = all(xc == ac + s * (bc - ac) for xc, ac, bc in zip(x, apex, a))
                if not (0 < s < 1 and on_segment and rec.hyperplane.side(x) == 0):
                    proj_bad.append(f"projected point {j} not strictly inside segment {rec.apex}-{i}")
        for lift in trace:
            if not isinstance(lift, LiftTrace):
                continue
            n_lift += 1
            inst, apex = lift.instance, lift.instance[lift.apex]
            for t, y, side in ((lift.t1, lift.y1, lift.side_1), (lift.t2, lift.y2, lift.side_2)):
                on_ray = y == tuple(a + t * (w - a) for a, w in zip(apex, lift.sub_witness))
                if t <= 0 or not on_ray or hull_membership(y, inst.select(side)) is None:
                    lift_bad.append(f"ray misses side {side} at d={inst.dim}")
            if lift.t1 == lift.t2:
                lift_bad.append(f"equal ray parameters at d={inst.dim}")
    try:
        _record(acceptance_log, 4, "projection soundness", proj_bad, f"{n_proj} projections, {len(proj_bad)} violations")
    finally:
        _record(acceptance_log, 5, "lift soundness", lift_bad, f"{n_lift} lifts, {len(lift_bad)} violations")


def _random_affine_map(rng, d):
    def q():
        return F(rng.randint(-9, 9), rng.randint(1, 5))

    while True:
        M = [[q() for _ in range(d)] for _ in range(d)]
        if sympy.Matrix(M).det() != 0:
            return M, [q() for _ in range(d)]


def test_criterion_6_affine_invariance(acceptance_log):
    bad = []
    rng = SplitMix64(derive_seed(SEED, 6))
    for n, ps in enumerate(_instances(range(1, 6), 20, 6)):
        base_r, base_a = _emit(ps, radon_recursive(ps), radon_algebraic(ps))
        for _ in range(5):
            M, b = _random_affine_map(rng, ps.dim)
            image = PointSet([[sum(m * c for m, c in zip(row, p)) + s for row, s in zip(M, b)] for p in ps.points])
            r, a = _emit(image, radon_recursive(image), radon_algebraic(image))
            if r.partition != base_r.partition or a.partition != base_a.partition:
                bad.append(f"instance {n}: partition changed under affine map")
    _record(acceptance_log, 6, "affine invariance (100 instances x 5 maps)", bad)


# Each set has exactly one affinely dependent (d+1)-subset, given 1-based.
DEGENERATE = [
    (2, [(0, 0), (1, 1), (2, 2), (0, 1)], (1, 2, 3)),
    (2, [(0, 1), (0, 0), (1, 1), (2, 2)], (2, 3, 4)),
    (2, [(1, 0), (0, 3), (3, 0), (2, 0)], (1, 3, 4)),
    (2, [(0, 0), (5, 1), (1, 0), (-1, 0)], (1, 3, 4)),
    (2, [(0, 0), (4, 4), (0, 5), (2, 2)], (1, 2, 4)),
    (2, [(1, 2), (3, 4), (0, 7), (5, 6)], (1, 2, 4)),
    (2, [(0, 0), (1, 3), (2, 6), (5, 0)], (1, 2, 3)),
    (2, [(F(1, 2), 0), (0, F(1, 3)), (3, 3), (F(1, 4), F(1, 6))], (1, 2, 4)),
    (2, [(-1, -1), (7, 2), (1, 1), (0, 0)], (1, 3, 4)),
    (2, [(2, 5), (3, 0), (2, 1), (2, -4)], (1, 3, 4)),
    (3, [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)], (1, 2, 3, 4)),
    (3, [(0, 0, 1), (0, 0, 0), (1, 0, 0), (0, 1, 0), (2, 3, 0)], (2, 3, 4, 5)),
    (3, [(F(2, 3), F(2, 3), F(2, 3)), (0, 0, 0), (2, 0, 0), (0, 2, 0), (0, 0, 2)], (1, 3, 4, 5)),
    (3, [(0, 0, 0), (1, 2, 0), (5, 0, 1), (3, 1, 0), (0, 3, 0)], (1, 2, 4, 5)),
    (3, [(0, 0, 0), (1, 0, 1), (0, 1, 1), (1, 1, 2), (3, -1, 0)], (1, 2, 3, 4)),
    (3, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (5, 5, -7), (-1, 1, 1)], (1, 2, 3, 5)),
    (3, [(2, 0, 0), (0, 0, 0), (0, 2, 0), (1, 1, 5), (1, F(1, 2), 0)], (1, 2, 3, 5)),
    (3, [(0, 0, 0), (0, 1, 0), (1, 0, 0), (0, 0, 1), (F(1, 3), F(1, 3), 0)], (1, 2, 3, 5)),
    (3, [(3, 3, 3), (0, 0, 0), (1, 0, 0), (0, 0, 1), (2, 0, 5)], (2, 3, 4, 5)),
    (3, [(0, 0, 0), (1, 1, 0), (2, 0, 7), (1, -1, 0), (0, 3, 0)], (1, 2, 4, 5)),
]


def _dependent(pts):
    edges = sympy.Matrix([[a - b for a, b in zip(p, pts[0])] for p in pts[1:]])
    return edges.det() == 0


def test_criterion_7_degeneracy(tmp_path, capsys, acceptance_log):
    from itertools import combinations

    bad = []
    for n, (d, pts, subset) in enumerate(DEGENERATE):
        pts = [tuple(F(c) for c in p) for p in pts]
        truth = [s for s in combinations(range(1, d + 3), d + 1) if _dependent([pts[i - 1] for i in s])]
        if truth != [subset]:
            bad.append(f"case {n}: fixture is not uniquely degenerate ({truth})")
            continue
        f = tmp_path / f"deg{n}.json"
        f.write_text(json.dumps({"dim": d, "points": [[f"{c.numerator}/{c.denominator}" for c in p] for p in pts]}))
        code = main(["compute", str(f)])
        err = json.loads(capsys.readouterr().err)
        if code != 3 or tuple(err.get("subset", ())) != subset:
            bad.append(f"case {n}: exit {code}, subset {err.get('subset')} != {list(subset)}")
    _record(acceptance_log, 7, "degenerate inputs rejected with the violating subset", bad,
            f"{len(DEGENERATE) - len(bad)}/{len(DEGENERATE)} rejected correctly")


def test_criterion_8_oracle_self_consistency(acceptance_log):
    bad = []
    for ps in _instances(range(1, 5), 25, 8):
        alg = _emit(ps, radon_algebraic(ps))[0]
        singles = 0
        for part in canonical_bipartitions(len(ps)):
            P, Q = ps.select(part.side_I), ps.select(part.side_J)
            info = hulls_intersection_info(P, Q)
            if info.kind == SINGLE:
                singles += 1
                if hull_membership(info.point, P) is None or hull_membership(info.point, Q) is None:
                    bad.append(f"{part}: single-point witness outside a hull")
                if (part, info.point) != (alg.partition, alg.witness):
                    bad.append(f"{part}: single point for a non-radon bipartition")
            elif info.kind != EMPTY:
                bad.append(f"{part}: {info.kind} intersection in general position")
            elif part == alg.partition:
                bad.append(f"{part}: radon partition classified empty")
        if singles != 1:
            bad.append(f"{singles} single-point bipartitions")
    _record(acceptance_log, 8, "oracle self-consistency (100 instances, d<=4)", bad)


@pytest.mark.slow
def test_criterion_3_certificate_validity(sweep, acceptance_log):
    # the sweep checks its own certificates; count those plus an independent
    # re-check of every certificate from the sweep instances and this module
    bad = [f"sweep d={o.dim} i={o.index}" for o in sweep.outcomes if o.certificate_violations]
    checked = 0
    for o in sweep.outcomes:
        ps, _ = gen(o.dim, instance_seed(0, o.dim, o.index), BOUND)
        for cert in (radon_recursive(ps), radon_algebraic(ps)):
            checked += 1
            bad += _cert_problems(ps, cert)
    for ps, cert in _EMITTED:
        checked += 1
        bad += _cert_problems(ps, cert)
    _record(acceptance_log, 3, "certificate validity", bad, f"{checked} certificates, {len(bad)} violations")
