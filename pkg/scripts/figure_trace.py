"""Print a step-by-step trace of the dimension reduction on a small d=3 instance.

Point 5 is the apex; segment 2-3 pierces triangle 1-4-5, so the expected
partition is {1,4,5} | {2,3}.  Pass an instance file to trace that instead.
"""

import sys

from radon_partition.formats import format_rational, loads_instance
from radon_partition.geometry import PointSet, chart_up
from radon_partition.recursive import LiftTrace, ProjectionRecord, radon_recursive

DEFAULT = PointSet([(0, -2, 0), (1, 0, -1), (1, 0, 2), (0, 2, 0), (3, 0, 1)])


def fmt(p):
    return "(" + ", ".join(format_rational(c) for c in p) + ")"


def main(argv):
    ps = loads_instance(open(argv[0]).read())[0] if argv else DEFAULT
    trace = []
    cert = radon_recursive(ps, trace)
    print(f"input, d={ps.dim}:")
    for i in ps.labels:
        print(f"  A{i} = {fmt(ps[i])}")
    for rec in trace:
        if isinstance(rec, ProjectionRecord):
            h = rec.hyperplane
            print(f"\nd={rec.projected.dim + 1}: apex {rec.apex}, separator {fmt(h.normal)} . x = {format_rational(h.offset)}")
            for j, i in rec.label_map.items():
                print(f"  A{i}' = {fmt(chart_up(rec.chart, rec.projected[j]))}  (chart {fmt(rec.projected[j])}, sub-label {j})")
    for lift in (t for t in trace if isinstance(t, LiftTrace)):
        near = lift.side_1 if lift.near_side == 1 else lift.side_2
        print(f"\nlift at d={lift.instance.dim} (labels local to that level), apex {lift.apex}:")
        print(f"  Y' = {fmt(lift.sub_witness)}")
        print(f"  hull{list(lift.side_1)} hit at t={format_rational(lift.t1)}: {fmt(lift.y1)}")
        print(f"  hull{list(lift.side_2)} hit at t={format_rational(lift.t2)}: {fmt(lift.y2)}")
        print(f"  nearer side {list(near)}; apex joins the other side")
    print(f"\nradon partition {cert.partition.as_lists()}, witness {fmt(cert.witness)}")
    print(f"  coeffs_I {[format_rational(c) for c in cert.coeffs_I]}")
    print(f"  coeffs_J {[format_rational(c) for c in cert.coeffs_J]}")


if __name__ == "__main__":
    main(sys.argv[1:])
