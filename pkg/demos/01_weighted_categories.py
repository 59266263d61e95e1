"""Weighted categories from scratch.

A metric 1-space is a finite category with a weight on every arrow,
identities weighing 0 and every composable pair satisfying the full
triangle inequality |w(g) - w(f)| <= w(g after f) <= w(g) + w(f).

The script walks through the two foundational facts the rest of the
library builds on:

* on an indiscrete category (one arrow per ordered pair) the lower half
  of the full triangle inequality IS symmetry of the induced distance,
  so classical metric spaces are exactly the indiscrete metric 1-spaces;
* on richer categories the induced point distance (the cheapest arrow
  per ordered pair) can be genuinely asymmetric.
"""
from fractions import Fraction

from metricat import (
    FiniteMetricSpace,
    Metric1Space,
    asymmetry_defect,
    build_category,
    from_metric_space,
    indiscrete,
    lawvere,
    validate_metric1,
)

print("== classical metric spaces embed indiscretely ==")
triangle = FiniteMetricSpace.from_matrix(
    ["a", "b", "c"], [[0, 2, 3], [2, 0, 4], [3, 4, 0]]
)
space = from_metric_space(triangle)
print("embedding of a 3-point metric validates:", validate_metric1(space).ok)
print("induced distances equal the input:",
      [[str(w) for w in row] for row in lawvere(space).d])

print()
print("== symmetry is not an axiom, it is the lower triangle bound ==")
asym = Metric1Space.from_weights(indiscrete(2), [0, 1, 5, 0])
report = validate_metric1(asym)
print("asymmetric weights 1 / 5 on two points:")
for violation in report.violations:
    print("  ", violation)

print()
print("== asymmetric distances on a genuine category ==")
# a chain 0 -> 1 with no way back: d(0,1) finite, d(1,0) infinite
chain = build_category(2, [(0, 1, "step")])
oneway = Metric1Space.from_weights(chain, [0, 0, Fraction(7, 2)])
print("one-way space validates:", validate_metric1(oneway).ok)
law = lawvere(oneway)
print("d(0,1) =", law.d[0][1], "   d(1,0) =", law.d[1][0])

print()
print("== the asymmetry defect measures how far hom-sets disagree ==")
quasi = Metric1Space.from_weights(indiscrete(2), [0, 1, 1, 0])
print("symmetric space defect:", asymmetry_defect(quasi, 0, 1))
two_routes = build_category(2, [(0, 1, "f"), (0, 1, "g"), (1, 0, "h")])
multi = Metric1Space.from_weights(two_routes, [0, 0, 1, 2, 2])
print("two routes out, one back (weights 1,2 / 2):",
      asymmetry_defect(multi, 0, 1))
