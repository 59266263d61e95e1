"""Metric geometry through the categorical lens.

Three classical constructions become weighted categories here:

* bi-Lipschitz bijections between finite metric spaces form a groupoid
  weighted (multiplicatively) by the optimal distortion constant C; the
  induced point distance is the Lipschitz distance;
* cospans of isometric embeddings carry the Hausdorff distance of the two
  images as a weight, and the induced point distance between spaces is the
  Gromov-Hausdorff distance, computed exactly along two independent routes;
* a space with two arrows of opposite sign between any two points encodes
  a pair of interfering measurements: the self-loop weight h is pinched
  between |a1 - a2| and a1 + a2.
"""
from fractions import Fraction

from metricat.geometry import (
    Gluing,
    bilip_slice,
    cospan_weight_triangle_check,
    gh_distance,
    hausdorff_distance,
    lipschitz_distance,
    log_weight,
    try_bimetric_space,
)
from metricat.metricspace import line_metric

print("== Lipschitz distance as a groupoid weight ==")
unit = line_metric([0, 1])
tripled = line_metric([0, 3])
slice_ = bilip_slice([unit, tripled])
print("multiplicative triangle holds:", slice_.validate_multiplicative().ok)
c = lipschitz_distance(unit, tripled)
print(f"best distortion C = {c} (log distance {log_weight(c)})")

print()
print("== Hausdorff and Gromov-Hausdorff ==")
ambient = line_metric([0, 1, 5])
print("d_H({0}, {0,5}) =", hausdorff_distance(ambient, [0], [0, 2]))
one = line_metric([0])
two = line_metric([0, Fraction(7, 2)])
print("d_GH(point, 2-point at 7/2) =", gh_distance(one, two))
a = line_metric([0, 5])
b = line_metric([0, 2])
print("d_GH(2-point at 5, 2-point at 2) =", gh_distance(a, b))

print()
print("== cospans compose by amalgamation, weights obey the full triangle ==")
x = line_metric([0, 2])
y = line_metric([0])
z = line_metric([0, 1])
g1 = Gluing(x, y, ((Fraction(1),), (Fraction(1),)))
g2 = Gluing(y, z, ((Fraction(2), Fraction(2)),))
ok, detail = cospan_weight_triangle_check(g1, g2)
print("triangle check:", ok, "|", detail)

print()
print("== interfering measurements ==")
for a1, a2, h in ((1, 2, 1), (1, 5, 1)):
    t1 = {(i, j): Fraction(a1) for i in range(2) for j in range(2) if i != j}
    t2 = {(i, j): Fraction(a2) for i in range(2) for j in range(2) if i != j}
    space, report = try_bimetric_space(2, t1, t2, Fraction(h))
    verdict = "accepted" if space else "rejected"
    print(f"accuracies a1={a1}, a2={a2} with interference h={h}: {verdict}")
    if not space:
        print("   first violation:", report.violations[0])
