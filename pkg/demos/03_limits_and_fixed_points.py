"""Convergence and the fixed-point iteration.

Infinite sequences of arrows are stored as eventually periodic data, which
a finite category always suffices for and which makes every limit question
exactly decidable.  A forward sequence converges when cone legs of
vanishing weight make all composites agree; a forward series (a composable
chain) converges when compatible legs with vanishing weight exist.

The fixed-point theorem then falls out constructively: iterate a
contraction along a natural transformation, watch the orbit enter its
cycle, and read the limiting arrow off the window compositions.
"""
from fractions import Fraction

from metricat import from_metric_space, FiniteMetricSpace
from metricat.fixedpoint import banach_iterate, contraction_factor, find_natural_contractions
from metricat.limits import (
    EssentialCone,
    EventuallyPeriodic,
    ForwardSequence,
    ForwardSeries,
    check_cauchy,
    check_forward_limiting_cone,
    check_series_limit,
    partial_compositions,
)

pts = [Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(1)]
space = from_metric_space(
    FiniteMetricSpace.from_matrix(
        [str(p) for p in pts], [[abs(a - b) for b in pts] for a in pts]
    )
)
cat = space.category

print("== a convergent forward sequence ==")
# from the point 1, aim at 1/2, then 1/4, then 0 forever
seq = ForwardSequence(
    3, EventuallyPeriodic((cat.hom(3, 2)[0], cat.hom(3, 1)[0]), (cat.hom(3, 0)[0],))
)
legs = EventuallyPeriodic((cat.hom(2, 0)[0], cat.hom(1, 0)[0]), (cat.identity[0],))
cert = check_forward_limiting_cone(space, seq, EssentialCone(0, 0, legs))
print("verdict:", cert.verdict)
print("limiting arrow:", cat.arrows[cert.limiting_arrow],
      "of weight", space.w[cert.limiting_arrow])

print()
print("== series, their partial compositions, and the Cauchy test ==")
series = ForwardSeries(
    EventuallyPeriodic((cat.hom(3, 2)[0], cat.hom(2, 1)[0]), (cat.identity[1],))
)
partials = partial_compositions(space, series)
print("partial compositions:",
      [str(cat.arrows[partials.arrows.at(n)]) for n in range(4)])
print("Cauchy:", check_cauchy(space, series).verdict)

print()
print("== the contraction iteration, exactly ==")
grid = [Fraction(0), Fraction(1, 3), Fraction(1)]
fspace = from_metric_space(
    FiniteMetricSpace.from_matrix(
        [str(p) for p in grid], [[abs(a - b) for b in grid] for a in grid]
    )
)
n = 3
fmap = [0, 0, 1]  # halve then snap down to the grid
fun_arrows = {
    a.id: fmap[a.dom] * n + fmap[a.cod] for a in fspace.category.arrows
}
from metricat import Functor

fun = Functor(fspace.category, fspace.category, dict(enumerate(fmap)), fun_arrows)
print("contraction factor:", contraction_factor(fspace, fun).factor)
alpha = find_natural_contractions(fspace, fun, "forward")[0]
outcome = banach_iterate(fspace, fun, alpha, 2)
print("fixed object:", fspace.category.objects[outcome.fixed.fixed_object])
print("alpha-fixed arrow:", fspace.category.arrows[outcome.fixed.arrow],
      "of weight", fspace.w[outcome.fixed.arrow])
print("steps to the fixed object:", outcome.steps_to_fixed)
print("the produced series re-verifies:",
      check_cauchy(fspace, outcome.series).verdict,
      "/", check_series_limit(fspace, outcome.series, outcome.cone).verdict)
