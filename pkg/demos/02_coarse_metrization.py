"""Coarse structures and the metrization recursion.

Large-scale geometry only remembers which sets of arrows are "controlled".
A coarse structure on a category is generated here by a monotone,
eventually constant family of arrow sets; the star operator

    star(E) = {psi : psi completes some member of E to another, either side}

replaces symmetry exactly the way the lower triangle bound does for
metrics.  The metrization recursion stages arrows by when they first
become reachable:

    F_0 = identities,  F_{n+1} = star(F_n) | F_n o F_n | E_n | star(E_n)

and w(psi) = the first stage containing psi.
"""
from fractions import Fraction

from metricat import FiniteMetricSpace, from_metric_space, indiscrete, validate_metric1
from metricat.coarse import (
    CoarseGenerators,
    arrow_star,
    bounded_generators,
    coarse_roundtrip_check,
    metrize,
    metrize_chain,
)

cat = indiscrete(2)
psi_xy = cat.hom(0, 1)[0]
psi_yx = cat.hom(1, 0)[0]

print("== the star operator in action ==")
print("star({psi_xy}) =", sorted(arrow_star(cat, frozenset({psi_xy}))),
      " (the two identities: psi_xy completes itself to either one)")

print()
print("== metrization of the one-generator family ==")
gens = CoarseGenerators(cat, (frozenset({psi_xy}),), 0)
for stage, members in enumerate(metrize_chain(gens)):
    print(f"  F_{stage} = {sorted(members)}")
out = metrize(gens)
print("weights:", {str(cat.arrows[i]): str(w) for i, w in enumerate(out.w)})
print("note the backward arrow enters one stage late (via the star),")
print("so this family's output is NOT a metric 1-space:",
      validate_metric1(out).ok)

print()
print("== bounded generators of an honest space round-trip ==")
space = from_metric_space(
    FiniteMetricSpace.from_matrix(
        ["a", "b"], [[0, Fraction(3, 2)], [Fraction(3, 2), 0]]
    )
)
gens = bounded_generators(space)
print("E_n thresholds:", [sorted(s) for s in gens.sets])
rebuilt = metrize(gens)
print("metrized weights:", [str(w) for w in rebuilt.w])
print("metrized space validates:", validate_metric1(rebuilt).ok)
print("coarse structures coincide:", coarse_roundtrip_check(space))
