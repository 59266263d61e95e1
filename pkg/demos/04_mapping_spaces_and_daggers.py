"""Mapping spaces and the symmetry hierarchy.

The continuous functors X -> Y and all natural transformations between
them form the mapping space [X, Y], weighted by the largest component
weight; on finite spaces this is again a metric 1-space, and the script
re-validates that rather than assuming it.

Daggers (identity-on-objects contravariant involutions) stratify spaces by
how compatible the involution is with the weights: groupoidal > iso >
uniform > continuous > none.  Indiscrete spaces land at the top, fully
asymmetric ones at the bottom.
"""
from metricat import (
    Metric1Space,
    build_category,
    indiscrete,
    lawvere,
    validate_metric1,
)
from metricat.dagger import classify_dagger, enumerate_daggers, symmetry_hierarchy
from metricat.mapping import mapping_space

z2 = Metric1Space.from_weights(build_category(1, [(0, 0, "g")], {(1, 1): 0}), [0, 1])

print("== the mapping space [Z/2, Z/2] ==")
ms = mapping_space(z2, z2)
print("continuous functors:", len(ms.functors))
print("natural transformations:", len(ms.transformations))
print("weights:", sorted(str(w) for w in ms.space.w))
print("it is again a metric 1-space:", validate_metric1(ms.space).ok)

print()
print("== symmetry tiers ==")
sym = Metric1Space.from_weights(indiscrete(2), [0, 1, 1, 0])
print("indiscrete 2-point space:", symmetry_hierarchy(sym))

free = Metric1Space.from_weights(build_category(2, [(0, 1, "f")]), [0, 0, 1])
print("free arrow:", symmetry_hierarchy(free))

# two objects joined by weight-distorting arrows whose composites are
# idempotents: a dagger exists but cannot preserve weights
comp = {
    (2, 3): 4, (3, 2): 5, (4, 2): 2, (2, 5): 2,
    (5, 3): 3, (3, 4): 3, (4, 4): 4, (5, 5): 5,
}
cat = build_category(2, [(0, 1, "a"), (1, 0, "b"), (0, 0, "p"), (1, 1, "q")], comp)
skew = Metric1Space.from_weights(cat, [0, 0, 1, 2, "3/2", "3/2"])
print("skewed idempotent space:", symmetry_hierarchy(skew))
for dag in enumerate_daggers(skew):
    print("  dagger", dag.mapping, "classifies", classify_dagger(skew, dag))
print("its point distances are asymmetric:",
      not lawvere(skew).is_symmetric())
