"""Dagger structures and the four-level symmetry hierarchy.

A dagger is an identity-on-objects contravariant involution.  Compatibility
with the weights comes in decreasing strength: weight-preserving (iso),
uniformly continuous, continuous; a space whose category is a groupoid sits
above all of these, its inverse map being a canonical iso dagger.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import IntEnum

from .errors import PreconditionError, SizeGuardError, TheoremViolation
from .continuity import (
    backward_continuous,
    forward_continuous,
    uniformly_continuous,
)
from .fincat import Functor, ValidationReport, is_groupoid, opposite
from .weights import Metric1Space, lawvere, opposite_space

DEFAULT_GUARD = 100_000


class SymmetryClass(IntEnum):
    NONE = 0
    CONTINUOUS = 1
    UNIFORM = 2
    ISO = 3
    GROUPOIDAL = 4

    def __str__(self) -> str:
        return self.name.lower()


@dataclass(frozen=True)
class Dagger:
    """An arrow involution on one category; validate before trusting."""

    mapping: tuple[int, ...]  # arrow id -> arrow id

    def apply(self, aid: int) -> int:
        return self.mapping[aid]


def validate_dagger(space: Metric1Space, dag: Dagger) -> ValidationReport:
    """The three dagger laws, exhaustively: identity on objects (each image
    swaps dom and cod, identities map to themselves), contravariance over
    every composable pair, and involutivity."""
    report = ValidationReport(subject="dagger")
    cat = space.category
    m = len(cat.arrows)
    if len(dag.mapping) != m or any(not (0 <= v < m) for v in dag.mapping):
        report.fatal.append("dagger table does not cover the arrows")
        return report
    out = report.violations
    for a in cat.arrows:
        img = cat.arrows[dag.apply(a.id)]
        if img.dom != a.cod or img.cod != a.dom:
            out.append(f"image of {a} is {img}; a dagger only swaps endpoints")
    for x, ida in cat.identity.items():
        if dag.apply(ida) != ida:
            out.append(f"identity of object {x} is not fixed")
    for a in cat.arrows:
        if dag.apply(dag.apply(a.id)) != a.id:
            out.append(f"involution fails at arrow {a.id}")
    if out:
        return report
    for f, g in cat.composable_pairs():
        # (g after f)^dagger == f^dagger after g^dagger
        lhs = dag.apply(cat.compose(f, g))
        rhs = cat.compose(dag.apply(g), dag.apply(f))
        if lhs != rhs:
            out.append(f"contravariance fails on pair ({f},{g})")
    return report


def canonical_groupoid_dagger(space: Metric1Space) -> Dagger:
    """psi -> psi^{-1}; only defined on groupoids."""
    inv = is_groupoid(space.category)
    if inv is None:
        raise PreconditionError("category is not a groupoid; no canonical dagger")
    return Dagger(tuple(inv[a] for a in range(len(space.category.arrows))))


def dagger_functor(space: Metric1Space, dag: Dagger) -> tuple[Functor, Metric1Space]:
    """The dagger as a functor into the opposite space (arrow ids are
    stable under opposition, so the arrow table is the involution itself)."""
    op_cat = opposite(space.category)
    fun = Functor(
        space.category,
        op_cat,
        {o.index: o.index for o in space.category.objects},
        {a.id: dag.apply(a.id) for a in space.category.arrows},
    )
    return fun, opposite_space(space)


def classify_dagger(space: Metric1Space, dag: Dagger) -> SymmetryClass:
    """Strongest satisfied tier: iso, uniform, continuous, or none.

    Also exercises the observation that one-sided weight decrease under the
    dagger already forces iso (apply the dagger twice).
    """
    wpres = all(space.w[dag.apply(a.id)] == space.w[a.id] for a in space.category.arrows)
    decreasing = all(space.w[dag.apply(a.id)] <= space.w[a.id] for a in space.category.arrows)
    if decreasing and not wpres:
        raise TheoremViolation("w(psi^dagger) <= w(psi) everywhere must already force equality")
    if wpres:
        return SymmetryClass.ISO
    fun, op_space = dagger_functor(space, dag)
    if uniformly_continuous(fun, space, op_space).holds:
        return SymmetryClass.UNIFORM
    if (
        forward_continuous(fun, space, op_space).holds
        and backward_continuous(fun, space, op_space).holds
    ):
        return SymmetryClass.CONTINUOUS
    return SymmetryClass.NONE


def enumerate_daggers(space: Metric1Space, guard: int = DEFAULT_GUARD) -> list[Dagger]:
    """All valid daggers, in deterministic order.

    Candidates pair hom(x, y) with hom(y, x) bijectively (an involution can
    do nothing else) and restrict to involutions fixing the identity on the
    diagonal hom-sets; contravariance is then checked exhaustively.
    """
    cat = space.category
    n = len(cat.objects)
    m = len(cat.arrows)

    blocks: list[list[dict[int, int]]] = []
    total = 1
    for x in range(n):
        for y in range(x, n):
            fwd = cat.hom(x, y)
            bwd = cat.hom(y, x)
            if x == y:
                ident = cat.identity[x]
                rest = [a for a in fwd if a != ident]
                choices = []
                for pairing in _involutions(rest):
                    table = dict(pairing)
                    table[ident] = ident
                    choices.append(table)
            else:
                if len(fwd) != len(bwd):
                    return []
                choices = []
                for perm in itertools.permutations(bwd):
                    table = {a: b for a, b in zip(fwd, perm)}
                    table.update({b: a for a, b in zip(fwd, perm)})
                    choices.append(table)
            if not choices:
                return []
            blocks.append(choices)
            total *= len(choices)
            if total > guard:
                raise SizeGuardError(
                    f"dagger enumeration would try {total}+ candidates (budget {guard})"
                )

    found = []
    for combo in itertools.product(*blocks):
        table: dict[int, int] = {}
        for block in combo:
            table.update(block)
        dag = Dagger(tuple(table[a] for a in range(m)))
        if validate_dagger(space, dag).ok:
            found.append(dag)
    return found


def _involutions(elements: list[int]) -> list[dict[int, int]]:
    """All involutive self-pairings of a list (fixed points allowed)."""
    if not elements:
        return [{}]
    first, rest = elements[0], elements[1:]
    out = []
    for sub in _involutions(rest):
        fixed = dict(sub)
        fixed[first] = first
        out.append(fixed)
    for i, other in enumerate(rest):
        remaining = rest[:i] + rest[i + 1 :]
        for sub in _involutions(remaining):
            d = dict(sub)
            d[first] = other
            d[other] = first
            out.append(d)
    return out


def symmetry_hierarchy(space: Metric1Space, guard: int = DEFAULT_GUARD) -> SymmetryClass:
    """Best symmetry tier of the space itself.

    Groupoids win outright (their canonical dagger is iso); otherwise the
    best class over all daggers, or none when no dagger exists.  Whenever
    the tier reaches iso, the induced point distances must come out
    symmetric; that implication is re-checked here because downstream code
    relies on it.
    """
    if is_groupoid(space.category) is not None:
        dag = canonical_groupoid_dagger(space)
        cls = classify_dagger(space, dag)
        if cls < SymmetryClass.ISO:
            raise TheoremViolation("the canonical dagger of a groupoid must be iso")
        _assert_lawvere_symmetric(space)
        return SymmetryClass.GROUPOIDAL
    best = SymmetryClass.NONE
    for dag in enumerate_daggers(space, guard):
        best = max(best, classify_dagger(space, dag))
    if best >= SymmetryClass.ISO:
        _assert_lawvere_symmetric(space)
    return best


def _assert_lawvere_symmetric(space: Metric1Space) -> None:
    if not lawvere(space).is_symmetric():
        raise TheoremViolation(
            "a space with an iso dagger must induce symmetric point distances"
        )
