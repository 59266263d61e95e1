"""Finite categories, functors, and natural transformations as explicit tables.

A category is stored as dense object/arrow lists, an identity assignment and
a composition table keyed by composable pairs.  The stored order is
diagrammatic: ``composition[(f, g)]`` is the arrow "g after f", rendered as
g∘f.  All validators are exhaustive; at the sizes this library targets there
is no reason to be cleverer than that.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property


@dataclass(frozen=True)
class Obj:
    """An object: a dense index within its category plus an optional label."""

    index: int
    label: str | None = None

    def __str__(self) -> str:
        return self.label if self.label is not None else f"o{self.index}"


@dataclass(frozen=True)
class Arrow:
    """An arrow with a dense id and object indices for its endpoints."""

    id: int
    dom: int
    cod: int
    label: str | None = None

    def __str__(self) -> str:
        name = self.label if self.label is not None else f"a{self.id}"
        return f"{name}:{self.dom}->{self.cod}"


@dataclass
class ValidationReport:
    """Outcome of an exhaustive axiom check.

    ``fatal`` lists structural malformations (dangling ids and the like)
    that made the axiom checks meaningless; ``violations`` lists every
    individual axiom failure found.  Empty report == the axioms hold.
    """

    subject: str
    fatal: list[str] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.fatal and not self.violations

    def all_messages(self) -> list[str]:
        return list(self.fatal) + list(self.violations)

    def summary(self) -> str:
        if self.ok:
            return f"{self.subject}: ok"
        lines = [f"{self.subject}: {len(self.fatal)} fatal, {len(self.violations)} violations"]
        lines += [f"  fatal: {m}" for m in self.fatal]
        lines += [f"  {m}" for m in self.violations]
        return "\n".join(lines)


@dataclass(eq=True)
class FiniteCategory:
    """Objects, arrows, identities, and a total table on composable pairs."""

    objects: tuple[Obj, ...]
    arrows: tuple[Arrow, ...]
    identity: dict[int, int]  # object index -> identity arrow id
    composition: dict[tuple[int, int], int]  # (f, g) -> "g after f"

    def compose(self, first: int, second: int) -> int:
        """Arrow id of "second after first" (second∘first)."""
        return self.composition[(first, second)]

    def arrow(self, aid: int) -> Arrow:
        return self.arrows[aid]

    def is_identity(self, aid: int) -> bool:
        a = self.arrows[aid]
        return a.dom == a.cod and self.identity.get(a.dom) == aid

    @cached_property
    def hom_table(self) -> dict[tuple[int, int], tuple[int, ...]]:
        table: dict[tuple[int, int], list[int]] = {}
        for a in self.arrows:
            table.setdefault((a.dom, a.cod), []).append(a.id)
        return {k: tuple(sorted(v)) for k, v in table.items()}

    def hom(self, x: int, y: int) -> tuple[int, ...]:
        return self.hom_table.get((x, y), ())

    def arrows_from(self, x: int) -> tuple[int, ...]:
        return tuple(a.id for a in self.arrows if a.dom == x)

    def arrows_to(self, y: int) -> tuple[int, ...]:
        return tuple(a.id for a in self.arrows if a.cod == y)

    def composable_pairs(self):
        """All (f, g) with cod f == dom g, in lexicographic id order."""
        for f in self.arrows:
            for g in self.arrows:
                if f.cod == g.dom:
                    yield f.id, g.id

    def structural_errors(self) -> list[str]:
        errs: list[str] = []
        n, m = len(self.objects), len(self.arrows)
        for i, o in enumerate(self.objects):
            if o.index != i:
                errs.append(f"object at position {i} has index {o.index}; indices must be dense")
        for i, a in enumerate(self.arrows):
            if a.id != i:
                errs.append(f"arrow at position {i} has id {a.id}; ids must be dense")
            if not (0 <= a.dom < n) or not (0 <= a.cod < n):
                errs.append(f"arrow {a.id} references missing object ({a.dom}->{a.cod})")
        for x in range(n):
            if x not in self.identity:
                errs.append(f"object {x} has no identity arrow assigned")
            elif not (0 <= self.identity[x] < m):
                errs.append(f"identity of object {x} is a dangling arrow id {self.identity[x]}")
        for x in self.identity:
            if not (0 <= x < n):
                errs.append(f"identity table mentions missing object {x}")
        for (f, g), h in self.composition.items():
            for aid in (f, g, h):
                if not (0 <= aid < m):
                    errs.append(f"composition entry ({f},{g})->{h} has dangling arrow id {aid}")
                    break
        return errs


def validate_category(cat: FiniteCategory) -> ValidationReport:
    """Exhaustively check the category axioms.

    Structural malformations are fatal and skip the axiom checks.  The
    violations list then covers: identity endpoints, the composition table
    being defined exactly on composable pairs, endpoint compatibility of
    composites, neutrality of identities, and associativity over every
    composable triple.
    """
    report = ValidationReport(subject="category")
    report.fatal = cat.structural_errors()
    if report.fatal:
        return report
    out = report.violations

    for x in range(len(cat.objects)):
        ida = cat.arrows[cat.identity[x]]
        if ida.dom != x or ida.cod != x:
            out.append(f"identity of object {x} is {ida}, not an endomorphism of {x}")

    comp = cat.composition
    for f in cat.arrows:
        for g in cat.arrows:
            key = (f.id, g.id)
            if f.cod == g.dom:
                if key not in comp:
                    out.append(f"composable pair ({f}, {g}) missing from composition table")
                else:
                    h = cat.arrows[comp[key]]
                    if h.dom != f.dom or h.cod != g.cod:
                        out.append(f"composite of ({f}, {g}) is {h}; endpoints must be {f.dom}->{g.cod}")
            elif key in comp:
                out.append(f"composition table defined on non-composable pair ({f}, {g})")
    if out:
        # neutrality/associativity below would chase missing table entries
        return report

    for a in cat.arrows:
        lid = cat.identity[a.dom]
        rid = cat.identity[a.cod]
        if comp[(lid, a.id)] != a.id:
            out.append(f"neutrality fails: {a} after id_{a.dom} is arrow {comp[(lid, a.id)]}")
        if comp[(a.id, rid)] != a.id:
            out.append(f"neutrality fails: id_{a.cod} after {a} is arrow {comp[(a.id, rid)]}")

    for f in cat.arrows:
        for g in cat.arrows:
            if f.cod != g.dom:
                continue
            fg = comp[(f.id, g.id)]
            for h in cat.arrows:
                if g.cod != h.dom:
                    continue
                gh = comp[(g.id, h.id)]
                if comp[(fg, h.id)] != comp[(f.id, gh)]:
                    out.append(
                        f"associativity fails on ({f.id},{g.id},{h.id}): "
                        f"{comp[(fg, h.id)]} != {comp[(f.id, gh)]}"
                    )
    return report


def indiscrete(n: int, labels: list[str] | None = None) -> FiniteCategory:
    """The category with exactly one arrow per ordered pair of n objects."""
    if n < 0:
        raise ValueError("object count must be non-negative")
    if labels is not None and len(labels) != n:
        raise ValueError("label count must match object count")
    objects = tuple(Obj(i, labels[i] if labels else None) for i in range(n))
    arrows = []
    ids: dict[tuple[int, int], int] = {}
    for x in range(n):
        for y in range(n):
            aid = x * n + y
            ids[(x, y)] = aid
            arrows.append(Arrow(aid, x, y))
    identity = {x: ids[(x, x)] for x in range(n)}
    composition = {}
    for x in range(n):
        for y in range(n):
            for z in range(n):
                composition[(ids[(x, y)], ids[(y, z)])] = ids[(x, z)]
    return FiniteCategory(objects, tuple(arrows), identity, composition)


def terminal_category() -> FiniteCategory:
    return indiscrete(1)


def opposite(cat: FiniteCategory) -> FiniteCategory:
    """Reverse every arrow.  Arrow ids are preserved, so data indexed by id
    (weights, sequences) transfers between a category and its opposite
    verbatim; the composition table transposes."""
    arrows = tuple(Arrow(a.id, a.cod, a.dom, a.label) for a in cat.arrows)
    composition = {(g, f): h for (f, g), h in cat.composition.items()}
    return FiniteCategory(cat.objects, arrows, dict(cat.identity), composition)


@dataclass(eq=True)
class Functor:
    source: FiniteCategory
    target: FiniteCategory
    obj_map: dict[int, int]
    arr_map: dict[int, int]

    def apply_obj(self, x: int) -> int:
        return self.obj_map[x]

    def apply_arrow(self, aid: int) -> int:
        return self.arr_map[aid]

    def key(self) -> tuple:
        """Deterministic identity among functors with the same endpoints."""
        return (
            tuple(self.obj_map[i] for i in range(len(self.source.objects))),
            tuple(self.arr_map[a] for a in range(len(self.source.arrows))),
        )


def identity_functor(cat: FiniteCategory) -> Functor:
    return Functor(
        cat,
        cat,
        {o.index: o.index for o in cat.objects},
        {a.id: a.id for a in cat.arrows},
    )


def validate_functor(fun: Functor) -> ValidationReport:
    """Check endpoint compatibility (fatal), identity and composition
    preservation (violations), exhaustively."""
    report = ValidationReport(subject="functor")
    src, dst = fun.source, fun.target
    for x in range(len(src.objects)):
        if x not in fun.obj_map or not (0 <= fun.obj_map[x] < len(dst.objects)):
            report.fatal.append(f"object map missing or dangling at object {x}")
    for a in src.arrows:
        if a.id not in fun.arr_map or not (0 <= fun.arr_map[a.id] < len(dst.arrows)):
            report.fatal.append(f"arrow map missing or dangling at arrow {a.id}")
    if report.fatal:
        return report
    for a in src.arrows:
        img = dst.arrows[fun.arr_map[a.id]]
        if img.dom != fun.obj_map[a.dom] or img.cod != fun.obj_map[a.cod]:
            report.fatal.append(
                f"arrow {a} maps to {img}, incompatible with the object map"
            )
    if report.fatal:
        return report
    out = report.violations
    for x in range(len(src.objects)):
        if fun.arr_map[src.identity[x]] != dst.identity[fun.obj_map[x]]:
            out.append(f"identity of object {x} is not preserved")
    for f, g in src.composable_pairs():
        lhs = fun.arr_map[src.compose(f, g)]
        rhs = dst.compose(fun.arr_map[f], fun.arr_map[g])
        if lhs != rhs:
            out.append(f"composition not preserved on pair ({f},{g}): {lhs} != {rhs}")
    return report


def compose_functors(first: Functor, second: Functor) -> Functor:
    """second after first (their target/source must line up)."""
    if first.target is not second.source and first.target != second.source:
        raise ValueError("functors not composable")
    return Functor(
        first.source,
        second.target,
        {x: second.obj_map[y] for x, y in first.obj_map.items()},
        {a: second.arr_map[b] for a, b in first.arr_map.items()},
    )


def is_groupoid(cat: FiniteCategory) -> dict[int, int] | None:
    """The two-sided inverse of every arrow, or None if some arrow has none.

    Inverses in a category are unique when they exist, so the returned map
    is canonical.
    """
    inverse: dict[int, int] = {}
    for a in cat.arrows:
        found = None
        for b in cat.hom(a.cod, a.dom):
            if (
                cat.compose(a.id, b) == cat.identity[a.dom]
                and cat.compose(b, a.id) == cat.identity[a.cod]
            ):
                found = b
                break
        if found is None:
            return None
        inverse[a.id] = found
    return inverse


@dataclass(eq=True)
class NatTransformation:
    """A family of target arrows indexed by source objects."""

    F: Functor
    G: Functor
    components: dict[int, int]

    def component(self, x: int) -> int:
        return self.components[x]

    def key(self) -> tuple:
        return (
            self.F.key(),
            self.G.key(),
            tuple(self.components[i] for i in range(len(self.F.source.objects))),
        )


def validate_transformation(t: NatTransformation) -> ValidationReport:
    report = ValidationReport(subject="natural transformation")
    src = t.F.source
    dst = t.F.target
    if t.F.source != t.G.source or t.F.target != t.G.target:
        report.fatal.append("functors do not share source and target")
        return report
    for x in range(len(src.objects)):
        if x not in t.components:
            report.fatal.append(f"no component at object {x}")
            continue
        comp = dst.arrows[t.components[x]]
        if comp.dom != t.F.obj_map[x] or comp.cod != t.G.obj_map[x]:
            report.fatal.append(
                f"component at object {x} is {comp}; must go F({x}) -> G({x})"
            )
    if report.fatal:
        return report
    for a in src.arrows:
        # naturality square: G(a) after component(dom) == component(cod) after F(a)
        left = dst.compose(t.components[a.dom], t.G.arr_map[a.id])
        right = dst.compose(t.F.arr_map[a.id], t.components[a.cod])
        if left != right:
            report.violations.append(f"naturality square fails at arrow {a.id}")
    return report


def identity_transformation(fun: Functor) -> NatTransformation:
    comps = {x: fun.target.identity[fun.obj_map[x]] for x in range(len(fun.source.objects))}
    return NatTransformation(fun, fun, comps)


def vertical_compose(alpha: NatTransformation, beta: NatTransformation) -> NatTransformation:
    """beta after alpha: components compose pointwise in the target."""
    if alpha.G != beta.F:
        raise ValueError("middle functors do not match")
    dst = alpha.F.target
    comps = {
        x: dst.compose(alpha.components[x], beta.components[x])
        for x in alpha.components
    }
    result = NatTransformation(alpha.F, beta.G, comps)
    rep = validate_transformation(result)
    if not rep.ok:
        raise AssertionError(
            "vertical composite of natural transformations failed naturality: "
            + "; ".join(rep.all_messages())
        )
    return result


def build_category(
    objects: list[str | None] | int,
    arrows: list[tuple[int, int, str | None] | tuple[int, int]],
    compose_pairs: dict[tuple[int, int], int] | None = None,
    identities: dict[int, int] | None = None,
) -> FiniteCategory:
    """Convenience constructor used in tests and demos.

    ``arrows`` lists non-identity arrows as (dom, cod[, label]); identity
    arrows are created first (arrow id i is id of object i) unless an
    explicit identity table is supplied.  ``compose_pairs`` only needs the
    non-forced entries; identity compositions are filled in automatically.
    """
    if isinstance(objects, int):
        obj_labels: list[str | None] = [None] * objects
    else:
        obj_labels = list(objects)
    n = len(obj_labels)
    objs = tuple(Obj(i, obj_labels[i]) for i in range(n))
    arrow_list: list[Arrow] = []
    if identities is None:
        for i in range(n):
            arrow_list.append(Arrow(i, i, i, f"id{i}"))
        identity = {i: i for i in range(n)}
    else:
        identity = dict(identities)
    for spec in arrows:
        dom, cod = spec[0], spec[1]
        label = spec[2] if len(spec) > 2 else None
        arrow_list.append(Arrow(len(arrow_list), dom, cod, label))
    arrs = tuple(arrow_list)
    comp: dict[tuple[int, int], int] = dict(compose_pairs or {})
    for a in arrs:
        comp.setdefault((identity[a.dom], a.id), a.id)
        comp.setdefault((a.id, identity[a.cod]), a.id)
    return FiniteCategory(objs, arrs, identity, comp)
