"""Classical-metric geometry: bi-Lipschitz slices, Hausdorff and
Gromov-Hausdorff distances, cospan composition, and bi-metric spaces.

The Gromov-Hausdorff distance is computed along two independent routes that
are required to agree exactly:

* gluing route: minimise the Hausdorff distance over semimetric gluings of
  the disjoint union, i.e. over cross matrices r satisfying every mixed
  triangle inequality.  For a fixed "assignment pattern" (a nearest-point
  witness n(x) in Y per x and m(y) in X per y) this is a rational linear
  program; its optimum has a closed form.  The mixed upper triangles are
  difference constraints r_p <= r_q + w on the grid of cells (x, y), so for
  a given cap h on the designated cells the pointwise-largest feasible r is
  r_p = h + sp(D, p) with sp shortest-path distance to the designated set D;
  plugging that into the mixed lower triangles (the only lower bounds) gives
  per pattern   h*(D) = max(0, max over lower bounds (v - sp(D,p) - sp(D,q)) / 2).
  The pattern minimum is then exact by construction.

* correspondence route: half the minimal distortion over correspondences.
  Any correspondence contains one of the form graph(f) union
  transpose-graph(g), and shrinking a correspondence never increases
  distortion, so scanning function pairs (f, g) is exhaustive.

Both routes run on a common integer rescaling of the two distance matrices,
so agreement is exact rational equality.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError, SizeGuardError, TheoremViolation
from .fincat import Arrow, FiniteCategory, Obj, ValidationReport
from .metricspace import FiniteMetricSpace, shortest_path_repair
from .weight import Weight
from .weights import Metric1Space, validate_metric1

GH_POINT_GUARD = 6


# --- bi-Lipschitz ------------------------------------------------------------

@dataclass(frozen=True)
class BiLipMap:
    source: FiniteMetricSpace
    target: FiniteMetricSpace
    point_map: tuple[int, ...]


def bilip_constant(f: BiLipMap) -> Fraction:
    """Smallest C with distances distorted by at most a factor C each way:
    the max over point pairs of the ratio and its reciprocal.  Always >= 1;
    1 for sources with fewer than two points."""
    n = len(f.source.points)
    best = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            d_src = f.source.d[i][j]
            d_dst = f.target.d[f.point_map[i]][f.point_map[j]]
            if d_dst == 0:
                raise PreconditionError(
                    f"not bi-Lipschitz: points {i},{j} collapse to distance 0"
                )
            best = max(best, d_dst / d_src, d_src / d_dst)
    return best


def log_weight(c: Fraction) -> str:
    """Display form of the additive weight ln C, 12 significant digits.
    All comparisons elsewhere stay multiplicative and exact."""
    return f"{math.log(c):.12g}"


@dataclass
class BiLipSlice:
    """A groupoid of bi-Lipschitz bijections between finitely many spaces,
    weighted multiplicatively by the exact constants C (the additive
    picture would need ln C, which is irrational; the multiplicative
    triangle below is its exact equivalent)."""

    category: FiniteCategory
    spaces: list[FiniteMetricSpace]
    arrow_space: tuple[tuple[int, int], ...]  # arrow id -> (source idx, target idx)
    arrow_perm: tuple[tuple[int, ...], ...]  # arrow id -> point bijection
    factor: tuple[Fraction, ...]  # arrow id -> C

    def validate_multiplicative(self) -> ValidationReport:
        """Identities carry factor 1; every composable pair satisfies
        max(Cf/Cg, Cg/Cf) <= C(g after f) <= Cf * Cg."""
        report = ValidationReport(subject="bi-Lipschitz slice")
        cat = self.category
        for x, ida in cat.identity.items():
            if self.factor[ida] != 1:
                report.violations.append(f"identity at object {x} has factor {self.factor[ida]}")
        for f, g in cat.composable_pairs():
            cf, cg = self.factor[f], self.factor[g]
            cc = self.factor[cat.compose(f, g)]
            if cc > cf * cg or cc < max(cf / cg, cg / cf):
                report.violations.append(
                    f"multiplicative triangle fails on ({f},{g}): "
                    f"{max(cf / cg, cg / cf)} <= {cc} <= {cf * cg}"
                )
        return report

    def lawvere_factor(self, i: int, j: int) -> Fraction | None:
        """Least constant among maps space i -> space j (the Lipschitz
        distance between them, multiplicatively); None when no bijections
        exist."""
        best = None
        for aid, (s, t) in enumerate(self.arrow_space):
            if (s, t) == (i, j) and (best is None or self.factor[aid] < best):
                best = self.factor[aid]
        return best

    def canonical_dagger_iso(self) -> bool:
        """The inverse-bijection dagger preserves the factors."""
        from .fincat import is_groupoid

        inv = is_groupoid(self.category)
        if inv is None:
            return False
        return all(self.factor[inv[a]] == self.factor[a] for a in range(len(self.factor)))


def bilip_slice(spaces: list[FiniteMetricSpace], guard: int = 5040) -> BiLipSlice:
    """The slice of the bi-Lipschitz groupoid spanned by the given spaces:
    all bijections between them (on finite spaces with positive distances
    every bijection is bi-Lipschitz), weighted by their exact constants."""
    total = 0
    for a in spaces:
        for b in spaces:
            if len(a.points) == len(b.points):
                total += math.factorial(len(a.points))
                if total > guard:
                    raise SizeGuardError(f"slice would contain {total}+ arrows (budget {guard})")

    objs = tuple(Obj(i, f"S{i}") for i in range(len(spaces)))
    arrows: list[Arrow] = []
    arrow_space: list[tuple[int, int]] = []
    arrow_perm: list[tuple[int, ...]] = []
    index: dict[tuple[int, int, tuple[int, ...]], int] = {}
    for i, a in enumerate(spaces):
        for j, b in enumerate(spaces):
            if len(a.points) != len(b.points):
                continue
            for perm in itertools.permutations(range(len(a.points))):
                aid = len(arrows)
                arrows.append(Arrow(aid, i, j))
                arrow_space.append((i, j))
                arrow_perm.append(perm)
                index[(i, j, perm)] = aid
    identity = {
        i: index[(i, i, tuple(range(len(spaces[i].points))))] for i in range(len(spaces))
    }
    composition = {}
    for f_id, (i, j) in enumerate(arrow_space):
        for g_id, (j2, k) in enumerate(arrow_space):
            if j != j2:
                continue
            perm = tuple(arrow_perm[g_id][p] for p in arrow_perm[f_id])
            composition[(f_id, g_id)] = index[(i, k, perm)]
    cat = FiniteCategory(objs, tuple(arrows), identity, composition)
    factors = tuple(
        bilip_constant(BiLipMap(spaces[s], spaces[t], arrow_perm[aid]))
        for aid, (s, t) in enumerate(arrow_space)
    )
    return BiLipSlice(cat, list(spaces), tuple(arrow_space), tuple(arrow_perm), factors)


def lipschitz_distance(x: FiniteMetricSpace, y: FiniteMetricSpace) -> Fraction:
    """Least bi-Lipschitz constant among bijections x -> y, reported
    multiplicatively (its logarithm is the usual additive distance)."""
    if len(x.points) != len(y.points):
        raise PreconditionError("no bijections between spaces of different sizes")
    slice_ = bilip_slice([x, y])
    best = slice_.lawvere_factor(0, 1)
    assert best is not None
    return best


# --- Hausdorff and Gromov-Hausdorff ------------------------------------------

def hausdorff_distance(space: FiniteMetricSpace, a: list[int], b: list[int]) -> Fraction:
    """max(max_{p in a} min_{q in b} d, max_{q in b} min_{p in a} d):
    the closed form of the smallest r with each set inside the r-ball
    neighbourhood of the other."""
    if not a or not b:
        raise PreconditionError("Hausdorff distance needs non-empty subsets")
    one = max(min(space.d[p][q] for q in b) for p in a)
    two = max(min(space.d[p][q] for p in a) for q in b)
    return max(one, two)


def _common_scale(x: FiniteMetricSpace, y: FiniteMetricSpace) -> int:
    scale = 1
    for space in (x, y):
        for row in space.d:
            for v in row:
                scale = math.lcm(scale, v.denominator)
    return scale


def _int_matrix(space: FiniteMetricSpace, scale: int) -> list[list[int]]:
    return [[int(v * scale) for v in row] for row in space.d]


def _gh_correspondences(dx: list[list[int]], dy: list[list[int]]) -> int:
    """Minimal distortion over correspondences, in the integer scale.

    Scans pairs (f: X -> Y, g: Y -> X); the induced correspondence is
    graph(f) union transposed graph(g), and this family realises the
    minimum (see module docstring).
    """
    n, m = len(dx), len(dy)
    f_choices = []
    for f in itertools.product(range(m), repeat=n):
        dis_f = 0
        for i in range(n):
            for j in range(i + 1, n):
                dis_f = max(dis_f, abs(dx[i][j] - dy[f[i]][f[j]]))
        f_choices.append((dis_f, f))
    f_choices.sort()
    best = None
    for dis_f, f in f_choices:
        if best is not None and dis_f >= best:
            break
        for g in itertools.product(range(n), repeat=m):
            dis = dis_f
            if best is not None and dis >= best:
                continue
            for j in range(m):
                for j2 in range(j + 1, m):
                    dis = max(dis, abs(dx[g[j]][g[j2]] - dy[j][j2]))
            for i in range(n):
                for j in range(m):
                    dis = max(dis, abs(dx[i][g[j]] - dy[f[i]][j]))
            if best is None or dis < best:
                best = dis
    assert best is not None
    return best


def _gh_gluings(dx: list[list[int]], dy: list[list[int]]) -> Fraction:
    """Infimum of the Hausdorff distance over semimetric gluings, in the
    integer scale, via the per-pattern closed form explained in the module
    docstring.  Returns the exact optimum (possibly half-integral)."""
    n, m = len(dx), len(dy)
    cells = n * m

    def cell(x: int, y: int) -> int:
        return x * m + y

    big = max(max(max(r) for r in dx), max(max(r) for r in dy), 0) * (cells + 1) + 1
    sp = [[big] * cells for _ in range(cells)]
    for x in range(n):
        for y in range(m):
            sp[cell(x, y)][cell(x, y)] = 0
    for y in range(m):
        for x in range(n):
            for x2 in range(n):
                if x != x2:
                    sp[cell(x, y)][cell(x2, y)] = dx[x][x2]
    for x in range(n):
        for y in range(m):
            for y2 in range(m):
                if y != y2:
                    c1, c2 = cell(x, y), cell(x, y2)
                    sp[c1][c2] = min(sp[c1][c2], dy[y][y2])
    for k in range(cells):
        spk = sp[k]
        for i in range(cells):
            dik = sp[i][k]
            row = sp[i]
            for j in range(cells):
                via = dik + spk[j]
                if via < row[j]:
                    row[j] = via

    # lower-bound constraints (p, q, v): r_p + r_q >= v
    lower: list[tuple[int, int, int]] = []
    for y in range(m):
        for x in range(n):
            for x2 in range(x + 1, n):
                lower.append((cell(x, y), cell(x2, y), dx[x][x2]))
    for x in range(n):
        for y in range(m):
            for y2 in range(y + 1, m):
                lower.append((cell(x, y), cell(x, y2), dy[y][y2]))

    # designated-set shortest distances, partial per f and per g
    f_rows = []
    for f in itertools.product(range(m), repeat=n):
        row = [min(sp[cell(x, f[x])][p] for x in range(n)) for p in range(cells)]
        f_rows.append(row)
    g_rows = []
    for g in itertools.product(range(n), repeat=m):
        row = [min(sp[cell(g[y], y)][p] for y in range(m)) for p in range(cells)]
        g_rows.append(row)

    best2 = None  # twice the optimal h, integer scale
    for frow in f_rows:
        for grow in g_rows:
            worst = 0
            for p, q, v in lower:
                slack = v - min(frow[p], grow[p]) - min(frow[q], grow[q])
                if slack > worst:
                    worst = slack
                    if best2 is not None and worst >= best2:
                        break
            if best2 is None or worst < best2:
                best2 = worst
    assert best2 is not None
    return Fraction(best2, 2)


def gh_distance(x: FiniteMetricSpace, y: FiniteMetricSpace, guard: int = GH_POINT_GUARD) -> Fraction:
    """Gromov-Hausdorff distance, computed along both routes; exact
    agreement between them is asserted on every call."""
    if not x.points or not y.points:
        raise PreconditionError("Gromov-Hausdorff distance needs non-empty spaces")
    if len(x.points) > guard or len(y.points) > guard:
        raise SizeGuardError(
            f"spaces of {len(x.points)} and {len(y.points)} points exceed the guard {guard}"
        )
    scale = _common_scale(x, y)
    dx = _int_matrix(x, scale)
    dy = _int_matrix(y, scale)
    via_corr = Fraction(_gh_correspondences(dx, dy), 2 * scale)
    via_glue = _gh_gluings(dx, dy) / scale
    if via_corr != via_glue:
        raise TheoremViolation(
            f"gluing route {via_glue} disagrees with correspondence route {via_corr}"
        )
    return via_corr


# --- gluings and cospan composition ------------------------------------------

@dataclass
class Gluing:
    """A cross matrix turning the disjoint union of two spaces into a
    semimetric: every mixed triangle inequality holds.  Zero cross
    distances are allowed (the Hausdorff objective is continuous in the
    cross matrix, so the semimetric optimum realises the infimum over
    honest metric gluings)."""

    x_space: FiniteMetricSpace
    y_space: FiniteMetricSpace
    cross: tuple[tuple[Fraction, ...], ...]

    def errors(self) -> list[str]:
        errs = []
        n, m = len(self.x_space.points), len(self.y_space.points)
        r = self.cross
        dx, dy = self.x_space.d, self.y_space.d
        if len(r) != n or any(len(row) != m for row in r):
            return [f"cross matrix is not {n}x{m}"]
        for x in range(n):
            for y in range(m):
                if r[x][y] < 0:
                    errs.append(f"negative cross distance at ({x},{y})")
        for x in range(n):
            for x2 in range(n):
                for y in range(m):
                    if r[x][y] > dx[x][x2] + r[x2][y]:
                        errs.append(f"r({x},{y}) > d({x},{x2}) + r({x2},{y})")
                    if x < x2 and dx[x][x2] > r[x][y] + r[x2][y]:
                        errs.append(f"d({x},{x2}) > r({x},{y}) + r({x2},{y})")
        for y in range(m):
            for y2 in range(m):
                for x in range(n):
                    if r[x][y] > r[x][y2] + dy[y2][y]:
                        errs.append(f"r({x},{y}) > r({x},{y2}) + d({y2},{y})")
                    if y < y2 and dy[y][y2] > r[x][y] + r[x][y2]:
                        errs.append(f"d({y},{y2}) > r({x},{y}) + r({x},{y2})")
        return errs

    def hausdorff(self) -> Fraction:
        """Hausdorff distance between the two halves inside the gluing."""
        one = max(min(row) for row in self.cross)
        two = max(min(self.cross[x][y] for x in range(len(self.cross))) for y in range(len(self.cross[0])))
        return max(one, two)


def identity_gluing(space: FiniteMetricSpace) -> Gluing:
    return Gluing(space, space, tuple(tuple(row) for row in space.d))


def compose_gluings(g1: Gluing, g2: Gluing) -> tuple[Gluing, list[str]]:
    """Metric amalgamation over the shared middle space: the composed cross
    distance is min over middle points of the two leg distances, then the
    whole three-block matrix is repaired to shortest paths (the quotient
    convention for the pushout of isometric embeddings).  Returns the
    composed gluing plus any degeneracy notes (distinct points at repaired
    distance 0)."""
    if g1.y_space != g2.x_space:
        raise PreconditionError("gluings do not share their middle space")
    X, Y, Z = g1.x_space, g1.y_space, g2.y_space
    n, k, m = len(X.points), len(Y.points), len(Z.points)
    size = n + k + m

    def block(i: int, j: int) -> Fraction:
        def who(t: int) -> tuple[str, int]:
            if t < n:
                return "x", t
            if t < n + k:
                return "y", t - n
            return "z", t - n - k

        (si, ii), (sj, jj) = who(i), who(j)
        if si == sj:
            return {"x": X, "y": Y, "z": Z}[si].d[ii][jj]
        if (si, sj) == ("x", "y"):
            return g1.cross[ii][jj]
        if (si, sj) == ("y", "x"):
            return g1.cross[jj][ii]
        if (si, sj) == ("y", "z"):
            return g2.cross[ii][jj]
        if (si, sj) == ("z", "y"):
            return g2.cross[jj][ii]
        if (si, sj) == ("x", "z"):
            return min(g1.cross[ii][y] + g2.cross[y][jj] for y in range(k))
        return min(g1.cross[jj][y] + g2.cross[y][ii] for y in range(k))

    raw = [[block(i, j) for j in range(size)] for i in range(size)]
    repaired = shortest_path_repair(raw)
    notes = []
    for i in range(size):
        for j in range(i + 1, size):
            if repaired[i][j] == 0:
                notes.append(f"amalgam identifies points {i} and {j}")
    cross = tuple(tuple(repaired[i][n + k + j] for j in range(m)) for i in range(n))
    return Gluing(X, Z, cross), notes


def cospan_weight_triangle_check(g1: Gluing, g2: Gluing) -> tuple[bool, str]:
    """Weights of two cospans and of their composite satisfy the full
    triangle inequality; expected to hold for every pair of valid gluings."""
    errs = g1.errors() + g2.errors()
    if errs:
        raise PreconditionError("invalid gluing: " + "; ".join(errs))
    composed, notes = compose_gluings(g1, g2)
    comp_errors = composed.errors()
    if comp_errors:
        return False, "composed amalgam invalid: " + "; ".join(comp_errors)
    w1, w2 = g1.hausdorff(), g2.hausdorff()
    w12 = composed.hausdorff()
    if w12 > w1 + w2:
        return False, f"upper triangle fails: {w12} > {w1} + {w2}"
    if abs(w1 - w2) > w12:
        return False, f"lower triangle fails: |{w1} - {w2}| > {w12}"
    detail = f"weights {w1}, {w2}, composite {w12}"
    if notes:
        detail += "; " + "; ".join(notes)
    return True, detail


# --- bi-metric spaces ---------------------------------------------------------

def try_bimetric_space(
    n: int,
    a1: dict[tuple[int, int], Fraction],
    a2: dict[tuple[int, int], Fraction],
    h: Fraction,
) -> tuple[Metric1Space | None, ValidationReport]:
    """Two arrows of each sign between any two objects, composing by sign
    multiplication; +1 on the diagonal is the identity (weight 0) and -1
    on the diagonal weighs the constant h.  The space is emitted only when
    every full-triangle constraint holds; the characteristic instances read
    |a1 - a2| <= h <= a1 + a2."""
    if n < 1:
        raise PreconditionError("need at least one object")
    if h < 0:
        raise PreconditionError("h must be non-negative")
    signs = (1, -1)
    ids: dict[tuple[int, int, int], int] = {}
    arrows: list[Arrow] = []
    for x in range(n):
        for y in range(n):
            for s in signs:
                aid = len(arrows)
                ids[(s, x, y)] = aid
                sign = "+" if s == 1 else "-"
                arrows.append(Arrow(aid, x, y, f"{sign}1_{x}{y}"))
    objs = tuple(Obj(i) for i in range(n))
    identity = {x: ids[(1, x, x)] for x in range(n)}
    composition = {}
    for (s1, x, y), f in ids.items():
        for (s2, y2, z), g in ids.items():
            if y == y2:
                composition[(f, g)] = ids[(s1 * s2, x, z)]
    cat = FiniteCategory(objs, tuple(arrows), identity, composition)

    def weight_of(s: int, x: int, y: int) -> Weight:
        if x == y:
            return Weight(0) if s == 1 else Weight(Fraction(h))
        table = a1 if s == 1 else a2
        if (x, y) not in table:
            raise PreconditionError(f"a{1 if s == 1 else 2} missing entry for ({x},{y})")
        return Weight(Fraction(table[(x, y)]))

    weights = tuple(weight_of(s, x, y) for (s, x, y) in (key for key in _arrow_keys(n, signs)))
    space = Metric1Space(cat, weights)
    report = validate_metric1(space)
    return (space if report.ok else None, report)


def _arrow_keys(n: int, signs):
    for x in range(n):
        for y in range(n):
            for s in signs:
                yield (s, x, y)


def bimetric_space(n, a1, a2, h) -> Metric1Space:
    space, report = try_bimetric_space(n, a1, a2, h)
    if space is None:
        raise PreconditionError(
            "bi-metric constraints violated: " + "; ".join(report.violations)
        )
    return space
