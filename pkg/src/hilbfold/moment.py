"""Moment maps: from punctual ideals to points of the dilated simplex.

The map sends a subspace with Pluecker coordinates q_A to the |q_A|^2
weighted average of the complementary indicator vectors e_{[n] - A},
translated by u - 1.  Everything is exact: the scalars are Gaussian
rationals, so the weights |q|^2 are honest rationals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .exact import ExactMatrix, minor
from .foldring import PunctualIdeal
from .hypercomplex import ComplexKnm, Face


@dataclass(frozen=True)
class PluckerVector:
    """Pluecker coordinates of an l-plane, indexed by l-subsets of axes."""

    l: int
    n: int
    coords: tuple  # ordered like itertools.combinations(range(n), l)

    def __post_init__(self):
        expected = len(list(itertools.combinations(range(self.n), self.l)))
        if len(self.coords) != expected:
            raise ValueError("wrong number of Pluecker coordinates")
        if not any(self.coords):
            raise ValueError("all Pluecker coordinates vanish")

    def items(self):
        return zip(itertools.combinations(range(self.n), self.l), self.coords)


def plucker_of(ideal: PunctualIdeal) -> PluckerVector:
    """Pluecker coordinates of the canonical generator matrix: the maximal
    minors in axis order (rows as given, columns the chosen axis subset)."""
    pure = ideal.pure_form()
    mat = pure.matrix
    coords = tuple(minor(mat, range(pure.l), cols)
                   for cols in itertools.combinations(range(pure.n), pure.l))
    return PluckerVector(pure.l, pure.n, coords)


@dataclass(frozen=True)
class MomentPoint:
    coords: tuple  # Fractions

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    def __iter__(self):
        return iter(self.coords)

    def sum(self) -> Fraction:
        return sum(self.coords, Fraction(0))


def moment_grass(p: PluckerVector) -> MomentPoint:
    """Weighted average of indicator vectors: sum |q_A|^2 e_A / sum |q_A|^2."""
    total = Fraction(0)
    acc = [Fraction(0)] * p.n
    for subset, q in p.items():
        w = q.norm_sq()
        if not w:
            continue
        total += w
        for i in subset:
            acc[i] += w
    return MomentPoint(tuple(c / total for c in acc))


def _moment_of_presentation(n, l, u, matrix: ExactMatrix) -> MomentPoint:
    total = Fraction(0)
    acc = [Fraction(0)] * n
    for cols in itertools.combinations(range(n), l):
        w = minor(matrix, range(l), cols).norm_sq()
        if not w:
            continue
        total += w
        outside = set(range(n)) - set(cols)
        for i in outside:
            acc[i] += w
    if not total:
        raise ValueError("all Pluecker coordinates vanish")
    return MomentPoint(tuple(acc[i] / total + u[i] - 1 for i in range(n)))


def moment_component(ideal: PunctualIdeal, m: int | None = None) -> MomentPoint:
    """Moment image computed on the ideal's own presentation: the weighted
    average of complementary indicators, shifted by u - 1."""
    pure = ideal.pure_form()
    if m is not None and pure.colength() != m:
        raise ValueError(f"colength is {pure.colength()}, not {m}")
    return _moment_of_presentation(pure.n, pure.l, pure.u, pure.matrix)


def containing_presentations(ideal: PunctualIdeal):
    """All (l, u, matrix) presentations of the ideal inside the genuine
    component strata: pure-power rows of degree >= 2 may be peeled off into
    forced position, lowering the degree vector there.

    Yields (l, u, matrix) triples, one per containing component."""
    pure = ideal.pure_form()
    n = pure.n
    movable = [(row, axis) for row, axis in pure.monomial_rows()
               if pure.u[axis] >= 2]
    for r in range(len(movable) + 1):
        for chosen in itertools.combinations(movable, r):
            rows_out = set(row for row, _ in chosen)
            axes_out = set(axis for _, axis in chosen)
            l2 = pure.l - len(chosen)
            if not 1 <= l2 <= n - 1:
                continue
            u2 = tuple(pure.u[i] - 1 if i in axes_out else pure.u[i]
                       for i in range(n))
            rows = [pure.matrix.row(i) for i in range(pure.l)
                    if i not in rows_out]
            yield l2, u2, ExactMatrix(rows)


def moment_global(ideal: PunctualIdeal, m: int | None = None) -> MomentPoint:
    """Moment image, evaluated on every containing component and checked to
    agree; disagreement would mean the gluing is broken."""
    pure = ideal.pure_form()
    if m is not None and pure.colength() != m:
        raise ValueError(f"colength is {pure.colength()}, not {m}")
    values = [_moment_of_presentation(pure.n, l2, u2, mat)
              for l2, u2, mat in containing_presentations(ideal)]
    if not values:
        # only the full stratum presentation exists (e.g. the maximal ideal)
        return moment_component(ideal)
    first = values[0]
    for other in values[1:]:
        if other.coords != first.coords:
            raise AssertionError(
                f"moment images disagree across components: {values}")
    return first


def gluing_consistency_sweep(count: int = 100, seed: int = 0) -> int:
    """Seeded property sweep: random ideals pinned into several components
    must receive the same moment value from every one of them.

    Instances follow the intersection template (one pure-power generator of
    degree >= 2 plus generic rows on the remaining axes); any disagreement
    raises.  Returns the number of instances checked."""
    import random

    from .exact import rank
    from .foldring import FoldRingCtx, normalize_punctual

    rng = random.Random(seed)
    done = 0
    while done < count:
        n = rng.randint(2, 5)
        m = rng.randint(2, 7)
        lo, hi = max(1, n + 1 - m), n - 1
        if lo > hi:
            continue
        l = rng.randint(lo, hi)
        u = [1] * n
        for _ in range(m + l - 1 - n):
            u[rng.randrange(n)] += 1
        high = [i for i in range(n) if u[i] >= 2]
        if not high:
            continue
        pinned = rng.choice(high)
        rest = [i for i in range(n) if i != pinned]
        if l - 1 > len(rest):
            continue
        ctx = FoldRingCtx(n)
        gens = [ctx.axis_monomial(pinned, u[pinned])]
        if l - 1:
            while True:
                mat = ExactMatrix([[rng.randint(-4, 4)
                                    for _ in range(len(rest))]
                                   for _ in range(l - 1)])
                if rank(mat) == l - 1 and not any(
                        all(not mat[i, j] for i in range(l - 1))
                        for j in range(len(rest))):
                    break
            for r in range(l - 1):
                f = None
                for p, a in enumerate(rest):
                    if mat[r, p]:
                        t = ctx.axis_monomial(a, u[a], mat[r, p])
                        f = t if f is None else f + t
                gens.append(f)
        try:
            ideal = normalize_punctual(ctx, gens)
        except ValueError:
            continue
        if ideal.colength() != m:
            continue
        if len(list(containing_presentations(ideal))) < 2:
            continue
        moment_global(ideal, m)
        done += 1
    return done


def locate(point: MomentPoint, K: ComplexKnm) -> Face:
    """The unique minimal face of the complex containing the point."""
    coords = tuple(Fraction(c) for c in point.coords)
    if len(coords) != K.n or any(c < 0 for c in coords) or sum(coords) != K.m - 1:
        raise ValueError("point outside the dilated simplex")
    found = None
    for cell in K.cells_containing(coords):
        s1 = frozenset(i for i in range(K.n) if coords[i] == cell.shift[i])
        s2 = frozenset(i for i in range(K.n) if coords[i] == cell.shift[i] + 1)
        face = Face(K.n, cell.l, cell.shift, s1 - s2, s2)
        if found is None:
            found = face
        elif found != face:
            raise AssertionError("minimal face is not unique across cells")
    if found is None:
        raise ValueError("point not covered by any cell")
    return found
