"""Local models at the deepest singular points: generator families, their
set-theoretic primary decompositions, the attached toric polytopes and the
polyhedral complexes recording how the local components meet.

All ideals handled here are generated by monomials and binomial differences
with unit coefficients, so set-theoretic statements can be verified by
exhaustive sweeps over small prime fields (see ffield) instead of a general
primary-decomposition engine.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd as _gcd

from . import ffield
from .foldring import component_dimension


# --------------------------------------------------------------------------
# Monomial/binomial generator lists.
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class PolyIdealGens:
    """Generators over a fixed ordered variable list; every generator is a
    monomial or a difference of two monomials (checked on construction).

    A generator is a tuple of (coeff, ((var_index, exponent), ...)) terms.
    """

    variables: tuple
    generators: tuple
    free_variables: tuple = ()

    def __post_init__(self):
        nv = len(self.variables)
        for gen in self.generators:
            if not 1 <= len(gen) <= 2:
                raise ValueError("generators must be monomials or binomials")
            for coeff, powers in gen:
                if coeff not in (1, -1):
                    raise ValueError("coefficients must be +-1")
                for var, exp in powers:
                    if not (0 <= var < nv and exp >= 1):
                        raise ValueError("bad variable power")

    def var_index(self, name: str) -> int:
        return self.variables.index(name)

    def nvars(self) -> int:
        return len(self.variables)

    def pretty(self) -> list:
        out = []
        for gen in self.generators:
            parts = []
            for coeff, powers in gen:
                names = "*".join(
                    self.variables[v] if e == 1 else f"{self.variables[v]}^{e}"
                    for v, e in powers)
                parts.append(("-" if coeff < 0 else "+") + names)
            text = "".join(parts)
            out.append(text[1:] if text.startswith("+") else text)
        return out


def _mono(coeff, *var_powers):
    return (coeff, tuple(var_powers))


def _gen(*terms):
    return tuple(terms)


# --------------------------------------------------------------------------
# The deformation ideal at a lattice-vertex ideal and its reduced form.
# --------------------------------------------------------------------------


def deformation_variables(n: int, k: int, u):
    names = [f"A{i}" for i in range(1, n + 1)]
    for i in range(1, n + 1):
        for j in range(1, k + 1):
            for s in range(1, u[j - 1]):
                names.append(f"a{i}_{j}_{s}")
    return tuple(names)


def deformation_ideal(n: int, k: int, u) -> PolyIdealGens:
    """The six relation blocks cutting out the deformations of the vertex
    ideal with degree vector u (u_i >= 2 exactly on the first k axes)."""
    u = tuple(u)
    if not 1 <= k <= n:
        raise ValueError("k out of range")
    if len(u) != n or any(u[i] < 2 for i in range(k)) or \
            any(u[i] != 1 for i in range(k, n)):
        raise ValueError("degree vector incompatible with k")
    names = deformation_variables(n, k, u)
    idx = {name: p for p, name in enumerate(names)}

    def A(i):
        return idx[f"A{i}"]

    def al(i, j, s):
        return idx[f"a{i}_{j}_{s}"]

    gens = []
    # outer-axis times outer-axis coefficients
    for j in range(k + 1, n + 1):
        for i in range(1, n + 1):
            if i != j:
                gens.append(_gen(_mono(1, (A(i), 1), (A(j), 1))))
    # outer-axis coefficient against every series coefficient of an outer row
    for j in range(k + 1, n + 1):
        for i in range(1, n + 1):
            if i == j:
                continue
            for r in range(1, k + 1):
                for s in range(1, u[r - 1]):
                    gens.append(_gen(_mono(1, (A(i), 1), (al(j, r, s), 1))))
    # top coefficient times bottom coefficient recovers the constant
    for j in range(1, k + 1):
        for i in range(1, n + 1):
            if i != j:
                gens.append(_gen(_mono(1, (al(i, j, u[j - 1] - 1), 1),
                                       (al(j, j, 1), 1)),
                                 _mono(-1, (A(i), 1))))
    # top coefficient kills the constant of its own row
    for j in range(1, k + 1):
        for i in range(1, n + 1):
            if i != j:
                gens.append(_gen(_mono(1, (al(i, j, u[j - 1] - 1), 1),
                                       (A(j), 1))))
    # descending recursion among the series coefficients
    for j in range(1, k + 1):
        for i in range(1, n + 1):
            if i == j:
                continue
            for s in range(1, u[j - 1] - 1):
                gens.append(_gen(_mono(1, (al(i, j, u[j - 1] - 1), 1),
                                       (al(j, j, s + 1), 1)),
                                 _mono(-1, (al(i, j, s), 1))))
    # cross-row products vanish
    for j in range(1, k + 1):
        for i in range(1, n + 1):
            if i == j:
                continue
            for r in range(1, k + 1):
                if r == j:
                    continue
                for s in range(1, u[r - 1]):
                    gens.append(_gen(_mono(1, (al(i, j, u[j - 1] - 1), 1),
                                           (al(j, r, s), 1))))
    return PolyIdealGens(names, tuple(gens))


def reduced_variables(n: int, k: int):
    if k == 1:
        return ("A1", "a1_1") + tuple(f"a{i}" for i in range(2, n + 1))
    names = [f"b{j}" for j in range(1, k + 1)]
    for i in range(1, n + 1):
        for j in range(1, k + 1):
            if i != j:
                names.append(f"a{i}_{j}")
    return tuple(names)


def reduced_ideal(n: int, k: int) -> PolyIdealGens:
    """The eliminated presentation of the deformation ring.

    Independent of the degree vector; the dropped series coefficients are
    free and recorded as name patterns in free_variables."""
    if not 1 <= k <= n:
        raise ValueError("k out of range")
    names = reduced_variables(n, k)
    idx = {name: p for p, name in enumerate(names)}
    gens = []
    if k == 1:
        a1 = idx["A1"]
        a11 = idx["a1_1"]
        for i in range(2, n + 1):
            gens.append(_gen(_mono(1, (a1, 1), (idx[f"a{i}"], 1))))
        for i, j in itertools.combinations(range(2, n + 1), 2):
            gens.append(_gen(_mono(1, (idx[f"a{i}"], 1),
                                   (idx[f"a{j}"], 1), (a11, 1))))
        return PolyIdealGens(names, tuple(gens),
                             free_variables=("a1_s for 2 <= s",))

    def b(j):
        return idx[f"b{j}"]

    def al(i, j):
        return idx[f"a{i}_{j}"]

    # column-chain products vanish
    for i in range(1, n + 1):
        for j in range(1, k + 1):
            if i == j:
                continue
            for r in range(1, k + 1):
                if r != j:
                    gens.append(_gen(_mono(1, (al(i, j), 1), (al(j, r), 1))))
    # weighted rows agree across columns
    for i in range(1, n + 1):
        for j in range(1, k + 1):
            for r in range(j + 1, k + 1):
                if i != j and i != r:
                    gens.append(_gen(_mono(1, (al(i, j), 1), (b(j), 1)),
                                     _mono(-1, (al(i, r), 1), (b(r), 1))))
    # reconstructed outer-row block (garbled in the source presentation):
    # a_{i,r} a_{j,r} b_r for r <= k < j, i distinct from r and j
    for r in range(1, k + 1):
        for j in range(k + 1, n + 1):
            for i in range(1, n + 1):
                if i != r and i != j:
                    gens.append(_gen(_mono(1, (al(i, r), 1), (al(j, r), 1),
                                           (b(r), 1))))
    return PolyIdealGens(names, tuple(gens),
                         free_variables=("b{i}_s for 2 <= s <= u_i - 1",))


# --------------------------------------------------------------------------
# Prime families.
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class PrimeFamily:
    kind: str
    data: tuple
    gens: PolyIdealGens
    sigma_label: tuple = ()   # (length, rows, degree vector) when punctual

    def pretty(self):
        return self.gens.pretty()


def _variable_ideal(names, idx, chosen):
    return tuple(_gen(_mono(1, (idx[v], 1))) for v in chosen)


def primary_components(n: int, k: int):
    """The prime families whose union is the local model, verbatim."""
    names = reduced_variables(n, k)
    idx = {name: p for p, name in enumerate(names)}
    fams = []
    if k == 1:
        rest = [f"a{i}" for i in range(2, n + 1)]
        fams.append(PrimeFamily(
            "origin_pair", (),
            PolyIdealGens(names, _variable_ideal(names, idx, ["A1", "a1_1"]))))
        fams.append(PrimeFamily(
            "single_line", (),
            PolyIdealGens(names, _variable_ideal(names, idx, rest))))
        for i in range(2, n + 1):
            chosen = ["A1"] + [f"a{j}" for j in range(2, n + 1) if j != i]
            fams.append(PrimeFamily(
                "line_plus_point", (i,),
                PolyIdealGens(names, _variable_ideal(names, idx, chosen))))
        return fams

    def b(j):
        return idx[f"b{j}"]

    def al(i, j):
        return idx[f"a{i}_{j}"]

    for i in range(1, n + 1):
        gens = []
        cols = [j for j in range(1, k + 1) if j != i]
        for r, s in itertools.combinations(cols, 2):
            gens.append(_gen(_mono(1, (al(i, r), 1), (b(r), 1)),
                             _mono(-1, (al(i, s), 1), (b(s), 1))))
        for r in range(1, n + 1):
            if r == i:
                continue
            for s in range(1, k + 1):
                if r != s:
                    gens.append(_gen(_mono(1, (al(r, s), 1))))
        fams.append(PrimeFamily("Q", (i,), PolyIdealGens(names, tuple(gens))))

    for size in range(1, min(k, n - 2) + 1):
        for subset in itertools.combinations(range(1, k + 1), size):
            s_set = set(subset)
            gens = [_gen(_mono(1, (b(j), 1))) for j in subset]
            for j in subset:
                for r in range(1, k + 1):
                    if r != j:
                        gens.append(_gen(_mono(1, (al(j, r), 1))))
            for r in range(1, n + 1):
                if r in s_set:
                    continue
                for s in range(1, k + 1):
                    if s not in s_set and r != s:
                        gens.append(_gen(_mono(1, (al(r, s), 1))))
            fams.append(PrimeFamily("J", subset,
                                    PolyIdealGens(names, tuple(gens))))
    return fams


def local_component_count(n: int, k: int) -> int:
    """Closed branch formula, asserted against the family enumeration."""
    if k == 1:
        expected = n + 1
    elif k <= n - 2:
        expected = n + 2 ** k - 1
    elif k == n - 1:
        expected = n + 2 ** (n - 1) - 2
    else:
        expected = 2 ** k - 2
    direct = len(primary_components(n, k))
    if direct != expected:
        raise AssertionError(
            f"family enumeration {direct} disagrees with formula {expected}")
    return expected


def punctual_variables(n: int, k: int):
    return tuple(f"a{i}_{j}" for i in range(1, n + 1)
                 for j in range(1, k + 1) if i != j)


def punctual_local_ring(n: int, k: int, u):
    """Local model of the punctual locus at a vertex ideal: the chain
    products a_{i,j} a_{j,r} vanish, and the prime pieces are labelled by
    the sub-families of axes kept at full degree."""
    u = tuple(u)
    if len(u) != n or any(u[i] < 2 for i in range(k)) or \
            any(u[i] != 1 for i in range(k, n)):
        raise ValueError("degree vector incompatible with k")
    names = punctual_variables(n, k)
    idx = {name: p for p, name in enumerate(names)}
    gens = []
    for j in range(1, k + 1):
        for i in range(1, n + 1):
            if i == j:
                continue
            for r in range(1, k + 1):
                if r != j:
                    gens.append(_gen(_mono(1, (idx[f"a{i}_{j}"], 1),
                                           (idx[f"a{j}_{r}"], 1))))
    ideal = PolyIdealGens(names, tuple(gens))

    m = sum(u) + 1 - n
    primes = []
    full = tuple(range(1, k + 1))
    for size in range(0, k):
        if k == n and size == 0:
            continue
        for t_subset in itertools.combinations(full, size):
            t_set = set(t_subset)
            chosen = []
            for r in full:
                if r in t_set:
                    continue
                for s in full:
                    if s not in t_set and s != r:
                        chosen.append(f"a{r}_{s}")
            for j in t_subset:
                for i in range(1, n + 1):
                    if i != j:
                        chosen.append(f"a{i}_{j}")
            chosen = sorted(set(chosen), key=names.index)
            degree = tuple(u[i] - (1 if (i + 1) <= k and (i + 1) not in t_set
                                   else 0) for i in range(n))
            primes.append(PrimeFamily(
                "punctual", t_subset,
                PolyIdealGens(names, _variable_ideal(names, idx, chosen)),
                sigma_label=(m, n - k + size, degree)))
    return ideal, primes


def technical_ideal(n: int, axes):
    """The chain-product ideal on an axis subset, with its prime pieces."""
    axes = tuple(axes)
    names = tuple(f"a{i}_{j}" for i in range(1, n + 1)
                  for j in axes if i != j)
    idx = {name: p for p, name in enumerate(names)}
    gens = []
    for j in axes:
        for i in range(1, n + 1):
            if i == j:
                continue
            for r in axes:
                if r != j:
                    gens.append(_gen(_mono(1, (idx[f"a{i}_{j}"], 1),
                                           (idx[f"a{j}_{r}"], 1))))
    ideal = PolyIdealGens(names, tuple(gens))
    primes = []
    for size in range(0, len(axes)):
        if len(axes) == n and size == 0:
            continue
        for t_subset in itertools.combinations(axes, size):
            t_set = set(t_subset)
            chosen = []
            for r in axes:
                if r in t_set:
                    continue
                for s in axes:
                    if s not in t_set and s != r:
                        chosen.append(f"a{r}_{s}")
            for j in t_subset:
                for i in range(1, n + 1):
                    if i != j:
                        chosen.append(f"a{i}_{j}")
            chosen = sorted(set(chosen), key=names.index)
            primes.append(PrimeFamily(
                "technical", (axes, t_subset),
                PolyIdealGens(names, _variable_ideal(names, idx, chosen))))
    return ideal, primes


def verify_decomposition_ff(ideal: PolyIdealGens, primes, q: int,
                            budget=ffield.DEFAULT_BUDGET,
                            use_numba=None) -> bool:
    """Pointwise over F_q: the ideal vanishes exactly on the union of the
    primes' vanishing loci."""
    prime_gens = [p.gens.generators if isinstance(p, PrimeFamily)
                  else p.generators for p in primes]
    return ffield.union_equals_ideal(ideal.generators, prime_gens,
                                     ideal.nvars(), q, budget, use_numba)


def pairwise_incomparable(primes) -> bool:
    """No family's generator set may contain another's (minimality)."""
    sets = [frozenset(p.gens.generators) for p in primes]
    for a, b in itertools.combinations(range(len(sets)), 2):
        if sets[a] <= sets[b] or sets[b] <= sets[a]:
            return False
    return True


def verify_reduction(n: int, k: int, u, q: int,
                     budget=ffield.DEFAULT_BUDGET, use_numba=None) -> bool:
    """The eliminated presentation must match the full deformation ideal
    over F_q: the big variety projects into the small one, and the point
    counts agree up to the free series coefficients."""
    u = tuple(u)
    big = deformation_ideal(n, k, u)
    small = reduced_ideal(n, k)
    big_idx = {name: p for p, name in enumerate(big.variables)}
    if k == 1:
        mapping = {small.var_index("A1"): big_idx["A1"],
                   small.var_index("a1_1"): big_idx["a1_1_1"]}
        for i in range(2, n + 1):
            mapping[small.var_index(f"a{i}")] = big_idx[f"a{i}_1_{u[0] - 1}"]
        free = u[0] - 2
    else:
        mapping = {}
        for j in range(1, k + 1):
            mapping[small.var_index(f"b{j}")] = big_idx[f"a{j}_{j}_1"]
        for i in range(1, n + 1):
            for j in range(1, k + 1):
                if i != j:
                    mapping[small.var_index(f"a{i}_{j}")] = \
                        big_idx[f"a{i}_{j}_{u[j - 1] - 1}"]
        free = sum(u[j] - 2 for j in range(k))
    if not ffield.projection_into_variety(
            big.generators, big.nvars(), small.generators, small.nvars(),
            mapping, q, budget, use_numba):
        return False
    big_count = ffield.count_vanishing(big.generators, big.nvars(), q,
                                       budget, use_numba)
    small_count = ffield.count_vanishing(small.generators, small.nvars(), q,
                                         budget, use_numba)
    return big_count == small_count * q ** free


# --------------------------------------------------------------------------
# Toric polytopes.
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class PolytopePk:
    """Polytope of the chain toric ideal: 2k labelled lattice vertices in
    R^k whose 2^k facets are all simplices."""

    k: int
    vertices: tuple          # ((label, coords), ...)
    facets: tuple            # tuple of frozensets of labels

    def coords_of(self):
        return dict(self.vertices)


def _pk_vertex_dictionary(k: int):
    verts = []
    e = lambda i: tuple(1 if j == i else 0 for j in range(k))  # noqa: E731
    zero = (0,) * k
    e12 = tuple(a + b for a, b in zip(e(0), e(1)))
    verts.append(("a1", zero))
    verts.append(("b2", e(0)))
    verts.append(("a2", e(1)))
    verts.append(("b1", e12))
    for i in range(3, k + 1):
        verts.append((f"a{i}", e(i - 1)))
        verts.append((f"b{i}", tuple(a - b for a, b in zip(e12, e(i - 1)))))
    return verts


def toric_polytope(k: int) -> PolytopePk:
    """Vertices and facets of the chain-ideal polytope; the facet formula is
    validated against an exact supporting-hyperplane enumeration."""
    if k < 2:
        raise ValueError("need k >= 2")
    verts = _pk_vertex_dictionary(k)
    tail = list(range(3, k + 1))
    base_pairs = [("a1", "b2"), ("a1", "a2"), ("b2", "b1"), ("a2", "b1")]
    facets = []
    for v0 in base_pairs:
        for split in itertools.product([0, 1], repeat=len(tail)):
            labels = set(v0)
            for sel, i in zip(split, tail):
                labels.add(f"a{i}" if sel == 0 else f"b{i}")
            facets.append(frozenset(labels))
    facets = tuple(sorted(set(facets), key=sorted))
    if len(facets) != 2 ** k:
        raise AssertionError("facet formula did not produce 2^k facets")
    enumerated = _enumerate_facets(verts)
    if set(enumerated) != set(facets):
        raise AssertionError(
            "facet formula disagrees with the hyperplane enumeration")
    return PolytopePk(k, tuple(verts), facets)


def _enumerate_facets(labelled_vertices):
    """Exact facet enumeration: for every hyperplane spanned by vertices,
    keep the ones supporting the polytope on one side."""
    labels = [lbl for lbl, _ in labelled_vertices]
    pts = [tuple(Fraction(c) for c in coords) for _, coords in labelled_vertices]
    dim = len(pts[0])
    facets = set()
    for subset in itertools.combinations(range(len(pts)), dim):
        normal_offset = _hyperplane_through(pts, subset)
        if normal_offset is None:
            continue
        normal, offset = normal_offset
        vals = [sum(a * x for a, x in zip(normal, p)) - offset for p in pts]
        if all(v >= 0 for v in vals) or all(v <= 0 for v in vals):
            on = frozenset(labels[i] for i, v in enumerate(vals) if v == 0)
            if len(on) >= dim:
                facets.add(on)
    return facets


def _hyperplane_through(pts, subset):
    """Normal and offset of the affine hyperplane through dim points, or
    None when they are affinely dependent."""
    base = pts[subset[0]]
    rows = [[p - b for p, b in zip(pts[i], base)] for i in subset[1:]]
    dim = len(base)
    normal = _rational_kernel_vector(rows, dim)
    if normal is None:
        return None
    offset = sum(a * x for a, x in zip(normal, base))
    return normal, offset


def _rational_kernel_vector(rows, dim):
    work = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(dim):
        sel = next((i for i in range(r, len(work)) if work[i][c]), None)
        if sel is None:
            continue
        work[r], work[sel] = work[sel], work[r]
        piv = work[r][c]
        work[r] = [x / piv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
    if r != dim - 1:
        return None
    free = next(c for c in range(dim) if c not in pivots)
    vec = [Fraction(0)] * dim
    vec[free] = Fraction(1)
    for row, pc in zip(work, pivots):
        vec[pc] = -row[free]
    return tuple(vec)


def unimodular_triangulation(p: PolytopePk):
    """The inductive simplicial subdivision: every simplex of the one-lower
    polytope is coned over the two new vertices.  Returns label tuples;
    every simplex has lattice determinant +-1 and the count is 2^(k-1)."""
    coords = dict(p.vertices)
    simplices = [("a1", "b2", "a2"), ("b2", "a2", "b1")]
    for i in range(3, p.k + 1):
        simplices = [s + (f"a{i}",) for s in simplices] + \
                    [s + (f"b{i}",) for s in simplices]
    if len(simplices) != 2 ** (p.k - 1):
        raise AssertionError("unexpected simplex count")
    for s in simplices:
        if abs(_lattice_det([coords[lbl] for lbl in s])) != 1:
            raise AssertionError(f"simplex {s} is not unimodular")
    return tuple(simplices)


def _lattice_det(points):
    base = points[0]
    rows = [[Fraction(p - b) for p, b in zip(q, base)] for q in points[1:]]
    n = len(rows)
    det = Fraction(1)
    for c in range(n):
        sel = next((i for i in range(c, n) if rows[i][c]), None)
        if sel is None:
            return 0
        if sel != c:
            rows[c], rows[sel] = rows[sel], rows[c]
            det = -det
        det *= rows[c][c]
        inv = 1 / rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return det


def polytope_lattice_volume(p: PolytopePk) -> int:
    """Normalized volume by exhaustive dilation point counts and the top
    finite difference; independent of the triangulation."""
    coords = [pt for _, pt in p.vertices]
    k = p.k
    hyperplanes = []
    for f_labels in p.facets:
        pts = [dict(p.vertices)[lbl] for lbl in sorted(f_labels)]
        sub = [tuple(Fraction(c) for c in q) for q in pts]
        normal_offset = _hyperplane_through(sub, tuple(range(len(sub))))
        if normal_offset is None:
            raise AssertionError("degenerate facet")
        normal, offset = normal_offset
        inner = [q for q in coords
                 if sum(a * x for a, x in zip(normal, q)) != offset]
        sample = inner[0]
        if sum(a * x for a, x in zip(normal, sample)) < offset:
            normal = tuple(-a for a in normal)
            offset = -offset
        hyperplanes.append((normal, offset))

    int_planes = []
    for normal, offset in hyperplanes:
        scale = 1
        for x in list(normal) + [offset]:
            scale = scale * x.denominator // _gcd(scale, x.denominator)
        int_planes.append(([int(x * scale) for x in normal],
                           int(offset * scale)))

    import numpy as np

    normals = np.asarray([nrm for nrm, _ in int_planes], dtype=np.int64)
    offsets = np.asarray([off for _, off in int_planes], dtype=np.int64)

    def count(t):
        if t == 0:
            return 1
        axes = [np.arange(min(c[i] for c in coords) * t,
                          max(c[i] for c in coords) * t + 1, dtype=np.int64)
                for i in range(k)]
        grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1)
        pts = grid.reshape(-1, k)
        ok = (pts @ normals.T >= offsets * t).all(axis=1)
        return int(ok.sum())

    values = [count(t) for t in range(k + 1)]
    return sum((-1) ** (k - j) * comb(k, j) * values[j] for j in range(k + 1))


# --------------------------------------------------------------------------
# The singularity complexes.
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class SingCell:
    label: str
    kind: str                # "simplex" | "toric"
    vertex_labels: frozenset
    prime: PrimeFamily
    face_sets: tuple = ()    # vertex sets of all faces, toric cells only

    def is_face(self, labels: frozenset) -> bool:
        if self.kind == "simplex":
            return labels <= self.vertex_labels
        return labels in self.face_sets


@dataclass(frozen=True)
class SingComplex:
    n: int
    k: int
    variables: tuple
    cells: tuple
    intersections: dict = field(compare=False)  # (i, j) -> frozenset labels

    def hat_cells(self):
        """Cone version: every cell picks up the apex label '0'."""
        return [frozenset({"0"}) | c.vertex_labels for c in self.cells]


def _toric_face_sets(labelled_vertices):
    """All vertex sets of faces: intersections of facet vertex sets."""
    facets = _enumerate_facets(labelled_vertices)
    all_labels = frozenset(lbl for lbl, _ in labelled_vertices)
    faces = {all_labels} | set(facets)
    frontier = set(facets)
    while frontier:
        new = set()
        for a in frontier:
            for b in facets:
                c = a & b
                if c and c not in faces:
                    new.add(c)
        faces |= new
        frontier = new
    faces |= {frozenset({lbl}) for lbl in all_labels}
    return tuple(sorted(faces, key=sorted))


def build_sing_complex(n: int, k: int) -> SingComplex:
    """Cells for every prime family, glued along shared vertex labels.

    Variable-generated primes give simplices on their complementary
    variables; the toric primes carry the chain polytope with its labelled
    face lattice."""
    fams = primary_components(n, k)
    names = reduced_variables(n, k)
    cells = []
    for fam in fams:
        if fam.kind in ("origin_pair", "single_line", "line_plus_point", "J"):
            killed = {names[gen[0][1][0][0]] for gen in fam.gens.generators}
            labels = frozenset(v for v in names if v not in killed)
            if fam.kind == "origin_pair":
                tag = "D0"
            elif fam.kind == "single_line":
                tag = "M1"
            elif fam.kind == "line_plus_point":
                tag = f"M{fam.data[0]}"
            else:
                tag = "D" + "".join(map(str, fam.data))
            cells.append(SingCell(tag, "simplex", labels, fam))
        else:
            i = fam.data[0]
            verts = _qi_polytope_vertices(n, k, i)
            cells.append(SingCell(f"P{i}", "toric",
                                  frozenset(lbl for lbl, _ in verts), fam,
                                  face_sets=_toric_face_sets(verts)))
    inters = {}
    for a, b in itertools.combinations(range(len(cells)), 2):
        common = cells[a].vertex_labels & cells[b].vertex_labels
        inters[(a, b)] = common
        for cell in (cells[a], cells[b]):
            if common and not cell.is_face(common):
                raise AssertionError(
                    f"shared labels {sorted(common)} are not a face of {cell.label}")
    return SingComplex(n, k, names, tuple(cells), inters)


def _qi_polytope_vertices(n: int, k: int, i: int):
    """Labelled lattice vertices of the toric cell of the i-th smoothable
    prime: the chain polytope in the surviving alpha/beta coordinates."""
    if i > k:
        dictionary = _pk_vertex_dictionary(k)
        relabel = {}
        for j in range(1, k + 1):
            relabel[f"a{j}"] = f"a{i}_{j}"
            relabel[f"b{j}"] = f"b{j}"
        return [(relabel[lbl], coords) for lbl, coords in dictionary]
    others = [j for j in range(1, k + 1) if j != i]
    if len(others) == 1:
        base = [("a1", (0,)), ("b1", (1,))]
    else:
        base = _pk_vertex_dictionary(len(others))
    out = []
    for lbl, coords in base:
        pos = int(lbl[1:]) - 1
        kind = lbl[0]
        j = others[pos]
        new = f"a{i}_{j}" if kind == "a" else f"b{j}"
        out.append((new, tuple(coords) + (0,)))
    extra = tuple([0] * len(others)) + (1,)
    out.append((f"b{i}", extra))
    return out


def expected_intersection_labels(n, k, fam_a: PrimeFamily, fam_b: PrimeFamily):
    """Predicted shared faces between local components (k >= 2 families)."""
    kinds = {fam_a.kind, fam_b.kind}
    all_b = {f"b{j}" for j in range(1, k + 1)}
    if kinds == {"Q"}:
        return frozenset(all_b)
    if kinds == {"J"}:
        s, t = set(fam_a.data), set(fam_b.data)
        labels = {f"b{j}" for j in range(1, k + 1) if j not in s | t}
        labels |= {f"a{i}_{j}" for i in range(1, n + 1)
                   for j in s & t if i not in s | t}
        return frozenset(labels)
    qf, jf = (fam_a, fam_b) if fam_a.kind == "Q" else (fam_b, fam_a)
    i = qf.data[0]
    s = set(jf.data)
    labels = {f"b{j}" for j in range(1, k + 1) if j not in s}
    if i not in s:
        labels |= {f"a{i}_{j}" for j in s if j != i}
    return frozenset(labels)


def verify_sing_complex(sc: SingComplex, q: int,
                        budget=ffield.DEFAULT_BUDGET, use_numba=None) -> bool:
    """Every pairwise label intersection must equal the pointwise
    intersection of the two varieties over F_q."""
    names = sc.variables
    for (a, b), common in sc.intersections.items():
        live = [names.index(v) for v in common if v in names]
        ok = ffield.coordinate_subspace_equals_intersection(
            sc.cells[a].prime.gens.generators,
            sc.cells[b].prime.gens.generators,
            len(names), live, q, budget, use_numba)
        if not ok:
            return False
    return True


# --------------------------------------------------------------------------
# Geometric meaning of the local primes.
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class ComponentTranslation:
    smoothable: bool
    line_lengths: tuple      # (axis, length) pairs, 1-based axes
    grass: tuple             # (length, rows) of the elementary factor, or ()

    def dimension(self, n):
        total = sum(length for _, length in self.line_lengths)
        if self.grass:
            length, rows = self.grass
            total += rows * (n - rows)
        return total


def translate_component(fam: PrimeFamily, n: int, k: int, u) -> ComponentTranslation:
    """Product-of-strata description of a local prime, with the dimension
    bookkeeping checked against the global component dimension."""
    u = tuple(u)
    m = sum(u) + 1 - n
    if fam.kind == "origin_pair":
        out = ComponentTranslation(False, ((1, m - 2),), (2, n - 1))
    elif fam.kind == "single_line":
        out = ComponentTranslation(True, ((1, m),), ())
    elif fam.kind == "line_plus_point":
        out = ComponentTranslation(True, ((1, m - 1), (fam.data[0], 1)), ())
    elif fam.kind == "Q":
        a = fam.data[0]
        lengths = tuple((i, u[i - 1] if i == a else u[i - 1] - 1)
                        for i in range(1, n + 1))
        out = ComponentTranslation(True, lengths, ())
    elif fam.kind == "J":
        s = set(fam.data)
        lengths = tuple((i, u[i - 1] - 2 if i in s else u[i - 1] - 1)
                        for i in range(1, k + 1))
        out = ComponentTranslation(False, lengths, (len(s) + 1, n - len(s)))
    else:
        raise ValueError(f"no translation for family kind {fam.kind}")

    if out.smoothable:
        expected = m
    else:
        rows = out.grass[1]
        expected = component_dimension(n, m, rows)
    if out.dimension(n) != expected:
        raise AssertionError(
            f"dimension bookkeeping broken for {fam.kind}{fam.data}")
    return out
