import itertools

import pytest

from hilbfold.localmodel import (ComponentTranslation, PolyIdealGens,
                                 build_sing_complex, deformation_ideal,
                                 expected_intersection_labels,
                                 local_component_count,
                                 pairwise_incomparable,
                                 polytope_lattice_volume, primary_components,
                                 punctual_local_ring, reduced_ideal,
                                 technical_ideal, toric_polytope,
                                 translate_component,
                                 unimodular_triangulation,
                                 verify_decomposition_ff, verify_reduction,
                                 verify_sing_complex)

ACCEPTANCE_PAIRS = [(2, 1), (3, 1), (3, 2), (3, 3), (4, 1), (4, 2)]


# -- generator families -----------------------------------------------------

def test_deformation_ideal_block_sizes():
    n, k, u = 3, 2, (2, 2, 1)
    ideal = deformation_ideal(n, k, u)
    # blocks: (n-k)(n-1), (n-k)(n-1)sum(u_r - 1), and for the inner axes
    # (n-1)k each for the two coefficient blocks, (n-1)sum(u_j-2) for the
    # recursion, (n-1)sum over j of sum_{r != j}(u_r - 1) for cross rows
    s = sum(x - 1 for x in u[:k])
    expected = ((n - k) * (n - 1)
                + (n - k) * (n - 1) * s
                + (n - 1) * k
                + (n - 1) * k
                + (n - 1) * sum(x - 2 for x in u[:k])
                + (n - 1) * sum(sum(u[r] - 1 for r in range(k) if r != j)
                                for j in range(k)))
    assert len(ideal.generators) == expected


def test_deformation_ideal_k_equals_n_has_no_outer_blocks():
    ideal = deformation_ideal(3, 3, (2, 2, 2))
    names = ideal.variables
    # no generator may involve a product of two A-variables
    for gen in ideal.generators:
        avars = [v for _, powers in gen for v, _ in powers
                 if names[v].startswith("A")]
        assert len(avars) <= 1


def test_deformation_ideal_2_1_structure():
    ideal = deformation_ideal(2, 1, (3, 1))
    assert "A1" in ideal.variables and "a2_1_2" in ideal.variables


def test_reduced_ideal_3_1():
    ideal = reduced_ideal(3, 1)
    assert ideal.pretty() == ["A1*a2", "A1*a3", "a2*a3*a1_1"]


def test_reduced_ideal_2_1():
    assert reduced_ideal(2, 1).pretty() == ["A1*a2"]


def test_reduced_ideal_3_2_variables():
    ideal = reduced_ideal(3, 2)
    assert ideal.variables == ("b1", "b2", "a1_2", "a2_1", "a3_1", "a3_2")


def test_poly_ideal_rejects_triple_terms():
    with pytest.raises(ValueError):
        PolyIdealGens(("x", "y"), (((1, ((0, 1),)), (1, ((1, 1),)),
                                    (1, ((0, 2),))),))


# -- primary decompositions ---------------------------------------------------

@pytest.mark.parametrize("n,k,expected", [(3, 1, 4), (4, 1, 5), (3, 2, 5),
                                          (4, 2, 7), (3, 3, 6), (2, 1, 3)])
def test_family_counts(n, k, expected):
    assert len(primary_components(n, k)) == expected
    assert local_component_count(n, k) == expected


def test_3_2_families_explicit():
    fams = primary_components(3, 2)
    kinds = sorted((f.kind, f.data) for f in fams)
    assert kinds == [("J", (1,)), ("J", (2,)), ("Q", (1,)), ("Q", (2,)),
                     ("Q", (3,))]


def test_families_incomparable_where_minimal():
    for n, k in ACCEPTANCE_PAIRS:
        fams = primary_components(n, k)
        if (n, k) == (2, 1):
            # the verbatim list is redundant exactly here: the mixed family
            # degenerates to <A1>, inside the origin pair's locus
            assert not pairwise_incomparable(fams)
            gens = [frozenset(f.gens.generators) for f in fams]
            bad = [(a, b) for a, b in itertools.combinations(range(3), 2)
                   if gens[a] <= gens[b] or gens[b] <= gens[a]]
            assert len(bad) == 1
        else:
            assert pairwise_incomparable(fams)


@pytest.mark.parametrize("n,k", ACCEPTANCE_PAIRS)
@pytest.mark.parametrize("q", [2, 3])
def test_decomposition_pointwise(n, k, q):
    assert verify_decomposition_ff(reduced_ideal(n, k),
                                   primary_components(n, k), q)


@pytest.mark.parametrize("n,k", ACCEPTANCE_PAIRS)
@pytest.mark.parametrize("q", [2, 3])
def test_punctual_ring_pointwise(n, k, q):
    u = tuple([2] * k + [1] * (n - k))
    ideal, primes = punctual_local_ring(n, k, u)
    expected = 2 ** k - (2 if k == n else 1)
    assert len(primes) == expected
    assert verify_decomposition_ff(ideal, primes, q)


def test_punctual_prime_labels():
    # colength of the vertex ideal with u = (3, 2, 1) is 4
    _, primes = punctual_local_ring(3, 2, (3, 2, 1))
    labels = {p.data: p.sigma_label for p in primes}
    assert labels[()] == (4, 1, (2, 1, 1))
    assert labels[(1,)] == (4, 2, (3, 1, 1))
    assert labels[(2,)] == (4, 2, (2, 2, 1))


@pytest.mark.parametrize("n,axes", [(3, (1,)), (3, (1, 2)), (4, (1, 2, 3)),
                                    (3, (1, 2, 3)), (5, (1, 2, 3))])
@pytest.mark.parametrize("q", [2, 3])
def test_technical_ideal_pointwise(n, axes, q):
    ideal, primes = technical_ideal(n, axes)
    assert verify_decomposition_ff(ideal, primes, q)
    expected = 2 ** len(axes) - (2 if len(axes) == n else 1)
    assert len(primes) == expected


@pytest.mark.parametrize("n,k", ACCEPTANCE_PAIRS)
@pytest.mark.parametrize("q", [2, 3])
def test_reduction_matches_deformation_ideal(n, k, q):
    u = tuple([2] * k + [1] * (n - k))
    assert verify_reduction(n, k, u, q)


def test_reduction_with_free_series_coefficients():
    assert verify_reduction(2, 1, (3, 1), 3)
    assert verify_reduction(3, 2, (3, 2, 1), 2)


# -- polytopes ------------------------------------------------------------------

@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_polytope_counts(k):
    p = toric_polytope(k)
    assert len(p.vertices) == 2 * k
    assert len(p.facets) == 2 ** k
    assert all(len(f) == k for f in p.facets)


def test_square_for_k2():
    p = toric_polytope(2)
    assert dict(p.vertices) == {"a1": (0, 0), "b2": (1, 0), "a2": (0, 1),
                                "b1": (1, 1)}


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_triangulation_counts_and_volume(k):
    p = toric_polytope(k)
    tri = unimodular_triangulation(p)  # raises on a non-unimodular simplex
    assert len(tri) == 2 ** (k - 1)
    assert polytope_lattice_volume(p) == 2 ** (k - 1)


def test_triangulation_simplices_use_vertices():
    p = toric_polytope(4)
    labels = {lbl for lbl, _ in p.vertices}
    for simplex in unimodular_triangulation(p):
        assert set(simplex) <= labels
        assert len(simplex) == 5


# -- singularity complexes ---------------------------------------------------------

def test_sing_complex_3_2_census():
    sc = build_sing_complex(3, 2)
    by_label = {c.label: c for c in sc.cells}
    assert set(by_label) == {"P1", "P2", "P3", "D1", "D2"}
    assert by_label["P3"].vertex_labels == frozenset(
        {"a3_1", "a3_2", "b1", "b2"})
    assert by_label["P1"].vertex_labels == frozenset({"a1_2", "b1", "b2"})
    assert by_label["D1"].vertex_labels == frozenset({"a2_1", "a3_1", "b2"})
    sizes = sorted(len(c.vertex_labels) for c in sc.cells)
    assert sizes == [3, 3, 3, 3, 4]  # two simplices, two triangles, a square


def test_sing_complex_3_3_simplices_meet_in_points():
    sc = build_sing_complex(3, 3)
    simplices = [i for i, c in enumerate(sc.cells) if c.kind == "simplex"]
    assert len(simplices) == 3
    for i, j in itertools.combinations(simplices, 2):
        common = sc.intersections[(min(i, j), max(i, j))]
        assert len(common) == 1 and next(iter(common)).startswith("b")


def test_sing_complex_3_1_recipe():
    sc = build_sing_complex(3, 1)
    cells = {c.label: sorted(c.vertex_labels) for c in sc.cells}
    assert cells == {"D0": ["a2", "a3"], "M1": ["A1", "a1_1"],
                     "M2": ["a1_1", "a2"], "M3": ["a1_1", "a3"]}
    hat = sc.hat_cells()
    assert all(len(c) == 3 for c in hat)  # triangles after coning


def test_sing_complex_intersection_dictionary():
    for n, k in [(3, 2), (3, 3), (4, 2), (4, 3)]:
        sc = build_sing_complex(n, k)
        for (i, j), common in sc.intersections.items():
            expected = expected_intersection_labels(
                n, k, sc.cells[i].prime, sc.cells[j].prime)
            assert common == expected


@pytest.mark.parametrize("n,k", [(2, 1), (3, 1), (3, 2), (3, 3), (4, 1),
                                 (4, 2), (4, 3)])
@pytest.mark.parametrize("q", [2, 3])
def test_sing_complex_pointwise(n, k, q):
    assert verify_sing_complex(build_sing_complex(n, k), q)


def test_local_count_matches_incident_cells_plus_smoothables():
    from hilbfold.hypercomplex import build_complex, cells_at_vertex
    for n in range(2, 5):
        for k in range(1, n + 1):
            if (n, k) == (2, 1):
                continue  # the verbatim family list is redundant there
            u = tuple([2] * k + [1] * (n - k))
            m = sum(u) + 1 - n
            if m < 2:
                continue
            vertex = tuple(x - 1 for x in u)
            incident = cells_at_vertex(build_complex(n, m), vertex)
            excess = n if k <= n - 2 else (n - 1 if k == n - 1 else 0)
            assert local_component_count(n, k) == incident + excess


# -- translations --------------------------------------------------------------------

def test_translate_k1_families():
    fams = {f.kind: f for f in primary_components(3, 1)}
    u = (5, 1, 1)
    origin = translate_component(fams["origin_pair"], 3, 1, u)
    assert origin == ComponentTranslation(False, ((1, 3),), (2, 2))
    line = translate_component(fams["single_line"], 3, 1, u)
    assert line == ComponentTranslation(True, ((1, 5),), ())


def test_translate_k2_families():
    fams = primary_components(4, 2)
    u = (3, 2, 1, 1)
    for fam in fams:
        tr = translate_component(fam, 4, 2, u)
        if fam.kind == "J":
            assert not tr.smoothable
            assert tr.grass == (len(fam.data) + 1, 4 - len(fam.data))
        else:
            assert tr.smoothable


def test_translate_dimension_bookkeeping_grid():
    for n in range(3, 5):
        for k in range(1, n + 1):
            u = tuple([3] * k + [1] * (n - k))
            for fam in primary_components(n, k):
                translate_component(fam, n, k, u)  # raises on mismatch
