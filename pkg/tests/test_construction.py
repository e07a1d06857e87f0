from collections import Counter
from itertools import combinations

import pytest

from achromatic_arboricity.construction import (
    arboricity_coloring,
    build_coloring,
    greedy_extend,
    hamiltonian_path_factorization,
    triplet_decomposition,
)
from achromatic_arboricity.graphcore import EdgeColoring, all_edges, is_forest, verify_coloring
from achromatic_arboricity.projplane import (
    InfinityLine,
    InfLinePoint,
    NotPrimeError,
    SlopedLine,
    VerticalLine,
    build_plane,
    incident,
)


@pytest.mark.parametrize("m", range(2, 42, 2))
def test_path_factorization_partitions_km(m):
    fact = hamiltonian_path_factorization(m)
    assert len(fact.paths) == m // 2
    counts = Counter()
    for j, path in enumerate(fact.paths):
        assert sorted(path) == list(range(m))
        edges = fact.path_edges(j)
        assert len(edges) == m - 1
        counts.update(edges)
    assert set(counts) == set(all_edges(m))
    assert set(counts.values()) == {1}


def test_path_factorization_m2():
    fact = hamiltonian_path_factorization(2)
    assert fact.path_edges(0) == [(0, 1)]


@pytest.mark.parametrize("m", [0, 1, 3, 7])
def test_path_factorization_rejects_odd(m):
    with pytest.raises(ValueError):
        hamiltonian_path_factorization(m)


def test_decomposition_q3():
    deco = triplet_decomposition(build_plane(3))
    assert deco.standalone == VerticalLine(0)
    assert len(deco.triplets) == 6
    assert deco.triplets[0].p == InfLinePoint(0)
    assert (deco.triplets[0].l, deco.triplets[0].m) == (SlopedLine(0, 0), InfinityLine())
    t1 = deco.triplets[1]
    assert (t1.p, t1.l, t1.m) == (InfLinePoint(1), SlopedLine(1, 0), SlopedLine(1, 1))
    assert len(deco.covered_lines()) - 1 == 12


@pytest.mark.parametrize("q", [3, 5, 7, 11])
def test_decomposition_coverage(q):
    plane = build_plane(q)
    deco = triplet_decomposition(plane)
    assert len(deco.triplets) == (q * q + q) // 2
    counts = Counter(deco.covered_lines())
    assert set(counts) == set(plane.lines)
    assert set(counts.values()) == {1}
    points = [t.p for t in deco.triplets]
    assert len(set(points)) == len(points)
    for t in deco.triplets:
        assert t.l != t.m
        assert plane.line_intersection(t.l, t.m) == t.p
        assert incident(t.p, t.l, q) and incident(t.p, t.m, q)


def test_decomposition_q5_group_sizes():
    deco = triplet_decomposition(build_plane(5))
    # 1 + 2 + 2 + 8 + 2
    assert len(deco.triplets) == 15


@pytest.mark.parametrize("q", [2, 4, 9])
def test_decomposition_rejects_bad_orders(q):
    with pytest.raises((NotPrimeError, ValueError)):
        build_coloring(q)


@pytest.mark.parametrize("q, k", [(3, 14), (5, 48), (7, 116)])
def test_build_coloring_valid(q, k):
    c = build_coloring(q)
    n = q * q + q + 1
    assert c.n == n and c.k == k
    assert verify_coloring(c).is_valid


@pytest.mark.parametrize("q", [3, 5, 7])
def test_triplet_classes_are_two_glued_paths(q):
    c = build_coloring(q)
    half = (q + 1) // 2
    for cls in c.classes[:half]:
        assert len(cls) == q
    for cls in c.classes[half:]:
        assert len(cls) == 2 * q
        vertices = {x for e in cls for x in e}
        assert len(vertices) == 2 * q + 1
        assert is_forest(cls, c.n)


def test_build_coloring_is_deterministic():
    assert build_coloring(5) == build_coloring(5)


def test_greedy_extend_identity():
    c = build_coloring(3)
    assert greedy_extend(c, 13) == c


def test_greedy_extend_from_plane():
    ext = greedy_extend(build_coloring(3), 14)
    assert ext.n == 14
    assert ext.k >= 14
    assert verify_coloring(ext).is_valid


def test_greedy_extend_k4_matchings():
    c = EdgeColoring(4, [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]])
    ext = greedy_extend(c, 5)
    assert verify_coloring(ext).is_valid
    assert ext.k >= 3


def test_greedy_extend_refuses_invalid_and_shrinking():
    bad = EdgeColoring(4, [all_edges(4)])
    with pytest.raises(ValueError):
        greedy_extend(bad, 5)
    with pytest.raises(ValueError):
        greedy_extend(build_coloring(3), 12)


@pytest.mark.parametrize("m, n", [(4, 9), (6, 11), (13, 17)])
def test_greedy_extend_monotone(m, n):
    base = build_coloring(3) if m == 13 else arboricity_coloring(m)
    prev = base
    for target in range(m + 1, n + 1):
        ext = greedy_extend(base, target)
        assert verify_coloring(ext).is_valid
        assert ext.k >= prev.k
        prev = ext


@pytest.mark.parametrize("n", range(2, 16))
def test_arboricity_coloring(n):
    c = arboricity_coloring(n)
    assert c.k == (n + 1) // 2
    assert verify_coloring(c).is_valid


def test_pairwise_cycle_via_triangle_brute_force_q3():
    # each pair of classes from different structures shares two vertices
    c = build_coloring(3)
    verts = [{x for e in cls for x in e} for cls in c.classes]
    for i, j in combinations(range(c.k), 2):
        assert len(verts[i] & verts[j]) >= 2
