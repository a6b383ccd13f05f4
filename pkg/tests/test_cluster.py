import itertools
from fractions import Fraction

import pytest

from associahedra import polygon
from associahedra.cluster import (
    all_clusters,
    all_roots,
    build_cluster_polytope,
    compatible,
    default_support_values,
    neg,
    polytopality_check,
    pos,
    root_coordinates,
    root_to_diagonal,
    snake_diagonal,
    verify_fan,
    wall_relation,
    walls,
)

F = Fraction


def test_root_coordinates_examples():
    assert root_coordinates(pos(1, 1), 2) == (1, -1, 0)
    assert root_coordinates(pos(1, 2), 2) == (1, 0, -1)
    assert root_coordinates(neg(2), 2) == (0, -1, 1)


def test_root_coordinates_sum_zero():
    for n in range(1, 6):
        for r in all_roots(n):
            assert sum(root_coordinates(r, n)) == 0


def test_root_count():
    for n in range(1, 7):
        assert len(all_roots(n)) == n * (n + 3) // 2


def test_snake_examples():
    assert snake_diagonal(1, 2) == (1, 4)
    assert snake_diagonal(2, 2) == (1, 3)
    assert [snake_diagonal(i, 3) for i in (1, 2, 3)] == [(1, 5), (1, 4), (2, 4)]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_snake_is_a_triangulation(n):
    t = tuple(sorted(snake_diagonal(i, n) for i in range(1, n + 1)))
    assert t in polygon.all_triangulations(n)


def test_root_to_diagonal_pentagon():
    assert root_to_diagonal(pos(1, 1), 2) == (0, 3)
    assert root_to_diagonal(pos(2, 2), 2) == (2, 4)
    assert root_to_diagonal(pos(1, 2), 2) == (0, 2)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_root_to_diagonal_bijection(n):
    images = [root_to_diagonal(r, n) for r in all_roots(n)]
    assert len(set(images)) == len(images) == len(polygon.all_diagonals(n))


def test_compatible_examples():
    assert compatible(neg(1), neg(2), 2)
    assert not compatible(pos(1, 1), pos(2, 2), 2)
    for r in all_roots(2):
        assert compatible(r, r, 2)


def test_clusters_pentagon():
    got = {frozenset(c) for c in all_clusters(2)}
    want = {
        frozenset({pos(1, 1), pos(1, 2)}),
        frozenset({pos(2, 2), pos(1, 2)}),
        frozenset({neg(1), pos(2, 2)}),
        frozenset({neg(1), neg(2)}),
        frozenset({neg(2), pos(1, 1)}),
    }
    assert got == want


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_clusters_are_compatibility_cliques(n):
    # independent oracle: maximal cliques by brute force
    roots = all_roots(n)
    cliques = {
        frozenset(c)
        for c in itertools.combinations(roots, n)
        if all(compatible(a, b, n) for a, b in itertools.combinations(c, 2))
    }
    assert cliques == {frozenset(c) for c in all_clusters(n)}


@pytest.mark.parametrize("n", [2, 3])
def test_clusters_biject_with_triangulations(n):
    assert len(all_clusters(n)) == len(polygon.all_triangulations(n))
    for c, t in zip(all_clusters(n), polygon.all_triangulations(n)):
        assert {root_to_diagonal(r, n) for r in c} == set(t)


def test_wall_relation_opposite_rays():
    c1 = frozenset({neg(1), neg(2)})
    c2 = frozenset({neg(1), pos(2, 2)})
    lam0, lam, coeffs = wall_relation(c1, c2, 2)
    assert (lam0, lam) == (1, 1)
    assert all(c == 0 for c in coeffs.values())


def test_wall_relation_pentagon_sum():
    c1 = frozenset({pos(1, 1), pos(1, 2)})
    c2 = frozenset({pos(2, 2), pos(1, 2)})
    _, lam, coeffs = wall_relation(c1, c2, 2)
    assert lam == 1
    assert coeffs == {pos(1, 2): 1}


def test_wall_relation_rejects_non_adjacent():
    c1 = frozenset({pos(1, 1), pos(1, 2)})
    c2 = frozenset({neg(1), neg(2)})
    with pytest.raises(ValueError):
        wall_relation(c1, c2, 2)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_wall_relation_positive_rational(n):
    for c1, c2 in walls(n):
        _, lam, coeffs = wall_relation(c1, c2, n)
        assert lam > 0
        assert all(isinstance(c, Fraction) for c in coeffs.values())


def test_polytopality_ones_pentagon():
    ok, violations = polytopality_check({r: F(1) for r in all_roots(2)}, 2)
    assert ok and not violations


def test_polytopality_violation():
    h = {r: F(1) for r in all_roots(2)}
    h[pos(1, 2)] = F(3)
    ok, violations = polytopality_check(h, 2)
    assert not ok
    assert any(set(v[:2]) == {pos(1, 1), pos(2, 2)} for v in violations)


def test_polytopality_scale_invariant():
    h = default_support_values(3)
    scaled = {r: F(7, 3) * v for r, v in h.items()}
    assert polytopality_check(scaled, 3)[0]


def test_build_pentagon_vertices():
    p = build_cluster_polytope({r: F(1) for r in all_roots(2)}, 2)
    got = {c for c, _ in p.vertices}
    want = {
        (F(2, 3), F(-1, 3), F(-1, 3)),
        (F(1, 3), F(1, 3), F(-2, 3)),
        (F(-1, 3), F(2, 3), F(-1, 3)),
        (F(-1), F(0), F(1)),
        (F(1, 3), F(-2, 3), F(1, 3)),
    }
    assert got == want


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_build_vertices_sum_zero(n):
    p = build_cluster_polytope(default_support_values(n), n)
    for c, _ in p.vertices:
        assert sum(c) == 0


def test_default_support_values_contract():
    for n in range(1, 5):
        h = default_support_values(n)
        assert polytopality_check(h, n)[0]
    # the all-ones candidate itself only passes for small n
    assert polytopality_check({r: F(1) for r in all_roots(2)}, 2)[0]
    assert not polytopality_check({r: F(1) for r in all_roots(3)}, 3)[0]


def test_build_rejects_non_polytopal_h():
    h = {r: F(1) for r in all_roots(2)}
    h[pos(1, 2)] = F(3)
    with pytest.raises(ValueError):
        build_cluster_polytope(h, 2)


def test_verify_fan_line():
    report = verify_fan(1, sample_count=50)
    assert report["ok"] and report["cones"] == 2 and report["walls"] == 1


def test_verify_fan_pentagon():
    report = verify_fan(2, sample_count=1000)
    assert report["ok"] and report["cones"] == 5 and report["walls"] == 5


def test_verify_fan_n3():
    report = verify_fan(3, sample_count=1000)
    assert report["ok"] and report["cones"] == 14 and report["walls"] == 21
