"""The theorem-verification manifest run by `assoc verify` and the
acceptance test suite.

Each check is a named callable over an n range; all expectations are exact
(zero tolerance).  Checks return (ok, detail) and the runner assembles a
pass/fail table in manifest order.
"""

import random
from fractions import Fraction
from functools import lru_cache

from . import analysis, cluster, minkowski, polygon, sampling, secondary
from .analysis import extract_facets, parallel_pairs, special_profile
from .exactlin import AffineMap

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430]


@lru_cache(maxsize=None)
def build_all_defaults(n):
    return {
        "secondary": secondary.build_secondary(n=n),
        "cluster": cluster.build_cluster_polytope(cluster.default_support_values(n), n),
        "minkowski": minkowski.build_minkowski(minkowski.ones_weights(n), n),
    }


def check_vertex_counts(n_max, seed):
    bad = []
    for n in range(1, n_max + 1):
        for tag, p in build_all_defaults(n).items():
            if len(p.vertices) != CATALAN[n + 1]:
                bad.append((n, tag, len(p.vertices)))
    return not bad, {"expected": CATALAN[2 : n_max + 2], "bad": bad}


def check_facet_counts(n_max, seed):
    bad = []
    for n in range(1, n_max + 1):
        for tag, p in build_all_defaults(n).items():
            facets = extract_facets(p)
            if len(facets) != n * (n + 3) // 2:
                bad.append((n, tag, len(facets)))
    return not bad, {"bad": bad}


def check_secondary_no_parallel(n_max, seed):
    rng = random.Random(seed)
    bad = []
    for n in range(2, n_max + 1):
        geometries = [secondary.parabola_geometry(n)]
        geometries += [sampling.random_convex_geometry(n, rng) for _ in range(3)]
        for g in geometries:
            p = secondary.build_secondary(coords=g, n=n)
            pairs = parallel_pairs(extract_facets(p))
            if pairs:
                bad.append((n, pairs))
    return not bad, {"bad": bad}


def cluster_expected_pairs(n):
    pairs = []
    for i in range(1, n + 1):
        d1 = cluster.root_to_diagonal(cluster.pos(i, i), n)
        d2 = cluster.root_to_diagonal(cluster.neg(i), n)
        pairs.append(tuple(sorted((d1, d2))))
    return sorted(pairs)


def check_cluster_parallel(n_max, seed):
    rng = random.Random(seed)
    bad = []
    for n in range(2, n_max + 1):
        hs = [cluster.default_support_values(n)]
        hs += [sampling.perturbed_support_values(n, rng) for _ in range(3)]
        expected = cluster_expected_pairs(n)
        for h in hs:
            p = cluster.build_cluster_polytope(h, n)
            got = sorted(tuple(sorted(pair)) for pair in parallel_pairs(extract_facets(p)))
            if got != expected:
                bad.append((n, got, expected))
    return not bad, {"bad": bad}


def minkowski_expected_pairs(n):
    return sorted(
        tuple(sorted(((i, n + 2), (0, i + 1)))) for i in range(1, n + 1)
    )


def check_minkowski_parallel(n_max, seed):
    rng = random.Random(seed)
    bad = []
    for n in range(2, n_max + 1):
        weights = [minkowski.ones_weights(n)]
        weights += [sampling.random_weights(n, rng) for _ in range(3)]
        expected = minkowski_expected_pairs(n)
        for a in weights:
            p = minkowski.build_minkowski(a, n)
            facets = extract_facets(p)
            got = sorted(tuple(sorted(pair)) for pair in parallel_pairs(facets))
            if got != expected:
                bad.append((n, got, expected))
                continue
            by_diag = {f.diagonal: f for f in facets}
            for i in range(1, n + 1):
                blocks = (tuple(range(1, i + 1)), tuple(range(i + 1, n + 2)))
                want = minkowski.block_pair_direction(blocks, n)
                for d in ((i, n + 2), (0, i + 1)):
                    if by_diag[d].direction != want:
                        bad.append((n, "direction_mismatch", d))
    return not bad, {"bad": bad}


def check_correspondence(n_max, seed):
    bad = []
    for n in range(1, n_max + 1):
        p = minkowski.build_minkowski(minkowski.ones_weights(n), n)
        report = minkowski.verify_correspondence(p, n)
        if not report["ok"]:
            bad.append((n, report["problems"]))
    return not bad, {"bad": bad}


def check_special_profiles(n_max, seed):
    bad = []
    for n in range(2, n_max + 1):
        built = build_all_defaults(n)
        for tag in ("cluster", "minkowski"):
            profile = special_profile(extract_facets(built[tag]))
            if len(profile) != 2 * n:
                bad.append((n, tag, "special_count", len(profile)))
            if tag == "minkowski":
                low = sorted(d for d, c in profile.items() if c <= n - 1)
                want = sorted([(1, n + 2), (0, n + 1)])
                if low != want or any(profile[d] != n - 1 for d in want):
                    bad.append((n, tag, "low_count_diagonals", low))
            elif n >= 3:
                low = sorted(d for d, c in profile.items() if c <= n - 1)
                if n == 3:
                    expected = [cluster.root_to_diagonal(cluster.pos(2, 2), 3)]
                    if low != expected or profile[expected[0]] != 2:
                        bad.append((n, tag, "low_count_diagonals", low))
                elif low:
                    bad.append((n, tag, "unexpected_low_counts", low))
    return not bad, {"bad": bad}


def check_non_equivalence(n_max, seed):
    rng = random.Random(seed)
    bad = []
    comparisons = []
    for n in range(2, min(n_max, 4) + 1):
        built = build_all_defaults(n)
        drawn = {
            "secondary": secondary.build_secondary(
                coords=sampling.random_convex_geometry(n, rng), n=n
            ),
            "cluster": cluster.build_cluster_polytope(
                sampling.perturbed_support_values(n, rng), n
            ),
            "minkowski": minkowski.build_minkowski(sampling.random_weights(n, rng), n),
        }
        pairs = [("secondary", "cluster"), ("secondary", "minkowski")]
        if n >= 3:
            pairs.append(("cluster", "minkowski"))
        for a, b in pairs:
            for source in (built, drawn):
                comparisons.append((n, a, b, source[a], source[b]))
    for n, a, b, pa, pb in comparisons:
        report = analysis.equivalence_search(pa, pb)
        fired = any(f for _, f, _ in report.obstructions)
        if report.verdict != "non_equivalent" or not fired or report.witness is not None:
            bad.append((n, a, b, report.verdict))
    return not bad, {"compared": len(comparisons), "bad": bad}


def check_loday_regression(n_max, seed):
    p2 = minkowski.build_minkowski(minkowski.ones_weights(2), 2)
    got2 = {tuple(int(c) for c in coords) for coords, _ in p2.vertices}
    want2 = {(3, 2, 1), (3, 1, 2), (2, 1, 3), (1, 2, 3), (1, 4, 1)}
    p1 = minkowski.build_minkowski(minkowski.ones_weights(1), 1)
    got1 = {tuple(int(c) for c in coords) for coords, _ in p1.vertices}
    ok = got2 == want2 and got1 == {(2, 1), (1, 2)}
    return ok, {"n2": sorted(got2), "n1": sorted(got1)}


def _shear_translate(p):
    d = p.ambient_dim
    matrix = [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
    matrix[0][1] += Fraction(1, 3)
    shear = AffineMap(
        matrix=tuple(tuple(row) for row in matrix),
        translation=tuple(Fraction(1) for _ in range(d)),
    )
    pairs = [(shear.apply(c), label) for c, label in p.vertices]
    return analysis.make_polytope(p.construction, p.n, d, pairs)


def check_exactness_invariants(n_max, seed):
    bad = []
    for n in range(1, n_max + 1):
        coords = secondary.parabola_geometry(n)
        target = 3 * secondary.polygon_area(coords)
        for t in polygon.all_triangulations(n):
            v = secondary.gkz_vector(coords, t, n)
            if sum(v) != target:
                bad.append((n, "gkz_sum", t))
        a = minkowski.ones_weights(n)
        total = sum(a.values())
        p = minkowski.build_minkowski(a, n)
        for c, _ in p.vertices:
            if sum(c) != total:
                bad.append((n, "minkowski_sum", c))
        base_pairs = parallel_pairs(extract_facets(p))
        sheared_pairs = parallel_pairs(extract_facets(_shear_translate(p)))
        if base_pairs != sheared_pairs:
            bad.append((n, "shear_invariance"))
    return not bad, {"bad": bad}


MANIFEST = [
    ("vertex_counts_catalan", check_vertex_counts),
    ("facet_counts", check_facet_counts),
    ("secondary_no_parallel_facets", check_secondary_no_parallel),
    ("cluster_n_parallel_pairs", check_cluster_parallel),
    ("minkowski_parallel_pairs_and_directions", check_minkowski_parallel),
    ("minkowski_face_correspondence", check_correspondence),
    ("special_facet_profiles", check_special_profiles),
    ("pairwise_non_equivalence", check_non_equivalence),
    ("loday_regression", check_loday_regression),
    ("exactness_invariants", check_exactness_invariants),
]


def run_manifest(n_max, seed):
    results = []
    for name, fn in MANIFEST:
        ok, detail = fn(n_max, seed)
        results.append((name, ok, detail))
    return results
