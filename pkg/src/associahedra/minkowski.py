"""Weighted Minkowski sum of the coordinate simplices on index ranges.

The polytope is sum a_ij * conv{e_i, ..., e_j} over 1 <= i <= j <= n+1.
Vertices are generated by scanning all strict coordinate orderings; each
ordering maximizes a unique vertex of every summand.  A linear functional
is converted to a polygon subdivision by the sub-polygon rule: for every
label k, the hull of the labels with value >= w_k (labels 0 and n+2 count
as +infinity) contributes its chord edges as diagonals.
"""

import itertools
from fractions import Fraction

from . import polygon
from .analysis import extract_facets, make_polytope
from .exactlin import ZERO, dot, span, unit, vsub


class NonGenericFunctional(ValueError):
    pass


def all_summands(n):
    return [(i, j) for i in range(1, n + 2) for j in range(i, n + 2)]


def ones_weights(n):
    return {s: Fraction(1) for s in all_summands(n)}


def summand_max_vertex(w, i, j):
    """The unique index in [i..j] maximizing the functional; ties are errors."""
    best = max(range(i, j + 1), key=lambda k: w[k - 1])
    if sum(1 for k in range(i, j + 1) if w[k - 1] == w[best - 1]) > 1:
        raise NonGenericFunctional(f"tie on summand [{i}..{j}]")
    return best


def subdivision_from_functional(w, n):
    """Common refinement of the subdivisions induced by the sub-polygons
    of labels with value >= w_k; labels 0 and n+2 always belong."""
    diagonals = set()
    for k in range(1, n + 2):
        members = [0] + [i for i in range(1, n + 2) if w[i - 1] >= w[k - 1]] + [n + 2]
        if len(members) <= 2:
            continue
        cyc = members + [members[0]]
        for a, b in zip(cyc, cyc[1:]):
            d = (a, b) if a < b else (b, a)
            if not polygon.is_polygon_edge(d, n):
                diagonals.add(d)
    out = tuple(sorted(diagonals))
    for idx in range(len(out)):
        for jdx in range(idx + 1, len(out)):
            assert not polygon.crossing(out[idx], out[jdx]), "induced diagonals cross"
    return out


def build_minkowski(a, n):
    """Scan all (n+1)! coordinate orderings; each yields one candidate vertex
    labeled by the triangulation its functional induces."""
    summands = all_summands(n)
    for s in summands:
        if a[s] <= 0:
            raise ValueError(f"weight a{s} must be positive")
    by_vertex = {}
    for perm in itertools.permutations(range(1, n + 2)):
        w = tuple(Fraction(p) for p in perm)
        v = [ZERO] * (n + 1)
        for (i, j) in summands:
            v[summand_max_vertex(w, i, j) - 1] += a[(i, j)]
        v = tuple(v)
        label = subdivision_from_functional(w, n)
        if len(label) != n:
            raise AssertionError(f"generic functional {w} gave a non-triangulation")
        if v in by_vertex:
            if by_vertex[v] != label:
                raise AssertionError(f"vertex {v} labeled inconsistently")
        else:
            by_vertex[v] = label
    pairs = [(v, label) for v, label in by_vertex.items()]
    return make_polytope("minkowski", n, n + 1, pairs, params={"a": dict(a)})


def cut_depths(s, n):
    """For each label 1..n+1, how many diagonals of s separate it from the
    polygon edge {0, n+2}."""
    depths = []
    for i in range(1, n + 2):
        depths.append(sum(1 for (a, b) in s if a < i < b))
    return depths


def functional_for_subdivision(s, n):
    """A functional whose induced subdivision is s; certified by replay."""
    w = tuple(Fraction(-d) for d in cut_depths(s, n))
    got = subdivision_from_functional(w, n)
    if got != tuple(sorted(s)):
        raise AssertionError(f"functional reconstruction failed for {s}")
    return w


def verify_correspondence(p, n):
    """Face-lattice checks for the Minkowski construction.

    (a) vertex labels biject with triangulations, (b) edges (certified by a
    functional maximized exactly on a vertex pair) biject with flips,
    (c) facets biject with diagonals via geometric certification.
    """
    problems = []
    labels = [label for _, label in p.vertices]
    if sorted(labels) != sorted(polygon.all_triangulations(n)):
        problems.append(("labels_not_triangulations",))

    flip_pairs = set()
    for idx, (_, t) in enumerate(p.vertices):
        for jdx in range(idx + 1, len(p.vertices)):
            t2 = p.vertices[jdx][1]
            if len(set(t) & set(t2)) == n - 1:
                flip_pairs.add((idx, jdx))
    edge_count = 0
    for idx, jdx in sorted(flip_pairs):
        t1, t2 = p.vertices[idx][1], p.vertices[jdx][1]
        shared = tuple(sorted(set(t1) & set(t2)))
        w = functional_for_subdivision(shared, n)
        values = [dot(w, c) for c, _ in p.vertices]
        best = max(values)
        argmax = {k for k, val in enumerate(values) if val == best}
        if argmax != {idx, jdx}:
            problems.append(("edge_not_certified", t1, t2))
        else:
            edge_count += 1

    facets = extract_facets(p)
    for f in facets:
        expected = frozenset(
            k for k, (_, label) in enumerate(p.vertices) if f.diagonal in label
        )
        if f.vertex_indices != expected:
            problems.append(("facet_vertex_mismatch", f.diagonal))

    sizes = polygon.subdivision_sizes(n)
    f_vector = (len(p.vertices), edge_count, len(facets))
    expected_f = (sizes.get(n, 0), sizes.get(n - 1, 0), sizes.get(1, 0))
    if f_vector != expected_f:
        problems.append(("f_vector_mismatch", f_vector, expected_f))
    return {
        "ok": not problems,
        "f_vector": f_vector,
        "problems": problems,
    }


def expected_parallel_direction(d, n):
    """Classify a diagonal and give the simplex pair spanning the parallel
    affine space of its facet."""
    if not polygon.is_diagonal(d, n):
        raise ValueError(f"{d} is not a diagonal")
    a, b = d
    if b == n + 2:
        i = a
        return {
            "cls": 1,
            "i": i,
            "blocks": (tuple(range(1, i + 1)), tuple(range(i + 1, n + 2))),
        }
    if a == 0:
        i = b - 1
        return {
            "cls": 2,
            "i": i,
            "blocks": (tuple(range(1, i + 1)), tuple(range(i + 1, n + 2))),
        }
    i, j = a, b
    return {
        "cls": 3,
        "i": i,
        "j": j,
        "blocks": (
            tuple(range(1, i + 1)) + tuple(range(j, n + 2)),
            tuple(range(i + 1, j)),
        ),
    }


def block_pair_direction(blocks, n):
    """Canonical span of the direction spaces of the two index-set simplices."""
    gens = []
    for block in blocks:
        base = block[0]
        for k in block[1:]:
            gens.append(vsub(unit(k - 1, n + 1), unit(base - 1, n + 1)))
    return span(gens, n + 1)
