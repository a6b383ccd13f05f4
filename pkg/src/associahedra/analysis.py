"""Construction-agnostic polytope analysis.

Facets are located combinatorially (the vertices whose triangulation label
contains a given diagonal) and then certified geometrically: a supporting
hyperplane is fitted inside the affine hull and every other vertex must lie
strictly on one side.  Parallelism of facets is equality of their direction
subspaces, compared in canonical form.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from . import exactlin, polygon
from .exactlin import (
    Subspace,
    dot,
    hyperplane_through,
    invert,
    mat_vec,
    rank,
    solve_linear,
    subspace_from_differences,
    vadd,
    vsub,
)


class CertificationError(Exception):
    """A combinatorially located facet failed its geometric certificate."""


@dataclass(frozen=True)
class LabeledPolytope:
    construction: str
    n: int
    ambient_dim: int
    vertices: tuple  # of (coords, triangulation) pairs, sorted by label
    params: dict = field(default_factory=dict, compare=False)


def make_polytope(construction, n, ambient_dim, pairs, params=None):
    """Validate and freeze a vertex-labeled polytope.

    Labels must be exactly the triangulations of the (n+3)-gon, coordinates
    must be pairwise distinct, and the affine hull must have dimension n.
    """
    pairs = sorted(pairs, key=lambda p: p[1])
    labels = [label for _, label in pairs]
    if labels != sorted(polygon.all_triangulations(n)):
        raise ValueError("labels are not exactly the triangulations")
    coords = [c for c, _ in pairs]
    if len(set(coords)) != len(coords):
        raise ValueError("vertex coordinates are not distinct")
    hull = subspace_from_differences(coords)
    if hull.dim != n:
        raise ValueError(f"affine hull has dimension {hull.dim}, expected {n}")
    return LabeledPolytope(
        construction=construction,
        n=n,
        ambient_dim=ambient_dim,
        vertices=tuple(pairs),
        params=dict(params or {}),
    )


def affine_hull(p):
    return subspace_from_differences([c for c, _ in p.vertices])


@dataclass(frozen=True)
class FacetDescriptor:
    diagonal: tuple
    vertex_indices: frozenset
    hyperplane: object
    direction: Subspace


def extract_facets(p):
    """One certified facet per diagonal of the (n+3)-gon.

    Certification failure means the construction is broken, not the
    analysis, and raises CertificationError naming the diagonal.
    """
    hull = affine_hull(p)
    facets = []
    for d in polygon.all_diagonals(p.n):
        members = frozenset(
            i for i, (_, label) in enumerate(p.vertices) if d in label
        )
        if not members:
            raise CertificationError(f"diagonal {d}: no vertices carry it")
        member_coords = [p.vertices[i][0] for i in sorted(members)]
        hp = hyperplane_through(member_coords, hull)
        if hp is None:
            raise CertificationError(f"diagonal {d}: vertices do not span a codim-1 flat")
        if any(hp.value(c) != 0 for c in member_coords):
            raise CertificationError(f"diagonal {d}: member off its hyperplane")
        outside = [hp.value(p.vertices[i][0]) for i in range(len(p.vertices)) if i not in members]
        if not (all(v > 0 for v in outside) or all(v < 0 for v in outside)):
            raise CertificationError(f"diagonal {d}: hyperplane is not supporting")
        direction = subspace_from_differences(member_coords)
        if direction.dim != p.n - 1:
            raise CertificationError(
                f"diagonal {d}: facet dimension {direction.dim} != {p.n - 1}"
            )
        facets.append(
            FacetDescriptor(
                diagonal=d, vertex_indices=members, hyperplane=hp, direction=direction
            )
        )
    return facets


def parallel_pairs(facets):
    """Unordered pairs of distinct diagonals with equal direction subspaces."""
    pairs = []
    for i in range(len(facets)):
        for j in range(i + 1, len(facets)):
            if facets[i].direction == facets[j].direction:
                pairs.append((facets[i].diagonal, facets[j].diagonal))
    return sorted(pairs)


def facets_intersect(f1, f2):
    """True iff the facets share a vertex; cross-checked against non-crossing."""
    geometric = bool(f1.vertex_indices & f2.vertex_indices)
    combinatorial = not polygon.crossing(f1.diagonal, f2.diagonal)
    if geometric != combinatorial:
        raise CertificationError(
            f"intersection criteria disagree for {f1.diagonal} vs {f2.diagonal}"
        )
    return geometric


def special_profile(facets):
    """For each special facet, how many other special facets it intersects.

    A facet is special when it belongs to some parallel pair.
    """
    pairs = parallel_pairs(facets)
    special = sorted({d for pair in pairs for d in pair})
    by_diag = {f.diagonal: f for f in facets}
    profile = {}
    for d in special:
        profile[d] = sum(
            1 for e in special if e != d and facets_intersect(by_diag[d], by_diag[e])
        )
    return profile


def dihedral_relabelings(n):
    """The 2(n+3) rotations and reflections of the polygon labels."""
    size = n + 3
    maps = []
    for k in range(size):
        maps.append(tuple((l + k) % size for l in range(size)))
    for k in range(size):
        maps.append(tuple((k - l) % size for l in range(size)))
    return maps


def relabel_diagonal(perm, d):
    a, b = perm[d[0]], perm[d[1]]
    return (a, b) if a < b else (b, a)


def relabel_triangulation(perm, t):
    return tuple(sorted(relabel_diagonal(perm, d) for d in t))


def _hull_chart(p):
    """Base point, basis, and exact coordinate projector for the affine hull."""
    coords = [c for c, _ in p.vertices]
    p0 = coords[0]
    basis = subspace_from_differences(coords).basis
    gram = tuple(tuple(dot(bi, bj) for bj in basis) for bi in basis)
    projector = tuple(
        mat_vec(invert(gram), tuple(b[j] for b in basis))
        for j in range(p.ambient_dim)
    )
    # projector is ambient_dim x dim transposed; chart(x) = P^T (x - p0)
    proj_rows = tuple(zip(*projector))

    def chart(x):
        return mat_vec(proj_rows, vsub(x, p0))

    def unchart(y):
        out = p0
        for c, b in zip(y, basis):
            out = vadd(out, exactlin.vscale(c, b))
        return out

    return p0, basis, chart, unchart


def fit_affine_map(src, dst, label_map):
    """Affine map sending each src vertex to the dst vertex of the mapped label.

    Determined by n+1 affinely independent src vertices; returned only if it
    maps every src vertex exactly to its image, else None.
    """
    n = src.n
    dst_by_label = {label: c for c, label in dst.vertices}
    pairs = [(c, dst_by_label[label_map[label]]) for c, label in src.vertices]

    _, _, chart_s, _ = _hull_chart(src)
    _, _, chart_d, unchart_d = _hull_chart(dst)
    xs = [chart_s(c) for c, _ in pairs]
    ys = [chart_d(c) for _, c in pairs]

    # greedily pick n+1 affinely independent source points
    chosen = [0]
    for i in range(1, len(xs)):
        if len(chosen) == n + 1:
            break
        diffs = [vsub(xs[j], xs[chosen[0]]) for j in chosen[1:] + [i]]
        if rank(diffs) == len(diffs):
            chosen.append(i)
    if len(chosen) != n + 1:
        raise CertificationError("source vertices are affinely degenerate")

    system = [tuple(xs[i]) + (Fraction(1),) for i in chosen]
    thetas = []
    for coord in range(n):
        rhs = [ys[i][coord] for i in chosen]
        theta = solve_linear(system, rhs)
        if theta is None or theta is exactlin.UNDERDETERMINED:
            raise CertificationError("degenerate interpolation system")
        thetas.append(theta)
    matrix = tuple(tuple(theta[:n]) for theta in thetas)
    translation = tuple(theta[n] for theta in thetas)
    chart_map = exactlin.AffineMap(matrix=matrix, translation=translation)

    for x, y in zip(xs, ys):
        if chart_map.apply(x) != tuple(y):
            return None

    # lift to an ambient map agreeing on the affine hull:
    # f(x) = unchart_d(chart_map(chart_s(x))) is affine in x
    def f(x):
        return unchart_d(chart_map.apply(chart_s(x)))

    src_p0 = src.vertices[0][0]
    f_p0 = f(src_p0)
    cols = [
        vsub(f(vadd(src_p0, exactlin.unit(i, src.ambient_dim))), f_p0)
        for i in range(src.ambient_dim)
    ]
    matrix_amb = tuple(
        tuple(cols[i][j] for i in range(src.ambient_dim))
        for j in range(dst.ambient_dim)
    )
    translation_amb = vsub(f_p0, mat_vec(matrix_amb, src_p0))
    witness = exactlin.AffineMap(matrix=matrix_amb, translation=translation_amb)
    for (c_src, _), (_, c_dst) in zip(src.vertices, pairs):
        if witness.apply(c_src) != tuple(c_dst):
            return None
    return witness


@dataclass
class EquivalenceReport:
    pair: tuple
    obstructions: list
    witness: object = None

    @property
    def verdict(self):
        if self.witness is not None:
            return "equivalent"
        if any(fired for _, fired, _ in self.obstructions):
            return "non_equivalent"
        return "inconclusive"


def equivalence_search(p, q):
    """Label-free obstructions plus an exhaustive dihedral affine-map fit."""
    if p.n != q.n:
        raise ValueError("polytopes have different n")
    fp, fq = extract_facets(p), extract_facets(q)
    pp, pq = parallel_pairs(fp), parallel_pairs(fq)
    obstructions = [
        (
            "parallel_pair_count",
            len(pp) != len(pq),
            {"left": len(pp), "right": len(pq)},
        )
    ]
    prof_p = sorted(special_profile(fp).values())
    prof_q = sorted(special_profile(fq).values())
    obstructions.append(
        (
            "special_profile_multiset",
            prof_p != prof_q,
            {"left": prof_p, "right": prof_q},
        )
    )
    witness = None
    for perm in dihedral_relabelings(p.n):
        label_map = {
            label: relabel_triangulation(perm, label) for _, label in p.vertices
        }
        fit = fit_affine_map(p, q, label_map)
        if fit is not None:
            witness = fit
            break
    return EquivalenceReport(
        pair=(p.construction, q.construction),
        obstructions=obstructions,
        witness=witness,
    )
