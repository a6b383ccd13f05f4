"""Secondary polytope of a convex (n+3)-gon.

Each triangulation gets one vertex: its area vector, whose i-th coordinate
is the total area of the triangles incident to polygon vertex i.  The
default geometry places the labels on the parabola (k, k^2), k = 1..n+3,
which is rational and strictly convex.
"""

from fractions import Fraction

from . import polygon
from .analysis import make_polytope
from .exactlin import rank, vsub


def parabola_geometry(n):
    return tuple((Fraction(k), Fraction(k * k)) for k in range(1, n + 4))


def signed_area2(p, q, r):
    """Twice the signed area of triangle pqr (positive = counterclockwise)."""
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def geometry_problem(coords):
    """None if the points are in strictly convex counterclockwise position."""
    m = len(coords)
    if len(set(coords)) != m:
        return "duplicate points"
    for i in range(m):
        a2 = signed_area2(coords[i], coords[(i + 1) % m], coords[(i + 2) % m])
        if a2 <= 0:
            return f"non-positive turn at vertex {(i + 1) % m}"
    return None


def validate_geometry(coords):
    return geometry_problem(coords) is None


def polygon_area(coords):
    total = Fraction(0)
    m = len(coords)
    for i in range(m):
        x1, y1 = coords[i]
        x2, y2 = coords[(i + 1) % m]
        total += x1 * y2 - x2 * y1
    return total / 2


def triangle_area(coords, tri):
    a, b, c = tri
    return abs(signed_area2(coords[a], coords[b], coords[c])) / 2


def gkz_vector(coords, t, n):
    """Per-label sum of incident triangle areas, as an exact rational vector."""
    v = [Fraction(0)] * (n + 3)
    for tri in polygon.triangles(t, n):
        area = triangle_area(coords, tri)
        for label in tri:
            v[label] += area
    return tuple(v)


def build_secondary(coords=None, n=None):
    if coords is None:
        coords = parabola_geometry(n)
    coords = tuple((Fraction(x), Fraction(y)) for x, y in coords)
    if n is None:
        n = len(coords) - 3
    problem = geometry_problem(coords)
    if problem is not None:
        raise ValueError(f"invalid polygon geometry: {problem}")
    pairs = [(gkz_vector(coords, t, n), t) for t in polygon.all_triangulations(n)]
    return make_polytope(
        "secondary",
        n,
        n + 3,
        pairs,
        params={"coords": coords},
    )


def verify_secondary_dimension(p):
    coords = [c for c, _ in p.vertices]
    diffs = [vsub(c, coords[0]) for c in coords[1:]]
    return (rank(diffs) if diffs else 0) == p.n
