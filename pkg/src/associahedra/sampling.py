"""Seeded rational parameter draws for the verification sweeps.

All draws are exact rationals with denominators bounded by 1000 so the
downstream computations stay in exact arithmetic.
"""

from fractions import Fraction

from . import cluster, minkowski, secondary


def _rat(rng, lo, hi, max_den=1000):
    den = rng.randint(1, max_den)
    num = rng.randint(int(lo * den), int(hi * den))
    return Fraction(num, den)


def random_convex_geometry(n, rng):
    """Strictly convex counterclockwise rational (n+3)-gon: increasing x,
    y built from strictly positive second differences."""
    m = n + 3
    xs = []
    x = Fraction(0)
    for _ in range(m):
        x += _rat(rng, 1, 3)
        xs.append(x)
    slopes = []
    slope = _rat(rng, -3, -1)
    for _ in range(m - 1):
        slope += _rat(rng, 1, 2) / 4
        slopes.append(slope)
    ys = [Fraction(0)]
    for i in range(m - 1):
        ys.append(ys[-1] + slopes[i] * (xs[i + 1] - xs[i]))
    coords = tuple(zip(xs, ys))
    assert secondary.validate_geometry(coords)
    return coords


def random_weights(n, rng):
    return {s: _rat(rng, 1, 2) for s in minkowski.all_summands(n)}


def perturbed_support_values(n, rng):
    """h = 1 + small positive jitter, pushed through the wall repair loop
    so the draw is always polytopal."""
    h = {r: Fraction(1) + _rat(rng, 0, 1) / 8 for r in cluster.all_roots(n)}
    return cluster.repair_support_values(h, n)
