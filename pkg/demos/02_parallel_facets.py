"""Count and list the parallel facet pairs of each realization for
n = 2..4.

The secondary polytope has none; the other two have exactly n pairs each,
but along different families of diagonals, which is the seed of the
non-equivalence argument.
"""

from associahedra import (
    build_cluster_polytope,
    build_minkowski,
    build_secondary,
    default_support_values,
    extract_facets,
    ones_weights,
    parallel_pairs,
)

for n in (2, 3, 4):
    print(f"n = {n}")
    builds = {
        "secondary": build_secondary(n=n),
        "cluster": build_cluster_polytope(default_support_values(n), n),
        "minkowski": build_minkowski(ones_weights(n), n),
    }
    for name, p in builds.items():
        pairs = parallel_pairs(extract_facets(p))
        listing = ", ".join(f"{d1}||{d2}" for d1, d2 in pairs) or "none"
        print(f"  {name:10s} {len(pairs)} parallel pairs: {listing}")
    print()
