"""
Geometric lattices and separator pivots
=======================================

When the lattice is geometric and the pivot a separator, theta identifies
D(A') with D(A~'') up to even degree shifts, so deletion and restriction
have the same total Betti number.
"""

from subarr import betti_sum_relations, build_lattice, is_geometric, is_separator, theta
from subarr.fixtures import geometric_separator_corpus

for arr in geometric_separator_corpus():
    geometric = is_geometric(build_lattice(arr))
    for i in range(len(arr)):
        if not (geometric and is_separator(arr, i)):
            continue
        tm = theta(arr, i)
        rep = betti_sum_relations(arr, i)
        drops = sorted(set(tm.degree_drops.values()))
        print(f"{', '.join(arr.names):>12} pivot {arr.members[i].name}: drops {drops}, "
              f"A' = {rep.poincare_deleted}, A'' = {rep.poincare_restricted}, "
              f"relations hold: {rep.all_hold}")
