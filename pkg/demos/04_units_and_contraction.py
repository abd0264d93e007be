#!/usr/bin/env python3
"""Units, unit contraction, and the rank/nullity decomposition.

A unit is a maximal set of vertices lying in exactly the same edges.  Units
are invisible to the incidence matrix beyond multiplicity: contracting each
unit to a single vertex preserves the rank, and the nullity splits as

    nullity(B_H) = nullity(B_contraction) + (|V| - #units).
"""

from hyperinc import (
    are_isomorphic,
    build_hypergraph,
    compute_units,
    induced_subhypergraph,
    nullity_decomposition,
    sw_subspace,
    unit_contraction,
)

h = build_hypergraph(
    [str(i) for i in range(1, 12)],
    [
        ["1", "2", "5", "6", "7", "10", "11"],
        ["1", "2", "3", "4"],
        ["3", "4", "10"],
        ["5", "6", "7", "8", "9"],
        ["8", "9", "10", "11"],
    ],
    ["e1", "e2", "e3", "e4", "e5"],
)

print("=" * 64)
print("  Units (grouped by identical stars)")
print("=" * 64)
partition = compute_units(h)
for unit in partition.units:
    generator = ", ".join(sorted(h.edge_labels[i] for i in unit.generator))
    print(f"  {{{','.join(unit.members)}}}  lies in exactly  {{{generator}}}")

contracted, vertex_map, _ = unit_contraction(h)
print(f"\nContraction: {h.n_vertices} vertices -> {contracted.n_vertices}, "
      f"{h.n_edges} edges -> {contracted.n_edges}")

d = nullity_decomposition(h)
print(f"rank(B_H) = {d.rank} = rank of the contraction = {d.contraction_rank}")
print(f"nullity(B_H) = {d.nullity} = {d.contraction_nullity} (contraction) "
      f"+ {d.units_deficiency} (vertices beyond units)")

print("\nPicking one vertex per unit induces a copy of the contraction:")
transversal = ["1", "3", "5", "8", "10", "11"]
hu, _ = induced_subhypergraph(h, transversal)
mapping = are_isomorphic(hu, contracted)
print(f"  induced on {{{','.join(transversal)}}} isomorphic? {mapping is not None}")
for v in transversal:
    print(f"    {v} -> {mapping[v]}")

print("\nZero-sum vectors supported inside a unit are kernel vectors, and")
print("units are precisely the maximal sets with that property:")
for members in (["5", "6", "7"], ["5", "6"], ["1", "3"]):
    r = sw_subspace(h, members)
    print(f"  W = {{{','.join(members)}}}: contained = {r.contained_in_kernel}, "
          f"maximal = {r.maximal}")
