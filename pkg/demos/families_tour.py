#!/usr/bin/env python3
"""The named bipartite families and their invariants.

Two families drive the extremal analysis: complete splits K_{p,q}, and the
"apex join" -- an independent core of size s joined to a lone apex vertex and
to one side of a complete bipartite block.  The apex join is the natural
candidate for maximizing the index at fixed connectivity: the core is a
vertex cut of size s, so the connectivity can never exceed s, while the rest
of the graph is as dense as bipartiteness allows.
"""

from bipartite_estrada import (CoverPartition, collapsed_cover_graph,
                               complete_bipartite, edge_connectivity,
                               emit_graph6, estrada, join_family,
                               join_family_double, matching_number,
                               saturated_cover_graph, vertex_connectivity)

# ---------------------------------------------------------------------------
# complete splits: matching number is the smaller side
# ---------------------------------------------------------------------------
for p, q in ((1, 5), (2, 4), (3, 3)):
    g = complete_bipartite(p, q)
    print(f"K_{{{p},{q}}}: graph6 {emit_graph6(g):>6}  matching {matching_number(g)}"
          f"  index {estrada(g).value:.6f}")

# ---------------------------------------------------------------------------
# apex joins: both connectivities equal the core size
# ---------------------------------------------------------------------------
print()
for s, p, q in ((1, 3, 2), (2, 3, 2), (3, 3, 1)):
    g = join_family(s, p, q)
    print(f"apex join s={s} p={p} q={q}: n={g.n} m={g.m}"
          f"  kappa={vertex_connectivity(g)}  kappa'={edge_connectivity(g)}"
          f"  index {estrada(g).value:.6f}")

# the q = 0 case degenerates to a complete split
print("\napex join with q=0 collapses:",
      emit_graph6(join_family(2, 2, 0)), "=",
      emit_graph6(complete_bipartite(2, 3)), "(isomorphic)")

# a two-block variant joins the core into two complete bipartite components
double = join_family_double(2, 2, 1, 2, 1)
print(f"two-block join: n={double.n} m={double.m} kappa={vertex_connectivity(double)}")

# ---------------------------------------------------------------------------
# cover rewiring: saturate a vertex cover, then collapse it
# ---------------------------------------------------------------------------
print()
part = CoverPartition(2, 1, 1, 1)
lo = saturated_cover_graph(part)
hi = collapsed_cover_graph(part)
print("cover blocks (x1,x2,y1,y2) = (2,1,1,1):")
print(f"  saturated  {emit_graph6(lo)}  index {estrada(lo).value:.6f}")
print(f"  collapsed  {emit_graph6(hi)}  index {estrada(hi).value:.6f}")
print("  collapsing the cover strictly increases the index when x2 > 0",
      "(except the symmetric corner x1 = y1, y2 = 0, where the two graphs",
      "are the same complete split with relabelled sides)")
