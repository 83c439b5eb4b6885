#!/usr/bin/env python3
"""Path-matching deficiency on small graphs, with certificates.

A path-matching is a vertex-disjoint union of paths on >= 2 vertices; the
deficiency pd(G) counts the vertices that every maximum path-matching
misses.  The minimax identity

    pd(G) = max_X (# isolated vertices of G - X) - 2 |X|

turns that into a certificate: a set X whose removal isolates many
vertices proves the deficiency from below, and the library returns the
lexicographically least such set.
"""

from ramsey_pm import SimpleGraph, complete_graph, deficiency, max_pm_order, packing_oracle
from ramsey_pm.graphs import bits


def show(name, g):
    pd, cert = deficiency(g)
    print(f"{name}: n={g.n}, edges={g.edge_count()}")
    print(f"  max path-matching order = {max_pm_order(g)}, deficiency = {pd}")
    print(f"  LV set X = {sorted(bits(cert.lv_set))}, "
          f"isolated after removing X = {sorted(bits(cert.isolated_witness))}")
    if g.n <= 10:
        print(f"  brute-force {{P2,P3}} packing agrees: {packing_oracle(g)}")
    print()


show("triangle", complete_graph(3))
show("star with 4 leaves", SimpleGraph.from_edges(5, [(0, i) for i in range(1, 5)]))
show("path on 6 vertices", SimpleGraph.from_edges(6, [(i, i + 1) for i in range(5)]))
show("two stars sharing nothing",
     SimpleGraph.from_edges(8, [(0, 1), (0, 2), (0, 3), (4, 5), (4, 6), (4, 7)]))
show("empty graph on 5 vertices", SimpleGraph.empty(5))

# the certificate is sound by construction: every witness vertex has all
# of its neighbours inside X, so any path-matching can cover at most
# 2 |X| of the witnesses through X
g = SimpleGraph.from_edges(7, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6)])
pd, cert = deficiency(g)
cert.check(g)
print(f"double star check: pd = {pd}, certificate verifies")
