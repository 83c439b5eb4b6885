#!/usr/bin/env python3
"""Inside the coloring search: pruning, canonicity, and verdicts.

The engine walks r-colorings of K_n edge by edge in colex order, so after
C(m,2) edges the first m vertices carry a complete coloring.  Three prunes
keep the tree tiny:

* success: path-matching order only grows with edges, so a color that
  reaches its threshold in a partial coloring reaches it in every
  completion, and that subtree holds no counterexample;
* color order: among colors with equal thresholds, a new color may only
  appear after all smaller ones (first-use rule);
* vertex canonicity: at each complete-K_m boundary, a prefix beaten by
  some relabelling of the first m vertices is discarded.
"""

from ramsey_pm import (SearchConfig, canonical_extension_check,
                       enumerate_colorings, mono_pm_profile)

cfg = SearchConfig(7, 3, (5, 5, 5))
out = enumerate_colorings(cfg)
print(f"targets (5,5,5) on K_7: {out.status} after only {out.nodes} nodes")
print("  (3^21 colorings exist; the prunes leave almost nothing to visit)")
print()

out6 = enumerate_colorings(SearchConfig(6, 3, (5, 5, 5)))
print(f"the same targets on K_6: {out6.status}")
print(f"  witness profile: {mono_pm_profile(out6.counterexample)}")
print()

print("the first-use rule in action (equal thresholds):")
cfg4 = SearchConfig(4, 3, (4, 4, 4))
print(f"  prefix [1]       canonical? {canonical_extension_check([1], cfg4)}")
print(f"  prefix [2]       canonical? {canonical_extension_check([2], cfg4)}")
print(f"  prefix [1,2,2]   canonical? {canonical_extension_check([1, 2, 2], cfg4)}")
print(f"  prefix [1,1,3]   canonical? {canonical_extension_check([1, 1, 3], cfg4)}")
print()

print("unequal thresholds freeze the color order, so color 2 may lead:")
cfg_uneq = SearchConfig(4, 2, (5, 3))
print(f"  prefix [2]       canonical? {canonical_extension_check([2], cfg_uneq)}")
print()

print("progress reporting on a deliberately unpruned run:")
snapshots = []
cfg_big = SearchConfig(6, 3, (7, 7, 7), node_budget=40_000,
                       progress=snapshots.append, progress_interval=10_000)
out_big = enumerate_colorings(cfg_big, visitor=lambda col: False)
for snap in snapshots:
    rate = snap["nodes"] / max(snap["elapsed"], 1e-9)
    print(f"  {snap['nodes']:>6} nodes, {snap['leaves']:>4} colorings "
          f"visited, {rate:,.0f} nodes/s")
print(f"  outcome: {out_big.status} (the budget is the point here)")
