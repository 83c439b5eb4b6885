#!/usr/bin/env python3
"""The layered coloring family and what it is extremal for.

[t1, ..., tr] partitions the vertices into parts A1..Ar and paints every
edge with the largest-index part it touches.  Color i then looks like a
clique on A_i joined to everything below it, which keeps the color-i
path-matching small: the A_i vertices dominate their class.
"""

from ramsey_pm import (core_lift_coloring, exact_core_ramsey, layered_coloring,
                       mono_core_profile, mono_pm_profile, pm_extremal_coloring)
from ramsey_pm.core_ramsey import cover_to_coloring

c = layered_coloring([4, 1, 1])
print("layered [4,1,1] on K_6")
print("  per-color max path-matching:", mono_pm_profile(c))
print("  per-color 1-core order:     ", mono_core_profile(c))
print("  -> no color reaches a path-matching of order 5, so this coloring")
print("     certifies that 6 vertices are not enough for targets (5,5,5)")
print()

for targets in [(5, 5, 5), (4, 4, 4), (6, 6), (7, 4, 3)]:
    col = pm_extremal_coloring(targets)
    print(f"extremal coloring for {targets}: K_{col.n}, "
          f"profile {mono_pm_profile(col)} (targets minus one: "
          f"{tuple(p - 1 for p in targets)})")
print()

# lifting: a 1-core witness grows into a path-matching witness by adding,
# per color, a block X_i whose edges all get color i; each block vertex
# extends the color-i path-matching by at most 3
core = exact_core_ramsey((3, 3, 3))
print(f"1-core value of (3,3,3) = {core.value}; witness is a rainbow "
      f"triangle on K_{core.value - 1}")
base = cover_to_coloring(core.lower_witness)
lifted = core_lift_coloring(base, [1, 1, 1])
print(f"lift by one vertex per color: K_{lifted.n} with per-color "
      f"path-matchings {mono_pm_profile(lifted)}")
print("  -> certifies targets (6,6,6) need more than", lifted.n, "vertices")
