"""Path-matching deficiency and maximum path-matching order.

A path-matching is a vertex-disjoint union of paths with at least two
vertices each; its order is the number of vertices it covers.  Any such
union can be rewritten using only P2 and P3 components, which is what the
brute-force packing oracle enumerates.

The deficiency pd(G), the number of vertices missed by a maximum
path-matching, satisfies the minimax identity

    pd(G) = max over X of  (# isolated vertices of G - X) - 2|X|

and a set X attaining the maximum is called an LV set.  We compute pd by
direct subset enumeration of X with two prunes: only |X| < n/3 can beat
the empty set, and size k is skipped once n - 3k cannot beat the incumbent.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .graphs import SimpleGraph, VertexSet, bits

DEFAULT_DEFICIENCY_CAP = 24
ORACLE_CAP = 10


@dataclass(frozen=True)
class DeficiencyCertificate:
    """An LV set together with the isolated vertices it leaves behind.

    Invariants: |isolated_witness| - 2|lv_set| = deficiency, and every
    witness vertex has all of its neighbours inside lv_set.
    """

    lv_set: VertexSet
    deficiency: int
    isolated_witness: VertexSet

    def check(self, g: SimpleGraph) -> None:
        """Raise if the certificate does not hold in g."""
        if self.lv_set & self.isolated_witness:
            raise ValueError("LV set and witness overlap")
        if self.isolated_witness.bit_count() - 2 * self.lv_set.bit_count() != self.deficiency:
            raise ValueError("witness count does not match deficiency")
        for v in bits(self.isolated_witness):
            if g.rows[v] & ~self.lv_set:
                raise ValueError(f"witness vertex {v} has a neighbour outside the LV set")


def _isolated_after_removal(rows: tuple[int, ...], full: int, xm: int) -> tuple[int, int]:
    """(count, mask) of vertices outside xm whose neighbours all lie in xm."""
    rest = full ^ xm
    q = 0
    wit = 0
    mm = rest
    while mm:
        b = mm & -mm
        if rows[b.bit_length() - 1] & rest == 0:
            q += 1
            wit |= b
        mm ^= b
    return q, wit


def deficiency(g: SimpleGraph, cap: int = DEFAULT_DEFICIENCY_CAP) -> tuple[int, DeficiencyCertificate]:
    """Exact pd(g) with a certificate.

    Ties are broken toward the lexicographically least LV set of minimum
    size, so certificates are stable across runs.
    """
    n = g.n
    if n > cap:
        raise ValueError(f"graph on {n} vertices exceeds deficiency cap {cap}")
    rows = g.rows
    full = (1 << n) - 1

    best_q, best_wit = _isolated_after_removal(rows, full, 0)
    best_val = best_q
    best_x = 0

    # k >= n/3 gives value <= n - 3k <= 0 <= best, so it can never win.
    k_max = (n + 2) // 3 - 1
    for k in range(1, k_max + 1):
        if n - 3 * k <= best_val:
            break
        for xs in combinations(range(n), k):
            xm = 0
            for v in xs:
                xm |= 1 << v
            q, wit = _isolated_after_removal(rows, full, xm)
            if q - 2 * k > best_val:
                best_val = q - 2 * k
                best_x = xm
                best_wit = wit
    return best_val, DeficiencyCertificate(best_x, best_val, best_wit)


@lru_cache(maxsize=1 << 18)
def _pm_order_compressed(rows: tuple[int, ...]) -> int:
    """Max path-matching order of the graph given by rows (m vertices)."""
    m = len(rows)
    if m == 0:
        return 0
    full = (1 << m) - 1
    best = sum(1 for r in rows if r == 0)
    k_max = (m + 2) // 3 - 1
    for k in range(1, k_max + 1):
        if m - 3 * k <= best:
            break
        for xs in combinations(range(m), k):
            xm = 0
            for v in xs:
                xm |= 1 << v
            rest = full ^ xm
            q = 0
            mm = rest
            while mm:
                b = mm & -mm
                if rows[b.bit_length() - 1] & rest == 0:
                    q += 1
                mm ^= b
            if q - 2 * k > best:
                best = q - 2 * k
    return m - best


def pm_order_of_rows(rows, n: int) -> int:
    """Max path-matching order from raw adjacency rows.

    Isolated vertices carry no path-matching, so the computation first
    compresses onto the support; the compressed form is cached, which the
    coloring search leans on heavily.
    """
    support = [v for v in range(n) if rows[v]]
    m = len(support)
    if m == 0:
        return 0
    if m == n:
        return _pm_order_compressed(tuple(rows))
    pos = {v: i for i, v in enumerate(support)}
    comp = []
    for v in support:
        row = 0
        mm = rows[v]
        while mm:
            b = mm & -mm
            row |= 1 << pos[b.bit_length() - 1]
            mm ^= b
        comp.append(row)
    return _pm_order_compressed(tuple(comp))


def max_pm_order(g: SimpleGraph, cap: int = DEFAULT_DEFICIENCY_CAP) -> int:
    """Maximum order of a path-matching in g, as n - pd(g)."""
    support = sum(1 for r in g.rows if r)
    if support > cap:
        raise ValueError(f"graph support {support} exceeds deficiency cap {cap}")
    return pm_order_of_rows(g.rows, g.n)


def has_perfect_pm(g: SimpleGraph, cap: int = DEFAULT_DEFICIENCY_CAP) -> bool:
    """True iff some path-matching covers every vertex, i.e. pd(g) = 0."""
    if g.n > cap:
        raise ValueError(f"graph on {g.n} vertices exceeds deficiency cap {cap}")
    return pm_order_of_rows(g.rows, g.n) == g.n


def packing_oracle(g: SimpleGraph) -> int:
    """Exhaustive {P2, P3}-packing, independent of the deficiency formula.

    Bottom-up over vertex subsets: the lowest vertex of the remaining set
    is either left uncovered, matched by an edge, or placed in a P3 as an
    endpoint or as the centre.  Exact for n <= 10; used for testing.
    """
    n = g.n
    if n > ORACLE_CAP:
        raise ValueError(f"packing oracle capped at {ORACLE_CAP} vertices, got {n}")
    rows = g.rows
    full = (1 << n) - 1
    dp = [0] * (full + 1)
    for mask in range(1, full + 1):
        vb = mask & -mask
        rest = mask ^ vb
        best = dp[rest]
        nb = rows[vb.bit_length() - 1] & rest
        mm = nb
        while mm:
            ub = mm & -mm
            mm ^= ub
            rest2 = rest ^ ub
            t = 2 + dp[rest2]
            if t > best:
                best = t
            mw = rows[ub.bit_length() - 1] & rest2
            while mw:
                wb = mw & -mw
                mw ^= wb
                t = 3 + dp[rest2 ^ wb]
                if t > best:
                    best = t
            mw = nb & rest2 & ~((ub << 1) - 1)  # centres: second leg above u avoids repeats
            while mw:
                wb = mw & -mw
                mw ^= wb
                t = 3 + dp[rest2 ^ wb]
                if t > best:
                    best = t
        dp[mask] = best
    return dp[full]
