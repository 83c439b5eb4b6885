"""Edge colorings of complete graphs and the layered extremal family.

Colors are 1-indexed throughout (matching the text format); vertices are
0-indexed internally and 1-indexed in files.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphs import MAX_VERTICES, SimpleGraph
from .path_matching import DEFAULT_DEFICIENCY_CAP, pm_order_of_rows

MAX_COLORS = 64


@dataclass(frozen=True)
class TargetVector:
    """Nonincreasing Ramsey thresholds p1 >= ... >= pr.

    Public vectors have entries >= 2; entries equal to 1 are tolerated
    because the f^3 reduction shifts targets below 2 internally.
    """

    targets: tuple[int, ...]

    def __post_init__(self):
        t = self.targets
        if len(t) < 1:
            raise ValueError("empty target vector")
        if any(p < 1 for p in t):
            raise ValueError("targets must be >= 1")
        if any(t[i] < t[i + 1] for i in range(len(t) - 1)):
            raise ValueError("targets must be nonincreasing")

    @classmethod
    def of(cls, values: Iterable[int]) -> "TargetVector":
        """Sort the given thresholds nonincreasingly and wrap them."""
        return cls(tuple(sorted(values, reverse=True)))

    @property
    def r(self) -> int:
        return len(self.targets)

    def __iter__(self):
        return iter(self.targets)

    def __len__(self):
        return len(self.targets)

    def __getitem__(self, i):
        return self.targets[i]


Targets = TargetVector | Sequence[int]


def as_targets(p: Targets) -> TargetVector:
    if isinstance(p, TargetVector):
        return p
    return TargetVector.of(p)


def _tri(n: int) -> int:
    return n * (n - 1) // 2


@dataclass(frozen=True)
class EdgeColoring:
    """Total r-coloring of the edges of K_n.

    colors is the flat upper triangle in row-major order: entry for edge
    (u, v) with u < v sits at offset(u) + (v - u - 1).
    """

    n: int
    r: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if not 1 <= self.r <= MAX_COLORS:
            raise ValueError(f"color count {self.r} outside 1..{MAX_COLORS}")
        if len(self.colors) != _tri(self.n):
            raise ValueError("color array length does not match n")
        if any(not 1 <= c <= self.r for c in self.colors):
            raise ValueError("colors must lie in 1..r")

    def _index(self, u: int, v: int) -> int:
        if u == v:
            raise ValueError("no self-loops")
        if u > v:
            u, v = v, u
        return u * self.n - u * (u + 1) // 2 + (v - u - 1)

    def color_of(self, u: int, v: int) -> int:
        return self.colors[self._index(u, v)]

    def color_rows(self, color: int) -> tuple[int, ...]:
        """Adjacency rows of one color class."""
        rows = [0] * self.n
        k = 0
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if self.colors[k] == color:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
                k += 1
        return tuple(rows)

    def color_class(self, color: int) -> SimpleGraph:
        if not 1 <= color <= self.r:
            raise ValueError(f"color {color} outside 1..{self.r}")
        return SimpleGraph(self.n, self.color_rows(color))

    def relabel(self, perm: Sequence[int]) -> "EdgeColoring":
        """Coloring with vertex u renamed perm[u]."""
        out = [0] * len(self.colors)
        k = 0
        for u in range(self.n):
            for v in range(u + 1, self.n):
                a, b = perm[u], perm[v]
                if a > b:
                    a, b = b, a
                out[a * self.n - a * (a + 1) // 2 + (b - a - 1)] = self.colors[k]
                k += 1
        return EdgeColoring(self.n, self.r, tuple(out))

    def permute_colors(self, cmap: Sequence[int]) -> "EdgeColoring":
        """Coloring with color c renamed cmap[c-1] (cmap is 1-indexed values)."""
        return EdgeColoring(self.n, self.r, tuple(cmap[c - 1] for c in self.colors))


def coloring_from_edge_colors(n: int, r: int, assignment) -> EdgeColoring:
    """Build a coloring from a callable (u, v) -> color, u < v."""
    cols = []
    for u in range(n):
        for v in range(u + 1, n):
            cols.append(assignment(u, v))
    return EdgeColoring(n, r, tuple(cols))


def layered_coloring(sizes: Sequence[int]) -> EdgeColoring:
    """The coloring [t1, ..., tr]: parts A1..Ar with |Ai| = ti, and every
    edge colored by the largest-index part it touches.

    Parts of size 0 simply leave their color unused.
    """
    if any(t < 0 for t in sizes):
        raise ValueError("part sizes must be nonnegative")
    n = sum(sizes)
    if n < 2:
        raise ValueError("need at least 2 vertices in total")
    r = len(sizes)
    part = []
    for i, t in enumerate(sizes):
        part.extend([i + 1] * t)
    return coloring_from_edge_colors(n, r, lambda u, v: max(part[u], part[v]))


def pm_extremal_coloring(p: Targets) -> EdgeColoring:
    """The lower-bound coloring [p1-1, ceil(p2/3)-1, ..., ceil(pr/3)-1]."""
    t = as_targets(p).targets
    if t[0] < 2:
        raise ValueError("leading target must be at least 2")
    sizes = [t[0] - 1] + [(pi + 2) // 3 - 1 for pi in t[1:]]
    return layered_coloring(sizes)


def core_lift_coloring(core: EdgeColoring, x: Sequence[int]) -> EdgeColoring:
    """Append blocks X_1..X_r with |X_i| = x_i and paint every edge that
    touches X_i with color i; an edge touching several blocks gets the
    highest block index, i.e. blocks are applied in increasing color order
    with last writer winning.
    """
    if len(x) != core.r:
        raise ValueError("one block size per color required")
    if any(xi < 0 for xi in x):
        raise ValueError("block sizes must be nonnegative")
    n = core.n + sum(x)
    if n > MAX_VERTICES:
        raise ValueError(f"lifted coloring would have {n} > {MAX_VERTICES} vertices")
    block = [0] * core.n  # 0 = core vertex, else color index of its block
    for i, xi in enumerate(x):
        block.extend([i + 1] * xi)

    def color(u: int, v: int) -> int:
        top = max(block[u], block[v])
        if top == 0:
            return core.color_of(u, v)
        return top

    return coloring_from_edge_colors(n, core.r, color)


def mono_pm_profile(c: EdgeColoring, cap: int = DEFAULT_DEFICIENCY_CAP) -> tuple[int, ...]:
    """Per-color maximum path-matching orders."""
    out = []
    for color in range(1, c.r + 1):
        rows = c.color_rows(color)
        support = sum(1 for row in rows if row)
        if support > cap:
            raise ValueError(f"color {color} touches {support} vertices, above cap {cap}")
        out.append(pm_order_of_rows(rows, c.n))
    return tuple(out)


def mono_core_profile(c: EdgeColoring) -> tuple[int, ...]:
    """Per-color 1-core orders, i.e. how many vertices see each color."""
    out = []
    for color in range(1, c.r + 1):
        rows = c.color_rows(color)
        out.append(sum(1 for row in rows if row))
    return tuple(out)
