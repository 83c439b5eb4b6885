"""Text and JSON formats, plus the on-disk result cache.

All file formats are 1-indexed (vertices and colors); the library is
0-indexed internally.

Coloring text: line 1 is "n r"; line i+1 (1 <= i <= n-1) holds the colors
of edges (i, i+1), ..., (i, n), space separated.

Graph text: line 1 is "n"; each further line is one edge "u v".

Cover JSON: {"n": ..., "capacities": [...], "blocks": [[v, ...], ...]}.

Result JSON: {"targets": [...], "value": ..., "method": ...,
              "witness": {...} | null, "stats": {"nodes": ..., "millis": ...}}.
"""

from __future__ import annotations

import json
import os
import tempfile
import time
from typing import Optional

from .coloring import EdgeColoring
from .core_ramsey import BlockCover
from .graphs import SimpleGraph, bits, mask_of
from .results import RamseyResult, SearchStats


def coloring_to_text(c: EdgeColoring) -> str:
    lines = [f"{c.n} {c.r}"]
    for u in range(c.n - 1):
        lines.append(" ".join(str(c.color_of(u, v)) for v in range(u + 1, c.n)))
    return "\n".join(lines) + "\n"


def coloring_from_text(text: str) -> EdgeColoring:
    rows = [line.split() for line in text.strip().splitlines() if line.strip()]
    if not rows:
        raise ValueError("empty coloring file")
    n, r = int(rows[0][0]), int(rows[0][1])
    if len(rows) != max(1, n):
        if not (n == 1 and len(rows) == 1):
            raise ValueError(f"expected {n - 1} edge lines, got {len(rows) - 1}")
    colors = []
    for u in range(n - 1):
        vals = [int(x) for x in rows[u + 1]]
        if len(vals) != n - u - 1:
            raise ValueError(f"line {u + 2}: expected {n - u - 1} colors")
        colors.extend(vals)
    return EdgeColoring(n, r, tuple(colors))


def graph_to_text(g: SimpleGraph) -> str:
    lines = [str(g.n)]
    for u, v in g.edges():
        lines.append(f"{u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> SimpleGraph:
    rows = [line.split() for line in text.strip().splitlines() if line.strip()]
    if not rows:
        raise ValueError("empty graph file")
    n = int(rows[0][0])
    edges = []
    for line in rows[1:]:
        u, v = int(line[0]), int(line[1])
        edges.append((u - 1, v - 1))
    return SimpleGraph.from_edges(n, edges)


def cover_to_json(cover: BlockCover) -> dict:
    return {
        "n": cover.n,
        "capacities": list(cover.capacities),
        "blocks": [[v + 1 for v in bits(b)] for b in cover.blocks],
    }


def cover_from_json(obj: dict) -> BlockCover:
    blocks = tuple(mask_of(v - 1 for v in blk) for blk in obj["blocks"])
    return BlockCover(int(obj["n"]), tuple(int(c) for c in obj["capacities"]), blocks)


def coloring_to_json(c: EdgeColoring) -> dict:
    return {
        "type": "coloring",
        "n": c.n,
        "r": c.r,
        "rows": [[c.color_of(u, v) for v in range(u + 1, c.n)] for u in range(c.n - 1)],
    }


def coloring_from_json(obj: dict) -> EdgeColoring:
    n, r = int(obj["n"]), int(obj["r"])
    colors = []
    for row in obj["rows"]:
        colors.extend(int(x) for x in row)
    return EdgeColoring(n, r, tuple(colors))


def witness_to_json(witness) -> Optional[dict]:
    if witness is None:
        return None
    if isinstance(witness, BlockCover):
        out = cover_to_json(witness)
        out["type"] = "cover"
        return out
    if isinstance(witness, EdgeColoring):
        return coloring_to_json(witness)
    raise TypeError(f"unknown witness type {type(witness)!r}")


def witness_from_json(obj: Optional[dict]):
    if obj is None:
        return None
    if obj.get("type") == "cover":
        return cover_from_json(obj)
    if obj.get("type") == "coloring":
        return coloring_from_json(obj)
    raise ValueError("unknown witness type in JSON")


def result_to_json(res: RamseyResult) -> dict:
    return {
        "targets": list(res.targets),
        "value": res.value,
        "method": res.method,
        "witness": witness_to_json(res.lower_witness),
        "stats": {"nodes": res.stats.nodes, "millis": res.stats.millis},
    }


def result_from_json(obj: dict) -> RamseyResult:
    stats = SearchStats(int(obj["stats"]["nodes"]), int(obj["stats"]["millis"]))
    return RamseyResult(tuple(obj["targets"]), int(obj["value"]), obj["method"],
                        witness_from_json(obj.get("witness")), stats)


def cache_key(kind: str, targets=None, v: int = 0, k: int = 0) -> str:
    """Canonical cache keys: "PM:5,5,5", "1C:5,5,5", "C:9/5"."""
    if kind in ("PM", "1C"):
        ts = sorted(targets, reverse=True)
        return f"{kind}:{','.join(str(t) for t in ts)}"
    if kind == "C":
        return f"C:{v}/{k}"
    raise ValueError(f"unknown cache kind {kind!r}")


class ResultCache:
    """A single JSON document of computed values, replaced atomically.

    Entries map the canonical key to {"value", "method", "created"}.
    """

    def __init__(self, path: str):
        self.path = path
        self.entries: dict[str, dict] = {}
        self.load()

    def load(self) -> None:
        if os.path.exists(self.path):
            with open(self.path, "r", encoding="utf-8") as fh:
                self.entries = json.load(fh)
        else:
            self.entries = {}

    def save(self) -> None:
        directory = os.path.dirname(os.path.abspath(self.path)) or "."
        os.makedirs(directory, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=directory, prefix=".ramsey-cache-")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(self.entries, fh, indent=1, sort_keys=True)
            os.replace(tmp, self.path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def get(self, key: str) -> Optional[dict]:
        return self.entries.get(key)

    def put(self, key: str, value: int, method: str) -> None:
        self.entries[key] = {
            "value": value,
            "method": method,
            "created": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        }
        self.save()


def default_cache_path() -> str:
    env = os.environ.get("RAMSEY_PM_CACHE")
    if env:
        return env
    return os.path.join(os.path.expanduser("~"), ".cache", "ramsey-pm", "results.json")
