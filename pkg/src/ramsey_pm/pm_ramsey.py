"""Exact path-matching Ramsey values.

Two independent routes compute the same number:

* reduction: the value equals the maximum over integer shifts
  0 <= x_i < p_i/3 of (1-core value of the shifted targets) + sum x_i,
  with the 1-core values obtained exactly from the covering search;
* search: direct exhaustive enumeration of colorings, scanning n upward
  until no counterexample coloring survives.

Closed forms are trusted only where proven: two colors, three or four
colors (with their small exceptional cases), uniform targets 3, 4 and 5,
and the standard formula above its threshold.  Anything else goes through
the reduction.  Disagreement between completed routes is a fatal error.
"""

from __future__ import annotations

import time
from itertools import product
from threading import Lock
from typing import Optional, Sequence

from .bounds import ceil_div, ceil_third, pm_all3, pm_lowers, pm_standard_value
from .coloring import (EdgeColoring, TargetVector, core_lift_coloring,
                       mono_pm_profile, pm_extremal_coloring)
from .core_ramsey import BlockCover, cover_to_coloring, exact_core_ramsey
from .results import (PROOF_CLOSED, PROOF_F3, PROOF_SEARCH, PROOF_TABLE,
                      RamseyResult, RouteDisagreementError, FormulaUnavailableError,
                      SearchStats)
from .search import SearchConfig, enumerate_colorings, BUDGET_EXHAUSTED
from .results import BudgetExceededError

# memoized 1-core results keyed by stripped sorted targets; grid scans hit
# the same shifted multisets over and over
_CORE_MEMO: dict[tuple[int, ...], RamseyResult] = {}
_CORE_LOCK = Lock()


def clear_core_cache() -> None:
    with _CORE_LOCK:
        _CORE_MEMO.clear()


def _core_key(targets: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted((p for p in targets if p >= 3), reverse=True))


def core_value(targets: Sequence[int], *, node_budget: int = 100_000_000,
               time_budget: Optional[float] = None, workers: int = 1,
               stats: Optional[SearchStats] = None) -> int:
    """Memoized exact 1-core value; targets at most 2 are dropped since
    their blocks hold at most one vertex, and an all-small vector is 2."""
    key = _core_key(targets)
    if not key:
        return 2
    with _CORE_LOCK:
        hit = _CORE_MEMO.get(key)
    if hit is None:
        hit = exact_core_ramsey(key, node_budget=node_budget,
                                time_budget=time_budget, workers=workers)
        with _CORE_LOCK:
            _CORE_MEMO[key] = hit
    elif stats is not None:
        return hit.value
    if stats is not None:
        stats.nodes += hit.stats.nodes
    return hit.value


def _core_result(targets: Sequence[int], **kw) -> RamseyResult:
    key = _core_key(targets)
    if not key:
        caps = tuple(p - 1 for p in sorted(targets, reverse=True))
        return RamseyResult(tuple(sorted(targets, reverse=True)), 2, PROOF_SEARCH,
                            BlockCover(1, caps, (0,) * len(caps)))
    core_value(targets, **kw)  # fill the memo
    with _CORE_LOCK:
        return _CORE_MEMO[key]


def _grid_ranges(targets: Sequence[int], d: int) -> list[range]:
    # x_i < p_i / d for integers means x_i <= ceil(p_i/d) - 1
    return [range(ceil_div(p, d)) for p in targets]


def f_d(p: Sequence[int], d: int, core_oracle) -> int:
    """max over the integer grid 0 <= x_i < p_i/d of
    core_oracle(p - d*x, re-sorted) + sum(x)."""
    value, _ = _f_d_scan(p, d, core_oracle)
    return value


def _f_d_scan(p: Sequence[int], d: int, core_oracle) -> tuple[int, list[tuple[int, ...]]]:
    if d < 1:
        raise ValueError("positive shift required")
    targets = tuple(p)
    best = None
    argmax: list[tuple[int, ...]] = []
    for xs in product(*_grid_ranges(targets, d)):
        shifted = tuple(pi - d * xi for pi, xi in zip(targets, xs))
        value = core_oracle(tuple(sorted(shifted, reverse=True))) + sum(xs)
        if best is None or value > best:
            best = value
            argmax = [xs]
        elif value == best:
            argmax.append(xs)
    assert best is not None
    return best, argmax


def _normalize(raw: Sequence[int]) -> tuple[int, ...]:
    """Sorted targets with the always-droppable entries (1s) removed."""
    if not raw or any(p < 1 for p in raw):
        raise ValueError("targets must be positive")
    kept = tuple(sorted((p for p in raw if p >= 2), reverse=True))
    return kept


def closed_form_value(ts: tuple[int, ...]) -> Optional[tuple[int, str]]:
    """(value, provenance) where a proven closed form exists, else None.

    ts must be sorted nonincreasing with entries >= 2; entries equal to 2
    are ignored for the value (they never change it).
    """
    t = tuple(p for p in ts if p >= 3)
    r = len(t)
    if r == 0:
        return 2, PROOF_TABLE  # K_2 already contains an order-2 path
    if r == 1:
        return t[0], PROOF_CLOSED  # one color: K_n has a spanning path-matching
    standard = t[0] - (r - 1) + sum(ceil_third(pi) for pi in t[1:])
    if r == 2:
        return standard, PROOF_CLOSED
    if all(p == 3 for p in t):
        return pm_all3(r), PROOF_CLOSED
    if all(p == 4 for p in t):
        return r + 3, PROOF_CLOSED
    if all(p == 5 for p in t):
        return r + 4, PROOF_CLOSED
    if r == 3:
        return standard, PROOF_CLOSED  # exact for all triples except (3,3,3)
    if r == 4:
        if t == (4, 3, 3, 3):
            return 5, PROOF_TABLE
        return standard, PROOF_CLOSED  # exact for all quadruples except the two tables
    _, exact = pm_standard_value(TargetVector(t))
    if exact:
        return standard, PROOF_CLOSED
    return None


def verify_upper(n: int, targets: Sequence[int], *,
                 node_budget: int = 50_000_000,
                 time_budget: Optional[float] = None,
                 workers: int = 1,
                 stats: Optional[SearchStats] = None,
                 progress=None) -> Optional[EdgeColoring]:
    """A coloring of K_n whose color-i path-matchings all stay below p_i,
    or None when every coloring meets some threshold."""
    ts = tuple(targets)
    if n <= 1:
        # K_1 has no edges at all, so it is always a counterexample
        return EdgeColoring(1, len(ts), ())
    cfg = SearchConfig(n, len(ts), ts, node_budget=node_budget,
                       time_budget=time_budget, workers=workers,
                       progress=progress)
    outcome = enumerate_colorings(cfg)
    if stats is not None:
        stats.nodes += outcome.nodes
    if outcome.status == BUDGET_EXHAUSTED:
        raise BudgetExceededError(
            f"upper verification at n={n} exhausted its budget", outcome.nodes)
    return outcome.counterexample


def _witness_valid(col: EdgeColoring, n: int, ts: tuple[int, ...]) -> bool:
    if col.n != n or col.r != len(ts):
        return False
    profile = mono_pm_profile(col)
    return all(q <= p - 1 for q, p in zip(profile, ts))


def _cover_as_coloring_for(ts_shifted: Sequence[int], cover: BlockCover) -> EdgeColoring:
    """Color the cover's blocks back in the order of the unsorted shifted
    targets (stable descending match), so block i certifies color i."""
    order = sorted(range(len(ts_shifted)), key=lambda i: (-ts_shifted[i], i))
    sorted_caps = tuple(ts_shifted[i] - 1 for i in order)
    if sorted_caps != cover.capacities:
        raise ValueError("cover does not match the shifted targets")
    blocks = [0] * len(ts_shifted)
    for slot, orig in enumerate(order):
        blocks[orig] = cover.blocks[slot]
    return cover_to_coloring(BlockCover(cover.n, tuple(p - 1 for p in ts_shifted),
                                        tuple(blocks)))


def find_lower_witness(n: int, targets: Sequence[int], *,
                       node_budget: int = 50_000_000,
                       time_budget: Optional[float] = None,
                       workers: int = 1) -> Optional[EdgeColoring]:
    """A coloring of K_n with every color-i path-matching below p_i.

    Tries, in order: the layered extremal coloring; the design-style lift
    with x_i = ceil(p_i/3) - 1 over a small 1-core witness; lifts over the
    maximizing grid points of the reduction; exhaustive search.  Every
    candidate is validated against its per-color profile before being
    returned.
    """
    ts = _normalize(targets)
    if not ts:
        ts = tuple(targets)
    if n <= 1:
        return EdgeColoring(1, len(ts), ())

    # layered extremal coloring
    try:
        ext = pm_extremal_coloring(TargetVector(ts))
        if _witness_valid(ext, n, ts):
            return ext
    except ValueError:
        pass

    kw = dict(node_budget=node_budget, time_budget=time_budget, workers=workers)

    # design-style lift: shift everything to its residue core
    xs = tuple(ceil_third(p) - 1 for p in ts)
    shifted = tuple(p - 3 * x for p, x in zip(ts, xs))
    core = _core_result(shifted, **kw)
    if core.value - 1 + sum(xs) == n and isinstance(core.lower_witness, BlockCover):
        try:
            lifted = core_lift_coloring(_cover_as_coloring_for(shifted, core.lower_witness), xs)
            if _witness_valid(lifted, n, ts):
                return lifted
        except ValueError:
            pass

    # lifts over every maximizing grid point
    def oracle(sorted_shifted: tuple[int, ...]) -> int:
        return core_value(sorted_shifted, **kw)

    _, argmax = _f_d_scan(ts, 3, oracle)
    for xs in argmax:
        shifted = tuple(p - 3 * x for p, x in zip(ts, xs))
        core = _core_result(shifted, **kw)
        if core.value - 1 + sum(xs) != n or not isinstance(core.lower_witness, BlockCover):
            continue
        try:
            lifted = core_lift_coloring(_cover_as_coloring_for(shifted, core.lower_witness), xs)
        except ValueError:
            continue
        if _witness_valid(lifted, n, ts):
            return lifted

    # last resort: search for any bad coloring directly
    try:
        cex = verify_upper(n, ts, **kw)
    except BudgetExceededError:
        return None
    if cex is not None and _witness_valid(cex, n, ts):
        return cex
    return None


def _auto_search_cap(r: int, explicit: Optional[int]) -> int:
    if explicit is not None:
        return explicit
    if r <= 2:
        return 7
    return 6


def exact_pm_ramsey(targets: Sequence[int], strategy: str = "auto", *,
                    node_budget: int = 50_000_000,
                    time_budget: Optional[float] = None,
                    workers: int = 1,
                    search_cap: Optional[int] = None,
                    cross_check_cap: int = 4,
                    want_witness: bool = True,
                    progress=None) -> RamseyResult:
    """Exact path-matching Ramsey value of the targets.

    strategy:
      auto      proven closed form if one applies, else the reduction,
                cross-checked by direct search when the value is at most
                cross_check_cap;
      formula   closed form only (raises if none is proven);
      reduction the grid maximum over exact 1-core values;
      search    scan n upward with exhaustive coloring searches; sizes
                beyond search_cap fall back to the reduction for the
                remaining upper step (default cap: 7 for two colors, 6
                otherwise).

    Disagreement between any two completed routes raises
    RouteDisagreementError: by the reduction identity it can only mean a
    bug, and both certificates are attached for diagnosis.
    """
    started = time.monotonic()
    ts = _normalize(targets)
    stats = SearchStats()
    kw = dict(node_budget=node_budget, time_budget=time_budget, workers=workers)
    search_kw = dict(kw, progress=progress) if progress is not None else kw

    def reduction_value() -> int:
        def oracle(sorted_shifted: tuple[int, ...]) -> int:
            return core_value(sorted_shifted, stats=stats, **kw)
        return f_d(ts, 3, oracle)

    if not ts:  # every target was 1: one edge settles it
        result = RamseyResult(tuple(sorted(targets, reverse=True)), 2, PROOF_TABLE,
                              None, stats)
        if want_witness:
            result.lower_witness = EdgeColoring(1, len(targets), ())
        result.stats.millis = int((time.monotonic() - started) * 1000)
        return result

    if strategy not in ("auto", "formula", "reduction", "search"):
        raise ValueError(f"unknown strategy {strategy!r}")

    method: str
    if strategy == "formula":
        cf = closed_form_value(ts)
        if cf is None:
            raise FormulaUnavailableError(
                f"no proven closed form for targets {ts}")
        value, method = cf
    elif strategy == "reduction":
        value, method = reduction_value(), PROOF_F3
    elif strategy == "search":
        value, method = _search_scan(ts, stats, search_kw,
                                     _auto_search_cap(len(ts), search_cap),
                                     reduction_value)
    else:  # auto
        cf = closed_form_value(ts)
        if cf is not None:
            value, method = cf
        else:
            value, method = reduction_value(), PROOF_F3
        if cf is not None and method in (PROOF_CLOSED, PROOF_TABLE):
            red = reduction_value() if value <= cross_check_cap else None
            if red is not None and red != value:
                raise RouteDisagreementError(
                    f"closed form {value} disagrees with reduction {red} on {ts}",
                    {"targets": ts, "closed-form": value, "reduction": red})
        if value <= cross_check_cap:
            sv, sm = _search_scan(ts, stats, search_kw,
                                  _auto_search_cap(len(ts), search_cap),
                                  reduction_value)
            if sv != value:
                raise RouteDisagreementError(
                    f"search {sv} disagrees with {method} {value} on {ts}",
                    {"targets": ts, "search": sv, method: value})

    result = RamseyResult(ts, value, method, None, stats)
    if want_witness:
        witness = find_lower_witness(value - 1, ts, **kw) if value >= 2 else None
        if witness is None and value > 2:
            raise RouteDisagreementError(
                f"no witness coloring found on {value - 1} vertices for {ts}; "
                "the lower bound certificate is missing",
                {"targets": ts, "value": value})
        result.lower_witness = witness
    result.stats.millis = int((time.monotonic() - started) * 1000)
    return result


def _search_scan(ts: tuple[int, ...], stats: SearchStats, kw: dict,
                 cap: int, reduction_value) -> tuple[int, str]:
    """Scan n upward with exhaustive searches; (value, provenance)."""
    if len(ts) == 1:
        return ts[0], PROOF_CLOSED
    lower = max(pm_lowers(ts))
    n = max(2, lower)
    while True:
        if n > cap:
            value = reduction_value()
            if value < n:
                raise RouteDisagreementError(
                    f"reduction value {value} below search lower bound {n} on {ts}",
                    {"targets": ts, "reduction": value, "search-lower": n})
            return value, PROOF_F3
        cex = verify_upper(n, ts, stats=stats, **kw)
        if cex is None:
            return n, PROOF_SEARCH
        n += 1
