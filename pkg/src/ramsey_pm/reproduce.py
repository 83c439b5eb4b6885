"""The reproduction report: every published value recomputed and checked.

Each row recomputes one exact value, bound, or witness validation and
compares it against the stated expectation.  Slow rows (the big covering
refutation and the seven-vertex exhaustive search) are opt-in.
"""

from __future__ import annotations

import re
import time
from dataclasses import dataclass
from typing import Callable, Optional

from .bounds import pm_all3, pm_lowers, pm_upper
from .coloring import layered_coloring, mono_pm_profile
from .core_ramsey import covering_number, exact_core_ramsey
from .pm_ramsey import exact_pm_ramsey, find_lower_witness, verify_upper


@dataclass
class ReportRow:
    name: str
    expected: str
    computed: str
    passed: bool
    millis: int
    slow: bool = False


def _pm_value(targets, strategy="auto", **kw):
    return exact_pm_ramsey(targets, strategy=strategy, want_witness=False, **kw).value


def _check_rows(workers: int = 1) -> list[tuple[str, str, Callable[[], tuple[str, bool]], bool]]:
    kw = dict(workers=workers)

    def value_row(name, expect, fn):
        def run():
            got = fn()
            return str(got), got == expect
        return name, str(expect), run, False

    rows: list[tuple[str, str, Callable[[], tuple[str, bool]], bool]] = []

    # exact path-matching values
    rows.append(value_row("R_PM(3,3,3)", 4, lambda: _pm_value((3, 3, 3), "search", **kw)))
    rows.append(value_row("R_PM(3,3,3,3)", 4, lambda: _pm_value((3, 3, 3, 3), "search", **kw)))
    rows.append(value_row("R_PM(4,3,3,3)", 5, lambda: _pm_value((4, 3, 3, 3), "search", **kw)))
    rows.append(value_row("R_PM(4,4,4)", 6, lambda: _pm_value((4, 4, 4), "search", **kw)))
    rows.append(value_row("R_PM(5,5,5)", 7, lambda: _pm_value((5, 5, 5), "search", **kw)))
    for p1 in range(2, 7):
        for p2 in range(2, p1 + 1):
            want = p1 + (p2 + 2) // 3 - 1
            rows.append(value_row(f"R_PM({p1},{p2})", want,
                                  lambda a=p1, b=p2: _pm_value((a, b), "search", **kw)))

    # exact 1-core values
    rows.append(value_row("R_1C(4,4,4)", 5, lambda: exact_core_ramsey((4, 4, 4), **kw).value))
    rows.append(value_row("R_1C(5,5,5)", 7, lambda: exact_core_ramsey((5, 5, 5), **kw).value))
    rows.append(value_row("R_1C(4,3,3,3)", 5, lambda: exact_core_ramsey((4, 3, 3, 3), **kw).value))
    for p1 in range(2, 9):
        for p2 in range(2, p1 + 1):
            rows.append(value_row(f"R_1C({p1},{p2})", max(p1, p2),
                                  lambda a=p1, b=p2: exact_core_ramsey((a, b), **kw).value))
    for r in range(2, 13):
        rows.append(value_row(f"R_1C(3x{r})", pm_all3(r),
                              lambda rr=r: exact_core_ramsey((3,) * rr, **kw).value))
    rows.append(value_row("C(9,5)", 5, lambda: covering_number(9, 5, **kw)))

    # uniform families
    for r in range(2, 6):
        rows.append(value_row(f"R_PM(4x{r})", r + 3,
                              lambda rr=r: _pm_value((4,) * rr, "reduction", **kw)))
        rows.append(value_row(f"R_PM(5x{r})", r + 4,
                              lambda rr=r: _pm_value((5,) * rr, "reduction", **kw)))

    # headline bounds for ten colors with target 6
    def ten_six():
        lo = pm_lowers((6,) * 10)
        hi = pm_upper((6,) * 10)
        return f"{lo[0]}/{lo[1]}/{hi}", lo == (15, 16) and hi == 21
    rows.append(("bounds (6x10) standard/design/upper", "15/16/21", ten_six, False))

    # witness validations
    def witness_555():
        col = find_lower_witness(6, (5, 5, 5), **kw)
        prof = mono_pm_profile(col)
        return f"profile {prof}", col is not None and all(q <= 4 for q in prof)
    rows.append(("witness for R_PM(5,5,5) on K_6", "profile <= (4,4,4)", witness_555, False))

    def witness_ten_six():
        col = find_lower_witness(15, (6,) * 10, **kw)
        if col is None:
            return "missing", False
        prof = mono_pm_profile(col)
        return f"max profile {max(prof)}", all(q <= 5 for q in prof)
    rows.append(("witness for R_PM(6x10) > 15 on K_15", "profile <= 5", witness_ten_six, False))

    def core_witness_555():
        res = exact_core_ramsey((5, 5, 5), **kw)
        cover = res.lower_witness
        cover.validate()
        return f"block sizes {sorted(cover.block_sizes())}", cover.n == 6
    rows.append(("cover witness for R_1C(5,5,5) on K_6", "valid cover", core_witness_555, False))

    def diagonal_rows():
        ok = True
        detail = []
        for r in (2, 3, 4):
            n = (8 // (r + 2)) * (r + 2)  # largest multiple of r+2 up to 8
            target = 3 * n // (r + 2)
            col = layered_coloring([3 * n // (r + 2)] + [n // (r + 2)] * (r - 1))
            prof = mono_pm_profile(col)
            ok = ok and max(prof) == target
            detail.append(f"r={r},n={n}:{max(prof)}")
        return " ".join(detail), ok
    rows.append(("diagonal tightness [3n/(r+2), n/(r+2), ...]", "max profile = 3n/(r+2)",
                 diagonal_rows, False))

    # slow rows
    rows.append(("C(13,5) [slow]", "10",
                 lambda: (str(covering_number(13, 5, **kw)), covering_number(13, 5, **kw) == 10),
                 True))

    def search_555_at_7():
        cex = verify_upper(7, (5, 5, 5), **kw)
        return "all-succeed" if cex is None else "counterexample", cex is None
    rows.append(("exhaustive search (5,5,5) at n=7 [slow]", "all-succeed", search_555_at_7, True))

    return rows


def run_report(include_slow: bool = False, only: Optional[str] = None,
               workers: int = 1) -> list[ReportRow]:
    pattern = re.compile(only) if only else None
    out = []
    for name, expected, fn, slow in _check_rows(workers):
        if slow and not include_slow:
            continue
        if pattern and not pattern.search(name):
            continue
        started = time.monotonic()
        try:
            computed, passed = fn()
        except Exception as err:  # a failure to compute is a failing row
            computed, passed = f"error: {err}", False
        millis = int((time.monotonic() - started) * 1000)
        out.append(ReportRow(name, expected, computed, passed, millis, slow))
    return out


def render_report(rows: list[ReportRow]) -> str:
    width = max((len(r.name) for r in rows), default=10)
    lines = []
    for r in rows:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{status}  {r.name:<{width}}  expected {r.expected}"
                     f"  got {r.computed}  [{r.millis} ms]")
    good = sum(1 for r in rows if r.passed)
    lines.append(f"{good}/{len(rows)} checks passed")
    return "\n".join(lines)
