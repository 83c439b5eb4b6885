from itertools import combinations_with_replacement

import pytest

from ramsey_pm.bounds import ceil_third, pm_lowers, pm_standard_value, pm_upper
from ramsey_pm.coloring import mono_pm_profile
from ramsey_pm.pm_ramsey import (core_value, exact_pm_ramsey, f_d,
                                 find_lower_witness, verify_upper)
from ramsey_pm.results import FormulaUnavailableError


def test_f3_examples():
    assert f_d((3, 3, 3), 3, core_value) == 4
    assert f_d((5, 5), 3, core_value) == 6
    # the six-term grid over five equal targets, spelled out
    six_terms = [core_value(tuple(sorted((6,) * (5 - k) + (3,) * k, reverse=True))) + k
                 for k in range(6)]
    assert f_d((6,) * 5, 3, core_value) == max(six_terms)


def test_f3_dominates_unshifted_core_and_standard_lower():
    for tv in [(5, 5, 5), (6, 6, 4), (7, 5, 3), (4, 4, 4, 4), (6, 6, 6, 6)]:
        value = f_d(tv, 3, core_value)
        assert value >= core_value(tv)
        assert value >= tv[0] + sum(ceil_third(p) - 1 for p in tv[1:])


def test_exact_values_match_published_table():
    table = {(3, 3, 3): 4, (3, 3, 3, 3): 4, (4, 3, 3, 3): 5,
             (4, 4, 4): 6, (5, 5, 5): 7}
    for tv, want in table.items():
        for strategy in ("auto", "reduction", "search"):
            assert exact_pm_ramsey(tv, strategy=strategy).value == want


def test_verify_upper_examples():
    assert verify_upper(4, (3, 3, 3)) is None
    cex = verify_upper(3, (3, 3, 3))
    assert cex is not None and mono_pm_profile(cex) == (2, 2, 2)
    cex = verify_upper(6, (5, 5, 5))
    assert cex is not None
    assert all(q <= 4 for q in mono_pm_profile(cex))


def test_find_lower_witness_examples():
    from ramsey_pm.coloring import layered_coloring
    col = find_lower_witness(6, (5, 5, 5))
    assert col.n == 6 and mono_pm_profile(col) == (4, 3, 3)
    assert col.colors == layered_coloring([4, 1, 1]).colors

    col = find_lower_witness(15, (6,) * 10)
    assert col is not None and col.n == 15
    assert all(q <= 5 for q in mono_pm_profile(col))

    col = find_lower_witness(4, (4, 4))
    assert col is not None
    assert all(q <= 3 for q in mono_pm_profile(col))


def test_route_agreement_small_vectors():
    vectors = set()
    for r in (1, 2, 3):
        for tv in combinations_with_replacement(range(5, 2, -1), r):
            vectors.add(tuple(sorted(tv, reverse=True)))
    for tv in sorted(vectors):
        red = exact_pm_ramsey(tv, strategy="reduction", want_witness=False).value
        srch = exact_pm_ramsey(tv, strategy="search", want_witness=False,
                               search_cap=7).value
        assert red == srch, tv


def test_route_agreement_four_colors_small_values(rng):
    # quadruples whose value stays within genuine search range
    for tv in [(3, 3, 3, 2), (4, 3, 3, 2), (3, 3, 2, 2), (4, 3, 3, 3),
               (4, 4, 3, 3), (3, 3, 3, 3)]:
        red = exact_pm_ramsey(tv, strategy="reduction", want_witness=False).value
        srch = exact_pm_ramsey(tv, strategy="search", want_witness=False,
                               search_cap=6).value
        assert red == srch, tv


def test_sandwich_and_exactness(rng):
    for _ in range(60):
        r = rng.randint(2, 6)
        tv = tuple(sorted((rng.randint(2, 9) for _ in range(r)), reverse=True))
        value = exact_pm_ramsey(tv, strategy="reduction", want_witness=False).value
        lo_std, lo_design = pm_lowers(tv)
        assert max(lo_std, lo_design) <= value <= pm_upper(tv), tv
        sv, exact = pm_standard_value(tv)
        if exact:
            assert value == sv, tv


def test_uniform_small_cases_via_reduction():
    for r in range(2, 6):
        assert exact_pm_ramsey((4,) * r, strategy="reduction").value == r + 3
        assert exact_pm_ramsey((5,) * r, strategy="reduction").value == r + 4


def test_appending_twos_never_changes_value():
    for r in range(1, 5):
        for tv in [(6,) * r, (5, 4, 3)[:max(1, r)], (4,) * r]:
            tv = tuple(sorted(tv, reverse=True))
            base = exact_pm_ramsey(tv, strategy="reduction", want_witness=False).value
            extended = exact_pm_ramsey(tv + (2,), strategy="reduction",
                                       want_witness=False).value
            assert base == extended, tv


def test_monotone_in_each_target():
    solved = [(3, 3, 3), (4, 3, 3), (4, 4, 3), (4, 4, 4), (5, 4, 4), (5, 5, 4)]
    values = {tv: exact_pm_ramsey(tv, strategy="reduction", want_witness=False).value
              for tv in solved}
    for tv, val in values.items():
        for i in range(len(tv)):
            bumped = tuple(sorted((tv[j] + (1 if j == i else 0)
                                   for j in range(len(tv))), reverse=True))
            bigger = exact_pm_ramsey(bumped, strategy="reduction",
                                     want_witness=False).value
            assert bigger >= val, (tv, bumped)


def test_trivial_targets():
    assert exact_pm_ramsey((2, 2)).value == 2
    assert exact_pm_ramsey((1, 1)).value == 2
    assert exact_pm_ramsey((2,)).value == 2


def test_witness_attached_and_valid():
    for tv in [(3, 3, 3), (4, 4, 4), (5, 5), (6, 4), (4, 3, 3, 3)]:
        res = exact_pm_ramsey(tv)
        col = res.lower_witness
        assert col is not None and col.n == res.value - 1
        prof = mono_pm_profile(col)
        assert all(q <= p - 1 for q, p in zip(prof, res.targets))


def test_formula_strategy_refuses_unproven():
    # five equal targets of six sit below the exactness threshold and
    # outside every small-case table
    with pytest.raises(FormulaUnavailableError):
        exact_pm_ramsey((6,) * 5, strategy="formula")


def test_formula_strategy_on_proven_cases():
    assert exact_pm_ramsey((5, 5), strategy="formula").value == 6
    assert exact_pm_ramsey((7, 6, 6, 6, 6), strategy="formula",
                           want_witness=False).value == 11
    assert exact_pm_ramsey((6, 5, 4), strategy="formula",
                           want_witness=False).value == 6 + 2 + 2 - 2
