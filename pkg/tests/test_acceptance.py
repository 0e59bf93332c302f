"""Acceptance gate: one pass/fail line per criterion.

Each test prints a single summary line (visible even under output capture)
and then asserts.  Criteria 1-5 sweep every permutation of S_n for n up to
6; criterion 8 extends the sweep to S_7 and runs only when the environment
variable SCHUBSING_N7 is set (minutes of single-core runtime).
"""

import os
import time

import pytest

from schubsing.components import classify_component, verify_formulas
from schubsing.kl import kl_closed_form, kl_recursion
from schubsing.patterns import is_smooth
from schubsing.perms import Permutation, length, make_permutation
from schubsing.slices import (
    DEFAULT_SEED,
    build_slice,
    free_coordinates,
    verify_slice,
)
from schubsing.sweep import component_pairs, is_smooth_tangent, verify_all
from schubsing.symgroup import symmetric_group
from schubsing.tangent import singular_components, tangent_dimension

SWEEP_SIZES = (2, 3, 4, 5, 6)


def _report(capsys, criterion: int, ok: bool, detail: str) -> None:
    status = "PASS" if ok else "FAIL"
    with capsys.disabled():
        print(f"[acceptance] criterion {criterion}: {status} - {detail}")


def _all_perms(n):
    group = symmetric_group(n)
    return [Permutation(values) for values in group.perms]


def test_criterion_1_smoothness_equivalence(capsys):
    """Pattern test and tangent oracle agree on every w, n <= 6."""
    start = time.perf_counter()
    total = 0
    mismatches = []
    for n in SWEEP_SIZES:
        for w in _all_perms(n):
            total += 1
            if is_smooth(w) != is_smooth_tangent(w):
                mismatches.append(w.values)
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 120.0
    _report(
        capsys,
        1,
        ok,
        f"smoothness equivalence on {total} permutations, "
        f"{len(mismatches)} mismatches, {elapsed:.1f}s (budget 120s)",
    )
    assert not mismatches, mismatches[:5]
    assert elapsed < 120.0


def test_criterion_2_classification_exhaustive(capsys):
    """Every component pair classifies into one type with exact formulas."""
    pairs = 0
    failures = []
    for n in SWEEP_SIZES:
        for w, c in component_pairs(n):
            pairs += 1
            if c.ctype not in ("4231", "3412*", "3412empty"):
                failures.append((w.values, c.v.values, "unknown type"))
            elif not verify_formulas(c, w):
                failures.append((w.values, c.v.values, "formulas"))
    ok = pairs > 0 and not failures
    _report(
        capsys,
        2,
        ok,
        f"classification and double equalities on {pairs} component pairs, "
        f"{len(failures)} failures",
    )
    assert ok, failures[:5]


def test_criterion_3_kl_closed_form(capsys):
    """Closed-form KL polynomials match the recursion on every pair."""
    pairs = 0
    failures = []
    for n in SWEEP_SIZES:
        for w, c in component_pairs(n):
            pairs += 1
            if kl_closed_form(c) != kl_recursion(c.v, w):
                failures.append((w.values, c.v.values))
    spot = (
        kl_recursion(make_permutation([2, 1, 4, 3]), make_permutation([4, 2, 3, 1]))
        == kl_recursion(make_permutation([1, 3, 2, 4]), make_permutation([3, 4, 1, 2]))
        == (1, 1)
    )
    ok = pairs > 0 and not failures and spot
    _report(
        capsys,
        3,
        ok,
        f"KL closed form vs recursion on {pairs} component pairs, "
        f"{len(failures)} mismatches, spot values 1+q {'ok' if spot else 'WRONG'}",
    )
    assert ok, failures[:5]


def test_criterion_4_free_count_identity(capsys):
    """|free coordinates| = tangent dimension - l(v) on every component pair."""
    pairs = 0
    failures = []
    for n in SWEEP_SIZES:
        for w, c in component_pairs(n):
            pairs += 1
            expected = tangent_dimension(c.v, w).dim - length(c.v)
            if len(free_coordinates(c.v, w)) != expected:
                failures.append((w.values, c.v.values))
    ok = pairs > 0 and not failures
    _report(
        capsys,
        4,
        ok,
        f"free-coordinate count identity on {pairs} component pairs, "
        f"{len(failures)} exceptions",
    )
    assert ok, failures[:5]


def test_criterion_5_slice_verification(capsys):
    """All five slice checks pass with trials=50 and the fixed default seed."""
    start = time.perf_counter()
    pairs = 0
    failures = []
    for n in SWEEP_SIZES:
        for w, c in component_pairs(n):
            pairs += 1
            verdict = verify_slice(c, w, trials=50, seed=DEFAULT_SEED)
            if not verdict.ok:
                failures.append((w.values, c.v.values, verdict.failures))
    elapsed = time.perf_counter() - start
    ok = pairs > 0 and not failures
    _report(
        capsys,
        5,
        ok,
        f"slice verification (containment, exclusion, dimension, tangent, "
        f"model equivalence) on {pairs} component pairs, trials=50, "
        f"seed={DEFAULT_SEED}, {len(failures)} failures, {elapsed:.1f}s",
    )
    assert ok, failures[:3]


def test_criterion_6_spot_values(capsys):
    """The two base singular varieties have their textbook local models."""
    problems = []

    w = make_permutation([4, 2, 3, 1])
    comps = singular_components(w)
    if {v.values for v in comps} != {(2, 1, 4, 3)}:
        problems.append("4231 components wrong")
    else:
        c = classify_component(make_permutation([2, 1, 4, 3]), w)
        if (c.ctype, c.l, c.m, c.codim, c.excess) != ("4231", 1, 1, 3, 1):
            problems.append("4231 classification wrong")
        model = build_slice(c, w)
        if len(model.free) != 4 or len(model.closed_equations) != 1:
            problems.append("4231 slice is not a 2x2 rank-one cone")

    w = make_permutation([3, 4, 1, 2])
    comps = singular_components(w)
    if {v.values for v in comps} != {(1, 3, 2, 4)}:
        problems.append("3412 components wrong")
    else:
        c = classify_component(make_permutation([1, 3, 2, 4]), w)
        if (c.ctype, c.l, c.codim, c.excess) != ("3412*", 0, 3, 1):
            problems.append("3412 classification wrong")
        verdict = verify_slice(c, w, trials=20, seed=DEFAULT_SEED)
        if not verdict.dim_ok or length(w) - length(c.v) != 3:
            problems.append("3412 quadric cone dimension is not 3")

    ok = not problems
    _report(
        capsys,
        6,
        ok,
        "spot values for the two base singular varieties"
        + ("" if ok else f": {problems}"),
    )
    assert ok, problems


def test_criterion_7_s4_smooth_count(capsys):
    count = sum(1 for w in _all_perms(4) if is_smooth(w))
    ok = count == 22
    _report(capsys, 7, ok, f"S_4 smooth count = {count} (expected 22)")
    assert count == 22


@pytest.mark.skipif(
    not os.environ.get("SCHUBSING_N7"),
    reason="extended S_7 sweep runs only with SCHUBSING_N7=1",
)
def test_criterion_8_extended_sweep(capsys):
    """Criteria 1-5 over all of S_7 (flag-gated; minutes of runtime)."""
    start = time.perf_counter()
    jobs = int(os.environ.get("SCHUBSING_JOBS", "1"))
    report = verify_all(7, trials=50, seed=DEFAULT_SEED, jobs=jobs)
    elapsed = time.perf_counter() - start
    summary = report["summary"]
    ok = report["ok"]
    _report(
        capsys,
        8,
        ok,
        f"extended S_7 sweep: {summary['permutations_checked']} permutations, "
        f"{summary['component_pairs']} component pairs, "
        f"{report['failures']} failures, {elapsed / 60:.1f} min",
    )
    assert ok, report["failure_witnesses"][:5]
