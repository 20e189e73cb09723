"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v``; the criterion lines are
written straight to the terminal, bypassing output capture.
"""

import time

import pytest

from bosonic.laurent import LaurentPoly, poly_sum
from bosonic.lattice import colored_system, partition_function, uncolored_system
from bosonic.spherical import (
    check_k_biinvariance, check_macdonald, check_sigma_methods_agree,
)
from bosonic.verify import (
    VerificationReport, check_colored_evaluation, check_local_lifting, check_monostatic,
    check_operator_algebra, check_symmetry, check_tau_properties, check_uncolored_pf,
    check_ybe_aux, check_ybe_colored, check_ybe_uncolored, global_lifting_sweep,
    local_lifting_terms, uncolored_pf_sweep,
)
from bosonic.weights import MINUS
from bosonic.weyl import (
    act_on_flag, all_permutations, is_dominant, iter_weights, partitions_in_box,
    standard_flag,
)


@pytest.fixture
def announce(capsys):
    def emit(number: int, title: str, reports, elapsed: float, limit: float | None = None,
             extra_ok: bool = True, note: str = ""):
        cases = sum(r.cases_checked for r in reports)
        failures = sum(len(r.failures) for r in reports)
        within = limit is None or elapsed < limit
        ok = failures == 0 and within and extra_ok
        timing = f"{elapsed:.1f}s" + (f" (limit {limit:.0f}s)" if limit else "")
        line = (f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title}: "
                f"{cases} cases, {failures} failures, {timing}" + (f"; {note}" if note else ""))
        with capsys.disabled():
            print("\n" + line)
        return ok
    return emit


def timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


def test_criterion_01_ybe_uncolored(announce):
    reports, elapsed = timed(lambda: [check_ybe_uncolored(f, n_max=4) for f in "PR"])
    full = all(r.cases_checked == 2 ** 4 * 5 ** 2 for r in reports)
    assert announce(1, "uncolored Yang-Baxter equation, P and R, n_max=4", reports,
                    elapsed, 60, full)


def test_criterion_02_ybe_colored_and_aux(announce):
    reports, elapsed = timed(lambda: [check_ybe_colored("R", r=3, m_max=3),
                                      check_ybe_aux("R", r=3, k=None, m_max=3)])
    assert announce(2, "colored and monochrome-column Yang-Baxter equations, r=3, m_max=3",
                    reports, elapsed, 300)


def test_criterion_03_hall_littlewood_evaluation(announce):
    def run():
        reps = [uncolored_pf_sweep((1, 2, 3), 4), check_uncolored_pf((2, 1, 1, 0))]
        return reps
    reports, elapsed = timed(run)
    expected = 7 * sum(len(partitions_in_box(r, 4)) for r in (1, 2, 3)) + 7
    assert announce(3, "uncolored partition functions are P and R (r<=3, parts<=4; r=4 spot)",
                    reports, elapsed, None, reports[0].cases_checked + 7 == expected)


def test_criterion_04_monostatic(announce):
    lams = [(4, 2, 2), (2, 1, 0), (1, 0, -1), (0, 0, 0)]
    reports, elapsed = timed(lambda: [check_monostatic(lam) for lam in lams])
    assert announce(4, "one-state systems give t^l(w) z^lambda (incl. a negative part)",
                    reports, elapsed)


def test_criterion_05_colored_evaluation(announce):
    reports, elapsed = timed(lambda: [check_colored_evaluation((2, 1, 0))])
    assert announce(5, "colored partition functions equal tau for all 36 pairs",
                    reports, elapsed, None, reports[0].cases_checked == 36)


def test_criterion_06_operator_algebra(announce):
    reports, elapsed = timed(lambda: [check_operator_algebra(r=3, bound=2)])
    assert announce(6, "operator identities on the monomial test set |mu_i|<=2, r=3",
                    reports, elapsed)


def test_criterion_07_tau_properties(announce):
    reports, elapsed = timed(lambda: [check_tau_properties(r, bound=2) for r in (1, 2, 3)])
    assert announce(7, "tau sums over w, dominant/antidominant values, involution (r<=3)",
                    reports, elapsed)


def test_criterion_08_lifting(announce):
    def run():
        local = check_local_lifting(r=3, n_max=3)
        row = VerificationReport("local-lifting-row", {"rank": 2})
        z, t = LaurentPoly.z(1, 1), LaurentPoly.t(1)
        for m in range(1, 5):
            values = {c: w for c, _, w in local_lifting_terms(2, (m, 0), MINUS, m)}
            row.record({"m": m, "term": "pass through"}, values[2], z * t ** m)
            row.record({"m": m, "term": "exchange"}, values[1], z * (1 - t ** m))
            row.record({"m": m, "term": "sum"}, values[1] + values[2], z)
        glob = global_lifting_sweep((1, 2, 3), 3, "R", flags="all")
        glob_p = global_lifting_sweep((1, 2, 3), 3, "P", flags="proper")
        return local, row, glob, glob_p
    (local, row, glob, glob_p), elapsed = timed(run)
    p_failures_repeat_parts = all(len(set(f.config["lambda"])) < len(f.config["lambda"])
                                  for f in glob_p.failures)
    recorded = not glob_p.passed and p_failures_repeat_parts
    note = (f"P-family counterexamples recorded: {len(glob_p.failures)}/"
            f"{glob_p.cases_checked}, all with a repeated part")
    assert announce(8, "local lifting r=3 n_max=3, figure row, global lifting (R)",
                    [local, row, glob], elapsed, None, recorded, note)


def test_criterion_09_symmetry(announce):
    def run():
        polys = []
        for r in (1, 2, 3):
            for lam in partitions_in_box(r, 4):
                for family in "PR":
                    polys.append(({"lambda": lam, "family": family},
                                  partition_function(uncolored_system(lam, family))))
        polys.append(({"lambda": (2, 1, 1, 0)},
                      partition_function(uncolored_system((2, 1, 1, 0)))))
        c0 = standard_flag(3)
        for lam in [(2, 1, 0), (1, 0, -1), (2, 2, 0)]:
            for y in all_permutations(3):
                top = act_on_flag(y, c0)
                total = poly_sum((partition_function(colored_system(lam, top, act_on_flag(w, c0)))
                                  for w in all_permutations(3)), 3)
                polys.append(({"lambda": lam, "top_flag": top, "summed": "right flags"}, total))
        return [check_symmetry(polys)]
    reports, elapsed = timed(run)
    assert announce(9, "uncolored and flag-summed colored partition functions are symmetric",
                    reports, elapsed)


def test_criterion_10_spherical_consistency(announce):
    def run():
        reps = []
        for r in (1, 2, 3):
            for lam in iter_weights(r, -2, 2):
                reps.append(check_sigma_methods_agree(lam))
                if is_dominant(lam):
                    reps.append(check_macdonald(lam))
                    reps.append(check_k_biinvariance(lam))
        return reps
    reports, elapsed = timed(run)
    assert announce(10, "tau and lattice formulas agree; Macdonald formula; K-bi-invariance",
                    reports, elapsed, 600)
