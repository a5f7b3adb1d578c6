"""Verification suites: every registered check passes at desk scale, the
frozen reference constants agree with independent formulas, and the
predicates are sharp enough to notice a corrupted enumerator.
"""

import json

import pytest

from intervalence import CheckReport, MultiPoly, run_suites, summarize_reports
from intervalence.verify import (
    BICUBIC_COUNTS,
    CANOPY_MATRICES,
    INTERVAL_COUNTS,
    MOTZKIN,
    SUITES,
    SYNCHRONOUS_COUNTS,
    TRIANGLE_MATRICES,
    brute_force_weights,
    distribution_table,
    table_to_matrix,
)
from intervalence import interval_statistics

from helpers import interval_count, motzkin, synchronous_count


# ---------------------------------------------------------------- constants

def test_interval_counts_match_closed_formula():
    assert INTERVAL_COUNTS == tuple(interval_count(n) for n in range(1, 9))


def test_synchronous_counts_match_closed_formula():
    assert SYNCHRONOUS_COUNTS == tuple(synchronous_count(n) for n in range(1, 8))


def test_motzkin_constants_match_recurrence():
    assert MOTZKIN == tuple(motzkin(n) for n in range(7))


def test_bicubic_counts_match_brute_force():
    for n, expected in enumerate(BICUBIC_COUNTS[:5], start=1):
        got = sum(
            1 for r in interval_statistics(n, with_q=False)
            if r.dx + r.dy + r.dybar == n - 1
        )
        assert got == expected


def test_triangle_matrices_match_interval_poset_valences():
    # frozen matrices of the two-variable enumerator of the interval poset
    from intervalence import tamari_lattice

    for n, matrix in TRIANGLE_MATRICES.items():
        ip, _ = tamari_lattice(n).poset.interval_poset()
        table = ip.valence_polynomial().terms
        assert table_to_matrix(table, n) == [list(row) for row in matrix]


def test_canopy_matrices_match_enumeration():
    # identical under either reading: (dy, dybar) degrees or canopy letters
    for n, matrix in CANOPY_MATRICES.items():
        recs = interval_statistics(n, with_q=False)
        by_degree = distribution_table(recs, "dy", "dybar")
        by_canopy = distribution_table(recs, "ll", "rr")
        assert table_to_matrix(by_degree, n) == [list(row) for row in matrix]
        assert table_to_matrix(by_canopy, n) == [list(row) for row in matrix]


# ------------------------------------------------------------------ helpers

def test_distribution_table_and_matrix_layout():
    recs = interval_statistics(2, with_q=False)
    table = distribution_table(recs, "dy", "dybar")
    assert table == {(0, 1): 1, (0, 0): 1, (1, 0): 1}
    # first statistic rightward, second upward: bottom-left is (0, 0)
    assert table_to_matrix(table, 2) == [[1, 0], [1, 1]]


def test_brute_force_weights_small():
    assert brute_force_weights(1) == MultiPoly(("x", "y", "ybar"), {(0, 0, 0): 1})
    assert sum(brute_force_weights(4).terms.values()) == interval_count(4)


# ------------------------------------------------------------------- suites

@pytest.mark.parametrize("suite_id", sorted(SUITES))
def test_each_suite_passes(suite_id):
    report = SUITES[suite_id](4)
    assert isinstance(report, CheckReport)
    assert report.passed(), report.witness
    assert report.witness is None
    assert report.wall_time >= 0
    assert report.n_range[0] >= 1


def test_reports_are_json_serializable():
    for report in run_suites(["triangle", "realroots"], 4):
        blob = json.dumps(report.to_dict())
        assert json.loads(blob)["status"] == "pass"


def test_run_suites_all_and_unknown():
    reports = run_suites("all", 3)
    assert sorted(r.check_id for r in reports) == sorted(SUITES)
    with pytest.raises(ValueError):
        run_suites(["nosuch"], 3)


def test_summarize_reports_format():
    reports = run_suites(["sync"], 4)
    text = summarize_reports(reports)
    assert "PASS" in text and "sync" in text


def test_failing_report_carries_witness():
    report = CheckReport("demo", (1, 3), "fail", "n=2: off by one", 0.1)
    assert not report.passed()
    assert "off by one" in summarize_reports([report])


# --------------------------------------------------- sensitivity to corruption

def corrupted_copies(poly):
    """Every +1 bump of a single coefficient of the enumerator."""
    for exp in sorted(poly.terms):
        terms = dict(poly.terms)
        terms[exp] += 1
        yield exp, MultiPoly(poly.vars, terms)


def test_predicates_detect_any_single_coefficient_bump():
    # the symmetry and mass predicates jointly reject every +1 corruption of
    # the size-3 enumerator projected to (x, y, ybar)
    good = brute_force_weights(3)
    swaps = (
        {"x": "y", "y": "x"},
        {"y": "ybar", "ybar": "y"},
        {"x": "ybar", "ybar": "x"},
    )
    assert all(good.is_symmetric(s) for s in swaps)
    assert sum(good.terms.values()) == INTERVAL_COUNTS[2]
    for exp, bad in corrupted_copies(good):
        symmetric = all(bad.is_symmetric(s) for s in swaps)
        mass_ok = sum(bad.terms.values()) == INTERVAL_COUNTS[2]
        assert not (symmetric and mass_ok), f"bump at {exp} went unnoticed"


def test_four_variable_corruption_breaks_duality_or_mass():
    from intervalence import interval_valence_polynomial

    good = interval_valence_polynomial(3)
    swap = {"x": "xbar", "xbar": "x", "y": "ybar", "ybar": "y"}
    for exp, bad in corrupted_copies(good):
        dual_ok = bad.is_symmetric(swap)
        mass_ok = sum(bad.terms.values()) == INTERVAL_COUNTS[2]
        assert not (dual_ok and mass_ok), f"bump at {exp} went unnoticed"
