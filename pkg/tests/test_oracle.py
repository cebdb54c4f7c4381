import itertools

import pytest

from pathradio.construct import construct_optimal
from pathradio.formula import AS_PRINTED, HypothesisError, alpha1, alpha2_lower_bound, min_valid_k, theorem_span
from pathradio.graph import build_graph
from pathradio.oracle import (
    EXACT,
    INCONCLUSIVE,
    OracleLimitError,
    certify_instance,
    certify_theorem,
    greedy_span_of_order,
    mismatches,
    rc_exact,
)
from pathradio.verify import check_coloring

from conftest import min_span_for_order, small_instances


def test_greedy_span_examples():
    g = build_graph(4, 2)
    assert greedy_span_of_order(g, (3, 0, 4, 1, 2), 3) == 9
    assert greedy_span_of_order(g, (0, 1, 2, 3, 4), 3) == 12
    for k in range(1, 6):
        assert greedy_span_of_order(build_graph(1, 1), (1, 0), k) == k


def test_greedy_span_is_per_order_minimum():
    for n, m in small_instances(4):
        g = build_graph(n, m)
        for k in range(g.diameter + 1, g.diameter + 4):
            for order in itertools.permutations(g.vertices):
                assert greedy_span_of_order(g, order, k) == min_span_for_order(g, order, k), (n, m, k, order)


@pytest.mark.parametrize("n,m,k,value", [(4, 2, 3, 9), (5, 3, 3, 12), (6, 2, 5, 22)])
def test_rc_exact_examples(n, m, k, value):
    g = build_graph(n, m)
    res = rc_exact(g, k)
    assert res.status == EXACT
    assert res.value == value == res.lower == res.upper
    assert res.witness.span == value
    assert check_coloring(g, res.witness).valid


def test_rc_exact_against_exhaustive_search():
    for n, m in small_instances(4):
        g = build_graph(n, m)
        for k in range(g.diameter + 1, g.diameter + 3):
            brute = min(min_span_for_order(g, o, k) for o in itertools.permutations(g.vertices))
            assert rc_exact(g, k).value == brute, (n, m, k)


def test_rc_exact_bounds_both_ways():
    for n, m in small_instances(8, 3):
        k = min_valid_k(n, m)
        value = rc_exact(build_graph(n, m), k).value
        assert alpha1(n, m, k) + alpha2_lower_bound(n, m) <= value <= construct_optimal(n, m, k).span


def test_rc_exact_witness_is_deterministic():
    g = build_graph(7, 2)
    a = rc_exact(g, 6)
    b = rc_exact(g, 6)
    assert a.witness == b.witness


def test_parallel_matches_serial():
    g = build_graph(8, 3)
    serial = rc_exact(g, 5)
    par = rc_exact(g, 5, workers=2)
    assert par.value == serial.value
    assert par.witness == serial.witness


def test_weak_bound_agrees():
    for n, m, k in [(6, 2, 5), (7, 3, 4), (5, 1, 7)]:
        g = build_graph(n, m)
        assert rc_exact(g, k, strong_bound=False).value == rc_exact(g, k).value


def test_budget_exhaustion_is_explicit():
    g = build_graph(9, 2)
    res = rc_exact(g, 8, node_budget=20)
    assert res.status == INCONCLUSIVE
    assert res.value is None
    true = rc_exact(g, 8).value
    assert res.lower <= true <= res.upper
    assert check_coloring(g, res.witness).valid
    assert res.witness.span == res.upper


def test_time_budget_is_explicit():
    res = rc_exact(build_graph(10, 1), 12, time_budget=0.0)
    assert res.status in (EXACT, INCONCLUSIVE)


def test_vertex_cap():
    with pytest.raises(OracleLimitError):
        rc_exact(build_graph(11, 2), 8)
    assert rc_exact(build_graph(11, 4), 4, vertex_cap=12).status == EXACT


def test_oracle_needs_distinct_colors():
    with pytest.raises(HypothesisError):
        rc_exact(build_graph(4, 2), 2)


def test_certify_small_grid():
    grid = [(n, m, k) for n in range(2, 7) for m in range(1, min(n, 3) + 1) for k in (min_valid_k(n, m),)]
    rows = certify_theorem(grid)
    assert [(r.n, r.m, r.k) for r in rows] == grid
    assert all(r.status == "ok" for r in rows)
    assert all(r.oracle_span == r.formula_consistent == r.constructed_span for r in rows)


def test_certify_as_printed_flags_erratum():
    row = certify_instance(5, 3, 3, variant=AS_PRINTED)
    assert row.status == "mismatch"
    assert (row.formula_consistent, row.formula_as_printed, row.oracle_span) == (12, 16, 12)
    assert mismatches([row]) == [row]


def test_certify_empty_grid():
    assert certify_theorem([]) == []


def test_certify_statuses():
    assert certify_instance(6, 2, 4).status == "skipped-hypothesis"
    assert certify_instance(6, 2, 4, unchecked=True).status.startswith("uncertified-")
    assert certify_instance(20, 3, 10).status == "skipped-cap"
    assert certify_instance(20, 3, 10, oracle=False).status == "ok"
    assert certify_instance(9, 1, 11, node_budget=10).status == INCONCLUSIVE


def test_certify_parallel_keeps_order():
    grid = [(n, 2, min_valid_k(n, 2)) for n in range(2, 9)]
    assert certify_theorem(grid, workers=3) == certify_theorem(grid)
