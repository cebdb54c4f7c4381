import pytest

from pathradio.construct import (
    case_sequence,
    construct_optimal,
    greedy_color,
    prec1_less,
    prec2_less,
    reverse_chain,
    special_chain,
)
from pathradio.formula import HypothesisError, case_of, min_valid_k, theorem_span
from pathradio.graph import NamedVertex, build_graph, build_layering
from pathradio.verify import LOOSE, check_coloring, decompose

from conftest import small_instances


def r(i, j):
    return NamedVertex("r", i, j)


def l(i, j):
    return NamedVertex("l", i, j)


def radio_ok(g, colors, k):
    n = g.n
    return all(
        abs(colors[u] - colors[v]) >= k + 1 - g.distance(u, v)
        for u in range(n + 1)
        for v in range(u + 1, n + 1)
    )


def test_prec1_examples():
    assert prec1_less(r(1, 1), r(1, 2))
    assert not prec1_less(r(1, 2), r(2, 2))
    assert prec1_less(r(2, 2), r(1, 2))
    assert prec1_less(r(1, 1), r(2, 1))


def test_prec2_examples():
    assert prec2_less(l(1, 1), l(1, 2), m=2)
    assert prec2_less(l(1, 2), l(2, 2), m=2)
    # column m-1 flips direction
    assert prec2_less(l(2, 1), l(1, 1), m=2)


@pytest.mark.parametrize("fn", [prec1_less, lambda a, b: prec2_less(a, b, 2)])
def test_orders_reject_mixed_sides(fn):
    with pytest.raises(ValueError):
        fn(l(1, 1), r(1, 1))
    with pytest.raises(ValueError):
        fn(NamedVertex("c", 0, 0), r(1, 1))


def test_orders_are_strict_total_orders():
    for m in range(1, 6):
        names = [r(i, j) for i in range(0, 5) for j in range(1, m + 1)]
        for less in (prec1_less, lambda a, b: prec2_less(a, b, m)):
            for a in names:
                assert not less(a, a)
                for b in names:
                    if a != b:
                        assert less(a, b) != less(b, a)


def test_special_chain_example():
    lay = build_layering(build_graph(4, 2))
    assert special_chain(lay) == [3, 0, 4, 1]


def test_chains_with_empty_sides():
    lay = build_layering(build_graph(4, 2))
    assert special_chain(lay, right=[], left=[]) == []
    assert reverse_chain(lay, left=[], right=[]) == []


def test_special_chain_unequal_sides():
    with pytest.raises(ValueError):
        special_chain(build_layering(build_graph(5, 3)))


def test_reverse_chain_example():
    lay = build_layering(build_graph(6, 2))
    assert reverse_chain(lay) == [1, 6, 0, 5]


def test_reverse_chain_unequal_sides():
    with pytest.raises(ValueError):
        reverse_chain(build_layering(build_graph(7, 3)))


def test_case_sequence_examples():
    assert case_sequence(build_graph(4, 2)).order == (3, 0, 4, 1, 2)
    assert case_sequence(build_graph(5, 3)).order == (4, 0, 5, 1, 3, 2)
    seq = case_sequence(build_graph(6, 2)).order
    assert seq[0] == 4
    assert seq == (4, 1, 6, 0, 5, 2, 3)


def test_printed_splice_is_not_optimal():
    # Central block after q*m chain vertices: valid, but one above optimum at (6, 2, 5).
    g = build_graph(6, 2)
    seq = case_sequence(g, splice="printed").order
    assert seq == (4, 1, 6, 2, 3, 0, 5)
    col = greedy_color(g, seq, 5)
    assert check_coloring(g, col).valid
    assert col.span == 23 == theorem_span(6, 2, 5).value + 1


def test_case_sequence_is_permutation():
    for n, m in small_instances(60, 10):
        g = build_graph(n, m)
        for splice in ("end", "printed"):
            assert sorted(case_sequence(g, splice=splice).order) == list(g.vertices)


def test_greedy_color_examples():
    g = build_graph(4, 2)
    col = greedy_color(g, (3, 0, 4, 1, 2), 3)
    assert col.sequence().order == (3, 0, 4, 1, 2)
    assert [col.colors[v] for v in (3, 0, 4, 1, 2)] == [0, 2, 4, 6, 9]
    assert col.span == 9

    col = greedy_color(build_graph(1, 1), (1, 0), 3)
    assert col.colors == (3, 0)

    col = greedy_color(build_graph(5, 3), (4, 0, 5, 1, 3, 2), 3)
    assert [col.colors[v] for v in (4, 0, 5, 1, 3, 2)] == [0, 2, 4, 6, 9, 12]


@pytest.mark.parametrize("n,m,k,span", [(4, 2, 3, 9), (6, 2, 5, 22), (5, 3, 3, 12)])
def test_construct_optimal_examples(n, m, k, span):
    col = construct_optimal(n, m, k)
    assert col.span == span
    assert min(col.colors) == 0
    assert check_coloring(build_graph(n, m), col).valid


def test_construct_optimal_hypothesis():
    with pytest.raises(HypothesisError):
        construct_optimal(6, 2, 4)
    assert construct_optimal(6, 2, 4, unchecked=True).n == 6


def test_construction_valid_and_matches_formula():
    for n, m in small_instances(60, 10):
        g = build_graph(n, m)
        seq = case_sequence(g).order
        k0 = min_valid_k(n, m)
        for k in range(k0, g.diameter + 11):
            col = greedy_color(g, seq, k)
            assert col.span == theorem_span(n, m, k).value, (n, m, k)
            assert radio_ok(g, col.colors, k), (n, m, k)


def test_two_step_gap_at_least_k():
    for n, m in small_instances(40, 10):
        g = build_graph(n, m)
        k = min_valid_k(n, m)
        col = construct_optimal(n, m, k)
        seq = col.sequence().order
        c = col.colors
        for a, b in zip(seq, seq[2:]):
            assert c[b] - c[a] >= k


def test_case4_loose_pairs():
    seen = 0
    for n, m in small_instances(60, 10):
        tag = case_of(n, m)
        if not tag.printed_erratum:
            continue
        seen += 1
        g = build_graph(n, m)
        lay = build_layering(g)
        s = n % m
        col = construct_optimal(n, m, min_valid_k(n, m))
        dec = decompose(g, lay, col)
        seq = dec.sequence
        loose = [(seq[i], seq[i + 1]) for i, c in enumerate(dec.pair_classes) if c == LOOSE]
        expected = [(lay.left[(1, i)], lay.left[(1, i + 1)]) for i in range(1, m - s)]
        assert loose == expected, (n, m)
    assert seen > 50


@pytest.mark.parametrize("n,m,pairs", [(5, 3, 0), (6, 4, 1), (5, 4, 2)])
def test_case4_loose_pair_examples(n, m, pairs):
    g = build_graph(n, m)
    col = construct_optimal(n, m, min_valid_k(n, m))
    assert decompose(g, None, col).loose_pairs == pairs


def test_odd_and_divisible_cases_fully_optimal():
    for n, m in small_instances(40, 8):
        if case_of(n, m).printed_erratum:
            continue
        g = build_graph(n, m)
        dec = decompose(g, None, construct_optimal(n, m, min_valid_k(n, m)))
        assert dec.loose_pairs == 0
        assert dec.t == 1
