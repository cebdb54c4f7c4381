"""Exact rc_k(P_n^m) by branch and bound over color orders.

For a fixed color order the cheapest coloring is greedy: each vertex takes
the smallest color allowed by every vertex already placed.  The search
therefore enumerates orders (permutation prefixes), pruning with the layer
gap bound.  It shares nothing with the constructive coloring, so agreement
between the two is a genuine check.
"""

from __future__ import annotations

import multiprocessing as mp
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from .coloring import RadioColoring
from .construct import construct_optimal
from .formula import (
    AS_PRINTED,
    CONSISTENT,
    HypothesisError,
    case_of,
    hypothesis_holds,
    parity_offset,
    theorem_span,
)
from .graph import PathPowerGraph, build_graph, build_layering

DEFAULT_VERTEX_CAP = 11

EXACT = "exact"
INCONCLUSIVE = "inconclusive"


class OracleLimitError(ValueError):
    """Instance is larger than the configured vertex cap."""


def greedy_colors_of_order(g: PathPowerGraph, order: Sequence[int], k: int) -> List[int]:
    """Least colors, listed along ``order``, of a valid coloring with that color order."""
    colors: List[int] = []
    for i, v in enumerate(order):
        if i == 0:
            colors.append(0)
            continue
        c = colors[-1] + 1
        for u, cu in zip(order, colors):
            need = cu + k + 1 - g.distance(u, v)
            if need > c:
                c = need
        colors.append(c)
    return colors


def greedy_span_of_order(g: PathPowerGraph, order: Sequence[int], k: int) -> int:
    return greedy_colors_of_order(g, order, k)[-1]


@dataclass(frozen=True)
class OracleResult:
    value: Optional[int]  # exact optimum, or None when inconclusive
    status: str
    upper: Optional[int]  # best span found
    lower: int  # proven lower bound
    witness: Optional[RadioColoring]
    nodes: int

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "status": self.status,
            "upper": self.upper,
            "lower": self.lower,
            "witness": self.witness.to_json() if self.witness else None,
            "nodes": self.nodes,
        }


class _BudgetExhausted(Exception):
    pass


class _Search:
    """Depth-first search over color orders with a shared or local incumbent.

    ``bound`` is the incumbent: only orders with span strictly below it are
    recorded.  Children are tried in increasing position order, so the first
    optimum found is the lexicographically smallest optimal order.
    """

    def __init__(self, g, k, bound, strong=True, node_budget=None, deadline=None, shared=None):
        self.g = g
        self.k = k
        self.n = g.n
        self.bound = bound
        self.best_order: Optional[Tuple[int, ...]] = None
        self.nodes = 0
        self.node_budget = node_budget
        self.deadline = deadline
        self.shared = shared
        lay = build_layering(g)
        self.f = lay.layer_of
        self.eps = parity_offset(lay.diam)
        self.strong = strong
        m = g.m
        # dist[u][v], indexed by position
        self.dist = [[-(-abs(u - v) // m) for v in range(g.n + 1)] for u in range(g.n + 1)]

    def _incumbent(self) -> int:
        if self.shared is not None:
            return min(self.bound, self.shared.value)
        return self.bound

    def _improve(self, span: int, order: Tuple[int, ...]) -> None:
        self.bound = span
        self.best_order = order
        if self.shared is not None:
            with self.shared.get_lock():
                if span < self.shared.value:
                    self.shared.value = span

    def _remaining_bound(self, last: int, remaining: List[int]) -> int:
        # Every future consecutive pair (a, b) costs at least k - f(a) - f(b) + eps,
        # and at least 1.  Summing over a path last -> remaining gives the bound below.
        r = len(remaining)
        if r == 0:
            return 0
        if not self.strong:
            return r
        f = self.f
        total_f = sum(f[v] for v in remaining)
        est = r * (self.k + self.eps) - f[last] - 2 * total_f + min(f[v] for v in remaining)
        return max(est, r)

    def run(self, prefix: Sequence[int]) -> None:
        g, k = self.g, self.k
        order = list(prefix)
        colors = greedy_colors_of_order(g, order, k)
        remaining = [v for v in range(self.n + 1) if v not in set(order)]
        self._dfs(order, colors, remaining)

    def _dfs(self, order: List[int], colors: List[int], remaining: List[int]) -> None:
        self.nodes += 1
        if self.node_budget is not None and self.nodes > self.node_budget:
            raise _BudgetExhausted
        if self.deadline is not None and self.nodes % 4096 == 0 and time.monotonic() > self.deadline:
            raise _BudgetExhausted
        last_color = colors[-1]
        if not remaining:
            if last_color < self._incumbent():
                self._improve(last_color, tuple(order))
            return
        if last_color + self._remaining_bound(order[-1], remaining) >= self._incumbent():
            return
        dist = self.dist
        k1 = self.k + 1
        for idx, v in enumerate(remaining):
            dv = dist[v]
            c = last_color + 1
            for u, cu in zip(order, colors):
                need = cu + k1 - dv[u]
                if need > c:
                    c = need
            if c >= self._incumbent():
                continue
            order.append(v)
            colors.append(c)
            rest = remaining[:idx] + remaining[idx + 1 :]
            self._dfs(order, colors, rest)
            order.pop()
            colors.pop()


def _root_vertices(g: PathPowerGraph) -> List[int]:
    # Reflection p -> n - p is an automorphism, so v_0 can be taken in the left half.
    return [v for v in g.vertices if v <= g.n - v]


def _initial_upper(g: PathPowerGraph, k: int) -> Tuple[int, Tuple[int, ...]]:
    # Identity order: a cheap, construction-independent starting incumbent.
    order = tuple(g.vertices)
    return greedy_span_of_order(g, order, k), order


_SHARED = None


def _init_worker(shared):
    global _SHARED
    _SHARED = shared


def _branch_worker(args):
    n, m, k, root, bound, strong = args
    s = _Search(build_graph(n, m), k, bound, strong=strong, shared=_SHARED)
    s.run([root])
    return s.bound, s.best_order, s.nodes


def rc_exact(
    g: PathPowerGraph,
    k: int,
    node_budget: Optional[int] = None,
    time_budget: Optional[float] = None,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    strong_bound: bool = True,
    workers: int = 1,
) -> OracleResult:
    """Minimum span over all radio k-colorings of ``g``.

    On budget exhaustion the result is INCONCLUSIVE with the best span found
    and a proven lower bound, never a guessed value.  With ``workers > 1``
    root branches run in separate processes sharing the incumbent; the
    witness is then recomputed serially so it matches the serial run.
    """
    if g.order > vertex_cap:
        raise OracleLimitError(f"{g.order} vertices exceeds the oracle cap of {vertex_cap}")
    if k <= g.diameter:
        # colors may coincide; order-based search assumes distinct colors
        raise HypothesisError(f"oracle needs k > diam = {g.diameter}, got k={k}")

    upper, upper_order = _initial_upper(g, k)
    # Search for spans <= upper so the witness is always the first optimal order.
    bound = upper + 1
    deadline = time.monotonic() + time_budget if time_budget is not None else None
    lower = g.n  # distinct colors force span >= n

    if workers > 1 and node_budget is None and time_budget is None:
        shared = mp.Value("q", bound)
        tasks = [(g.n, g.m, k, r, bound, strong_bound) for r in _root_vertices(g)]
        with ProcessPoolExecutor(
            max_workers=workers, initializer=_init_worker, initargs=(shared,)
        ) as ex:
            results = list(ex.map(_branch_worker, tasks))
        nodes = sum(r[2] for r in results)
        value = min(min(r[0] for r in results), shared.value)
        # deterministic witness: first order (lexicographic) reaching the optimum
        s = _Search(g, k, value + 1, strong=strong_bound)
        for root in _root_vertices(g):
            s.run([root])
            if s.best_order is not None:
                break
        nodes += s.nodes
        return _finish(g, k, s.best_order, value, nodes)

    s = _Search(g, k, bound, strong=strong_bound, node_budget=node_budget, deadline=deadline)
    try:
        for root in _root_vertices(g):
            s.run([root])
    except _BudgetExhausted:
        best = s.bound if s.best_order is not None else upper
        order = s.best_order or upper_order
        witness = RadioColoring.from_sequence(g, k, order, greedy_colors_of_order(g, order, k))
        return OracleResult(None, INCONCLUSIVE, best, lower, witness, s.nodes)
    return _finish(g, k, s.best_order, s.bound, s.nodes)


def _finish(g, k, order, value, nodes) -> OracleResult:
    colors = greedy_colors_of_order(g, order, k)
    witness = RadioColoring.from_sequence(g, k, order, colors)
    assert witness.span == value
    return OracleResult(value, EXACT, value, value, witness, nodes)


@dataclass(frozen=True)
class CertRow:
    n: int
    m: int
    k: int
    case: str
    diam: int
    formula_consistent: Optional[int]
    formula_as_printed: Optional[int]
    constructed_span: Optional[int]
    oracle_span: Optional[int]
    status: str

    FIELDS = (
        "n",
        "m",
        "k",
        "case",
        "diam",
        "formula_consistent",
        "formula_as_printed",
        "constructed_span",
        "oracle_span",
        "status",
    )

    def to_json(self) -> dict:
        return {name: getattr(self, name) for name in self.FIELDS}

    @property
    def certified(self) -> bool:
        return self.status in ("ok", "mismatch")


def certify_instance(
    n: int,
    m: int,
    k: int,
    variant: str = CONSISTENT,
    oracle: bool = True,
    unchecked: bool = False,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    node_budget: Optional[int] = None,
) -> CertRow:
    """Compare formula, construction and (optionally) the exact optimum on one instance.

    Status is ``ok`` or ``mismatch`` for hypothesis-valid instances,
    ``inconclusive`` when the oracle ran out of budget, ``skipped-cap`` when
    the instance exceeds the oracle cap, ``skipped-hypothesis`` for k below
    the threshold, and ``uncertified-*`` for such k under ``unchecked``.
    """
    g = build_graph(n, m)
    tag = case_of(n, m).label()
    holds = hypothesis_holds(n, m, k)
    if not holds and not unchecked:
        return CertRow(n, m, k, tag, g.diameter, None, None, None, None, "skipped-hypothesis")

    consistent = theorem_span(n, m, k, CONSISTENT, unchecked=True).value
    printed = theorem_span(n, m, k, AS_PRINTED, unchecked=True).value
    chosen = printed if variant == AS_PRINTED else consistent
    constructed = construct_optimal(n, m, k, unchecked=True).span

    oracle_span = None
    note = None
    if oracle:
        if g.order > vertex_cap:
            note = "skipped-cap"
        elif k <= g.diameter:
            note = "skipped-oracle"
        else:
            res = rc_exact(g, k, node_budget=node_budget, vertex_cap=vertex_cap)
            if res.status == EXACT:
                oracle_span = res.value
            else:
                note = INCONCLUSIVE
    values = {chosen, constructed}
    if oracle_span is not None:
        values.add(oracle_span)
    if len(values) > 1:
        status = "mismatch"
    else:
        status = note or "ok"
    if not holds:
        status = f"uncertified-{status}"
    return CertRow(n, m, k, tag, g.diameter, consistent, printed, constructed, oracle_span, status)


def certify_theorem(
    grid: Iterable[Tuple[int, int, int]],
    variant: str = CONSISTENT,
    oracle: bool = True,
    unchecked: bool = False,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    node_budget: Optional[int] = None,
    workers: int = 1,
) -> List[CertRow]:
    """Certify every (n, m, k) in ``grid``; rows come back in grid order."""
    grid = list(grid)
    args = [(n, m, k, variant, oracle, unchecked, vertex_cap, node_budget) for n, m, k in grid]
    if workers > 1 and len(grid) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            return list(ex.map(_certify_star, args))
    return [_certify_star(a) for a in args]


def _certify_star(a):
    return certify_instance(*a)


def mismatches(rows: Iterable[CertRow]) -> List[CertRow]:
    return [r for r in rows if r.status == "mismatch"]
