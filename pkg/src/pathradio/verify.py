"""Checking radio k-colorings and decomposing them into optimal/loose runs."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .coloring import ColoringError, ColorSequence, RadioColoring
from .formula import alpha1, parity_offset
from .graph import Layering, PathPowerGraph, build_layering

OPTIMAL = "optimal"
LOOSE = "loose"
LEFTIST, BALANCED, RIGHTIST = "leftist", "balanced", "rightist"


@dataclass(frozen=True)
class Violation:
    u: int
    v: int
    distance: int
    gap: int
    required: int

    @property
    def deficit(self) -> int:
        return self.required - self.gap

    def to_json(self) -> dict:
        return {
            "u": self.u,
            "v": self.v,
            "distance": self.distance,
            "gap": self.gap,
            "required": self.required,
        }


@dataclass(frozen=True)
class ValidityReport:
    valid: bool
    span: int
    distinct: bool
    violations: Tuple[Violation, ...] = ()

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "span": self.span,
            "distinct": self.distinct,
            "violations": [v.to_json() for v in self.violations],
        }


def _check_instance(g: PathPowerGraph, coloring: RadioColoring) -> None:
    if (coloring.n, coloring.m) != (g.n, g.m):
        raise ColoringError(
            f"coloring is for P_{coloring.n}^{coloring.m}, graph is P_{g.n}^{g.m}"
        )


def check_coloring(g: PathPowerGraph, coloring: RadioColoring) -> ValidityReport:
    """Test the radio condition on every unordered pair and list all violations."""
    _check_instance(g, coloring)
    k = coloring.k
    col = coloring.colors
    bad = []
    for u in range(g.n + 1):
        for v in range(u + 1, g.n + 1):
            d = g.distance(u, v)
            gap = abs(col[u] - col[v])
            if gap < k + 1 - d:
                bad.append(Violation(u, v, d, gap, k + 1 - d))
    return ValidityReport(
        valid=not bad,
        span=coloring.span,
        distinct=coloring.is_injective(),
        violations=tuple(bad),
    )


def sequence_of(coloring: RadioColoring) -> ColorSequence:
    return coloring.sequence()


def pair_bound(lay: Layering, u: int, v: int, k: int) -> int:
    """Smallest possible color gap between consecutive-in-color vertices u and v."""
    return k - lay.layer_of[u] - lay.layer_of[v] + parity_offset(lay.diam)


def classify_pair(
    g: PathPowerGraph, lay: Layering, coloring: RadioColoring, vi: int, vj: int
) -> str:
    col = coloring.colors
    lo, hi = sorted((vi, vj), key=col.__getitem__)
    between = [w for w in g.vertices if col[lo] < col[w] < col[hi]]
    if col[lo] == col[hi] or between:
        raise ValueError(f"{vi} and {vj} are not consecutive in color order")
    gap = col[hi] - col[lo]
    return OPTIMAL if gap == pair_bound(lay, lo, hi, coloring.k) else LOOSE


@dataclass(frozen=True)
class Run:
    kind: str  # OPTIMAL (an X run) or LOOSE (a Y run)
    vertices: Tuple[int, ...]
    polarity: Optional[str] = None


@dataclass(frozen=True)
class Decomposition:
    """Y_0 X_1 Y_1 ... X_t Y_t split of a color sequence.

    ``runs`` always has 2t + 1 entries, alternating loose and optimal,
    with possibly empty loose runs.
    """

    sequence: Tuple[int, ...]
    runs: Tuple[Run, ...]
    pair_classes: Tuple[str, ...]
    alpha2: int
    endpoint_layers: Tuple[int, int] = field(default=(0, 0))

    @property
    def t(self) -> int:
        return sum(1 for r in self.runs if r.kind == OPTIMAL)

    @property
    def loose_lengths(self) -> Tuple[int, ...]:
        return tuple(len(r.vertices) for r in self.runs if r.kind == LOOSE)

    @property
    def loose_pairs(self) -> int:
        return sum(1 for c in self.pair_classes if c == LOOSE)

    def optimal_runs(self) -> List[Run]:
        return [r for r in self.runs if r.kind == OPTIMAL]

    def flatten(self) -> Tuple[int, ...]:
        return tuple(v for r in self.runs for v in r.vertices)

    def to_json(self) -> dict:
        return {
            "runs": [
                {"kind": "X" if r.kind == OPTIMAL else "Y", "vertices": list(r.vertices), "polarity": r.polarity}
                for r in self.runs
            ],
            "t": self.t,
            "looseLengths": list(self.loose_lengths),
            "pairClasses": list(self.pair_classes),
            "alpha2": self.alpha2,
        }


def run_polarity(run: Sequence[int], lay: Layering) -> str:
    """Compare left vertices against right-plus-central vertices of an optimal run."""
    if lay.odd:
        raise ValueError("run polarity is only defined for even diameter")
    if len(run) < 2:
        raise ValueError("a singleton is never an optimally colored run")
    n_left = sum(1 for v in run if lay.is_left(v))
    n_rest = len(run) - n_left
    if n_left > n_rest:
        return LEFTIST
    if n_left == n_rest:
        return BALANCED
    return RIGHTIST


def decompose(
    g: PathPowerGraph, lay: Optional[Layering], coloring: RadioColoring
) -> Decomposition:
    _check_instance(g, coloring)
    lay = lay or build_layering(g)
    seq = coloring.sequence().order
    col = coloring.colors
    k = coloring.k
    classes = tuple(
        OPTIMAL if col[b] - col[a] == pair_bound(lay, a, b, k) else LOOSE
        for a, b in zip(seq, seq[1:])
    )

    runs: List[Run] = []
    loose: List[int] = []
    i = 0
    n = len(seq) - 1
    while i <= n:
        if i < n and classes[i] == OPTIMAL:
            j = i
            while j < n and classes[j] == OPTIMAL:
                j += 1
            runs.append(Run(LOOSE, tuple(loose)))
            loose = []
            block = tuple(seq[i : j + 1])
            polarity = None if lay.odd else run_polarity(block, lay)
            runs.append(Run(OPTIMAL, block, polarity))
            i = j + 1
        else:
            loose.append(seq[i])
            i += 1
    runs.append(Run(LOOSE, tuple(loose)))

    t = sum(1 for r in runs if r.kind == OPTIMAL)
    f0, fn = lay.layer_of[seq[0]], lay.layer_of[seq[-1]]
    y_total = sum(len(r.vertices) for r in runs if r.kind == LOOSE)
    return Decomposition(
        sequence=tuple(seq),
        runs=tuple(runs),
        pair_classes=classes,
        alpha2=f0 + fn + y_total + t - 1,
        endpoint_layers=(f0, fn),
    )


def lower_bound_certificate(
    g: PathPowerGraph, lay: Optional[Layering], coloring: RadioColoring
) -> int:
    """alpha_1 + alpha_2 for this coloring; never exceeds its span when it is valid."""
    dec = decompose(g, lay, coloring)
    return alpha1(g.n, g.m, coloring.k) + dec.alpha2
