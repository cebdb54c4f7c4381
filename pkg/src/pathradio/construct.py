"""Optimal color orders for P_n^m and the greedy coloring along them.

The order interleaves right and left vertices (an alternating chain) and
places the central vertices so that every consecutive pair meets the layer
gap bound with equality, except for the forced loose pairs of the even
diameter / m-not-dividing-n case.
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Sequence

from .coloring import ColorSequence, RadioColoring
from .formula import HypothesisError, hypothesis_holds, min_valid_k
from .graph import Layering, NamedVertex, PathPowerGraph, build_graph, build_layering

SPLICES = ("end", "printed")


def _check_same_side(a: NamedVertex, b: NamedVertex) -> None:
    if a.side not in ("l", "r") or a.side != b.side:
        raise ValueError(f"cannot compare {a.label()} with {b.label()}: need two left or two right vertices")


def prec1_key(v: NamedVertex):
    j, i = v.index, v.layer
    return (j, (-1) ** (j - 1) * i)


def prec2_key(v: NamedVertex, m: int):
    j, i = v.index, v.layer
    return (j, (-1) ** (m - j) * i)


def prec1_less(a: NamedVertex, b: NamedVertex) -> bool:
    """Column first; within a column, layers ascend in odd columns and descend in even ones."""
    _check_same_side(a, b)
    return prec1_key(a) < prec1_key(b)


def prec2_less(a: NamedVertex, b: NamedVertex, m: int) -> bool:
    """Column first; within a column the layer direction alternates, anchored at column m."""
    _check_same_side(a, b)
    return prec2_key(a, m) < prec2_key(b, m)


def _resolve(lay: Layering, v: NamedVertex) -> int:
    # r_{0j} is a central vertex renamed as a right vertex.
    if v.side == "r" and v.layer == 0:
        return lay.central[v.index]
    return lay.position(v)


def _interleave(lay: Layering, ascending, descending) -> List[int]:
    if len(ascending) != len(descending):
        raise ValueError(
            f"alternating chain needs equal sides, got {len(ascending)} and {len(descending)}"
        )
    out = []
    for a, b in zip(ascending, descending):
        out.append(_resolve(lay, a))
        out.append(_resolve(lay, b))
    return out


def _left_names(lay: Layering) -> List[NamedVertex]:
    return [NamedVertex("l", i, j) for (i, j) in lay.left]


def _right_names(lay: Layering) -> List[NamedVertex]:
    return [NamedVertex("r", i, j) for (i, j) in lay.right]


def special_chain(
    lay: Layering,
    right: Optional[Iterable[NamedVertex]] = None,
    left: Optional[Iterable[NamedVertex]] = None,
) -> List[int]:
    """Right vertices ascending by prec1 alternated with left vertices descending by prec2."""
    m = lay.graph.m
    right = _right_names(lay) if right is None else list(right)
    left = _left_names(lay) if left is None else list(left)
    a = sorted(right, key=prec1_key)
    b = sorted(left, key=lambda v: prec2_key(v, m), reverse=True)
    return _interleave(lay, a, b)


def reverse_chain(
    lay: Layering,
    left: Optional[Iterable[NamedVertex]] = None,
    right: Optional[Iterable[NamedVertex]] = None,
) -> List[int]:
    """Left vertices ascending by prec1 alternated with right vertices descending by prec2."""
    m = lay.graph.m
    left = _left_names(lay) if left is None else list(left)
    right = _right_names(lay) if right is None else list(right)
    a = sorted(left, key=prec1_key)
    b = sorted(right, key=lambda v: prec2_key(v, m), reverse=True)
    return _interleave(lay, a, b)


def _splice(chain: List[int], block: Sequence[int], at: int) -> List[int]:
    return chain[:at] + list(block) + chain[at:]


def case_sequence(
    g: PathPowerGraph, lay: Optional[Layering] = None, splice: str = "end"
) -> ColorSequence:
    """The vertex order (v_0, ..., v_n) used by the optimal coloring.

    For odd diameter the central block is placed after the whole reverse
    chain (``splice="end"``).  ``splice="printed"`` inserts it after the
    first q*m chain vertices instead; that placement is kept only so tests
    can show it is not optimal.
    """
    if splice not in SPLICES:
        raise ValueError(f"unknown splice {splice!r}")
    lay = lay or build_layering(g)
    m, q = g.m, lay.q
    s = g.n % m
    c = lay.central

    if not lay.odd and s == 0:
        order = special_chain(lay) + [c[0]]
    elif not lay.odd:
        dropped = {(1, j) for j in range(1, m - s + 1)}
        kept = [v for v in _left_names(lay) if (v.layer, v.index) not in dropped]
        order = special_chain(lay, left=kept)
        order += [c[0]] + [lay.left[(1, j)] for j in range(1, m - s + 1)]
    elif s == 0:
        chain = reverse_chain(lay)
        at = len(chain) if splice == "end" else q * m
        order = [c[m]] + _splice(chain, c[:m], at)
    else:
        renamed = [NamedVertex("r", 0, j) for j in range(s + 1, m + 1)]
        chain = reverse_chain(lay, right=_right_names(lay) + renamed)
        at = len(chain) if splice == "end" else q * m
        order = _splice(chain, c[: s + 1], at)
    return ColorSequence(tuple(order), provenance="constructed")


def greedy_color(g: PathPowerGraph, seq: Sequence[int], k: int) -> RadioColoring:
    """Color v_0 with 0 and each next vertex k + 1 - d(v_i, v_{i+1}) above its predecessor."""
    seq = tuple(seq)
    ColorSequence(seq)
    colors = [0]
    for a, b in zip(seq, seq[1:]):
        colors.append(colors[-1] + k + 1 - g.distance(a, b))
    return RadioColoring.from_sequence(g, k, seq, colors)


def construct_optimal(n: int, m: int, k: int, unchecked: bool = False) -> RadioColoring:
    if not unchecked and not hypothesis_holds(n, m, k):
        raise HypothesisError(
            f"k={k} too small for n={n}, m={m}: need k >= {min_valid_k(n, m)}"
        )
    g = build_graph(n, m)
    return greedy_color(g, case_sequence(g).order, k)
