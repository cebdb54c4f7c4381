"""Powers of paths and their layer structure.

Vertices of P_n^m are the integer positions 0..n on a line; two vertices are
adjacent when their positions differ by at most m.  Graph distance therefore
has the closed form ceil(|u - v| / m) and no adjacency structure is stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple


class InstanceError(ValueError):
    """Raised for an invalid (n, m) instance or an out-of-range vertex."""


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class PathPowerGraph:
    n: int
    m: int

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise InstanceError(f"need n >= 1 and m >= 1, got n={self.n}, m={self.m}")
        if self.m > self.n:
            raise InstanceError(
                f"m={self.m} exceeds n={self.n}; P_n^m equals P_n^n for m >= n"
            )

    @property
    def vertices(self) -> range:
        return range(self.n + 1)

    @property
    def order(self) -> int:
        return self.n + 1

    def check_vertex(self, v: int) -> None:
        if not 0 <= v <= self.n:
            raise InstanceError(f"vertex {v} outside 0..{self.n}")

    def distance(self, u: int, v: int) -> int:
        self.check_vertex(u)
        self.check_vertex(v)
        return ceil_div(abs(u - v), self.m)

    @property
    def diameter(self) -> int:
        return ceil_div(self.n, self.m)


def build_graph(n: int, m: int) -> PathPowerGraph:
    return PathPowerGraph(n, m)


def distance(g: PathPowerGraph, u: int, v: int) -> int:
    return g.distance(u, v)


def diameter(g: PathPowerGraph) -> int:
    return g.diameter


@dataclass(frozen=True, order=True)
class NamedVertex:
    """A vertex under the layer naming: side 'c', 'l' or 'r'.

    Central vertices use ``layer=0`` and ``index`` 0..m.  Left and right
    vertices ``l_ij`` / ``r_ij`` have ``layer=i`` and ``index=j``.
    """

    side: str
    layer: int
    index: int

    def label(self) -> str:
        if self.side == "c":
            return f"c{self.index}"
        if self.layer < 10 and self.index < 10:
            return f"{self.side}{self.layer}{self.index}"
        return f"{self.side}{self.layer}_{self.index}"


@dataclass(frozen=True)
class Layering:
    """Layers L_0..L_q of P_n^m around the central clique.

    ``layer_of[v]`` is the distance from v to L_0.  ``left[(i, j)]`` and
    ``right[(i, j)]`` give the positions of l_ij and r_ij; ``central[i]`` is
    the position of c_i.  ``s_layer`` is the size of the right part of L_q
    (equal to m when m divides n), ``s_mod`` is n mod m.
    """

    graph: PathPowerGraph
    diam: int
    q: int
    layer_of: Tuple[int, ...]
    layers: Tuple[Tuple[int, ...], ...]
    central: Tuple[int, ...]
    left: Dict[Tuple[int, int], int]
    right: Dict[Tuple[int, int], int]
    s_layer: int
    s_mod: int

    @property
    def odd(self) -> bool:
        return self.diam % 2 == 1

    @property
    def c0(self) -> int:
        return self.central[0]

    def position(self, name: NamedVertex) -> int:
        if name.side == "c":
            return self.central[name.index]
        table = self.left if name.side == "l" else self.right
        return table[(name.layer, name.index)]

    def name_of(self, v: int) -> NamedVertex:
        self.graph.check_vertex(v)
        lo, hi = self.central[0], self.central[-1]
        m = self.graph.m
        if v < lo:
            d = lo - v
            i = ceil_div(d, m)
            return NamedVertex("l", i, d - (i - 1) * m)
        if v > hi:
            d = v - hi
            i = ceil_div(d, m)
            return NamedVertex("r", i, d - (i - 1) * m)
        return NamedVertex("c", 0, v - lo)

    def is_left(self, v: int) -> bool:
        return v < self.central[0]

    def is_right(self, v: int) -> bool:
        return v > self.central[-1]

    def names(self) -> Dict[str, int]:
        return {self.name_of(v).label(): v for v in self.graph.vertices}

    def to_json(self) -> dict:
        return {
            "n": self.graph.n,
            "m": self.graph.m,
            "q": self.q,
            "diam": self.diam,
            "layers": [list(layer) for layer in self.layers],
            "names": self.names(),
            "sLayer": self.s_layer,
            "sMod": self.s_mod,
        }


def build_layering(g: PathPowerGraph) -> Layering:
    n, m = g.n, g.m
    diam = g.diameter
    q = diam // 2
    lo = q * m
    hi = lo + m if diam % 2 else lo
    central = tuple(range(lo, hi + 1))

    layer_of: List[int] = []
    for v in g.vertices:
        if v < lo:
            layer_of.append(ceil_div(lo - v, m))
        elif v > hi:
            layer_of.append(ceil_div(v - hi, m))
        else:
            layer_of.append(0)

    layers: List[List[int]] = [[] for _ in range(q + 1)]
    for v, i in enumerate(layer_of):
        layers[i].append(v)

    left = {}
    right = {}
    for v in g.vertices:
        if v < lo:
            d = lo - v
            i = ceil_div(d, m)
            left[(i, d - (i - 1) * m)] = v
        elif v > hi:
            d = v - hi
            i = ceil_div(d, m)
            right[(i, d - (i - 1) * m)] = v

    s_layer = (n + 1) - (2 * q - 1) * m - len(central)
    return Layering(
        graph=g,
        diam=diam,
        q=q,
        layer_of=tuple(layer_of),
        layers=tuple(tuple(layer) for layer in layers),
        central=central,
        left=left,
        right=right,
        s_layer=s_layer,
        s_mod=n % m,
    )
