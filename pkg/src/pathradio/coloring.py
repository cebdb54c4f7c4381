from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from .graph import PathPowerGraph


class ColoringError(ValueError):
    """Malformed coloring: wrong vertex count, negative or tied colors."""


@dataclass(frozen=True)
class ColorSequence:
    """Vertices listed in increasing color order (v_0, ..., v_n)."""

    order: Tuple[int, ...]
    provenance: str = "constructed"  # or "fromColoring"

    def __post_init__(self):
        if sorted(self.order) != list(range(len(self.order))):
            raise ColoringError(f"not a permutation of 0..{len(self.order) - 1}: {self.order}")

    def __len__(self):
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def __getitem__(self, i):
        return self.order[i]


@dataclass(frozen=True)
class RadioColoring:
    """Colors indexed by vertex position; ``colors[v]`` is the color of v."""

    n: int
    m: int
    k: int
    colors: Tuple[int, ...]

    def __post_init__(self):
        if len(self.colors) != self.n + 1:
            raise ColoringError(
                f"expected {self.n + 1} colors, got {len(self.colors)}"
            )
        if any(c < 0 for c in self.colors):
            raise ColoringError("colors must be non-negative")

    @property
    def graph(self) -> PathPowerGraph:
        return PathPowerGraph(self.n, self.m)

    @property
    def span(self) -> int:
        return max(self.colors) - min(self.colors)

    def is_injective(self) -> bool:
        return len(set(self.colors)) == len(self.colors)

    def sequence(self) -> ColorSequence:
        if not self.is_injective():
            raise ColoringError("colors are not distinct; no color order exists")
        order = sorted(range(self.n + 1), key=self.colors.__getitem__)
        return ColorSequence(tuple(order), provenance="fromColoring")

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "colors": list(self.colors),
            "span": self.span,
            "sequence": list(self.sequence().order) if self.is_injective() else None,
        }

    @classmethod
    def from_json(cls, data: dict) -> "RadioColoring":
        return cls(
            n=int(data["n"]),
            m=int(data["m"]),
            k=int(data["k"]),
            colors=tuple(int(c) for c in data["colors"]),
        )

    @classmethod
    def from_sequence(
        cls, g: PathPowerGraph, k: int, order: Sequence[int], colors: Sequence[int]
    ) -> "RadioColoring":
        by_vertex = [0] * g.order
        for v, c in zip(order, colors):
            by_vertex[v] = c
        return cls(g.n, g.m, k, tuple(by_vertex))
