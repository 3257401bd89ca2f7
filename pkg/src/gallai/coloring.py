"""Edge colorings of complete graphs and their basic color-degree toolkit.

An edge coloring assigns a nonnegative color id to every unordered pair of
distinct vertices of K_n.  The color degree of a vertex is the number of
distinct colors on its incident edges.  A coloring is *Gallai* when no
triangle carries three pairwise-distinct colors (no rainbow triangle).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping


@dataclass(frozen=True)
class EdgeColoring:
    """Complete symmetric edge coloring of K_n.

    Stored as the upper triangle in lexicographic pair order: entry for the
    pair (u, v) with u < v sits at index u*n - u*(u+1)//2 + (v - u - 1).
    Values are immutable after construction and safe to share.
    """

    n: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"vertex count must be >= 1, got {self.n}")
        expected = self.n * (self.n - 1) // 2
        if len(self.colors) != expected:
            raise ValueError(
                f"expected {expected} edge colors for n={self.n}, "
                f"got {len(self.colors)}"
            )
        for c in self.colors:
            if not isinstance(c, int) or c < 0:
                raise ValueError(f"color ids must be nonnegative integers, got {c!r}")

    def _index(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        if u < 0 or v >= self.n or u == v:
            raise ValueError(f"invalid vertex pair ({u}, {v}) for n={self.n}")
        return u * self.n - u * (u + 1) // 2 + (v - u - 1)

    def color(self, u: int, v: int) -> int:
        """Color of the edge {u, v}; symmetric in its arguments."""
        return self.colors[self._index(u, v)]

    def pairs(self) -> Iterator[tuple[int, int, int]]:
        """Yield (u, v, color) for every pair u < v in lexicographic order."""
        it = iter(self.colors)
        for u, v in itertools.combinations(range(self.n), 2):
            yield u, v, next(it)

    def color_set(self) -> set[int]:
        """The set of color ids that actually appear."""
        return set(self.colors)

    @classmethod
    def from_pairs(cls, n: int, pair_colors: Mapping[tuple[int, int], int]) -> "EdgeColoring":
        """Build from a mapping of unordered pairs to colors.

        The mapping may key pairs in either orientation but must cover every
        pair of distinct vertices exactly once.
        """
        seen: dict[tuple[int, int], int] = {}
        for (u, v), c in pair_colors.items():
            if u == v:
                raise ValueError(f"self-pair ({u}, {v}) is not colorable")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"pair {key} assigned twice")
            seen[key] = c
        expected = n * (n - 1) // 2
        if len(seen) != expected:
            raise ValueError(f"expected {expected} pairs for n={n}, got {len(seen)}")
        colors = []
        for u, v in itertools.combinations(range(n), 2):
            if (u, v) not in seen:
                raise ValueError(f"pair ({u}, {v}) is missing")
            colors.append(seen[(u, v)])
        return cls(n, tuple(colors))


@dataclass(frozen=True)
class RainbowWitness:
    """A triangle whose three edges carry pairwise-distinct colors.

    ``vertices`` is an ordered triple i < j < k and ``colors`` holds the
    coloring's values on {i,j}, {i,k}, {j,k} in that order.
    """

    vertices: tuple[int, int, int]
    colors: tuple[int, int, int]


def color_degrees(coloring: EdgeColoring) -> list[int]:
    """Per-vertex color degrees, indexed by vertex (unsorted).

    Entry v counts the distinct colors on edges incident to v; a single
    vertex has degree 0.
    """
    n = coloring.n
    seen: list[set[int]] = [set() for _ in range(n)]
    for u, v, c in coloring.pairs():
        seen[u].add(c)
        seen[v].add(c)
    return [len(s) for s in seen]


def find_rainbow_triangle(coloring: EdgeColoring) -> RainbowWitness | None:
    """Lexicographically smallest rainbow triangle, or None if none exists."""
    for i, j, k in itertools.combinations(range(coloring.n), 3):
        a = coloring.color(i, j)
        b = coloring.color(i, k)
        c = coloring.color(j, k)
        if a != b and a != c and b != c:
            return RainbowWitness((i, j, k), (a, b, c))
    return None


def is_gallai(coloring: EdgeColoring) -> bool:
    """True iff the coloring contains no rainbow triangle."""
    return find_rainbow_triangle(coloring) is None


def normalize_colors(coloring: EdgeColoring) -> EdgeColoring:
    """Relabel colors to 0..C-1 in order of first appearance.

    Pairs are scanned in lexicographic order, so the result is a canonical
    representative of the coloring up to color bijection.  Idempotent.
    """
    relabel: dict[int, int] = {}
    out = []
    for c in coloring.colors:
        if c not in relabel:
            relabel[c] = len(relabel)
        out.append(relabel[c])
    return EdgeColoring(coloring.n, tuple(out))
