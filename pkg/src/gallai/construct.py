"""Constructive realization of feasible degree sequences.

The workhorse is vertex duplication: cloning a vertex v into v1 (copying
all of v's edge colors) can never create a rainbow triangle, because any
triangle {v, v1, w} has two equal colors and any other new triangle maps to
an existing one.  Choosing the color of the new edge {v, v1} among v's
incident colors keeps both degrees at deg(v); choosing a fresh color raises
both to deg(v) + 1.

``realize`` runs this in reverse: it peels the multiplicity m of the
maximum degree t down by one vertex per step (drop one copy of t when m is
odd; replace two copies of t by one t-1 when m is even), recurses, and
re-applies the matching duplication.  Feasibility of the input guarantees
every intermediate sequence stays feasible, so the recursion bottoms out at
a single vertex or an all-ones sequence.
"""

from __future__ import annotations

import enum
from typing import Sequence

from .coloring import EdgeColoring, color_degrees, normalize_colors
from .errors import InfeasibleSequenceError, InternalConsistencyError, SizeGuardError
from .feasibility import check_sequence

UNIFORM_SIZE_LIMIT = 20


class DuplicationChoice(enum.Enum):
    """How to color the edge between a vertex and its clone."""

    EXISTING_COLOR = "existing"
    FRESH_COLOR = "fresh"


def monochromatic_coloring(n: int, color: int = 0) -> EdgeColoring:
    """All edges of K_n in a single color; every color degree is 1 (0 for K_1)."""
    if n < 1:
        raise ValueError(f"vertex count must be >= 1, got {n}")
    return EdgeColoring(n, (color,) * (n * (n - 1) // 2))


def duplicate_vertex(
    coloring: EdgeColoring, v: int, choice: DuplicationChoice
) -> EdgeColoring:
    """Clone vertex v, appending the copy as vertex n.

    The clone takes v's color toward every other vertex.  The new edge
    {v, clone} gets the smallest color incident to v (EXISTING_COLOR) or
    max color id + 1 (FRESH_COLOR).  All other vertices keep their color
    degree; v and the clone end at deg(v) resp. deg(v) + 1.
    """
    n = coloring.n
    if not 0 <= v < n:
        raise ValueError(f"vertex {v} out of range for n={n}")
    incident = [coloring.color(v, u) for u in range(n) if u != v]
    if choice is DuplicationChoice.EXISTING_COLOR:
        if not incident:
            raise ValueError("EXISTING_COLOR requires the vertex to have an edge")
        bridge = min(incident)
    else:
        bridge = max(coloring.colors) + 1 if coloring.colors else 0
    pair_colors: dict[tuple[int, int], int] = {
        (u, w): c for u, w, c in coloring.pairs()
    }
    for u in range(n):
        pair_colors[(u, n)] = bridge if u == v else coloring.color(v, u)
    return EdgeColoring.from_pairs(n + 1, pair_colors)


def realize(values: Sequence[int]) -> EdgeColoring:
    """Produce a normalized Gallai coloring whose sorted color degrees equal
    the given feasible sequence.

    Raises InfeasibleSequenceError (carrying the slack report) otherwise.
    The construction is deterministic; no promise is made about which of
    the many realizations it returns beyond degree-sequence correctness.
    """
    report = check_sequence(values)
    if not report.feasible:
        raise InfeasibleSequenceError(report)
    return normalize_colors(_realize(list(report.values)))


def _realize(seq: list[int]) -> EdgeColoring:
    n = len(seq)
    if n == 1:
        return EdgeColoring(1, ())
    t = seq[-1]
    if t == 1:
        # The even reduction would manufacture a degree-0 entry here; the
        # all-ones sequence is just the one-color coloring.
        return monochromatic_coloring(n)
    m = seq.count(t)
    if m < 2:
        raise InternalConsistencyError(
            f"feasible sequence {seq} has a unique maximum"
        )
    if m % 2 == 1:
        sub = _realize(seq[:-1])
        target = t
        choice = DuplicationChoice.EXISTING_COLOR
    else:
        sub = _realize(seq[: n - m] + [t - 1] + [t] * (m - 2))
        target = t - 1
        choice = DuplicationChoice.FRESH_COLOR
    degrees = color_degrees(sub)
    try:
        v = degrees.index(target)
    except ValueError:
        raise InternalConsistencyError(
            f"no vertex of degree {target} after realizing {seq}"
        ) from None
    return duplicate_vertex(sub, v, choice)


def chain_coloring(n: int) -> EdgeColoring:
    """Coloring with color(u, v) = min(u, v).

    Triangle i < j < k carries colors (i, i, j), so it is rainbow-free, and
    the sorted degree sequence is [1, 2, ..., n-2, n-1, n-1] for n >= 2.
    """
    if n < 1:
        raise ValueError(f"vertex count must be >= 1, got {n}")
    colors = []
    for u in range(n):
        colors.extend([u] * (n - 1 - u))
    return normalize_colors(EdgeColoring(n, tuple(colors)))


def uniform_coloring(d: int) -> EdgeColoring:
    """Coloring of K_{2^d} where every color degree is exactly d.

    Vertices are d-bit strings; the edge {u, v} is colored by the position
    of the most significant bit where u and v differ.  Among the three
    edges of any triangle, the two xor values with the larger top bit
    agree on it, so no triangle is rainbow.  This meets the floor(log2 n)
    minimum-degree bound with equality, and its first suffix slack is 0.

    Memory grows as 4^d; the hard guard is d <= 20.
    """
    if d < 0:
        raise ValueError(f"bit count must be >= 0, got {d}")
    if d > UNIFORM_SIZE_LIMIT:
        raise SizeGuardError(f"bit count {d} exceeds limit {UNIFORM_SIZE_LIMIT}")
    n = 1 << d
    colors = []
    for u in range(n):
        for v in range(u + 1, n):
            colors.append((u ^ v).bit_length() - 1)
    return normalize_colors(EdgeColoring(n, tuple(colors)))
