"""Exhaustive ground truth at desk scale.

``enumerate_gallai`` walks every edge coloring of K_n up to color
relabeling with restricted-growth labels (each edge, taken in lexicographic
pair order, either reuses a previous color or introduces the next fresh
one) and prunes a partial assignment as soon as it closes a rainbow
triangle.  Since the pairs (w, u) and (w, v) with w < u both precede
(u, v), every triangle is complete at its lexicographically last edge, so
checking only those triangles at assignment time is sound.

Everything downstream of the enumeration (realizable sequence sets, the
characterization crosscheck, brute-force partitions) is small enough to be
an independent referee for the analytic modules.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .coloring import EdgeColoring, color_degrees, find_rainbow_triangle
from .errors import InternalConsistencyError, NotGallaiError, SizeGuardError
from .feasibility import check_sequence

ENUMERATION_SIZE_LIMIT = 6  # n = 6 works but takes a while
PARTITION_SIZE_LIMIT = 10


@dataclass(frozen=True)
class EnumerationStats:
    """Count of Gallai colorings of K_n up to color relabeling, plus the set
    of sorted degree sequences they realize."""

    n: int
    count: int
    sequences: frozenset[tuple[int, ...]]


@dataclass(frozen=True)
class CrosscheckResult:
    """Outcome of comparing realizable sequences against feasible ones."""

    n: int
    equal: bool
    realizable: frozenset[tuple[int, ...]]
    feasible: frozenset[tuple[int, ...]]

    @property
    def only_realizable(self) -> frozenset[tuple[int, ...]]:
        return self.realizable - self.feasible

    @property
    def only_feasible(self) -> frozenset[tuple[int, ...]]:
        return self.feasible - self.realizable


@dataclass
class GallaiPartition:
    """A nontrivial vertex partition with monochromatic part pairs and at
    most two colors between parts in total.

    ``part_pair_color`` maps index pairs (i, j), i < j, of ``parts`` to the
    single color joining them.
    """

    parts: tuple[tuple[int, ...], ...]
    cross_colors: frozenset[int]
    part_pair_color: dict[tuple[int, int], int]


def _check_size(n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > ENUMERATION_SIZE_LIMIT:
        raise SizeGuardError(
            f"n={n} exceeds the enumeration limit {ENUMERATION_SIZE_LIMIT}"
        )


def enumerate_gallai(n: int) -> Iterator[EdgeColoring]:
    """Yield every Gallai coloring of K_n exactly once up to color relabeling.

    Colorings come out in restricted-growth order and are already in
    normalized (first-appearance) color form.  Deterministic.
    """
    _check_size(n)
    pairs = list(itertools.combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    # Triangles completed by each edge: {w, u, v} for w < u is fully
    # assigned exactly when (u, v) is, in lexicographic pair order.
    closing = [
        [(index[(w, u)], index[(w, v)]) for w in range(u)] for u, v in pairs
    ]
    colors = [0] * len(pairs)

    def extend(e: int, used: int) -> Iterator[EdgeColoring]:
        if e == len(pairs):
            yield EdgeColoring(n, tuple(colors))
            return
        completed = closing[e]
        for c in range(used + 1):
            for ea, eb in completed:
                a, b = colors[ea], colors[eb]
                if a != b and a != c and b != c:
                    break
            else:
                colors[e] = c
                yield from extend(e + 1, used + (c == used))

    return extend(0, 0)


def realizable_sequences(n: int) -> set[tuple[int, ...]]:
    """Sorted color degree sequences over all Gallai colorings of K_n."""
    return {tuple(sorted(color_degrees(c))) for c in enumerate_gallai(n)}


def enumeration_stats(n: int) -> EnumerationStats:
    """Count the enumeration and collect its degree sequences in one sweep."""
    count = 0
    sequences = set()
    for c in enumerate_gallai(n):
        count += 1
        sequences.add(tuple(sorted(color_degrees(c))))
    return EnumerationStats(n=n, count=count, sequences=frozenset(sequences))


def candidate_sequences(n: int) -> Iterator[tuple[int, ...]]:
    """All nondecreasing candidate sequences of length n with entries in
    [1, n-1]; for n = 1 the only candidate is (0,)."""
    if n == 1:
        yield (0,)
        return
    yield from itertools.combinations_with_replacement(range(1, n), n)


def crosscheck(n: int) -> CrosscheckResult:
    """Compare realizable degree sequences against feasible candidates.

    The two sets agree for every n (this is the characterization); the
    result carries both sets so a disagreement can be inspected.
    """
    realizable = frozenset(realizable_sequences(n))
    feasible = frozenset(
        seq for seq in candidate_sequences(n) if check_sequence(seq).feasible
    )
    return CrosscheckResult(
        n=n, equal=realizable == feasible, realizable=realizable, feasible=feasible
    )


def _partitions_by_block_count(n: int) -> Iterator[list[list[int]]]:
    """Set partitions of range(n), ordered by number of parts ascending and
    then lexicographically by restricted-growth string."""
    labels = [0] * n

    def assign(i: int, top: int, k: int) -> Iterator[list[list[int]]]:
        if i == n:
            if top == k - 1:
                parts: list[list[int]] = [[] for _ in range(k)]
                for v, a in enumerate(labels):
                    parts[a].append(v)
                yield parts
            return
        # a fresh label is only allowed while k labels remain reachable
        for a in range(min(top + 1, k - 1) + 1):
            if k - 1 - max(top, a) > n - 1 - i:
                continue
            labels[i] = a
            yield from assign(i + 1, max(top, a), k)

    for k in range(2, n + 1):
        yield from assign(1, 0, k)


def brute_force_gallai_partition(coloring: EdgeColoring) -> GallaiPartition:
    """First vertex partition (parts ascending, then lexicographic) whose
    part pairs are each monochromatic with at most two cross colors total.

    Existence is guaranteed for every rainbow-free coloring, so exhausting
    the scan without a hit is an internal failure, not a normal outcome.
    """
    n = coloring.n
    if n < 2:
        raise ValueError("need at least two vertices")
    if n > PARTITION_SIZE_LIMIT:
        raise SizeGuardError(f"n={n} exceeds the partition limit {PARTITION_SIZE_LIMIT}")
    witness = find_rainbow_triangle(coloring)
    if witness is not None:
        raise NotGallaiError(witness)

    for parts in _partitions_by_block_count(n):
        cross_colors: set[int] = set()
        part_pair_color: dict[tuple[int, int], int] = {}
        ok = True
        for i in range(len(parts)):
            for j in range(i + 1, len(parts)):
                joining = {coloring.color(u, v) for u in parts[i] for v in parts[j]}
                if len(joining) != 1:
                    ok = False
                    break
                color = joining.pop()
                part_pair_color[(i, j)] = color
                cross_colors.add(color)
                if len(cross_colors) > 2:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return GallaiPartition(
                parts=tuple(tuple(p) for p in parts),
                cross_colors=frozenset(cross_colors),
                part_pair_color=part_pair_color,
            )
    raise InternalConsistencyError(
        "no valid partition found for a rainbow-free coloring"
    )
