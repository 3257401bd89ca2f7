"""Exact feasibility test for candidate color degree sequences.

A nondecreasing sequence d_1 <= ... <= d_n (with the sentinel d_0 = 0) is
the sorted color degree sequence of some Gallai coloring of K_n if and only
if every suffix inequality

    sum_{i=k}^{n} 2^{-(d_i - d_{k-1})} >= 1        for k = 1..n

holds.  To keep the verdict exact for large degrees, each inequality is
scaled by 2^(d_n - d_{k-1}) so both sides are plain integers:

    slack_k = sum_{i=k}^{n} 2^(d_n - d_i)  -  2^(d_n - d_{k-1})

has the same sign as the dyadic expression, and the sequence is feasible
iff every slack is nonnegative.  No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import MalformedSequenceError


@dataclass(frozen=True)
class FeasibilityReport:
    """Per-k exact slacks for a candidate sequence, plus the verdict.

    ``slacks[k-1]`` is the integer slack of the k-th suffix inequality.
    ``first_violation`` is the least k with negative slack, or None.
    """

    values: tuple[int, ...]
    slacks: tuple[int, ...]
    feasible: bool
    first_violation: int | None

    @property
    def n(self) -> int:
        return len(self.values)


def validate_sequence(values: Sequence[int]) -> tuple[int, ...]:
    """Check shape constraints on a candidate sequence and return it as a tuple.

    Requires a nonempty nondecreasing sequence of nonnegative integers; the
    value 0 is allowed only for the single-vertex sequence [0], since any
    vertex of K_n with n >= 2 has at least one incident edge.
    """
    seq = tuple(values)
    if not seq:
        raise MalformedSequenceError("sequence must be nonempty")
    for d in seq:
        if not isinstance(d, int) or isinstance(d, bool):
            raise MalformedSequenceError(f"entries must be integers, got {d!r}")
        if d < 0:
            raise MalformedSequenceError(f"entries must be nonnegative, got {d}")
    if any(a > b for a, b in zip(seq, seq[1:])):
        raise MalformedSequenceError(f"sequence must be nondecreasing: {list(seq)}")
    if len(seq) >= 2 and seq[0] == 0:
        raise MalformedSequenceError(
            "degree 0 is impossible with more than one vertex"
        )
    return seq


def check_sequence(values: Sequence[int]) -> FeasibilityReport:
    """Evaluate all n suffix inequalities exactly.

    Returns the full slack profile; the sequence is realizable as the sorted
    color degree sequence of a Gallai coloring of K_n exactly when it is
    feasible here.
    """
    seq = validate_sequence(values)
    n = len(seq)
    top = seq[-1]
    # suffix[k-1] = sum over i >= k of 2^(top - d_i), exact integers
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + (1 << (top - seq[i]))
    slacks = []
    first_violation = None
    for k in range(1, n + 1):
        prev = seq[k - 2] if k >= 2 else 0
        slack = suffix[k - 1] - (1 << (top - prev))
        slacks.append(slack)
        if slack < 0 and first_violation is None:
            first_violation = k
    return FeasibilityReport(
        values=seq,
        slacks=tuple(slacks),
        feasible=first_violation is None,
        first_violation=first_violation,
    )


def min_degree_upper_bound(n: int) -> int:
    """floor(log2 n): every Gallai coloring of K_n has a vertex of color
    degree at most this."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return n.bit_length() - 1
