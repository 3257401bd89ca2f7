"""Plain-text documents for colorings, plus DOT export.

A coloring document lists every edge explicitly so diffs stay readable:

    n 4
    edge 0 1 0
    edge 0 2 0
    ...

The first non-comment line declares the vertex count; then exactly
n(n-1)/2 ``edge u v color`` records follow, one per unordered pair with
0 <= u < v < n and a nonnegative color.  Writers emit pairs in
lexicographic order; parsers accept any order but demand exact coverage.
Lines starting with ``#`` and blank lines are ignored on input and never
emitted, so rendering is byte-stable.
"""

from __future__ import annotations

from .coloring import EdgeColoring
from .errors import DocumentError

# Pen colors for DOT export, cycled in order of color id.  Ids beyond the
# palette get a numeric suffix (color 12 -> "red1", 13 -> "blue1", ...),
# which X11 color names support up to suffix 4.
PALETTE = (
    "red",
    "blue",
    "green",
    "orange",
    "purple",
    "brown",
    "cyan",
    "magenta",
    "gold",
    "pink",
    "turquoise",
    "salmon",
)


def pen_color(color_id: int) -> str:
    """Deterministic pen color name for a color id."""
    base = PALETTE[color_id % len(PALETTE)]
    cycle = color_id // len(PALETTE)
    return base if cycle == 0 else f"{base}{cycle}"


def render_document(coloring: EdgeColoring) -> str:
    """Serialize a coloring; inverse of parse_document for any coloring."""
    lines = [f"n {coloring.n}"]
    for u, v, c in coloring.pairs():
        lines.append(f"edge {u} {v} {c}")
    return "\n".join(lines) + "\n"


def parse_document(text: str) -> EdgeColoring:
    """Parse a coloring document, validating the full file schema."""
    n: int | None = None
    pair_colors: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise DocumentError(f"line {lineno}: expected 'n <count>', got {raw!r}")
            n = _parse_int(fields[1], lineno)
            if n < 1:
                raise DocumentError(f"line {lineno}: vertex count must be >= 1")
            continue
        if len(fields) != 4 or fields[0] != "edge":
            raise DocumentError(
                f"line {lineno}: expected 'edge <u> <v> <color>', got {raw!r}"
            )
        u = _parse_int(fields[1], lineno)
        v = _parse_int(fields[2], lineno)
        c = _parse_int(fields[3], lineno)
        if not 0 <= u < v < n:
            raise DocumentError(f"line {lineno}: need 0 <= u < v < n, got {u}, {v}")
        if c < 0:
            raise DocumentError(f"line {lineno}: color must be nonnegative, got {c}")
        if (u, v) in pair_colors:
            raise DocumentError(f"line {lineno}: pair ({u}, {v}) repeated")
        pair_colors[(u, v)] = c
    if n is None:
        raise DocumentError("document is empty")
    try:
        return EdgeColoring.from_pairs(n, pair_colors)
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise DocumentError(f"line {lineno}: expected an integer, got {token!r}") from None


def render_dot(coloring: EdgeColoring) -> str:
    """DOT graph with one pen color per color id, byte-stable."""
    lines = ["graph coloring {", "  node [shape=circle];"]
    for u, v, c in coloring.pairs():
        lines.append(f'  {u} -- {v} [color="{pen_color(c)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
