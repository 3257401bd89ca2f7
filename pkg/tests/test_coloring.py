"""Core coloring container, rainbow detection, and normalization."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gallai import (
    EdgeColoring,
    RainbowWitness,
    color_degrees,
    find_rainbow_triangle,
    is_gallai,
    normalize_colors,
)


@st.composite
def colorings(draw, max_n=6):
    n = draw(st.integers(min_value=1, max_value=max_n))
    m = n * (n - 1) // 2
    values = draw(st.lists(st.integers(0, m), min_size=m, max_size=m))
    return EdgeColoring(n, tuple(values))


class TestEdgeColoring:
    def test_rejects_bad_vertex_count(self):
        with pytest.raises(ValueError):
            EdgeColoring(0, ())

    def test_rejects_wrong_length(self):
        with pytest.raises(ValueError):
            EdgeColoring(3, (0, 0))

    def test_rejects_negative_color(self):
        with pytest.raises(ValueError):
            EdgeColoring(2, (-1,))

    def test_rejects_non_integer_color(self):
        with pytest.raises(ValueError):
            EdgeColoring(2, (0.5,))

    def test_color_is_symmetric(self):
        c = EdgeColoring(3, (0, 1, 2))
        assert c.color(0, 2) == c.color(2, 0) == 1

    def test_color_rejects_self_pair(self):
        c = EdgeColoring(3, (0, 1, 2))
        with pytest.raises(ValueError):
            c.color(1, 1)

    def test_color_rejects_out_of_range(self):
        c = EdgeColoring(3, (0, 1, 2))
        with pytest.raises(ValueError):
            c.color(0, 3)

    def test_pairs_lexicographic(self):
        c = EdgeColoring(4, tuple(range(6)))
        expected = list(itertools.combinations(range(4), 2))
        assert [(u, v) for u, v, _ in c.pairs()] == expected
        assert [col for _, _, col in c.pairs()] == list(range(6))

    def test_single_vertex(self):
        c = EdgeColoring(1, ())
        assert list(c.pairs()) == []
        assert c.color_set() == set()
        assert color_degrees(c) == [0]

    def test_from_pairs_round_trip(self):
        c = EdgeColoring(4, (0, 1, 0, 2, 1, 0))
        rebuilt = EdgeColoring.from_pairs(4, {(u, v): col for u, v, col in c.pairs()})
        assert rebuilt == c

    def test_from_pairs_accepts_either_orientation(self):
        c = EdgeColoring.from_pairs(2, {(1, 0): 3})
        assert c.color(0, 1) == 3

    def test_from_pairs_rejects_missing_pair(self):
        with pytest.raises(ValueError):
            EdgeColoring.from_pairs(3, {(0, 1): 0, (0, 2): 0})

    def test_from_pairs_rejects_duplicate_pair(self):
        with pytest.raises(ValueError):
            EdgeColoring.from_pairs(2, {(0, 1): 0, (1, 0): 1})

    def test_from_pairs_rejects_self_pair(self):
        with pytest.raises(ValueError):
            EdgeColoring.from_pairs(2, {(0, 1): 0, (1, 1): 0})

    @given(colorings())
    def test_pair_indexing_consistent(self, coloring):
        for u, v, c in coloring.pairs():
            assert coloring.color(u, v) == c
            assert coloring.color(v, u) == c


class TestRainbow:
    def test_rainbow_triangle_found(self):
        witness = find_rainbow_triangle(EdgeColoring(3, (0, 1, 2)))
        assert witness == RainbowWitness(vertices=(0, 1, 2), colors=(0, 1, 2))

    def test_two_colored_triangle_is_clean(self):
        assert find_rainbow_triangle(EdgeColoring(3, (0, 1, 1))) is None

    def test_smallest_witness_wins(self):
        # both (0, 1, 3) and (0, 2, 3) are rainbow; lexicographic order
        c = EdgeColoring.from_pairs(
            4,
            {(0, 1): 0, (0, 2): 0, (0, 3): 1, (1, 2): 0, (1, 3): 2, (2, 3): 2},
        )
        witness = find_rainbow_triangle(c)
        assert witness.vertices == (0, 1, 3)
        assert witness.colors == (0, 1, 2)

    def test_witness_colors_match_the_edges(self):
        c = EdgeColoring(4, (0, 1, 0, 2, 0, 1))
        witness = find_rainbow_triangle(c)
        if witness is not None:
            i, j, k = witness.vertices
            assert witness.colors == (c.color(i, j), c.color(i, k), c.color(j, k))

    @given(colorings())
    def test_is_gallai_agrees_with_direct_scan(self, coloring):
        rainbow = any(
            len({coloring.color(i, j), coloring.color(i, k), coloring.color(j, k)}) == 3
            for i, j, k in itertools.combinations(range(coloring.n), 3)
        )
        assert is_gallai(coloring) == (not rainbow)
        witness = find_rainbow_triangle(coloring)
        if witness is not None:
            i, j, k = witness.vertices
            assert i < j < k
            assert len(set(witness.colors)) == 3
            assert witness.colors == (
                coloring.color(i, j),
                coloring.color(i, k),
                coloring.color(j, k),
            )


class TestColorDegrees:
    def test_monochromatic_triangle(self):
        assert color_degrees(EdgeColoring(3, (0, 0, 0))) == [1, 1, 1]

    def test_mixed_example(self):
        # vertex 0 sees {0, 1}, vertex 1 sees {0, 2}, vertex 2 sees {1, 2}
        assert color_degrees(EdgeColoring(3, (0, 1, 2))) == [2, 2, 2]

    @given(colorings())
    def test_matches_per_vertex_recount(self, coloring):
        for v in range(coloring.n):
            incident = {coloring.color(v, u) for u in range(coloring.n) if u != v}
            assert color_degrees(coloring)[v] == len(incident)


class TestNormalize:
    def test_first_appearance_order(self):
        assert normalize_colors(EdgeColoring(3, (7, 7, 3))).colors == (0, 0, 1)

    @given(colorings())
    def test_idempotent(self, coloring):
        once = normalize_colors(coloring)
        assert normalize_colors(once) == once

    @given(colorings())
    def test_preserves_structure(self, coloring):
        norm = normalize_colors(coloring)
        assert color_degrees(norm) == color_degrees(coloring)
        assert is_gallai(norm) == is_gallai(coloring)
        # color ids are exactly 0..C-1
        used = norm.color_set()
        assert used == set(range(len(used)))
