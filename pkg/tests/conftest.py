from __future__ import annotations

import random

import pytest

import bipower as bp
from bipower.intervals import Interval, IntervalRepresentation
from bipower.mca import identity_arrangement

# 6+5 interval bigraph used throughout: x1..x3 share y1..y3, x2 also meets y4,
# x3 also meets y5, and x4/x5/x6 are pendants on y1/y2/y3.
SAMPLE_EDGES = [
    (0, 0), (0, 1), (0, 2),
    (1, 0), (1, 1), (1, 2), (1, 3),
    (2, 0), (2, 1), (2, 2), (2, 4),
    (3, 0),
    (4, 1),
    (5, 2),
]

SAMPLE_X_INTERVALS = (Interval(4, 8), Interval(2, 8), Interval(5, 9), Interval(3, 4), Interval(6, 7), Interval(7, 8))
SAMPLE_Y_INTERVALS = (Interval(2, 5), Interval(5, 6), Interval(8, 9), Interval(0, 2), Interval(9, 10))

# 6x7 staircase matrix with a fully worked R/C zero labelling.
STAIRCASE_ROWS = (
    "1100000",
    "1110000",
    "0111100",
    "0011100",
    "0001110",
    "0000111",
)


@pytest.fixture
def sample_graph() -> bp.BipartiteGraph:
    return bp.build_graph(6, 5, SAMPLE_EDGES)


@pytest.fixture
def sample_rep() -> IntervalRepresentation:
    return IntervalRepresentation(SAMPLE_X_INTERVALS, SAMPLE_Y_INTERVALS)


@pytest.fixture
def staircase_matrix():
    return identity_arrangement(tuple(tuple(int(ch) for ch in row) for row in STAIRCASE_ROWS))


def cycle_graph(length: int) -> bp.BipartiteGraph:
    """Plain even cycle as a bigraph; vertex t sits at X t//2 (t even) / Y t//2."""
    g, _ = bp.gen_subdivided_cycle([1] * length)
    return g


def cycle_vertex(position: int) -> bp.VertexId:
    side = bp.Side.X if position % 2 == 0 else bp.Side.Y
    return bp.VertexId(side, position // 2)


def random_tree(rng: random.Random, vertices: int) -> bp.BipartiteGraph:
    """Random tree, two-coloured by depth parity into the X/Y sides."""
    assert vertices >= 2, "both sides must be inhabited"
    parent = [0] * vertices
    depth = [0] * vertices
    for v in range(1, vertices):
        parent[v] = rng.randrange(v)
        depth[v] = depth[parent[v]] + 1
    side_index: list[int] = []
    counts = [0, 0]
    for v in range(vertices):
        side_index.append(counts[depth[v] % 2])
        counts[depth[v] % 2] += 1
    edges = []
    for v in range(1, vertices):
        if depth[v] % 2:  # v on Y, parent on X
            edges.append((side_index[parent[v]], side_index[v]))
        else:
            edges.append((side_index[v], side_index[parent[v]]))
    return bp.build_graph(max(counts[0], 1), max(counts[1], 1), edges)


def random_nonzero_matrix(rng: random.Random, max_n: int, max_m: int) -> tuple[tuple[int, ...], ...]:
    """Uniform 0/1 entries, redrawn until no row or column is all zero."""
    while True:
        n, m = rng.randint(1, max_n), rng.randint(1, max_m)
        entries = tuple(tuple(rng.randint(0, 1) for _ in range(m)) for _ in range(n))
        if all(any(row) for row in entries) and all(
            any(entries[i][j] for i in range(n)) for j in range(m)
        ):
            return entries
