"""Interval representations of bipartite graphs and their behaviour under
odd powers.

A representation assigns each vertex a closed integer interval; an x-y pair
is an edge exactly when the two intervals intersect (touching endpoints
count).  The power construction keeps every left endpoint and recomputes
right endpoints from distances; because the recomputed endpoint can land
left of the left endpoint, it is clamped, and the result is validated
against the actual power graph rather than trusted.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import (
    BipartiteGraph,
    Side,
    VertexId,
    bfs_distance,
    bipartite_power,
    build_graph,
    graph_to_json,
    is_connected,
)
from .errors import InputError, TheoremCounterexample


@dataclass(frozen=True)
class Interval:
    """Closed interval with integer endpoints, left <= right."""

    left: int
    right: int

    def __post_init__(self) -> None:
        if self.left > self.right:
            raise InputError(f"interval [{self.left}, {self.right}] has left > right")

    def intersects(self, other: Interval) -> bool:
        return self.left <= other.right and other.left <= self.right


@dataclass(frozen=True)
class IntervalRepresentation:
    x_intervals: tuple[Interval, ...]
    y_intervals: tuple[Interval, ...]

    def of(self, v: VertexId) -> Interval:
        return (self.x_intervals if v.side is Side.X else self.y_intervals)[v.index]


@dataclass(frozen=True)
class RawEndpoint:
    """Unclamped right endpoint; ``valid`` is False when it falls left of the
    owning vertex's left endpoint (the interval it would define is empty)."""

    value: int
    valid: bool


def _check_sizes(g: BipartiteGraph, rep: IntervalRepresentation) -> None:
    if len(rep.x_intervals) != g.x_count or len(rep.y_intervals) != g.y_count:
        raise InputError(
            f"representation sizes {len(rep.x_intervals)}+{len(rep.y_intervals)} "
            f"do not match graph sides {g.x_count}+{g.y_count}"
        )


def verify_representation(g: BipartiteGraph, rep: IntervalRepresentation) -> bool:
    """True iff for every cross pair, edge presence equals interval intersection."""
    _check_sizes(g, rep)
    for i, ix in enumerate(rep.x_intervals):
        for j, iy in enumerate(rep.y_intervals):
            if ix.intersects(iy) != g.has_edge(i, j):
                return False
    return True


def canonicalize(
    g: BipartiteGraph, rep: IntervalRepresentation
) -> tuple[BipartiteGraph, IntervalRepresentation, tuple[tuple[int, ...], tuple[int, ...]]]:
    """Reindex each side so left endpoints are non-decreasing.

    Ties break by right endpoint, then by original index (stable).  Returns
    the relabelled graph, the reordered representation, and the two
    permutations mapping new index -> original index.
    """
    if not verify_representation(g, rep):
        raise InputError("canonicalize requires a valid representation")

    def order(intervals: tuple[Interval, ...]) -> tuple[int, ...]:
        return tuple(sorted(range(len(intervals)), key=lambda i: (intervals[i].left, intervals[i].right, i)))

    x_perm = order(rep.x_intervals)
    y_perm = order(rep.y_intervals)
    y_pos = {old: new for new, old in enumerate(y_perm)}
    edges = [(new_i, y_pos[j]) for new_i, old_i in enumerate(x_perm) for j in _neighbor_indices(g, old_i)]
    g2 = build_graph(
        g.x_count,
        g.y_count,
        edges,
        tuple(g.x_labels[i] for i in x_perm),
        tuple(g.y_labels[j] for j in y_perm),
    )
    rep2 = IntervalRepresentation(
        tuple(rep.x_intervals[i] for i in x_perm),
        tuple(rep.y_intervals[j] for j in y_perm),
    )
    return g2, rep2, (x_perm, y_perm)


def _neighbor_indices(g: BipartiteGraph, x_index: int) -> list[int]:
    return [j for j in range(g.y_count) if g.has_edge(x_index, j)]


def raw_right_endpoint(g: BipartiteGraph, rep: IntervalRepresentation, v: VertexId, k: int) -> RawEndpoint:
    """Largest left endpoint among opposite-side vertices within distance k of v.

    This is the unmodified right endpoint of the power construction; it is
    not always a usable endpoint, hence the validity flag.
    """
    _check_sizes(g, rep)
    if k < 1 or k % 2 == 0:
        raise InputError(f"k must be odd and >= 1, got {k}")
    table = bfs_distance(g, v)
    opposite = rep.y_intervals if v.side is Side.X else rep.x_intervals
    dists = table.y_dist if v.side is Side.X else table.x_dist
    lefts = [opposite[w].left for w, d in enumerate(dists) if d is not None and d <= k]
    if not lefts:
        raise InputError(f"no opposite-side vertex within distance {k} of {v.side.value}{v.index}")
    value = max(lefts)
    return RawEndpoint(value, value >= rep.of(v).left)


def power_representation(g: BipartiteGraph, rep: IntervalRepresentation, k: int) -> IntervalRepresentation:
    """Interval representation for the k-th power of a connected graph.

    Every vertex keeps its left endpoint; the new right endpoint is the
    largest opposite-side left endpoint within distance k, clamped so the
    interval never becomes empty.  The output is checked against the actual
    power graph; a mismatch raises TheoremCounterexample carrying the
    offending instance instead of returning silently.
    """
    if not verify_representation(g, rep):
        raise InputError("power_representation requires a valid representation")
    if not is_connected(g):
        raise InputError("power_representation requires a connected graph")
    if k < 1 or k % 2 == 0:
        raise InputError(f"k must be odd and >= 1, got {k}")

    # One BFS per X vertex covers both sides: d(x, y) is symmetric.
    tables = [bfs_distance(g, VertexId(Side.X, i)) for i in range(g.x_count)]

    def reach_x(i: int) -> list[int]:
        yd = tables[i].y_dist
        return [j for j in range(g.y_count) if yd[j] is not None and yd[j] <= k]

    def reach_y(j: int) -> list[int]:
        return [i for i in range(g.x_count) if tables[i].y_dist[j] is not None and tables[i].y_dist[j] <= k]

    new_x = []
    for i, iv in enumerate(rep.x_intervals):
        r = max(rep.y_intervals[j].left for j in reach_x(i))
        new_x.append(Interval(iv.left, max(iv.left, r)))
    new_y = []
    for j, iv in enumerate(rep.y_intervals):
        r = max(rep.x_intervals[i].left for i in reach_y(j))
        new_y.append(Interval(iv.left, max(iv.left, r)))
    result = IntervalRepresentation(tuple(new_x), tuple(new_y))

    power = bipartite_power(g, k)
    for i, ix in enumerate(result.x_intervals):
        for j, iy in enumerate(result.y_intervals):
            if ix.intersects(iy) != power.has_edge(i, j):
                raise TheoremCounterexample(
                    f"power representation fails for pair ({g.x_labels[i]}, {g.y_labels[j]}) at k={k}",
                    {
                        "kind": "power-representation",
                        "k": k,
                        "graph": graph_to_json(g),
                        "intervals": intervals_tsv(rep, g.x_labels, g.y_labels),
                        "offending_pair": [g.x_labels[i], g.y_labels[j]],
                        "edge_in_power": power.has_edge(i, j),
                    },
                )
    return result


def intervals_to_graph(
    rep: IntervalRepresentation,
    x_labels: tuple[str, ...] | None = None,
    y_labels: tuple[str, ...] | None = None,
) -> BipartiteGraph:
    """Graph realized by the representation: edge iff closed intervals intersect."""
    edges = [
        (i, j)
        for i, ix in enumerate(rep.x_intervals)
        for j, iy in enumerate(rep.y_intervals)
        if ix.intersects(iy)
    ]
    return build_graph(len(rep.x_intervals), len(rep.y_intervals), edges, x_labels, y_labels)


def random_interval_representation(seed: int, nx: int, ny: int, span: int) -> IntervalRepresentation:
    """Seed-deterministic representation with endpoints uniform in [0, span]."""
    if span < 1:
        raise InputError(f"span must be >= 1, got {span}")
    rng = random.Random(seed)

    def draw(count: int) -> tuple[Interval, ...]:
        out = []
        for _ in range(count):
            a = rng.randint(0, span)
            b = rng.randint(0, span)
            out.append(Interval(min(a, b), max(a, b)))
        return tuple(out)

    return IntervalRepresentation(draw(nx), draw(ny))


# --- interval TSV format -----------------------------------------------------
#
# One line per vertex: side <TAB> label <TAB> left <TAB> right, side in {X, Y},
# integers in decimal.  Line order defines index order per side.  Lines
# starting with '#' are comments and survive a parse/serialize round trip
# verbatim.


@dataclass(frozen=True)
class IntervalDocument:
    """Parsed interval file: entries in file order plus verbatim comments."""

    lines: tuple[tuple[str, ...], ...]  # ("#", raw) or ("entry", side, label, left, right)

    def representation(self) -> tuple[IntervalRepresentation, tuple[str, ...], tuple[str, ...]]:
        xs: list[Interval] = []
        ys: list[Interval] = []
        x_labels: list[str] = []
        y_labels: list[str] = []
        for line in self.lines:
            if line[0] == "#":
                continue
            _, side, label, left, right = line
            iv = Interval(int(left), int(right))
            if side == "X":
                xs.append(iv)
                x_labels.append(label)
            else:
                ys.append(iv)
                y_labels.append(label)
        return IntervalRepresentation(tuple(xs), tuple(ys)), tuple(x_labels), tuple(y_labels)

    def serialize(self) -> str:
        out = []
        for line in self.lines:
            if line[0] == "#":
                out.append(line[1])
            else:
                _, side, label, left, right = line
                out.append(f"{side}\t{label}\t{left}\t{right}")
        return "\n".join(out) + ("\n" if out else "")


def parse_intervals_tsv(text: str) -> IntervalDocument:
    lines: list[tuple[str, ...]] = []
    seen: dict[str, set[str]] = {"X": set(), "Y": set()}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if raw.startswith("#"):
            lines.append(("#", raw))
            continue
        if not raw.strip():
            continue
        parts = raw.split("\t")
        if len(parts) != 4:
            raise InputError(f"interval TSV line {lineno}: expected 4 tab-separated fields, got {len(parts)}")
        side, label, left, right = parts
        if side not in ("X", "Y"):
            raise InputError(f"interval TSV line {lineno}: side must be X or Y, got {side!r}")
        if label in seen[side]:
            raise InputError(f"interval TSV line {lineno}: duplicate {side} label {label!r}")
        seen[side].add(label)
        try:
            lv, rv = int(left), int(right)
        except ValueError:
            raise InputError(f"interval TSV line {lineno}: endpoints must be integers") from None
        if lv > rv:
            raise InputError(f"interval TSV line {lineno}: left endpoint exceeds right")
        lines.append(("entry", side, label, left, right))
    return IntervalDocument(tuple(lines))


def intervals_tsv(
    rep: IntervalRepresentation, x_labels: tuple[str, ...], y_labels: tuple[str, ...]
) -> str:
    """Canonical serialization: the X block, then the Y block, no comments."""
    out = []
    for label, iv in zip(x_labels, rep.x_intervals):
        out.append(f"X\t{label}\t{iv.left}\t{iv.right}")
    for label, iv in zip(y_labels, rep.y_intervals):
        out.append(f"Y\t{label}\t{iv.left}\t{iv.right}")
    return "\n".join(out) + ("\n" if out else "")
