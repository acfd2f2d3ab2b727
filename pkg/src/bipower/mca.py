"""Biadjacency matrices and monotone consecutive arrangements.

A 0/1 matrix with no zero row or column has a monotone consecutive
arrangement (MCA) when independent row and column permutations make the
ones of each row consecutive, with both the initial columns a_i and the
final columns b_i non-decreasing down the rows.  Three equivalent
formulations exist for one fixed display: the row condition above, the
transposed column condition on c_j / d_j, and an R/C labelling of zeros in
which everything above-and-right of an R is an R and everything
below-and-left of a C is a C.  ``verify_mca`` computes all three and treats
disagreement as an internal defect.

Display coordinates in certificates are 1-based; storage is 0-based.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .core import BipartiteGraph, bipartite_power, build_graph
from .errors import CapacityError, InputError, TheoremCounterexample

DEFAULT_MCA_SIZE_CAP = 12


@dataclass(frozen=True)
class ArrangedMatrix:
    """0/1 grid plus row/column permutations (display position -> original index)."""

    entries: tuple[tuple[int, ...], ...]
    row_perm: tuple[int, ...]
    col_perm: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        m = len(self.entries[0]) if n else 0
        if any(len(row) != m for row in self.entries):
            raise InputError("matrix rows have unequal lengths")
        if any(v not in (0, 1) for row in self.entries for v in row):
            raise InputError("matrix entries must be 0 or 1")
        if sorted(self.row_perm) != list(range(n)) or sorted(self.col_perm) != list(range(m)):
            raise InputError("permutations must be bijections of matching size")

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def m(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @cached_property
    def displayed(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(self.entries[oi][oj] for oj in self.col_perm) for oi in self.row_perm
        )

    def rearranged(self, row_perm: tuple[int, ...], col_perm: tuple[int, ...]) -> ArrangedMatrix:
        return ArrangedMatrix(self.entries, row_perm, col_perm)


def identity_arrangement(entries: tuple[tuple[int, ...], ...]) -> ArrangedMatrix:
    n = len(entries)
    m = len(entries[0]) if n else 0
    return ArrangedMatrix(entries, tuple(range(n)), tuple(range(m)))


def graph_to_matrix(g: BipartiteGraph) -> ArrangedMatrix:
    """Biadjacency matrix: rows are X in index order, columns Y, identity perms."""
    entries = tuple(
        tuple(1 if g.has_edge(i, j) else 0 for j in range(g.y_count)) for i in range(g.x_count)
    )
    return identity_arrangement(entries)


def matrix_to_graph(
    mat: ArrangedMatrix,
    x_labels: tuple[str, ...] | None = None,
    y_labels: tuple[str, ...] | None = None,
) -> BipartiteGraph:
    """Graph whose biadjacency matrix (in original orientation) is ``mat``."""
    edges = [(i, j) for i, row in enumerate(mat.entries) for j, v in enumerate(row) if v]
    return build_graph(mat.n, mat.m, edges, x_labels, y_labels)


def _check_nonzero(grid: tuple[tuple[int, ...], ...]) -> None:
    n = len(grid)
    m = len(grid[0]) if n else 0
    if n == 0 or m == 0:
        raise InputError("matrix must have at least one row and one column")
    for i, row in enumerate(grid):
        if not any(row):
            raise InputError(f"row {i + 1} is all zeros; arrangements require non-zero rows")
    for j in range(m):
        if not any(grid[i][j] for i in range(n)):
            raise InputError(f"column {j + 1} is all zeros; arrangements require non-zero columns")


def _runs(grid: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """First/last one positions (1-based) per row, or None if any row has a gap."""
    first, last = [], []
    for row in grid:
        ones = [j for j, v in enumerate(row) if v]
        if ones[-1] - ones[0] + 1 != len(ones):
            return None
        first.append(ones[0] + 1)
        last.append(ones[-1] + 1)
    return tuple(first), tuple(last)


def _transpose(grid: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    return tuple(zip(*grid))


def _monotone(values: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(values, values[1:]))


def row_intervals(mat: ArrangedMatrix) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Per-row first/last one columns of the displayed matrix, if every row's
    ones are consecutive; None otherwise.  A zero row is an input error, not
    a "not consecutive" verdict (zero columns are policed by verify_mca,
    where the column condition enters)."""
    grid = mat.displayed
    if not grid or not grid[0]:
        raise InputError("matrix must have at least one row and one column")
    for i, row in enumerate(grid):
        if not any(row):
            raise InputError(f"row {i + 1} is all zeros; arrangements require non-zero rows")
    return _runs(grid)


def label_zeros(
    mat: ArrangedMatrix, a: tuple[int, ...], b: tuple[int, ...]
) -> tuple[tuple[int, int, str], ...]:
    """Label each displayed zero R (right of its row's ones) or C (left of them).

    Asserts the closure conditions on the result: everything above-and-right
    of an R is an R, everything below-and-left of a C is a C.
    """
    grid = mat.displayed
    labels = []
    label_at = {}
    for i, row in enumerate(grid):
        for j, v in enumerate(row):
            if v:
                continue
            mark = "R" if j + 1 > b[i] else "C"
            labels.append((i + 1, j + 1, mark))
            label_at[(i, j)] = mark
    for i, row in enumerate(grid):
        for j, v in enumerate(row):
            if label_at.get((i, j)) == "R":
                assert all(
                    label_at.get((i2, j2)) == "R"
                    for i2 in range(i + 1)
                    for j2 in range(j, len(row))
                    if not grid[i2][j2]
                ), "R region is not closed up-and-right"
                assert not any(grid[i2][j2] for i2 in range(i + 1) for j2 in range(j, len(row))), \
                    "one inside the R region"
            elif label_at.get((i, j)) == "C":
                assert not any(grid[i2][j2] for i2 in range(i, len(grid)) for j2 in range(j + 1)), \
                    "one inside the C region"
    return tuple(labels)


@dataclass(frozen=True)
class McaCertificate:
    """Witness that a displayed arrangement is monotone consecutive."""

    a: tuple[int, ...]
    b: tuple[int, ...]
    c: tuple[int, ...]
    d: tuple[int, ...]
    zero_labels: tuple[tuple[int, int, str], ...]


def _labeling_exists(grid: tuple[tuple[int, ...], ...]) -> bool:
    """Third formulation, computed independently of row/column runs: every zero
    must see no one up-and-right (R-eligible) or no one down-and-left."""
    n = len(grid)
    m = len(grid[0])
    # ones_ur[i][j]: any one in rows <= i, cols >= j
    ones_ur = [[False] * (m + 1) for _ in range(n)]
    for i in range(n):
        for j in range(m - 1, -1, -1):
            above = ones_ur[i - 1][j] if i else False
            ones_ur[i][j] = bool(grid[i][j]) or above or ones_ur[i][j + 1]
    ones_dl = [[False] * (m + 1) for _ in range(n)]
    for i in range(n - 1, -1, -1):
        for j in range(m):
            below = ones_dl[i + 1][j] if i + 1 < n else False
            ones_dl[i][j] = bool(grid[i][j]) or below or (ones_dl[i][j - 1] if j else False)
    for i in range(n):
        for j in range(m):
            if grid[i][j]:
                continue
            r_ok = not (ones_ur[i][j + 1] or (ones_ur[i - 1][j] if i else False))
            c_ok = not ((ones_dl[i][j - 1] if j else False) or (ones_dl[i + 1][j] if i + 1 < n else False))
            if not (r_ok or c_ok):
                return False
    return True


def verify_mca(mat: ArrangedMatrix) -> McaCertificate | None:
    """Certificate if the displayed arrangement is monotone consecutive, else None.

    The row condition, the column condition, and the existence of a closed
    R/C zero labelling are each evaluated; they are equivalent for any one
    display, so a mismatch between them is a defect in this module, raised
    as AssertionError rather than reported to the caller.
    """
    grid = mat.displayed
    _check_nonzero(grid)

    row_runs = _runs(grid)
    row_ok = row_runs is not None and _monotone(row_runs[0]) and _monotone(row_runs[1])
    col_runs = _runs(_transpose(grid))
    col_ok = col_runs is not None and _monotone(col_runs[0]) and _monotone(col_runs[1])
    label_ok = _labeling_exists(grid)
    assert row_ok == col_ok == label_ok, (
        f"arrangement formulations disagree: rows={row_ok} columns={col_ok} labels={label_ok}"
    )
    if not row_ok:
        return None
    a, b = row_runs
    c, d = col_runs
    return McaCertificate(a, b, c, d, label_zeros(mat, a, b))


@dataclass(frozen=True)
class BoundaryMaps:
    """The four staircase boundary maps of an arrangement: row -> first/last
    one column (alpha/beta) and column -> first/last one row (gamma/delta)."""

    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    gamma: tuple[int, ...]
    delta: tuple[int, ...]


def boundary_maps(cert: McaCertificate) -> BoundaryMaps:
    maps = BoundaryMaps(cert.a, cert.b, cert.c, cert.d)
    n, m = len(cert.a), len(cert.c)
    # Totality of the composites: every image must be a valid index on the
    # other side, so alpha(gamma(j)) etc. are defined everywhere.
    assert all(1 <= v <= m for v in maps.alpha + maps.beta)
    assert all(1 <= v <= n for v in maps.gamma + maps.delta)
    return maps


def find_mca(
    mat: ArrangedMatrix, *, size_cap: int = DEFAULT_MCA_SIZE_CAP
) -> tuple[ArrangedMatrix, McaCertificate] | None:
    """Search for row and column permutations exhibiting a monotone
    consecutive arrangement of ``mat.entries``; None if there is none.

    Backtracking over row display orders, trying candidate rows in ascending
    original index.  A partial order dies as soon as some column's placed
    ones have a gap, or its run has closed while ones remain unplaced.  For
    each complete row order the column order is forced: each column's ones
    must already be consecutive, and sorting columns by (first row, last
    row, original index) is the only candidate display up to identical
    columns.  The first arrangement that verifies is returned, so the result
    is the lexicographically least acceptable one under this candidate order.
    """
    entries = mat.entries
    n = len(entries)
    m = len(entries[0]) if n else 0
    if max(n, m) > size_cap:
        raise CapacityError(f"matrix is {n}x{m}, above the arrangement-search cap {size_cap}")
    _check_nonzero(entries)

    col_rows = [[i for i in range(n) if entries[i][j]] for j in range(m)]
    total = [len(rows) for rows in col_rows]
    count = [0] * m
    last = [-1] * m
    placed: list[int] = []
    used = [False] * n

    def place(orig_row: int) -> bool:
        pos = len(placed)
        touched = []
        for j in range(m):
            if entries[orig_row][j]:
                if count[j] and last[j] != pos - 1:
                    for jj in touched:  # undo before rejecting
                        count[jj] -= 1
                        last[jj] = pos - 1 if count[jj] else -1
                    return False
                count[j] += 1
                last[j] = pos
                touched.append(j)
        placed.append(orig_row)
        used[orig_row] = True
        return True

    def unplace(orig_row: int) -> None:
        pos = len(placed) - 1
        placed.pop()
        used[orig_row] = False
        for j in range(m):
            if entries[orig_row][j]:
                count[j] -= 1
                last[j] = pos - 1 if count[j] else -1

    def stuck() -> bool:
        pos = len(placed)
        return any(0 < count[j] < total[j] and last[j] != pos - 1 for j in range(m))

    def search() -> tuple[ArrangedMatrix, McaCertificate] | None:
        if len(placed) == n:
            # Runs are consecutive by the pruning invariant, so each column's
            # first placed one sits count-1 positions above its last.
            order = sorted(range(m), key=lambda j: (last[j] - count[j] + 1, last[j], j))
            candidate = ArrangedMatrix(entries, tuple(placed), tuple(order))
            cert = verify_mca(candidate)
            if cert is not None:
                return candidate, cert
            return None
        for r in range(n):
            if used[r]:
                continue
            if not place(r):
                continue
            if not stuck():
                found = search()
                if found is not None:
                    return found
            unplace(r)
        return None

    return search()


def greedy_distance(mat: ArrangedMatrix, cert: McaCertificate, row: int, col: int) -> int:
    """Shortest-path length from display row ``row`` to display column ``col``
    (both 1-based) by extreme-neighbour stepping.

    While the target column is right of the current row's ones, hop to the
    row's final one column and from there to that column's final one row;
    symmetrically via initial columns/rows when the target is left.  Each
    hop strictly extends the reach, and the walk stops one step short of the
    target, so the returned length is odd.  Matches breadth-first distance
    on the underlying graph; a stalled walk means the target is unreachable.
    """
    n, m = len(cert.a), len(cert.c)
    if not (1 <= row <= n and 1 <= col <= m):
        raise InputError(f"position ({row}, {col}) outside a {n}x{m} display")
    a, b, c, d = cert.a, cert.b, cert.c, cert.d
    cur = row
    dist = 0
    while True:
        if a[cur - 1] <= col <= b[cur - 1]:
            return dist + 1
        if col > b[cur - 1]:
            via = b[cur - 1]
            nxt = d[via - 1]
            if b[nxt - 1] <= b[cur - 1]:
                raise InputError(f"column {col} unreachable from row {row}")
        else:
            via = a[cur - 1]
            nxt = c[via - 1]
            if a[nxt - 1] >= a[cur - 1]:
                raise InputError(f"column {col} unreachable from row {row}")
        dist += 2
        cur = nxt


def matrix_power(
    g: BipartiteGraph,
    arrangement: tuple[tuple[int, ...], tuple[int, ...]],
    k: int,
) -> ArrangedMatrix:
    """Biadjacency matrix of the k-th power displayed under the same arrangement.

    Requires the arrangement to be monotone consecutive for ``g`` itself.
    The power's matrix must stay monotone consecutive under the unchanged
    permutations; if it does not, the instance is raised as a
    TheoremCounterexample rather than returned.
    """
    row_perm, col_perm = arrangement
    base = ArrangedMatrix(graph_to_matrix(g).entries, tuple(row_perm), tuple(col_perm))
    if verify_mca(base) is None:
        raise InputError("matrix_power requires an arrangement that verifies on the input graph")
    power = bipartite_power(g, k)
    out = ArrangedMatrix(graph_to_matrix(power).entries, tuple(row_perm), tuple(col_perm))
    if verify_mca(out) is None:
        raise TheoremCounterexample(
            f"power at k={k} broke a monotone consecutive arrangement",
            {
                "kind": "matrix-power",
                "k": k,
                "matrix": matrix_text(base),
            },
        )
    return out


# --- matrix text format ------------------------------------------------------
#
# First line "n m"; then n lines of m characters from {0,1}; then optional
# "rows: ..." / "cols: ..." lines giving display -> original permutations,
# 0-based, space-separated.  Identity permutations are omitted when writing.


def matrix_text(mat: ArrangedMatrix) -> str:
    n, m = mat.n, mat.m
    out = [f"{n} {m}"]
    out.extend("".join(str(v) for v in row) for row in mat.entries)
    if mat.row_perm != tuple(range(n)):
        out.append("rows: " + " ".join(str(i) for i in mat.row_perm))
    if mat.col_perm != tuple(range(m)):
        out.append("cols: " + " ".join(str(j) for j in mat.col_perm))
    return "\n".join(out) + "\n"


def parse_matrix(text: str) -> ArrangedMatrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InputError("matrix text is empty")
    head = lines[0].split()
    if len(head) != 2 or not all(p.isdigit() for p in head):
        raise InputError(f"matrix text line 1: expected 'n m', got {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(lines) < 1 + n:
        raise InputError(f"matrix text: expected {n} entry rows, found {len(lines) - 1}")
    entries = []
    for i in range(n):
        row = lines[1 + i]
        if len(row) != m or any(ch not in "01" for ch in row):
            raise InputError(f"matrix text line {i + 2}: expected {m} characters from {{0,1}}")
        entries.append(tuple(int(ch) for ch in row))
    row_perm = tuple(range(n))
    col_perm = tuple(range(m))
    for extra in lines[1 + n :]:
        key, _, rest = extra.partition(":")
        values = tuple(int(p) for p in rest.split())
        if key == "rows":
            row_perm = values
        elif key == "cols":
            col_perm = values
        else:
            raise InputError(f"matrix text: unrecognized trailer {extra!r}")
    return ArrangedMatrix(tuple(entries), row_perm, col_perm)


def certificate_json(cert: McaCertificate) -> str:
    obj = {
        "a": list(cert.a),
        "b": list(cert.b),
        "c": list(cert.c),
        "d": list(cert.d),
        "labels": [[i, j, mark] for i, j, mark in cert.zero_labels],
    }
    return json.dumps(obj, indent=2) + "\n"
