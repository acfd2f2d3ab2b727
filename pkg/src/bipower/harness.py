"""Deterministic generators, exhaustive small-instance enumeration, and
seeded fuzz campaigns hunting for counterexamples to the closure properties.

Every trial derives its own random stream from (campaign seed, trial index),
so trials are independent and a campaign's report is a pure function of the
campaign, whatever the parallelism.
"""

from __future__ import annotations

import hashlib
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator

from .chordal_power import is_k_chordal, strongly_closed_check
from .core import (
    BipartiteGraph,
    CycleCertificate,
    Side,
    VertexId,
    bipartite_power,
    build_graph,
    diameter,
    graph_to_json,
    is_connected,
)
from .errors import CapacityError, InputError, TheoremCounterexample
from .intervals import intervals_to_graph, power_representation, random_interval_representation
from .mca import ArrangedMatrix, identity_arrangement, matrix_power, matrix_to_graph

ENUMERATION_CAP = 16  # max nx * ny for exhaustive edge-subset streaming


def gen_random_bipartite(seed: int, nx: int, ny: int, edge_probability: float) -> BipartiteGraph:
    """Independent per-pair coin flips, deterministic for a fixed seed."""
    if not 0.0 <= edge_probability <= 1.0:
        raise InputError(f"edge probability must lie in [0, 1], got {edge_probability}")
    rng = random.Random(seed)
    edges = [(i, j) for i in range(nx) for j in range(ny) if rng.random() < edge_probability]
    return build_graph(nx, ny, edges)


def gen_staircase_matrix(seed: int, n: int, m: int) -> ArrangedMatrix:
    """Random matrix that is monotone consecutive by construction.

    Row runs [a_i, b_i] are drawn as a non-decreasing random walk with
    a_1 = 1, a_{i+1} <= b_i + 1 and b_n = m, which leaves no zero column.
    """
    if n < 1 or m < 1:
        raise InputError("staircase matrices need n, m >= 1")
    rng = random.Random(seed)
    a = [1]
    b = [rng.randint(1, m)]
    for _ in range(1, n):
        ai = rng.randint(a[-1], min(b[-1] + 1, m))
        bi = rng.randint(max(ai, b[-1]), m)
        a.append(ai)
        b.append(bi)
    b[-1] = m
    entries = tuple(
        tuple(1 if a[i] <= j + 1 <= b[i] else 0 for j in range(m)) for i in range(n)
    )
    return identity_arrangement(entries)


def gen_subdivided_cycle(segment_lengths: list[int] | tuple[int, ...]) -> tuple[BipartiteGraph, CycleCertificate]:
    """Cycle of total length sum(segment_lengths) with the segment endpoints
    marked as corners.

    An even number of odd segment lengths keeps corner sides alternating; the
    corner certificate claims the corner cycle in the power of the longest
    segment.
    """
    segments = tuple(segment_lengths)
    if len(segments) % 2 or len(segments) < 4:
        raise InputError("need an even number (>= 4) of segments")
    if any(s < 1 or s % 2 == 0 for s in segments):
        raise InputError("every segment length must be odd and >= 1")
    total = sum(segments)
    nx = ny = total // 2
    # Vertex t of the cycle: X index t//2 when t even, Y index t//2 when odd.
    edges = []
    for t in range(total):
        u, v = t, (t + 1) % total
        if u % 2:
            u, v = v, u
        edges.append((u // 2, v // 2))
    g = build_graph(nx, ny, edges)
    corners = []
    pos = 0
    for s in segments:
        side = Side.X if pos % 2 == 0 else Side.Y
        corners.append(VertexId(side, pos // 2))
        pos += s
    return g, CycleCertificate(tuple(corners), max(segments))


def enumerate_bipartite(nx: int, ny: int) -> Iterator[BipartiteGraph]:
    """Stream all 2^(nx*ny) edge subsets in binary-counter order (bit t is the
    pair (t // ny, t % ny)); no isomorphism reduction."""
    if nx * ny > ENUMERATION_CAP:
        raise CapacityError(f"enumeration capped at nx*ny <= {ENUMERATION_CAP}, got {nx * ny}")
    pairs = [(t // ny, t % ny) for t in range(nx * ny)]
    for mask in range(1 << (nx * ny)):
        edges = [pairs[t] for t in range(nx * ny) if mask >> t & 1]
        yield build_graph(nx, ny, edges)


class Theorem(str, Enum):
    """Which closure property a campaign attacks.

    t3: interval representations stay valid under odd powers.
    t4: monotone consecutive arrangements survive odd powers unchanged.
    t5: chordal-bipartite strong closure (power chordal => next power chordal).
    kchordal: the same implication for k-chordality at a configured k.
    """

    T3 = "t3"
    T4 = "t4"
    T5 = "t5"
    KCHORDAL = "kchordal"


_DEFAULT_K_SETS = {
    Theorem.T3: (),  # derived per instance: all odd k up to diameter + 2
    Theorem.T4: (3, 5, 7),
    Theorem.T5: (1, 3, 5),
    Theorem.KCHORDAL: (1, 3, 5),
}


@dataclass(frozen=True)
class Bounds:
    max_x: int = 6
    max_y: int = 6
    span: int = 12
    k_set: tuple[int, ...] = ()
    k_chordal_k: int = 4


@dataclass(frozen=True)
class Campaign:
    theorem: Theorem
    trials: int
    seed: int
    bounds: Bounds = field(default_factory=Bounds)
    parallelism: int = 1

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise InputError("campaigns need trials >= 1")
        if any(k < 1 or k % 2 == 0 for k in self.bounds.k_set):
            raise InputError("k_set may contain only odd naturals")

    def k_set(self) -> tuple[int, ...]:
        return self.bounds.k_set or _DEFAULT_K_SETS[self.theorem]


@dataclass(frozen=True)
class FuzzReport:
    campaign: Campaign
    executed: int
    skipped: int
    counterexamples: tuple[dict, ...]
    wall_time: float


def trial_seed(seed: int, index: int) -> int:
    h = hashlib.blake2b(f"{seed}|{index}".encode(), digest_size=8)
    return int.from_bytes(h.digest(), "big")


@dataclass(frozen=True)
class TrialOutcome:
    skipped: bool
    records: tuple[dict, ...]


def _trial_t3(campaign: Campaign, index: int) -> TrialOutcome:
    rng = random.Random(trial_seed(campaign.seed, index))
    b = campaign.bounds
    nx, ny = rng.randint(1, b.max_x), rng.randint(1, b.max_y)
    span = rng.randint(1, b.span)
    rep = random_interval_representation(rng.getrandbits(63), nx, ny, span)
    g = intervals_to_graph(rep)
    if not is_connected(g):
        return TrialOutcome(True, ())
    records = []
    top = diameter(g) + 2
    ks = campaign.k_set() or tuple(range(1, top + 1, 2))
    for k in ks:
        if k > top:
            continue
        try:
            power_representation(g, rep, k)
        except TheoremCounterexample as exc:
            records.append({"trial": index, **exc.report})
    return TrialOutcome(False, tuple(records))


def _trial_t4(campaign: Campaign, index: int) -> TrialOutcome:
    rng = random.Random(trial_seed(campaign.seed, index))
    b = campaign.bounds
    n, m = rng.randint(1, b.max_x), rng.randint(1, b.max_y)
    mat = gen_staircase_matrix(rng.getrandbits(63), n, m)
    g = matrix_to_graph(mat)
    records = []
    for k in campaign.k_set():
        try:
            matrix_power(g, (mat.row_perm, mat.col_perm), k)
        except TheoremCounterexample as exc:
            records.append({"trial": index, **exc.report})
    return TrialOutcome(False, tuple(records))


def _random_graph_for_trial(campaign: Campaign, rng: random.Random) -> BipartiteGraph:
    b = campaign.bounds
    nx, ny = rng.randint(1, b.max_x), rng.randint(1, b.max_y)
    return gen_random_bipartite(rng.getrandbits(63), nx, ny, rng.random())


def _trial_t5(campaign: Campaign, index: int) -> TrialOutcome:
    rng = random.Random(trial_seed(campaign.seed, index))
    g = _random_graph_for_trial(campaign, rng)
    records = []
    for k in campaign.k_set():
        report = strongly_closed_check(g, k)
        if report.counterexample:
            records.append(
                {"trial": index, "kind": "strong-closure", "k": k, "graph": graph_to_json(g)}
            )
    return TrialOutcome(False, tuple(records))


def _trial_kchordal(campaign: Campaign, index: int) -> TrialOutcome:
    rng = random.Random(trial_seed(campaign.seed, index))
    g = _random_graph_for_trial(campaign, rng)
    kc = campaign.bounds.k_chordal_k
    records = []
    for k in campaign.k_set():
        if is_k_chordal(bipartite_power(g, k), kc) and not is_k_chordal(bipartite_power(g, k + 2), kc):
            records.append(
                {
                    "trial": index,
                    "kind": "k-chordal-closure",
                    "k": k,
                    "k_chordal_k": kc,
                    "graph": graph_to_json(g),
                }
            )
    return TrialOutcome(False, tuple(records))


_TRIAL_BODIES = {
    Theorem.T3: _trial_t3,
    Theorem.T4: _trial_t4,
    Theorem.T5: _trial_t5,
    Theorem.KCHORDAL: _trial_kchordal,
}


def _run_one(args: tuple[Campaign, int]) -> TrialOutcome:
    campaign, index = args
    return _TRIAL_BODIES[campaign.theorem](campaign, index)


def run_campaign(campaign: Campaign) -> FuzzReport:
    """Execute every trial and merge outcomes by trial index.

    Counterexamples are data, not errors: each record embeds the serialized
    instance so a single CLI invocation can re-check it.
    """
    start = time.perf_counter()
    jobs = [(campaign, i) for i in range(campaign.trials)]
    if campaign.parallelism > 1:
        with ProcessPoolExecutor(max_workers=campaign.parallelism) as pool:
            outcomes = list(pool.map(_run_one, jobs, chunksize=64))
    else:
        outcomes = [_run_one(job) for job in jobs]
    skipped = sum(1 for o in outcomes if o.skipped)
    counterexamples = tuple(rec for o in outcomes for rec in o.records)
    return FuzzReport(
        campaign,
        executed=campaign.trials - skipped,
        skipped=skipped,
        counterexamples=counterexamples,
        wall_time=time.perf_counter() - start,
    )


# --- campaign / report JSON --------------------------------------------------
#
# The campaign echo deliberately leaves parallelism out: it is an execution
# knob, not part of what was tested, and reports from different worker
# counts must stay byte-identical.


def campaign_echo(campaign: Campaign) -> dict:
    return {
        "theorem": campaign.theorem.value,
        "trials": campaign.trials,
        "seed": campaign.seed,
        "bounds": {
            "max_x": campaign.bounds.max_x,
            "max_y": campaign.bounds.max_y,
            "span": campaign.bounds.span,
            "k_set": list(campaign.k_set()),
            "k_chordal_k": campaign.bounds.k_chordal_k,
        },
    }


def report_json(report: FuzzReport, include_wall_time: bool = True) -> str:
    obj = {
        "campaign": campaign_echo(report.campaign),
        "executed": report.executed,
        "skipped": report.skipped,
        "counterexamples": list(report.counterexamples),
    }
    if include_wall_time:
        obj["wall_time"] = report.wall_time
    return json.dumps(obj, indent=2) + "\n"


def campaign_from_json(text: str) -> Campaign:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"campaign JSON parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    try:
        theorem = Theorem(obj["theorem"])
    except (KeyError, ValueError):
        raise InputError("campaign JSON needs a theorem in {t3, t4, t5, kchordal}") from None
    raw_bounds = obj.get("bounds", {})
    bounds = Bounds(
        max_x=raw_bounds.get("max_x", 6),
        max_y=raw_bounds.get("max_y", 6),
        span=raw_bounds.get("span", 12),
        k_set=tuple(raw_bounds.get("k_set", ())),
        k_chordal_k=raw_bounds.get("k_chordal_k", 4),
    )
    return Campaign(
        theorem=theorem,
        trials=int(obj.get("trials", 1)),
        seed=int(obj.get("seed", 0)),
        bounds=bounds,
        parallelism=int(obj.get("parallelism", 1)),
    )
