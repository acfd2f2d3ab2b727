"""Acceptance gate: the nine properties that decide whether the build stands.

Each test prints one PASS/FAIL line (run with ``pytest tests/test_acceptance.py -s``
to watch them).  Fixture criteria are exact, campaign criteria demand a 100%
pass rate over their full seeded volume, and the runtime budgets are asserted,
not aspirational.
"""

from __future__ import annotations

import json
import random
import time
from contextlib import contextmanager

import pytest

import bipower as bp
from bipower.cli import dispatch
from bipower.harness import Bounds, Campaign, Theorem, report_json
from bipower.mca import identity_arrangement
from conftest import random_nonzero_matrix
from oracles import has_induced_cycle, mca_exists
from test_mca import STAIRCASE_LABELS

ACCEPTANCE_SEED = 20260809


@contextmanager
def criterion(number: int, description: str):
    try:
        yield
    except BaseException:
        print(f"FAIL criterion {number}: {description}")
        raise
    print(f"PASS criterion {number}: {description}")


def test_c1_raw_right_endpoint_reproduces_invalid_interval(sample_graph, sample_rep):
    with criterion(1, "raw right endpoint of y3 at k=3 is 7 against left endpoint 8 (the empty [8,7])"):
        out = bp.raw_right_endpoint(sample_graph, sample_rep, bp.y_vertex(2), 3)
        assert out.value == 7
        assert out.valid is False
        assert sample_rep.y_intervals[2].left == 8


def test_c2_sample_cube_is_complete_and_representable(sample_graph, sample_rep):
    with criterion(2, "fixture cube is complete (30 edges) and its interval representation validates exactly"):
        power = bp.bipartite_power(sample_graph, 3)
        assert power.edge_count() == 30
        assert all(power.has_edge(i, j) for i in range(6) for j in range(5))
        rep = bp.power_representation(sample_graph, sample_rep, 3)
        assert [(iv.left, iv.right) for iv in rep.x_intervals] == [
            (4, 9), (2, 9), (5, 9), (3, 9), (6, 9), (7, 9)]
        assert [(iv.left, iv.right) for iv in rep.y_intervals] == [
            (2, 7), (5, 7), (8, 8), (0, 7), (9, 9)]
        assert bp.verify_representation(power, rep)


def test_c3_staircase_certificate_and_labels_are_exact(staircase_matrix):
    with criterion(3, "staircase fixture certificate (a, b, c, d) and R/C labels match cell for cell"):
        cert = bp.verify_mca(staircase_matrix)
        assert cert is not None
        assert cert.a == (1, 1, 2, 3, 4, 5)
        assert cert.b == (2, 3, 5, 5, 6, 7)
        assert cert.c == (1, 1, 2, 3, 3, 5, 6)
        assert cert.d == (2, 3, 4, 5, 6, 6, 6)
        assert cert.zero_labels == STAIRCASE_LABELS
        assert bp.label_zeros(staircase_matrix, cert.a, cert.b) == STAIRCASE_LABELS


def test_c4_arrangement_power_campaign():
    with criterion(4, "10,000 staircases up to 8x8 keep their arrangement at k in {3,5,7} in under 60 s"):
        start = time.perf_counter()
        report = bp.run_campaign(
            Campaign(Theorem.T4, trials=10_000, seed=ACCEPTANCE_SEED, bounds=Bounds(max_x=8, max_y=8))
        )
        elapsed = time.perf_counter() - start
        assert report.executed == 10_000
        assert report.counterexamples == ()
        assert elapsed < 60, f"took {elapsed:.1f}s"


def test_c5_interval_power_campaign():
    with criterion(5, "10,000 interval instances (sides <= 7, span <= 12) validate at every odd k <= diameter+2 in under 120 s"):
        start = time.perf_counter()
        report = bp.run_campaign(
            Campaign(Theorem.T3, trials=10_000, seed=ACCEPTANCE_SEED, bounds=Bounds(max_x=7, max_y=7, span=12))
        )
        elapsed = time.perf_counter() - start
        assert report.executed + report.skipped == 10_000
        assert report.executed > 0
        assert report.counterexamples == ()
        assert elapsed < 120, f"took {elapsed:.1f}s"


def test_c6_strong_closure_sweep_and_campaign(tmp_path, capsys):
    with criterion(6, "strong closure: exhaustive connected 3+3 sweep (k in {1,3}) plus 10,000 random trials, exit 3 never emitted, under 180 s"):
        start = time.perf_counter()
        swept = 0
        for g in bp.enumerate_bipartite(3, 3):
            if not bp.is_connected(g):
                continue
            swept += 1
            for k in (1, 3):
                assert not bp.strongly_closed_check(g, k).counterexample
        assert swept > 0

        campaign_file = tmp_path / "t5.json"
        campaign_file.write_text(
            json.dumps(
                {
                    "theorem": "t5",
                    "trials": 10_000,
                    "seed": ACCEPTANCE_SEED,
                    "bounds": {"max_x": 7, "max_y": 7, "k_set": [1, 3, 5]},
                }
            )
        )
        code = dispatch(["fuzz", str(campaign_file), "--output", str(tmp_path / "report.json")])
        capsys.readouterr()
        assert code == 0, "fuzz exit code must be 0, never 3"
        report = json.loads((tmp_path / "report.json").read_text())
        assert report["executed"] == 10_000
        assert report["counterexamples"] == []
        elapsed = time.perf_counter() - start
        assert elapsed < 180, f"took {elapsed:.1f}s"


def test_c7_lift_constructions_hit_exact_lengths():
    with criterion(7, "lifts: 18-cycle at k=1 unrolls to length 18, alternating 24-cycle at k=3 lifts to length 12, both chordless"):
        g18, corners = bp.gen_subdivided_cycle([3] * 6)
        lift = bp.lift_chordless_cycle(g18, 1, corners)
        assert lift.method.value == "Case1Construction"
        assert len(lift.lifted) == 18 == lift.predicted_length
        assert bp.verify_chordless(bp.bipartite_power(g18, 1), lift.lifted)

        g24, c24 = bp.gen_subdivided_cycle([5, 3, 5, 3, 5, 3])
        lift = bp.lift_chordless_cycle(g24, 3, c24)
        assert lift.method.value == "Case2Construction"
        assert len(lift.lifted) == 12 == lift.predicted_length
        assert bp.verify_chordless(bp.bipartite_power(g24, 3), lift.lifted)


def test_c8_oracle_equivalences():
    with criterion(8, "oracles: arrangement search vs permutations (100,000 matrices), cycle search vs subsets (1,000 graphs), greedy vs BFS (1,000 instances)"):
        rng = random.Random(ACCEPTANCE_SEED)
        for _ in range(100_000):
            entries = random_nonzero_matrix(rng, 5, 5)
            assert (bp.find_mca(identity_arrangement(entries)) is not None) == mca_exists(entries)

        rng = random.Random(ACCEPTANCE_SEED + 1)
        for _ in range(1_000):
            nx = rng.randint(1, 6)
            ny = rng.randint(1, min(6, 12 - nx))
            g = bp.gen_random_bipartite(rng.getrandbits(63), nx, ny, rng.random())
            found = bp.find_chordless_cycle(g, 6)
            assert (found is not None) == has_induced_cycle(g, 6)
            if found is not None:
                assert bp.verify_chordless(g, found)

        rng = random.Random(ACCEPTANCE_SEED + 2)
        for _ in range(1_000):
            mat = bp.gen_staircase_matrix(rng.getrandbits(63), rng.randint(1, 8), rng.randint(1, 8))
            cert = bp.verify_mca(mat)
            g = bp.matrix_to_graph(mat)
            for i in range(mat.n):
                table = bp.bfs_distance(g, bp.x_vertex(i))
                for j in range(mat.m):
                    want = table.y_dist[j]
                    if want is None:
                        with pytest.raises(bp.InputError):
                            bp.greedy_distance(mat, cert, i + 1, j + 1)
                    else:
                        assert bp.greedy_distance(mat, cert, i + 1, j + 1) == want


def test_c9_reports_identical_across_parallelism():
    with criterion(9, "identical seeds give byte-identical reports at parallelism 1 and 4 (wall time aside)"):
        for theorem, bounds in [
            (Theorem.T3, Bounds(max_x=6, max_y=6, span=10)),
            (Theorem.T4, Bounds(max_x=7, max_y=7)),
            (Theorem.T5, Bounds(max_x=6, max_y=6)),
            (Theorem.KCHORDAL, Bounds(max_x=6, max_y=6, k_chordal_k=6)),
        ]:
            serial = bp.run_campaign(Campaign(theorem, trials=200, seed=ACCEPTANCE_SEED, bounds=bounds))
            parallel = bp.run_campaign(
                Campaign(theorem, trials=200, seed=ACCEPTANCE_SEED, bounds=bounds, parallelism=4)
            )
            assert report_json(serial, include_wall_time=False) == report_json(parallel, include_wall_time=False)
