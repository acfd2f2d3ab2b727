"""Command-line front-end.

Exit codes are stable for scripting:
  0  success / the checked property holds
  1  the property fails (certificate on stdout)
  2  input or usage error
  3  a closure property that should always hold was refuted (report on stdout)
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import chordal_power, core, harness, intervals, mca
from .errors import BipowerError, InputError, TheoremCounterexample

EXIT_OK = 0
EXIT_PROPERTY_FAILS = 1
EXIT_INPUT = 2
EXIT_COUNTEREXAMPLE = 3


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


class _Out:
    """Payload sink: stdout unless --output names a path."""

    def __init__(self, output: str | None):
        self.output = output

    def emit(self, payload: str) -> None:
        if self.output is None:
            sys.stdout.write(payload)
        else:
            Path(self.output).write_text(payload, encoding="utf-8")


def _load_graph(path: str) -> core.BipartiteGraph:
    return core.graph_from_json(_read(path))


def _load_intervals(path: str):
    doc = intervals.parse_intervals_tsv(_read(path))
    return doc.representation()


def _intervals_payload(rep, x_labels, y_labels, fmt: str) -> str:
    if fmt == "json":
        obj = {
            "x": [{"label": lab, "left": iv.left, "right": iv.right} for lab, iv in zip(x_labels, rep.x_intervals)],
            "y": [{"label": lab, "left": iv.left, "right": iv.right} for lab, iv in zip(y_labels, rep.y_intervals)],
        }
        return json.dumps(obj, indent=2) + "\n"
    return intervals.intervals_tsv(rep, x_labels, y_labels)


def _matrix_payload(mat: mca.ArrangedMatrix, fmt: str) -> str:
    if fmt == "json":
        obj = {
            "n": mat.n,
            "m": mat.m,
            "entries": ["".join(str(v) for v in row) for row in mat.entries],
            "rows": list(mat.row_perm),
            "cols": list(mat.col_perm),
        }
        return json.dumps(obj, indent=2) + "\n"
    return mca.matrix_text(mat)


def _verdict_payload(obj: dict, fmt: str) -> str:
    if fmt == "text":
        return "".join(f"{key}: {value}\n" for key, value in obj.items())
    return json.dumps(obj, indent=2) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bipower", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(verb: str, help_text: str, **kwargs) -> argparse.ArgumentParser:
        p = sub.add_parser(verb, help=help_text, **kwargs)
        p.add_argument("--output", help="write the payload here instead of stdout")
        p.add_argument("--format", choices=["json", "text"], default=None,
                       help="force JSON everywhere, or plain text where supported")
        return p

    p = add("power", "odd bipartite power of a graph")
    p.add_argument("-k", type=int, required=True, help="odd power")
    p.add_argument("graph", help="graph JSON file")

    p = add("check-chordal", "is the graph chordal bipartite?")
    p.add_argument("--min-length", type=int, default=6,
                   help="report a chordless cycle of at least this even length (default 6)")
    p.add_argument("graph")

    p = add("check-kchordal", "has the graph no chordless cycle with more than K vertices?")
    p.add_argument("--kchordal-k", type=int, required=True, help="cycle-length threshold K >= 4")
    p.add_argument("graph")

    p = add("verify-intervals", "does the interval file represent the graph?")
    p.add_argument("graph")
    p.add_argument("intervals_file", metavar="intervals", help="interval TSV file")

    p = add("power-intervals", "interval representation of the k-th power")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("graph")
    p.add_argument("intervals_file", metavar="intervals")

    p = add("mca-verify", "is the displayed arrangement monotone consecutive?")
    p.add_argument("matrix", help="matrix text file")

    p = add("mca-find", "search row/column permutations for a monotone consecutive arrangement")
    p.add_argument("matrix")

    p = add("mca-power", "power the matrix's graph and re-verify the unchanged arrangement")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("matrix")

    p = add("classify-cycle", "distance-classify the edges of a cycle claimed in the (k+2) power")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("graph")
    p.add_argument("cycle", help="cycle JSON file")

    p = add("lift-cycle", "lift a (k+2)-power chordless cycle down to the k-power")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("graph")
    p.add_argument("cycle")

    p = add("fuzz", "run a counterexample-hunting campaign")
    p.add_argument("campaign", nargs="?", help="campaign JSON file (flags override nothing when given)")
    p.add_argument("--theorem", choices=[t.value for t in harness.Theorem])
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-x", type=int, default=6)
    p.add_argument("--max-y", type=int, default=6)
    p.add_argument("--span", type=int, default=12)
    p.add_argument("-k", type=int, action="append", default=None,
                   help="odd power to test; repeat to build a set (default per campaign)")
    p.add_argument("--kchordal-k", type=int, default=4)

    p = add("gen", "emit one deterministic instance of a campaign's input kind")
    p.add_argument("--theorem", choices=[t.value for t in harness.Theorem], required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-x", type=int, default=6, help="x side / row count")
    p.add_argument("--max-y", type=int, default=6, help="y side / column count")
    p.add_argument("--span", type=int, default=12, help="endpoint range for interval instances")

    return parser


def _cmd_power(args, out: _Out) -> int:
    g = _load_graph(args.graph)
    out.emit(core.graph_to_json(core.bipartite_power(g, args.k)))
    return EXIT_OK


def _cmd_check_chordal(args, out: _Out) -> int:
    fmt = args.format or "json"
    g = _load_graph(args.graph)
    cert = core.find_chordless_cycle(g, args.min_length)
    if cert is None:
        out.emit(_verdict_payload({"chordal_bipartite": True}, fmt))
        return EXIT_OK
    out.emit(chordal_power.cycle_json(g, cert))
    return EXIT_PROPERTY_FAILS


def _cmd_check_kchordal(args, out: _Out) -> int:
    fmt = args.format or "json"
    g = _load_graph(args.graph)
    k = args.kchordal_k
    if chordal_power.is_k_chordal(g, k):
        out.emit(_verdict_payload({"k_chordal": True, "k": k}, fmt))
        return EXIT_OK
    cert = core.find_chordless_cycle(g, (k - k % 2) + 2)
    out.emit(chordal_power.cycle_json(g, cert))
    return EXIT_PROPERTY_FAILS


def _cmd_verify_intervals(args, out: _Out) -> int:
    fmt = args.format or "json"
    g = _load_graph(args.graph)
    rep, _, _ = _load_intervals(args.intervals_file)
    ok = intervals.verify_representation(g, rep)
    out.emit(_verdict_payload({"valid": ok}, fmt))
    return EXIT_OK if ok else EXIT_PROPERTY_FAILS


def _cmd_power_intervals(args, out: _Out) -> int:
    fmt = args.format or "tsv"
    g = _load_graph(args.graph)
    rep, _, _ = _load_intervals(args.intervals_file)
    result = intervals.power_representation(g, rep, args.k)
    out.emit(_intervals_payload(result, g.x_labels, g.y_labels, fmt))
    return EXIT_OK


def _cmd_mca_verify(args, out: _Out) -> int:
    fmt = args.format or "json"
    mat = mca.parse_matrix(_read(args.matrix))
    cert = mca.verify_mca(mat)
    if cert is None:
        out.emit(_verdict_payload({"mca": False}, fmt))
        return EXIT_PROPERTY_FAILS
    out.emit(mca.certificate_json(cert))
    return EXIT_OK


def _cmd_mca_find(args, out: _Out) -> int:
    fmt = args.format or "json"
    mat = mca.parse_matrix(_read(args.matrix))
    found = mca.find_mca(mat)
    if found is None:
        out.emit(_verdict_payload({"mca": False}, fmt))
        return EXIT_PROPERTY_FAILS
    arranged, cert = found
    obj = {
        "rows": list(arranged.row_perm),
        "cols": list(arranged.col_perm),
        "certificate": json.loads(mca.certificate_json(cert)),
    }
    out.emit(json.dumps(obj, indent=2) + "\n")
    return EXIT_OK


def _cmd_mca_power(args, out: _Out) -> int:
    fmt = args.format or "text"
    mat = mca.parse_matrix(_read(args.matrix))
    g = mca.matrix_to_graph(mat)
    powered = mca.matrix_power(g, (mat.row_perm, mat.col_perm), args.k)
    out.emit(_matrix_payload(powered, "json" if fmt == "json" else "text"))
    return EXIT_OK


def _cmd_classify_cycle(args, out: _Out) -> int:
    g = _load_graph(args.graph)
    cert = chordal_power.cycle_from_json(g, _read(args.cycle))
    cls = chordal_power.classify_cycle_edges(g, args.k, cert)
    verts = cert.vertices
    obj = {
        "k": args.k,
        "k1": cls.k1,
        "k2": cls.k2,
        "k3": cls.k3,
        "edges": [
            {
                "u": g.label(verts[p]),
                "v": g.label(verts[(p + 1) % len(verts)]),
                "distance": edge.distance,
                "class": edge.cls.value,
            }
            for p, edge in enumerate(cls.edges)
        ],
    }
    out.emit(json.dumps(obj, indent=2) + "\n")
    return EXIT_OK


def _cmd_lift_cycle(args, out: _Out) -> int:
    g = _load_graph(args.graph)
    cert = chordal_power.cycle_from_json(g, _read(args.cycle))
    result = chordal_power.lift_chordless_cycle(g, args.k, cert)
    out.emit(chordal_power.lift_json(g, result))
    return EXIT_OK


def _cmd_fuzz(args, out: _Out) -> int:
    if args.campaign is not None:
        campaign = harness.campaign_from_json(_read(args.campaign))
    else:
        if args.theorem is None:
            raise InputError("fuzz needs either a campaign JSON file or --theorem")
        campaign = harness.Campaign(
            theorem=harness.Theorem(args.theorem),
            trials=args.trials,
            seed=args.seed,
            bounds=harness.Bounds(
                max_x=args.max_x,
                max_y=args.max_y,
                span=args.span,
                k_set=tuple(args.k) if args.k else (),
                k_chordal_k=args.kchordal_k,
            ),
        )
    report = harness.run_campaign(campaign)
    out.emit(harness.report_json(report))
    return EXIT_COUNTEREXAMPLE if report.counterexamples else EXIT_OK


def _cmd_gen(args, out: _Out) -> int:
    theorem = harness.Theorem(args.theorem)
    if theorem is harness.Theorem.T3:
        rep = intervals.random_interval_representation(args.seed, args.max_x, args.max_y, args.span)
        g = intervals.intervals_to_graph(rep)
        out.emit(intervals.intervals_tsv(rep, g.x_labels, g.y_labels))
    elif theorem is harness.Theorem.T4:
        mat = harness.gen_staircase_matrix(args.seed, args.max_x, args.max_y)
        out.emit(mca.matrix_text(mat))
    else:
        g = harness.gen_random_bipartite(args.seed, args.max_x, args.max_y, 0.5)
        out.emit(core.graph_to_json(g))
    return EXIT_OK


_COMMANDS = {
    "power": _cmd_power,
    "check-chordal": _cmd_check_chordal,
    "check-kchordal": _cmd_check_kchordal,
    "verify-intervals": _cmd_verify_intervals,
    "power-intervals": _cmd_power_intervals,
    "mca-verify": _cmd_mca_verify,
    "mca-find": _cmd_mca_find,
    "mca-power": _cmd_mca_power,
    "classify-cycle": _cmd_classify_cycle,
    "lift-cycle": _cmd_lift_cycle,
    "fuzz": _cmd_fuzz,
    "gen": _cmd_gen,
}


def dispatch(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    out = _Out(args.output)
    try:
        return _COMMANDS[args.verb](args, out)
    except TheoremCounterexample as exc:
        out.emit(json.dumps(exc.report, indent=2) + "\n")
        print(f"counterexample: {exc}", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    except BipowerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
