"""Command-line interface.

Exit codes: 0 success, 1 negative answer (not chordal, failed
verification), 2 I/O or parse error, 3 input contract violation,
4 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Optional

from . import oracles
from .chordality import (
    failed_peo_vertex,
    is_chordal,
    maximum_cardinality_search,
    random_connected_chordal_graph,
)
from .dot import graph_to_dot, trace_to_dot
from .erasure import (
    ErasureTrace,
    erase_to_tree,
    erasure_sequence_from_complete,
    verify_trace,
)
from .errors import ErasureError, MetricViolation, NotChordal, NotConnected, SizeLimitExceeded
from .exposure import EdgeClass, classify_edges, exposed_cycle, exposed_edges
from .graph import complete_graph, is_tree
from .io import (
    DocumentError,
    GraphDocument,
    MetricDocument,
    TraceDocument,
    dumps,
    format_weight,
    read_document,
    write_text,
)
from .weighted import d_erasure_mst, random_metric, reverse_delete_mst

EXIT_OK, EXIT_NEGATIVE, EXIT_IO, EXIT_CONTRACT, EXIT_ORACLE = range(5)


class CommandError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _emit(report: dict, as_json: bool, text: Callable[[dict], str]) -> None:
    if as_json:
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    else:
        sys.stdout.write(text(report))


def _load(path: str, *kinds):
    doc = read_document(path)
    if kinds and not isinstance(doc, kinds):
        names = ", ".join(k.__name__ for k in kinds)
        raise DocumentError(f"{path}: expected {names}, got {type(doc).__name__}")
    return doc


def _exposed_counts(trace: ErasureTrace) -> list[int]:
    return [len(exposed_edges(g)) for g, _ in zip(trace.graphs(), trace.erased)]


# -- check-chordal -----------------------------------------------------------

def cmd_check_chordal(args) -> int:
    g = _load(args.file, GraphDocument).to_graph()
    order = maximum_cardinality_search(g)
    report: dict = {"n": g.n, "chordal": is_chordal(g)}
    if report["chordal"]:
        report["peo"] = list(order)
    elif g.n <= oracles.graph_limit():
        report["certificate"] = {
            "type": "induced_cycle",
            "cycle": list(oracles.find_induced_cycle(g)),
        }
    else:
        report["certificate"] = {
            "type": "failed_peo",
            "ordering": list(order),
            "vertex": failed_peo_vertex(g, order),
        }

    def text(r: dict) -> str:
        if r["chordal"]:
            return "chordal\nperfect elimination ordering: " + " ".join(map(str, r["peo"])) + "\n"
        cert = r["certificate"]
        if cert["type"] == "induced_cycle":
            return "not chordal\ninduced cycle: " + " ".join(map(str, cert["cycle"])) + "\n"
        return (
            "not chordal\n"
            f"vertex {cert['vertex']} is not simplicial in its suffix of ordering: "
            + " ".join(map(str, cert["ordering"]))
            + "\n"
        )

    _emit(report, args.json, text)
    return EXIT_OK if report["chordal"] else EXIT_NEGATIVE


# -- exposed -----------------------------------------------------------------

def cmd_exposed(args) -> int:
    g = _load(args.file, GraphDocument).to_graph()
    classes = classify_edges(g)
    report = {
        "edges": [{"u": e.u, "v": e.v, "class": c.value} for e, c in classes.items()],
        "counts": {c.value: sum(1 for x in classes.values() if x is c) for c in EdgeClass},
    }

    def text(r: dict) -> str:
        return "".join(f"{e['u']} {e['v']} {e['class']}\n" for e in r["edges"])

    _emit(report, args.json, text)
    return EXIT_OK


# -- mst ---------------------------------------------------------------------

def cmd_mst(args) -> int:
    doc = _load(args.file, MetricDocument)
    try:
        m = doc.to_metric(strict=not args.raw_weights)
    except MetricViolation as exc:
        raise CommandError(str(exc), EXIT_CONTRACT) from None
    if args.algorithm == "d-erasure":
        tree, trace = d_erasure_mst(m)
        erased = trace.erased
        counts = _exposed_counts(trace)
        annotations = [
            {"weight": format_weight(m.weight(e)), "exposed": c} for e, c in zip(erased, counts)
        ]
    else:
        tree, erased = reverse_delete_mst(m)
        trace = ErasureTrace(complete_graph(m.n), erased)
        annotations = [{"weight": format_weight(m.weight(e))} for e in erased]
    report: dict = {
        "algorithm": args.algorithm,
        "n": m.n,
        "weight": format_weight(tree.weight),
        "edges": [list(e) for e in tree.sorted_edges()],
        "erased": [list(e) for e in erased],
    }
    if args.trace:
        tdoc = TraceDocument.from_trace(trace, doc.labels, annotations, args.algorithm)
        write_text(args.trace, dumps(tdoc))
    code = EXIT_OK
    if args.oracle:
        try:
            best = oracles.minimum_spanning_weight(m)
        except SizeLimitExceeded as exc:
            raise CommandError(str(exc), EXIT_CONTRACT) from None
        report["oracle_weight"] = format_weight(best)
        if best != tree.weight:
            code = EXIT_ORACLE

    def text(r: dict) -> str:
        out = [f"algorithm: {r['algorithm']}", f"weight: {r['weight']}", "edges:"]
        out += [f"  {u} {v}" for u, v in r["edges"]]
        out.append("erased: " + ", ".join(f"{u}-{v}" for u, v in r["erased"]))
        if "oracle_weight" in r:
            verdict = "match" if r["oracle_weight"] == r["weight"] else "MISMATCH"
            out.append(f"oracle weight: {r['oracle_weight']} ({verdict})")
        return "\n".join(out) + "\n"

    _emit(report, args.json, text)
    return code


# -- erase-sequence / verify-trace ---------------------------------------------

def cmd_erase_sequence(args) -> int:
    doc = _load(args.file, GraphDocument)
    g = doc.to_graph()
    try:
        trace = erasure_sequence_from_complete(g) if args.from_complete else erase_to_tree(g)
    except (NotChordal, NotConnected) as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return EXIT_NEGATIVE
    annotations = [{"exposed": c} for c in _exposed_counts(trace)]
    write_text(args.out, dumps(TraceDocument.from_trace(trace, doc.labels, annotations)))
    return EXIT_OK


def cmd_verify_trace(args) -> int:
    trace = _load(args.file, TraceDocument).to_trace()
    verdict = verify_trace(trace)
    report = {
        "valid": verdict.ok,
        "steps": len(trace),
        "step": verdict.step,
        "reason": verdict.reason,
    }

    def text(r: dict) -> str:
        if r["valid"]:
            return f"valid trace of {r['steps']} erasures\n"
        return f"invalid at step {r['step']}: {r['reason']}\n"

    _emit(report, args.json, text)
    return EXIT_OK if verdict.ok else EXIT_NEGATIVE


# -- gen / to-dot --------------------------------------------------------------

def cmd_gen(args) -> int:
    if args.n < 1:
        raise CommandError("--n must be positive", EXIT_CONTRACT)
    if args.what == "chordal":
        g = random_connected_chordal_graph(args.n, Fraction(args.density), args.seed)
        text = dumps(GraphDocument.from_graph(g))
    else:
        text = dumps(MetricDocument.from_metric(random_metric(args.n, args.seed, args.kind)))
    write_text(args.out, text)
    return EXIT_OK


def cmd_to_dot(args) -> int:
    doc = _load(args.file, GraphDocument, TraceDocument)
    if isinstance(doc, GraphDocument):
        text = graph_to_dot(doc.to_graph(), doc.labels)
    else:
        text = trace_to_dot(doc.to_trace(), doc.initial.labels)
    write_text(args.out, text)
    return EXIT_OK


# -- selftest ------------------------------------------------------------------

def _trial(job: tuple[int, int, int]) -> tuple[int, list[str]]:
    """Check the main theorems on one seeded chordal graph and one metric."""
    index, seed, n_max = job
    rng = random.Random(f"{seed}:{index}")
    n = rng.randint(2, n_max)
    failures = []
    h = random_connected_chordal_graph(n, Fraction(rng.randint(0, 10), 10), rng.getrandbits(32))
    if not oracles.brute_force_chordal(h):
        failures.append("generator output fails the induced-cycle oracle")
    trace = erasure_sequence_from_complete(h)
    if not verify_trace(trace) or trace.final != h:
        failures.append("descent from the complete graph does not verify")
    if not is_tree(erase_to_tree(h).final):
        failures.append("erasure to a tree ends at a non-tree")
    for e in exposed_edges(h):
        if not oracles.naive_exposed(h, e):
            failures.append(f"edge {tuple(e)} exposed but clique oracle disagrees")
        exposed_cycle(h, e)
    m = random_metric(n, rng.getrandbits(32), rng.choice(["generic", "integer"]))
    if d_erasure_mst(m)[0].weight != oracles.minimum_spanning_weight(m):
        failures.append("d-erasure tree is not minimum")
    return index, failures


def cmd_selftest(args) -> int:
    jobs = [(i, args.seed, args.n_max) for i in range(args.trials)]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_trial, jobs))
    else:
        results = [_trial(j) for j in jobs]
    bad = 0
    for index, failures in results:
        status = "ok" if not failures else "FAIL " + "; ".join(failures)
        sys.stdout.write(f"trial {index}: {status}\n")
        bad += bool(failures)
    sys.stdout.write(f"{args.trials - bad}/{args.trials} trials passed\n")
    return EXIT_OK if not bad else EXIT_ORACLE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordal-erasure", description="Exposed-edge erasures and d-erasure spanning trees."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-chordal", help="recognize a chordal graph")
    p.add_argument("file", help="graph document, or - for stdin")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check_chordal)

    p = sub.add_parser("exposed", help="classify every edge as facet, exposed or shared")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_exposed)

    p = sub.add_parser("mst", help="minimum spanning tree of a metric document")
    p.add_argument("file")
    p.add_argument("--algorithm", choices=["d-erasure", "reverse-delete"], default="d-erasure")
    p.add_argument("--trace", metavar="OUT", help="write the erasure trace document here")
    p.add_argument("--oracle", action="store_true", help="cross-check against brute force")
    p.add_argument("--raw-weights", action="store_true", help="skip the triangle inequality check")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_mst)

    p = sub.add_parser("erase-sequence", help="erasure trace for a connected chordal graph")
    p.add_argument("file")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--to-tree", action="store_true")
    mode.add_argument("--from-complete", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_erase_sequence)

    p = sub.add_parser("verify-trace", help="check a trace document step by step")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_trace)

    p = sub.add_parser("gen", help="generate a random document")
    p.add_argument("what", choices=["chordal", "metric"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--density", default="1/2", help="chordal only: rational in [0, 1]")
    p.add_argument("--kind", choices=["generic", "integer"], default="generic", help="metric only")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("to-dot", help="export a graph or trace document as Graphviz DOT")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(func=cmd_to_dot)

    p = sub.add_parser("selftest", help="randomized theorem checks against the oracles")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CommandError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.code
    except (DocumentError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_IO
    except (ValueError, ErasureError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CONTRACT


if __name__ == "__main__":
    sys.exit(main())
