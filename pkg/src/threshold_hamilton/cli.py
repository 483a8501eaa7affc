"""Command-line interface.

Exit status: 0 success or verified, 1 property violated (including a
negative answer from ``recognize`` or ``hamiltonian``), 2 usage or format
error, 3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import TextIO

from . import checks
from .core import Graph, ThresholdGraph, as_threshold, creation_rows, from_creation_sequence, recognize
from .errors import CapacityError, FormatError, NotThresholdError, ThresholdHamiltonError, UsageError
from .extremal import (
    ENUMERATION_CAP,
    SWEEP_CAP,
    build_gn,
    recurrence_table,
    verify_forced_path,
    verify_recurrence_claim,
    verify_theorem6,
    verify_theorem7,
)
from .hamilton import (
    CYCLE_ENUM_CAP,
    DP_CAP,
    count_hamilton_cycles,
    count_hamilton_cycles_through_edge,
    hamiltonicity_verdict,
    is_hamiltonian,
)
from .io import format_edge_list, parse_creation_sequence, parse_edge_list, to_dot
from .key_edges import as_key_edge, delete_key_edge, key_edges

EXIT_OK, EXIT_VIOLATED, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="threshold-hamilton", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def fmt(p, choices=("text", "json"), default="text"):
        p.add_argument("--format", choices=choices, default=default)

    def source(p):
        p.add_argument("file", nargs="?", help="edge-list file, '-' for stdin")
        p.add_argument("--cs", metavar="SEQ", help="creation sequence such as IDDID instead of a file")

    p = sub.add_parser("gn", help="emit G_N")
    p.add_argument("n", type=int)
    fmt(p, ("text", "json", "dot", "edgelist"))

    p = sub.add_parser("recognize", help="degree partition or NOT_THRESHOLD")
    source(p)
    fmt(p)

    p = sub.add_parser("hamiltonian", help="hamiltonicity verdict from the degree partition")
    source(p)
    fmt(p)

    p = sub.add_parser("count", help="exact number of Hamilton cycles")
    source(p)
    p.add_argument("--edge", nargs=2, type=int, metavar=("U", "V"))
    p.add_argument("--cap", type=int, default=DP_CAP)
    fmt(p)

    p = sub.add_parser("keyedges", help="list key edges")
    source(p)
    fmt(p)

    p = sub.add_parser("delete", help="delete a key edge and report the case")
    source(p)
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    fmt(p, ("text", "json", "dot", "edgelist"), "edgelist")

    p = sub.add_parser("enumerate", help="all threshold graphs of order N")
    p.add_argument("n", type=int)
    p.add_argument("--hamiltonian-only", action="store_true")
    p.add_argument("--no-counts", action="store_true", help="skip Hamilton cycle counting")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cap", type=int, default=ENUMERATION_CAP)
    fmt(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=("theorem6", "theorem7", "claim", "forced-path", "lemmas"))
    p.add_argument("n", type=int, help="order (theorem6/7), k_max (claim, forced-path) or max order (lemmas)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cap", type=int, help="override the suite's order cap")
    fmt(p)
    return parser


def _load(args, stdin: TextIO) -> Graph:
    if args.cs is not None and args.file is not None:
        raise UsageError("give either FILE or --cs, not both")
    if args.cs is not None:
        return from_creation_sequence(parse_creation_sequence(args.cs))
    if args.file is None:
        raise UsageError("missing input: FILE or --cs")
    if args.file == "-":
        return parse_edge_list(stdin.read())
    try:
        with open(args.file) as fh:
            return parse_edge_list(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None


def _threshold(g: Graph) -> ThresholdGraph:
    try:
        return as_threshold(g)
    except NotThresholdError:
        raise UsageError("input is not a threshold graph") from None


def _partition_json(p) -> dict:
    return {
        "m": p.m,
        "deltas": list(p.deltas),
        "sets": [list(s) for s in p.sets],
        "sizes": list(p.sizes),
    }


def _graph_json(g: Graph) -> dict:
    out = {"n": g.n, "size": g.size, "degree_sequence": list(g.degree_sequence), "edges": [list(e) for e in g.edges()]}
    p = recognize(g)
    if p is not None:
        out["partition"] = _partition_json(p)
    return out


def _graph_text(g: Graph) -> str:
    lines = [f"order {g.n}, size {g.size}", "degrees " + " ".join(map(str, g.degree_sequence))]
    p = recognize(g)
    if p is not None:
        lines.append("partition sizes " + " ".join(map(str, p.sizes)))
    lines.append("edges " + " ".join(f"{u}-{v}" for u, v in g.edges()))
    return "\n".join(lines) + "\n"


def _emit_graph(g: Graph, fmt: str, out: TextIO, comments: list[str] | None = None) -> None:
    if fmt == "edgelist":
        out.write(format_edge_list(g, comments))
    elif fmt == "dot":
        out.write("".join(f"// {c}\n" for c in comments or ()) + to_dot(g))
    elif fmt == "json":
        out.write(json.dumps(_graph_json(g)) + "\n")
    else:
        out.write("".join(f"{c}\n" for c in comments or ()) + _graph_text(g))


# ---------------------------------------------------------------------------
# verbs
# ---------------------------------------------------------------------------


def _cmd_gn(args, stdin, out) -> int:
    _emit_graph(build_gn(args.n), args.format, out)
    return EXIT_OK


def _cmd_recognize(args, stdin, out) -> int:
    g = _load(args, stdin)
    p = recognize(g)
    if args.format == "json":
        doc = {"threshold": p is not None}
        if p is not None:
            doc.update(_partition_json(p))
        out.write(json.dumps(doc) + "\n")
    elif p is None:
        out.write("NOT_THRESHOLD\n")
    else:
        out.write(f"threshold, m = {p.m}\n")
        for i, members in enumerate(p.sets):
            out.write(f"D_{i} (degree {p.delta(i)}): {' '.join(map(str, members))}\n")
    return EXIT_OK if p is not None else EXIT_VIOLATED


def _cmd_hamiltonian(args, stdin, out) -> int:
    g = _threshold(_load(args, stdin))
    verdict = hamiltonicity_verdict(g.partition)
    if args.format == "json":
        out.write(json.dumps(verdict._asdict()) + "\n")
    elif verdict.hamiltonian:
        out.write("hamiltonian\n")
    else:
        out.write(f"not hamiltonian: {verdict.reason}\n")
    return EXIT_OK if verdict.hamiltonian else EXIT_VIOLATED


def _cmd_count(args, stdin, out) -> int:
    g = _load(args, stdin)
    if args.edge:
        count = count_hamilton_cycles_through_edge(g, tuple(args.edge), cap=args.cap)
    else:
        count = count_hamilton_cycles(g, cap=args.cap)
    if args.format == "json":
        out.write(json.dumps({"count": str(count), "edge": args.edge}) + "\n")
    else:
        out.write(f"{count}\n")
    return EXIT_OK


def _cmd_keyedges(args, stdin, out) -> int:
    g = _threshold(_load(args, stdin))
    edges = key_edges(g)
    if args.format == "json":
        out.write(json.dumps([{"j": e.j, "other": e.other, "x": e.x, "y": e.y} for e in edges]) + "\n")
    else:
        for e in edges:
            out.write(f"{e.x} {e.y}  ({e.j}, {e.other})\n")
    return EXIT_OK


def _cmd_delete(args, stdin, out) -> int:
    g = _threshold(_load(args, stdin))
    outcome = delete_key_edge(g, as_key_edge(g, args.u, args.v))
    if args.format == "json":
        doc = {"case": outcome.case_label.value, "m_delta": outcome.m_delta, "graph": _graph_json(outcome.result)}
        out.write(json.dumps(doc) + "\n")
    else:
        note = [f"case {outcome.case_label.value}, m_delta {outcome.m_delta:+d}"]
        _emit_graph(outcome.result, args.format, out, note)
    return EXIT_OK


def _enumerate_chunk(task: tuple[int, int, int, bool, bool]) -> list[dict]:
    n, lo, hi, ham_only, counts = task
    rows = []
    for code in range(lo, hi):
        g = ThresholdGraph(n, creation_rows(n, code))
        ham = is_hamiltonian(g.partition)
        if ham_only and not ham:
            continue
        row = {"degree_sequence": list(g.degree_sequence), "hamiltonian": ham}
        if counts:
            row["count"] = str(count_hamilton_cycles(g)) if ham else "0"
        rows.append(row)
    return rows


def _cmd_enumerate(args, stdin, out) -> int:
    n = args.n
    if n < 1:
        raise UsageError("order must be positive")
    if n > args.cap:
        raise CapacityError("threshold graph enumeration", n, args.cap)
    counts = not args.no_counts
    if counts and n > DP_CAP:
        raise CapacityError("Hamilton cycle counting", n, DP_CAP)
    total = 1 << (n - 1)
    if args.jobs <= 1:
        rows = _enumerate_chunk((n, 0, total, args.hamiltonian_only, counts))
    else:
        step = max(1, -(-total // (args.jobs * 4)))
        tasks = [(n, lo, min(lo + step, total), args.hamiltonian_only, counts) for lo in range(0, total, step)]
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = [r for part in pool.map(_enumerate_chunk, tasks) for r in part]
    rows.sort(key=lambda r: r["degree_sequence"], reverse=True)
    if args.format == "json":
        out.write(json.dumps(rows) + "\n")
    else:
        for r in rows:
            line = " ".join(map(str, r["degree_sequence"]))
            line += "\t" + ("H" if r["hamiltonian"] else "-")
            if counts:
                line += "\t" + r["count"]
            out.write(line + "\n")
    return EXIT_OK


def _report(doc: dict, fmt: str, out: TextIO, lines: list[str]) -> int:
    if fmt == "json":
        out.write(json.dumps(doc) + "\n")
    else:
        out.write("\n".join(lines) + "\n")
    return EXIT_OK if doc["pass"] else EXIT_VIOLATED


def _cmd_verify(args, stdin, out) -> int:
    n = args.n
    suite = args.suite
    if suite in ("theorem6", "theorem7"):
        if suite == "theorem6":
            report = verify_theorem6(n, jobs=args.jobs, cap=args.cap or SWEEP_CAP)
            headline = f"min_count = {report.min_count} (formula {report.formula_count})"
            winners = report.minimizers
        else:
            report = verify_theorem7(n, jobs=args.jobs, cap=args.cap or ENUMERATION_CAP)
            headline = f"min_size = {report.min_size} (formula {report.size_formula})"
            winners = report.size_minimizers
        lines = [
            f"{suite} n={n}: {'PASS' if report.passed else 'FAIL'}",
            headline,
            f"unique = {report.unique}",
            *("minimizer " + ",".join(map(str, d)) for d in winners),
            f"hamiltonian threshold graphs = {report.hamiltonian_total}",
        ]
        return _report(report.to_json(), args.format, out, lines)

    start = time.perf_counter()
    if suite == "claim":
        cap = args.cap or DP_CAP
        table = recurrence_table(n, dp_cap=cap)
        ok = verify_recurrence_claim(n, dp_cap=cap)
        doc = {"suite": suite, "k_max": n, "pass": ok, "counts": {str(k): str(v) for k, v in table.items()}}
        lines = [f"claim k_max={n}: {'PASS' if ok else 'FAIL'}", *(f"f({k}) = {v}" for k, v in table.items())]
    elif suite == "forced-path":
        cap = args.cap or CYCLE_ENUM_CAP
        if n < 2:
            raise UsageError("k must be at least 2")
        results = {k: verify_forced_path(k, cap=cap) for k in range(2, n + 1)}
        ok = all(results.values())
        doc = {"suite": suite, "k_max": n, "pass": ok, "results": {str(k): v for k, v in results.items()}}
        lines = [f"forced-path k_max={n}: {'PASS' if ok else 'FAIL'}"]
        lines += [f"G_{2 * k}: {'ok' if v else 'FAIL'}" for k, v in results.items()]
    else:
        cap = args.cap or 10
        if n > cap:
            raise CapacityError("structural check suite", n, cap)
        results = checks.run_structure_suite(n)
        ok = all(r.passed for r in results)
        doc = {
            "suite": suite,
            "max_order": n,
            "pass": ok,
            "checks": [{"name": r.name, "checked": r.checked, "failures": r.failures} for r in results],
        }
        lines = [f"structural checks up to order {n}: {'PASS' if ok else 'FAIL'}"]
        for r in results:
            lines.append(f"{r.name}: {'ok' if r.passed else 'FAIL'} ({r.checked} checked)")
            lines += [f"  {f}" for f in r.failures]
    doc["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
    return _report(doc, args.format, out, lines)


_COMMANDS = {
    "gn": _cmd_gn,
    "recognize": _cmd_recognize,
    "hamiltonian": _cmd_hamiltonian,
    "count": _cmd_count,
    "keyedges": _cmd_keyedges,
    "delete": _cmd_delete,
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
}


def run(argv: list[str] | None = None, stdin: TextIO | None = None, stdout: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    try:
        args = _build_parser().parse_args(argv)
        return _COMMANDS[args.verb](args, stdin, stdout)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (UsageError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ThresholdHamiltonError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATED


def main() -> None:
    sys.exit(run())
