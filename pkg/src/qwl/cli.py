"""Command-line frontend.

Exit codes: 0 for success or agreement, 1 for a verification or agreement
failure, 2 for usage, domain, or IO errors.  Vertex budgets resolve as
explicit flag, then the QWL_BUDGET environment variable, then built-in
defaults.  Output is deterministic for fixed flags and seed; only the
runtime_ms column of the CSV format varies between runs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import embedding, formulas, hosts, qcube, search
from .errors import (
    DomainError,
    GraphConstructionError,
    UnreachableVertexError,
    VerificationError,
)
from .graph import cut_family_to_json, export_graph, graph_from_json, graph_to_json


def _resolve_budget(flag_value: int | None, default: int) -> int:
    if flag_value is not None:
        return flag_value
    env = os.environ.get("QWL_BUDGET")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise DomainError(f"QWL_BUDGET must be an integer, got {env!r}") from None
    return default


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


# -- gen -----------------------------------------------------------------


def cmd_gen(args: argparse.Namespace) -> int:
    if args.guest:
        if args.cuts:
            raise DomainError("--cuts applies to hosts; the guest declares no cut family")
        graph = qcube.build_qcube(args.n).graph
        family = None
    else:
        spec = hosts.build_host(args.host, args.n)
        graph = spec.graph
        family = spec.cut_family
    if args.cuts and not args.output:
        raise DomainError("--cuts needs --output so the family gets its own file")
    _emit(export_graph(graph, args.format) + "\n", args.output)
    if args.cuts:
        base = Path(args.output)
        cuts_path = base.with_name(base.stem + ".cuts.json")
        cuts_path.write_text(cut_family_to_json(family) + "\n", encoding="utf-8")
        print(f"wrote {args.output} and {cuts_path}")
    elif args.output:
        print(f"wrote {args.output}")
    return 0


# -- wl ------------------------------------------------------------------


def cmd_wl(args: argparse.Namespace) -> int:
    kind = hosts.normalize_kind(args.host)
    n = args.n
    methods = ["formula", "cuts", "distance"] if args.method == "all" else [args.method]

    guest = qcube.build_qcube(n) if set(methods) & {"cuts", "distance"} else None
    host = hosts.build_host(kind, n) if guest is not None else None
    emb = embedding.lex_embedding(guest, host) if guest is not None else None

    rows: list[tuple[str, int, int]] = []
    for method in methods:
        started = time.perf_counter()
        if method == "formula":
            value = formulas.formula_value(kind, n)
        elif method == "cuts":
            value = embedding.wirelength_by_cuts(emb)
        else:
            value = embedding.wirelength_by_distance(emb)
        elapsed_ms = round((time.perf_counter() - started) * 1000)
        rows.append((method, value, elapsed_ms))

    agree = len({value for _, value, _ in rows}) == 1
    if args.format == "csv":
        lines = ["host,n,method,wirelength,agree,runtime_ms"]
        for method, value, ms in rows:
            lines.append(f"{kind},{n},{method},{value},{'true' if agree else 'false'},{ms}")
        _emit("\n".join(lines) + "\n", args.output)
    else:
        width = max(len(m) for m, _, _ in rows)
        lines = [f"host={kind} n={n}"]
        for method, value, _ in rows:
            lines.append(f"  {method:<{width}}  {value}")
        if len(rows) > 1:
            lines.append(f"  agreement: {'yes' if agree else 'NO'}")
        _emit("\n".join(lines) + "\n", args.output)
    return 0 if agree else 1


# -- verify ----------------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    if args.n_max < 2:
        raise DomainError(f"--n-max must be >= 2, got {args.n_max}")
    budget = _resolve_budget(args.budget, qcube.DEFAULT_SUBSET_BUDGET)
    checks: list[tuple[bool, str]] = []

    if args.host_file:
        text = Path(args.host_file).read_text(encoding="utf-8")
        loaded = graph_from_json(text)
        round_trip = graph_from_json(graph_to_json(loaded))
        checks.append(
            (
                graph_to_json(round_trip) == graph_to_json(loaded),
                f"host file {args.host_file}: json round-trip is byte-stable",
            )
        )

    for n in range(1, args.n_max + 1):
        cube = qcube.build_qcube(n)
        graph = cube.graph
        regular = all(graph.degree(v) == 2 * n for v in range(graph.vertex_count))
        checks.append(
            (
                regular and graph.edge_count == n * 3**n,
                f"cube n={n}: 2n-regular with n*3^n edges",
            )
        )
        closed = tuple(qcube.iso_closed_form(k, n) for k in range(1, 3**n + 1))
        checks.append(
            (
                qcube.lex_prefix_profile(cube) == closed,
                f"cube n={n}: prefix subsets meet the closed form for every k",
            )
        )
        if args.brute_force and 3**n <= budget:
            brute_ok = all(
                qcube.brute_force_iso(cube, k, budget) == closed[k - 1]
                for k in range(1, 3**n + 1)
            )
            checks.append(
                (brute_ok, f"cube n={n}: exhaustive subsets meet the closed form for every k")
            )
        if n <= 3:
            checks.append(
                (
                    _complement_preserves_structure(cube),
                    f"cube n={n}: digit complement is an adjacency-preserving involution",
                )
            )

    for n in range(2, args.n_max + 1):
        m = 3 ** (n - 1)
        checks.append(
            (
                formulas.spine_cut_total(n) == 2 * m * (m - 1),
                f"n={n}: prefix-cut congestion identity",
            )
        )
        guest = qcube.build_qcube(n)
        for kind in hosts.HOST_KINDS:
            spec = hosts.build_host(kind, n)
            emb = embedding.lex_embedding(guest, spec)
            verification = embedding.verify_cut_family(emb)
            checks.append((verification.ok, f"{kind} n={n}: cut family verifies"))
            if verification.ok:
                values = {
                    formulas.formula_value(kind, n),
                    embedding.wirelength_by_cuts(emb),
                    embedding.wirelength_by_distance(emb),
                }
                checks.append((len(values) == 1, f"{kind} n={n}: three engines agree"))
            else:
                for note in verification.failures():
                    print(f"       {note}")

    failures = 0
    for ok, label in checks:
        print(f"{'PASS' if ok else 'FAIL'}  {label}")
        failures += 0 if ok else 1
    print(f"{len(checks) - failures}/{len(checks)} checks passed")
    return 1 if failures else 0


def _complement_preserves_structure(cube: qcube.QCube) -> bool:
    n = cube.n
    image = [
        qcube.TernaryWord.from_label(v, n).complement().label
        for v in range(cube.vertex_count)
    ]
    if any(image[image[v]] != v for v in range(cube.vertex_count)):
        return False
    edge_set = cube.graph.edge_set
    return all(
        (min(image[u], image[v]), max(image[u], image[v])) in edge_set
        for u, v in cube.graph.edges
    )


# -- search ----------------------------------------------------------------


def cmd_search(args: argparse.Namespace) -> int:
    kind = hosts.normalize_kind(args.host)
    n = args.n
    guest = qcube.build_qcube(n)
    spec = hosts.build_host(kind, n)
    formula = formulas.formula_value(kind, n)

    if args.exhaustive:
        budget = _resolve_budget(args.budget, search.DEFAULT_EXHAUSTIVE_BUDGET)
        result = search.exhaustive_search(guest, spec, budget=budget, workers=args.threads)
        acceptable = result.best_wirelength == formula
    else:
        method = search.METHOD_ANNEAL if args.anneal else search.METHOD_DESCENT
        result = search.local_search(
            guest,
            spec,
            restarts=args.restarts,
            seed=args.seed,
            budget=args.steps,
            method=method,
        )
        acceptable = result.best_wirelength >= formula

    _emit(result.to_json() + "\n", args.output)
    print(
        f"{kind} n={n}: best {result.best_wirelength} vs formula {formula} "
        f"({result.method}, {result.evaluated} evaluations)"
    )
    if not acceptable:
        report = search.counterexample_report(kind, n, formula, result)
        if args.output:
            base = Path(args.output)
            counter_path = base.with_name(base.stem + ".counterexample.json")
        else:
            counter_path = Path(f"counterexample-{kind}-n{n}.json")
        counter_path.write_text(
            json.dumps(report, sort_keys=True, separators=(",", ":")) + "\n",
            encoding="utf-8",
        )
        print(f"search undercut the formula; counterexample written to {counter_path}")
        return 1
    return 0


# -- report ----------------------------------------------------------------


def cmd_report(args: argparse.Namespace) -> int:
    from .report import write_report  # defer matplotlib import

    csv_path, figures, records = write_report(
        args.out_dir,
        n_min=args.n_min,
        n_max=args.n_max,
        kinds=args.hosts,
        congestion_n=args.congestion_n,
    )
    for record in records:
        flag = "ok" if record.agree else "DISAGREE"
        print(
            f"{record.kind:<13} n={record.n}  formula={record.formula_value}  "
            f"cuts={record.cut_value}  distance={record.distance_value}  {flag}"
        )
    print(f"wrote {csv_path}")
    for path in figures:
        print(f"wrote {path}")
    return 0 if all(r.agree for r in records) else 1


# -- parser ----------------------------------------------------------------

_HOST_CHOICES = ["cylinder", "caterpillar", "firecracker", "banana"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qwl",
        description="Exact wirelength of ternary n-cube embeddings into cylinders and trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a guest or host graph (and optionally its cut family)")
    target = gen.add_mutually_exclusive_group(required=True)
    target.add_argument("--guest", action="store_true", help="generate the ternary cube")
    target.add_argument("--host", choices=_HOST_CHOICES, help="generate a host graph")
    gen.add_argument("-n", type=int, required=True, help="cube dimension")
    gen.add_argument("--format", choices=["json", "dot"], default="json")
    gen.add_argument("--cuts", action="store_true", help="also write the host cut family (needs --output)")
    gen.add_argument("--output", help="write to this path instead of stdout")
    gen.set_defaults(func=cmd_gen)

    wl = sub.add_parser("wl", help="compute wirelength with one engine or all three")
    wl.add_argument("--host", choices=_HOST_CHOICES, required=True)
    wl.add_argument("-n", type=int, required=True)
    wl.add_argument("--method", choices=["formula", "cuts", "distance", "all"], default="all")
    wl.add_argument("--format", choices=["table", "csv"], default="table")
    wl.add_argument("--output", help="write to this path instead of stdout")
    wl.set_defaults(func=cmd_wl)

    verify = sub.add_parser("verify", help="run the structural and agreement checks")
    verify.add_argument("--n-max", type=int, default=4)
    verify.add_argument("--brute-force", action="store_true", help="add exhaustive subset checks")
    verify.add_argument("--budget", type=int, help="vertex budget for exhaustive subset checks")
    verify.add_argument("--host-file", help="also round-trip this json-edgelist file")
    verify.set_defaults(func=cmd_verify)

    sr = sub.add_parser("search", help="probe minimality exhaustively or by local search")
    sr.add_argument("--host", choices=_HOST_CHOICES, required=True)
    sr.add_argument("-n", type=int, required=True)
    mode = sr.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", help="enumerate every bijection")
    mode.add_argument("--restarts", type=int, default=0, help="local-search restarts (0 = identity map only)")
    sr.add_argument("--anneal", action="store_true", help="anneal instead of plain descent")
    sr.add_argument("--seed", type=int, default=0)
    sr.add_argument("--steps", type=int, help="candidate evaluations per restart")
    sr.add_argument("--budget", type=int, help="vertex budget for exhaustive search")
    sr.add_argument("--threads", type=int, default=1, help="worker processes for exhaustive search")
    sr.add_argument("--output", help="write the result JSON to this path")
    sr.set_defaults(func=cmd_search)

    rp = sub.add_parser("report", help="cross-check engines over a range and render CSV + figures")
    rp.add_argument("--n-min", type=int, default=2)
    rp.add_argument("--n-max", type=int, default=4)
    rp.add_argument("--hosts", nargs="+", choices=_HOST_CHOICES, help="subset of hosts")
    rp.add_argument("--congestion-n", type=int, default=3, help="dimension for the congestion figure")
    rp.add_argument("--out-dir", default="qwl-report")
    rp.set_defaults(func=cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    except (DomainError, GraphConstructionError, UnreachableVertexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
