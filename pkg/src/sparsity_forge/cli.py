"""Command-line front door: check, partition, decompose, gen, bench.

Inputs are graph6 (default, one graph per line, so corpora can be piped
through) or a single edge-list file.  Results go to stdout as one JSON
object per input graph; diagnostics go to stderr.  Exit codes are uniform:
0 = yes, 1 = certified no, 2 = error.  Batch lines are processed in
parallel (order preserved); SPARSITY_FORGE_THREADS caps the worker count.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from .decompose import decompose_ksw, verify_decomposition
from .errors import NotSparseError, SparsityForgeError
from .graphs import (
    Graph,
    gen_counterexample_disconnected,
    gen_counterexample_glued_trees,
    gen_counterexample_ring,
    parse_edgelist,
    parse_graph6,
    write_graph6,
)
from .instances import random_sparse_graph
from .partition import partition_sparse
from .rationals import parse_rational
from .sparsity import SparsityParams, is_sparse

EXIT_YES = 0
EXIT_NO = 1
EXIT_ERROR = 2


def _worker_count() -> int:
    env = os.environ.get("SPARSITY_FORGE_THREADS")
    if env:
        return max(1, int(env))
    return min(8, os.cpu_count() or 1)


def _read_graphs(args) -> list[Graph]:
    if args.input and args.input != "-":
        with open(args.input, "r", encoding="ascii") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    if args.format == "edgelist":
        return [parse_edgelist(text)]
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    return [parse_graph6(ln) for ln in lines]


def _map_ordered(fn, items):
    if len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=_worker_count()) as pool:
        return list(pool.map(fn, items))


def _add_io_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", default="-", help="input path or '-' for stdin")
    p.add_argument(
        "--format",
        choices=("graph6", "edgelist"),
        default="graph6",
        help="graph6: one graph per line (default); edgelist: single graph",
    )


def cmd_check(args) -> int:
    params = SparsityParams(parse_rational(args.a), parse_rational(args.b))
    graphs = _read_graphs(args)
    certs = _map_ordered(lambda g: is_sparse(g, params), graphs)
    status = EXIT_YES
    for cert in certs:
        print(json.dumps(cert.to_json_dict()))
        if not cert.sparse:
            status = EXIT_NO
    return status


def cmd_decompose(args) -> int:
    m = parse_rational(args.m)
    graphs = _read_graphs(args)

    def run(g: Graph):
        t0 = time.perf_counter()
        try:
            d = decompose_ksw(g, m)
        except NotSparseError as exc:
            return ("not_sparse", exc.certificate, None)
        t1 = time.perf_counter()
        verified = None
        if args.verify:
            verified = bool(verify_decomposition(d))
        t2 = time.perf_counter()
        timing = {"decompose": (t1 - t0) * 1e3, "verify": (t2 - t1) * 1e3}
        return ("ok", d, (verified, timing))

    status = EXIT_YES
    for kind, payload, extra in _map_ordered(run, graphs):
        if kind == "not_sparse":
            print(json.dumps(payload.to_json_dict()))
            status = max(status, EXIT_NO)
            continue
        verified, timing = extra
        out = payload.to_json_dict(verified=verified)
        if args.trace:
            out["timing_ms"] = {k: round(v, 3) for k, v in timing.items()}
        print(json.dumps(out))
        if verified is False:
            status = EXIT_ERROR
    return status


def cmd_partition(args) -> int:
    graphs = _read_graphs(args)

    def run(g: Graph):
        try:
            return ("ok", partition_sparse(
                g, args.a1, args.b1, args.a2, args.b2,
                minimize_certificate=args.minimize,
            ))
        except NotSparseError as exc:
            return ("not_sparse", exc.certificate)

    status = EXIT_YES
    for kind, payload in _map_ordered(run, graphs):
        if kind == "not_sparse":
            print(json.dumps(payload.to_json_dict()))
            status = max(status, EXIT_NO)
            continue
        print(json.dumps(payload.to_json_dict()))
        if not payload.success:
            status = max(status, EXIT_NO)
    return status


def cmd_gen(args) -> int:
    if args.family == "disconnected":
        g = gen_counterexample_disconnected(args.a1, args.a2, args.n, args.t)
    elif args.family == "glued-trees":
        g = gen_counterexample_glued_trees(args.a)
    else:
        g = gen_counterexample_ring(args.a, args.t)
    print(write_graph6(g))
    return EXIT_YES


def cmd_bench(args) -> int:
    if args.suite != "decompose":
        raise ValueError(f"unknown bench suite {args.suite!r}; available: decompose")
    m = parse_rational(args.m)
    sizes = [int(s) for s in args.sizes.split(",") if s]
    print(f"{'n':>6} {'e':>7} {'hash':>12} {'check_ms':>9} {'split_ms':>9} "
          f"{'verify_ms':>9} {'total_ms':>9}  case")
    for n in sizes:
        rng = random.Random(args.seed + n)
        g = random_sparse_graph(n, m, rng)
        digest = hashlib.sha256(write_graph6(g).encode()).hexdigest()[:12]
        t0 = time.perf_counter()
        cert = is_sparse(g, SparsityParams(m, 0))
        t1 = time.perf_counter()
        assert cert.sparse
        d = decompose_ksw(g, m)
        t2 = time.perf_counter()
        ok = bool(verify_decomposition(d))
        t3 = time.perf_counter()
        assert ok
        print(
            f"{n:>6} {g.e:>7} {digest:>12} {(t1 - t0) * 1e3:>9.1f} "
            f"{(t2 - t1) * 1e3:>9.1f} {(t3 - t2) * 1e3:>9.1f} "
            f"{(t3 - t0) * 1e3:>9.1f}  {d.trace}"
        )
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="sparsity-forge",
        description="Exact sparsity checks, matroid partitions, and forest decompositions",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide (a, b)-sparsity with a witness certificate")
    p.add_argument("--a", required=True, help='coefficient, e.g. "2" or "7/3"')
    p.add_argument("--b", required=True, help='offset, e.g. "-1"')
    _add_io_args(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("decompose", help="split an (m, 0)-sparse graph into forest + rest")
    p.add_argument("--m", required=True, help='density bound, e.g. "5/2" (needs m > 1)')
    p.add_argument("--verify", action="store_true", help="re-check the output from scratch")
    p.add_argument("--trace", action="store_true", help="include stage timings")
    _add_io_args(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("partition", help="two-matroid sparse partition or deficiency")
    p.add_argument("--a1", type=int, required=True)
    p.add_argument("--b1", type=int, required=True)
    p.add_argument("--a2", type=int, required=True)
    p.add_argument("--b2", type=int, required=True)
    p.add_argument("--minimize", action="store_true", help="shrink deficiency certificates")
    _add_io_args(p)
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("gen", help="generate the counterexample families (graph6 out)")
    gsub = p.add_subparsers(dest="family", required=True)
    gp = gsub.add_parser("disconnected", help="t disjoint 2(a1+a2)-regular circulants")
    gp.add_argument("--a1", type=int, required=True)
    gp.add_argument("--a2", type=int, required=True)
    gp.add_argument("--n", type=int, required=True)
    gp.add_argument("--t", type=int, required=True)
    gp = gsub.add_parser("glued-trees", help="two K_{4a} glued at a vertex")
    gp.add_argument("--a", type=int, required=True)
    gp = gsub.add_parser("ring", help="ring of t blocks K_{2a+2} minus an edge")
    gp.add_argument("--a", type=int, required=True)
    gp.add_argument("--t", type=int, required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="seeded end-to-end timing table")
    p.add_argument("suite", help="bench suite name (decompose)")
    p.add_argument("--sizes", default="100,200,500", help="comma-separated vertex counts")
    p.add_argument("--seed", type=int, default=20250801)
    p.add_argument("--m", default="5/2", help="density bound for generated instances")
    p.set_defaults(func=cmd_bench)
    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SparsityForgeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
