"""Command line front end.

Exit codes form a stable contract for scripting: 0 means success or a
positive answer, 1 means a domain-negative answer (invalid hypergraph
reported by ``validate``, not a hypertree, infeasible demands), 2 means
a usage or I/O problem (unreadable file, malformed input, bad flags,
refused oracle sizes).  Every command is a deterministic function of its
arguments; structured results go to stdout, diagnostics to stderr.
"""

import argparse
import csv
import json
import sys

from .core import (
    FormatError,
    Hypergraph,
    LimitExceededError,
    demands_from_json,
    hypergraph_from_json,
    hypergraph_from_text,
    hypergraph_to_json,
    validate,
)
from .gen import random_hypertree
from .orientation import orient_floor, orient_with_demands
from .recognition import is_hypertree, is_hypertree_bruteforce
from .shrink import (
    NotAHypertreeError,
    shrink_hypertree,
    shrinking_to_dot,
    shrinking_to_json,
    verify_shrinking,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


def _read_file(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def _load_hypergraph(path: str) -> Hypergraph:
    """Parse a hypergraph file, sniffing JSON versus the text format."""
    text = _read_file(path)
    if text.lstrip().startswith("{"):
        return hypergraph_from_json(text)
    return hypergraph_from_text(text)


def _load_valid_hypergraph(path: str) -> Hypergraph:
    """Like :func:`_load_hypergraph` but refuse non-simple hypergraphs.

    Commands other than ``validate`` treat an invalid hypergraph as a
    usage error: exit code 1 stays reserved for genuine negative answers
    about well-formed inputs.
    """
    hypergraph = _load_hypergraph(path)
    report = validate(hypergraph)
    if not report.ok:
        raise FormatError(f"invalid hypergraph in {path}: {report}")
    return hypergraph


def _directed_to_json(directed) -> str:
    return json.dumps(
        {
            "n": directed.base.n,
            "edges": [list(e) for e in directed.base.edges],
            "heads": list(directed.heads),
        }
    )


def _cmd_validate(args) -> int:
    hypergraph = _load_hypergraph(args.file)
    report = validate(hypergraph)
    if report.ok:
        print(f"valid: {hypergraph.n} vertices, {hypergraph.num_edges} hyperedges")
        return EXIT_OK
    for violation in report:
        print(violation, file=sys.stderr)
    return EXIT_NEGATIVE


def _cmd_check(args) -> int:
    hypergraph = _load_valid_hypergraph(args.file)
    if not args.oracle:
        if is_hypertree(hypergraph):
            print("hypertree")
            return EXIT_OK
        print("not a hypertree")
        return EXIT_NEGATIVE
    result = is_hypertree_bruteforce(hypergraph, limit=args.limit)
    if result:
        print("hypertree")
        return EXIT_OK
    if result.bad_edge_count:
        print(
            "not a hypertree: "
            f"{hypergraph.num_edges} hyperedges, expected {hypergraph.n - 1}"
        )
    else:
        witness = result.violating_subset
        inside = sum(
            1 for e in hypergraph.edges if set(e) <= set(witness)
        )
        print(
            f"not a hypertree: witness X={list(witness)} "
            f"contains {inside} hyperedges > |X|-1 = {len(witness) - 1}"
        )
    return EXIT_NEGATIVE


def _cmd_shrink(args) -> int:
    hypergraph = _load_valid_hypergraph(args.file)
    try:
        shrinking = shrink_hypertree(hypergraph, args.k)
    except NotAHypertreeError as exc:
        print(f"not a hypertree ({exc.reason}): {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    report = verify_shrinking(hypergraph, shrinking, args.k)
    if args.out == "dot":
        print(shrinking_to_dot(hypergraph, shrinking))
    else:
        print(shrinking_to_json(hypergraph, shrinking, args.k))
    print(report, file=sys.stderr)
    return EXIT_OK if report.all_passed else EXIT_NEGATIVE


def _cmd_orient(args) -> int:
    hypergraph = _load_valid_hypergraph(args.file)
    if args.demands is None:
        directed = orient_floor(hypergraph, args.k)
        print(_directed_to_json(directed))
        return EXIT_OK
    demands = demands_from_json(_read_file(args.demands), hypergraph.n)
    result = orient_with_demands(hypergraph, demands)
    if result.is_oriented:
        print(_directed_to_json(result.oriented))
        return EXIT_OK
    violator = result.violator
    print(
        json.dumps(
            {
                "violator": list(violator),
                "f(F)": demands.sum_over(violator),
                "e*(F)": hypergraph.incident_edge_count(violator),
            }
        )
    )
    return EXIT_NEGATIVE


def _cmd_gen(args) -> int:
    hypergraph, witness = random_hypertree(args.n, args.k, args.seed, args.p)
    print(hypergraph_to_json(hypergraph))
    if args.witness is not None:
        try:
            with open(args.witness, "w", encoding="utf-8") as handle:
                handle.write(json.dumps({"pairs": [list(p) for p in witness]}))
                handle.write("\n")
        except OSError as exc:
            raise FormatError(f"cannot write {args.witness}: {exc}") from exc
    return EXIT_OK


def _cmd_bench(args) -> int:
    """Shrink one generated hypertree per trial and report degree stats.

    Columns: ``min_scaled_ratio`` is min_v d_T(v)*k/d_H(v) with k the
    pipeline's rank, ``min_slack`` is min_v d_T(v) - max(1, d_H(v) // k)
    (non-negative when the guarantee holds), ``min_degree_ratio`` is
    min_v d_T(v)/d_H(v).
    """
    if args.trials < 1:
        raise ValueError("need at least one trial")
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(
        [
            "trial",
            "seed",
            "n",
            "rank",
            "min_scaled_ratio",
            "min_slack",
            "min_degree_ratio",
        ]
    )
    for trial in range(args.trials):
        seed = args.seed + trial
        hypergraph, _ = random_hypertree(args.n, args.k, seed, args.p)
        shrinking = shrink_hypertree(hypergraph)
        k = hypergraph.rank()
        hyper = hypergraph.degrees()
        tree = shrinking.tree_degrees(hypergraph.n)
        scaled = min(t * k / d for t, d in zip(tree, hyper))
        slack = min(t - max(1, d // k) for t, d in zip(tree, hyper))
        ratio = min(t / d for t, d in zip(tree, hyper))
        writer.writerow(
            [
                trial,
                seed,
                args.n,
                k,
                "%.6f" % scaled,
                slack,
                "%.6f" % ratio,
            ]
        )
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypershrink",
        description="Shrink hypertrees to spanning trees with per-vertex "
        "degree guarantees; validate, recognize, orient and generate "
        "hypergraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a hypergraph file for loops, "
                       "duplicates and out-of-range vertices")
    p.add_argument("file", help="hypergraph file (JSON or text format)")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("check", help="decide whether the input is a hypertree")
    p.add_argument("file")
    p.add_argument("--oracle", action="store_true",
                   help="use the exhaustive subset check and print a witness "
                   "on failure (small n only)")
    p.add_argument("--limit", type=int, default=20,
                   help="largest n the oracle accepts (default 20)")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("shrink", help="shrink a hypertree to a spanning tree "
                       "and verify the degree bounds")
    p.add_argument("file")
    p.add_argument("--k", type=int, default=None,
                   help="rank bound for the degree guarantee "
                   "(default: the hypergraph's rank)")
    p.add_argument("--out", choices=("json", "dot"), default="json",
                   help="output format (default json)")
    p.set_defaults(func=_cmd_shrink)

    p = sub.add_parser("orient", help="orient hyperedges to meet per-vertex "
                       "indegree demands")
    p.add_argument("file")
    p.add_argument("--demands", default=None,
                   help="JSON file with one integer demand per vertex; "
                   "default: floor(degree/k) demands")
    p.add_argument("--k", type=int, default=None,
                   help="rank bound for the default demands "
                   "(default: the hypergraph's rank)")
    p.set_defaults(func=_cmd_orient)

    p = sub.add_parser("gen", help="generate a random hypertree")
    p.add_argument("--n", type=int, required=True, help="number of vertices")
    p.add_argument("--k", type=int, required=True, help="rank bound")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5,
                   help="per-edge expansion probability (default 0.5)")
    p.add_argument("--witness", default=None,
                   help="also write the witness tree pairs to this file")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="generate, shrink and report degree "
                       "statistics as CSV")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5)
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LimitExceededError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
