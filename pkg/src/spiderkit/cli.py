"""``spiderkit`` command-line interface.

Exit codes: 0 analysis complete (negative answers included), 1 requested
construction impossible, 2 input or usage error, 3 internal invariant
violation.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import __version__
from .degseq import havel_hakimi_realize, is_graphical, parse_sequence
from .gen import (
    GenSpec,
    complete_graph,
    generate,
    path_graph,
    random_cograph,
)
from .graph import Graph, GraphParseError, complement, parse_graph, serialize_graph
from .p4sparse import is_p4_sparse_bruteforce, is_p4_sparse_recursive
from .spider import (
    GuardError,
    SpiderClass,
    SpiderPartition,
    classify,
    recognize_thick,
    recognize_thin,
    verify_thick,
    verify_thin,
)
from .spiderseq import (
    construct_thick_spider,
    construct_thin_spider,
    thick_spider_realizable,
    thin_spider_realizable,
)

EXIT_OK, EXIT_IMPOSSIBLE, EXIT_USAGE, EXIT_INVARIANT = 0, 1, 2, 3
MAX_N = 10**7
MAX_M = 10**8


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def _load_graph(path: str) -> tuple[Graph, bytes]:
    try:
        data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError:
        raise CliError(f"{path}: not UTF-8 text") from None
    _check_size(text)
    try:
        return parse_graph(text), data
    except GraphParseError as exc:
        raise CliError(f"{path}: {exc}") from None


def _check_size(text: str) -> None:
    for line in text.splitlines():
        fields = line.split()
        if not fields or fields[0].startswith("#"):
            continue
        if len(fields) == 2 and all(f.isdigit() for f in fields):
            n, m = map(int, fields)
            if n > MAX_N or m > MAX_M:
                raise CliError(f"graph too large: n={n}, m={m} (limits {MAX_N} / {MAX_M})")
        return


def _emit(args, command: str, digest: str, payload: dict, started: float) -> None:
    result = {
        "command": command,
        "input_digest": digest,
        "result": payload,
        "elapsed_ms": round((time.perf_counter() - started) * 1000, 3),
    }
    if getattr(args, "human", False):
        print(f"command      {command}")
        print(f"input        {digest}")
        for key, value in payload.items():
            if isinstance(value, (dict, list)):
                value = json.dumps(value)
            print(f"{key:<12} {value}")
        print(f"elapsed_ms   {result['elapsed_ms']}")
    else:
        print(json.dumps(result, sort_keys=False))


def _emit_graph(args, g: Graph, partition: SpiderPartition | None, comments=()) -> None:
    comments = list(comments)
    if partition is not None:
        comments.append("partition " + json.dumps(partition.to_json(), separators=(",", ":")))
    text = serialize_graph(g, comments)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if partition is not None and args.partition:
        Path(args.partition).write_text(json.dumps(partition.to_json()) + "\n", encoding="utf-8")


# subcommands


def cmd_recognize(args) -> int:
    started = time.perf_counter()
    g, data = _load_graph(args.graph)
    cls = classify(g)
    payload: dict = {"class": cls.value}
    thin = recognize_thin(g) if cls in (SpiderClass.THIN_ONLY, SpiderClass.BOTH) else None
    thick = recognize_thick(g) if cls in (SpiderClass.THICK_ONLY, SpiderClass.BOTH) else None
    if thin is not None:
        payload["partition"] = thin.to_json()
        if thick is not None:
            payload["thick_partition"] = thick.to_json()
    elif thick is not None:
        payload["partition"] = thick.to_json()
    code = EXIT_OK
    if args.verify:
        checks = {}
        if thin is not None:
            checks["thin"] = verify_thin(g, thin)
        if thick is not None:
            checks["thick"] = verify_thick(g, thick)
        payload["verified"] = all(checks.values())
        payload["verify"] = {k: {"ok": v.ok, "violated": v.violated} for k, v in checks.items()}
        if not payload["verified"]:
            code = EXIT_INVARIANT
    _emit(args, "recognize", _digest(data), payload, started)
    return code


def cmd_verify(args) -> int:
    started = time.perf_counter()
    g, data = _load_graph(args.graph)
    try:
        raw = Path(args.partition_json).read_text(encoding="utf-8")
        p = SpiderPartition.from_json(json.loads(raw))
    except OSError as exc:
        raise CliError(f"cannot read {args.partition_json}: {exc.strerror}") from None
    except ValueError as exc:
        raise CliError(f"{args.partition_json}: {exc}") from None
    try:
        verdict = verify_thin(g, p) if p.kind == "thin" else verify_thick(g, p)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    payload = {"valid": verdict.ok, "kind": p.kind, "violated": verdict.violated}
    _emit(args, "verify", _digest(data + raw.encode()), payload, started)
    return EXIT_OK


def _parse_seq(text: str):
    try:
        return parse_sequence(text)
    except ValueError as exc:
        raise CliError(str(exc)) from None


def cmd_seq_check(args) -> int:
    started = time.perf_counter()
    seq = _parse_seq(args.sequence)
    v = seq.v
    thin = thin_spider_realizable(seq)
    thick = thick_spider_realizable(seq, v) if len(seq.counts) <= v else None
    no = {"realizable": False}
    payload = {
        "sequence": list(seq.counts),
        "v": v,
        "graphical": is_graphical(seq),
        "thin": thin.to_json() if thin else dict(no, kind="thin"),
        "thick": thick.to_json() if thick else dict(no, kind="thick"),
    }
    _emit(args, "seq check", _digest(args.sequence.encode()), payload, started)
    return EXIT_OK


def cmd_seq_realize(args) -> int:
    seq = _parse_seq(args.sequence)
    partition = None
    if args.as_ == "any":
        g = havel_hakimi_realize(seq)
        if g is None:
            raise CliError(f"{seq} is not graphical", EXIT_IMPOSSIBLE)
    elif args.as_ == "thin":
        w = thin_spider_realizable(seq)
        if w is None:
            raise CliError(f"{seq} is not realizable by a thin spider", EXIT_IMPOSSIBLE)
        g, partition = construct_thin_spider(w)
    else:
        w = thick_spider_realizable(seq, seq.v) if len(seq.counts) <= seq.v else None
        if w is None:
            raise CliError(f"{seq} is not realizable by a thick spider", EXIT_IMPOSSIBLE)
        g, partition = construct_thick_spider(w)
    _emit_graph(args, g, partition)
    return EXIT_OK


def cmd_p4sparse(args) -> int:
    started = time.perf_counter()
    g, data = _load_graph(args.graph)
    payload: dict = {}
    code = EXIT_OK
    brute = None
    if args.method in ("brute", "both"):
        try:
            brute = is_p4_sparse_bruteforce(g)
        except GuardError as exc:
            raise CliError(f"{exc}; use --method recursive") from None
    rec = is_p4_sparse_recursive(g) if args.method in ("recursive", "both") else None
    if args.method == "brute":
        payload = {"p4_sparse": brute.p4_sparse, "method": "brute"}
    elif args.method == "recursive":
        payload = {"p4_sparse": rec, "method": "recursive"}
    else:
        payload = {"p4_sparse": brute.p4_sparse, "method": "both", "brute": brute.p4_sparse, "recursive": rec}
        if brute.p4_sparse != rec:
            payload["agree"] = False
            code = EXIT_INVARIANT
    if brute is not None and brute.violating_set is not None:
        payload["violating_set"] = list(brute.violating_set)
    _emit(args, "p4sparse", _digest(data), payload, started)
    return code


def _head_graph(spec: str, size: int) -> Graph | None:
    if spec == "empty":
        return Graph(0)
    if spec == "single":
        return Graph(1)
    if spec == "p4":
        return path_graph(4)
    if spec == "complete":
        return complete_graph(size)
    if spec == "random":
        return None
    path = Path(spec)
    if not path.exists():
        raise CliError(f"--head must be empty|single|p4|complete|random or an edge-list file, got {spec!r}")
    return _load_graph(spec)[0]


def cmd_generate(args) -> int:
    kind = {"thin": "thin_spider", "thick": "thick_spider", "random": "random", "p4sparse": "p4_sparse"}[args.kind]
    if kind in ("thin_spider", "thick_spider") and args.n is not None:
        raise CliError("--n applies to random and p4sparse; spiders take --s and --head")
    if kind in ("random", "p4_sparse") and args.n is None:
        raise CliError(f"generate {args.kind} requires --n")
    try:
        spec = GenSpec(
            kind=kind,
            seed=args.seed,
            s=args.s,
            head_size=args.head_size,
            p=args.p,
            depth=args.depth,
            n=args.n or 0,
        )
    except ValueError as exc:
        raise CliError(str(exc)) from None
    head = _head_graph(args.head, args.head_size) if kind.endswith("spider") else None
    if kind == "p4_sparse" and args.cograph:
        g, part = random_cograph(spec.n, spec.depth, spec.seed), None
    else:
        g, part = generate(spec, head)
    comment = spec.describe() + (f" head={args.head}" if kind.endswith("spider") else "")
    _emit_graph(args, g, part, [comment])
    return EXIT_OK


def cmd_complement(args) -> int:
    g, _ = _load_graph(args.graph)
    _emit_graph(args, complement(g), None)
    return EXIT_OK


def cmd_selftest(args) -> int:
    from .oracle import run_selftest

    started = time.perf_counter()
    reports = run_selftest(args.max_n)
    payload = {"ok": all(r.ok for r in reports), "suites": [r.to_json() for r in reports]}
    _emit(args, "selftest", _digest(f"max_n={args.max_n}".encode()), payload, started)
    return EXIT_OK if payload["ok"] else EXIT_INVARIANT


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    out = common.add_mutually_exclusive_group()
    out.add_argument("--json", dest="human", action="store_false", default=False, help="JSON output (default)")
    out.add_argument("--human", dest="human", action="store_true", default=False, help="plain table output")

    graph_out = argparse.ArgumentParser(add_help=False)
    graph_out.add_argument("-o", "--output", help="write the edge list here instead of stdout")
    graph_out.add_argument("--partition", help="also write the partition JSON to this file")

    parser = argparse.ArgumentParser(prog="spiderkit", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", parents=[common], help="classify a graph as thin/thick spider")
    p.add_argument("graph", help="edge-list file, or - for stdin")
    p.add_argument("--verify", action="store_true", help="re-check the partition against the definition")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("verify", parents=[common], help="check a partition JSON against a graph")
    p.add_argument("graph")
    p.add_argument("partition_json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("seq", help="degree-sequence analysis")
    seq_sub = p.add_subparsers(dest="seq_command", required=True)
    q = seq_sub.add_parser("check", parents=[common], help="graphicality and spider realizability")
    q.add_argument("sequence", help="counts:0,3,... or degrees:7,7,...")
    q.set_defaults(func=cmd_seq_check)
    q = seq_sub.add_parser("realize", parents=[graph_out], help="construct a realization")
    q.add_argument("sequence")
    q.add_argument("--as", dest="as_", choices=["thin", "thick", "any"], default="any")
    q.set_defaults(func=cmd_seq_realize)

    p = sub.add_parser("p4sparse", parents=[common], help="P4-sparseness check")
    p.add_argument("graph")
    p.add_argument("--method", choices=["brute", "recursive", "both"], default="both")
    p.set_defaults(func=cmd_p4sparse)

    p = sub.add_parser("generate", parents=[graph_out], help="seeded graph generators")
    p.add_argument("kind", choices=["thin", "thick", "random", "p4sparse"])
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--s", type=int, default=2, help="leg count for spiders")
    p.add_argument("--head", default="empty", help="empty|single|p4|complete|random or an edge-list file")
    p.add_argument("--head-size", type=int, default=0)
    p.add_argument("--p", type=float, default=0.5, help="edge probability")
    p.add_argument("--n", type=int, help="vertex count (random) or target size (p4sparse)")
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--cograph", action="store_true", help="p4sparse without spider steps")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("complement", parents=[graph_out], help="complement an edge-list graph")
    p.add_argument("graph")
    p.set_defaults(func=cmd_complement)

    p = sub.add_parser("selftest", parents=[common], help="exhaustive small-graph oracle suites")
    p.add_argument("--max-n", type=int, default=6)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"spiderkit: error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
