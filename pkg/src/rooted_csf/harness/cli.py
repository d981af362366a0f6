"""Command-line interface: ``rooted-csf {compute,enumerate,verify,search,certify}``.

Exit codes: 0 success, 1 a verification failure was found, 2 usage or
parse error, 3 a resource guard was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from ..chromatic import GuardError
from ..enumeration import free_trees, posets, rooted_trees, small_graphs
from ..graphs import GraphFormatError, one_line
from ..symmetric import DegreeBoundError
from .compute import INVARIANTS, UsageError, certify, compute, evaluate
from .search import KINDS, search_collision
from .suites import SUITES, verify_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3

ENUM_KINDS = ("rooted-trees", "free-trees", "graphs", "connected-graphs", "posets")


def _global_flags(parser: argparse.ArgumentParser, suppress: bool):
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--max-n", type=int, default=default, help="size limit for sweeps")
    parser.add_argument("--jobs", type=int, default=default, help="worker processes (default 1)")
    parser.add_argument("--seed", type=int, default=default, help="seed for randomized checks (default 0)")
    parser.add_argument("--out", default=default, help="write output to this file")
    parser.add_argument("--format", choices=("json", "text"), default=default, help="output format")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rooted-csf", description="Chromatic symmetric functions of rooted graphs.")
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("compute", help="evaluate an invariant of one graph file ('-' for stdin)")
    _global_flags(p, suppress=True)
    p.add_argument("file")
    p.add_argument("--invariant", required=True, choices=INVARIANTS)
    p.add_argument("--N", type=int, help="expand into colors 0..N instead of symmetric form")
    p.add_argument("--i", type=int, help="root color for Xi")
    p.add_argument("--k", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--basis", choices=("m", "mt", "p", "e"))
    p.add_argument("--mode", choices=("eq", "ne"), default="ne", help="root constraint for x-2p")

    p = sub.add_parser("enumerate", help="list unlabeled trees, graphs or posets")
    _global_flags(p, suppress=True)
    p.add_argument("--kind", required=True, choices=ENUM_KINDS)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("verify", help="run a verification suite")
    _global_flags(p, suppress=True)
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.add_argument("--instance", help="check one serialized instance only")

    p = sub.add_parser("search", help="look for non-isomorphic objects sharing an invariant")
    _global_flags(p, suppress=True)
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("certify", help="Eisenstein certificate for a graph file ('-' for stdin)")
    _global_flags(p, suppress=True)
    p.add_argument("file")
    p.add_argument("--p", type=int, help="prime for rooted inputs (default 2)")
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _emit(text: str, out: Optional[str]):
    if not text.endswith("\n"):
        text += "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _enumerate(kind: str, n: int) -> List[str]:
    if kind == "rooted-trees":
        items = (t.to_rooted_graph() for t in rooted_trees(n))
    elif kind == "free-trees":
        items = free_trees(n)
    elif kind == "graphs":
        items = small_graphs(n)
    elif kind == "connected-graphs":
        items = small_graphs(n, connected_only=True)
    else:
        items = posets(n)
    return [one_line(x.to_text()) for x in items]


def run(args: argparse.Namespace) -> int:
    fmt = args.format
    seed = 0 if args.seed is None else args.seed
    jobs = 1 if args.jobs is None else args.jobs

    if args.verb == "compute":
        options = dict(N=args.N, i=args.i, k=args.k, p=args.p, basis=args.basis, mode=args.mode)
        text = _read(args.file)
        if fmt == "text":
            _, value = evaluate(text, args.invariant, **options)
            _emit(str(value), args.out)
        else:
            _emit(_dump(compute(text, args.invariant, **options)), args.out)
        return EXIT_OK

    if args.verb == "enumerate":
        lines = _enumerate(args.kind, args.n)
        if fmt == "json":
            _emit(_dump({"kind": args.kind, "n": args.n, "count": len(lines), "items": lines}), args.out)
        else:
            _emit("\n".join(lines), args.out)
        return EXIT_OK

    if args.verb == "verify":
        names = sorted(SUITES) if args.suite == "all" else [args.suite]
        reports = [verify_suite(name, args.max_n, seed, jobs, args.instance) for name in names]
        if fmt == "text":
            _emit("\n".join(r.summary() for r in reports), args.out)
        elif len(reports) == 1:
            _emit(reports[0].dumps(), args.out)
        else:
            _emit(_dump([r.to_json() for r in reports]), args.out)
        return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL

    if args.verb == "search":
        found = search_collision(args.kind, args.n)
        if fmt == "text":
            lines = [f"{len(found)} collision group(s) for {args.kind}, n={args.n}"]
            for c in found:
                lines.append(f"invariant: {c.value}")
                lines.extend(f"  {one_line(m.to_text())}" for m in c.members)
            _emit("\n".join(lines), args.out)
        else:
            _emit(_dump({"kind": args.kind, "n": args.n, "collisions": [c.to_json() for c in found]}), args.out)
        return EXIT_OK

    if args.verb == "certify":
        result = certify(_read(args.file), args.p)
        if fmt == "text":
            rep = result["report"]
            status = "satisfied" if rep["satisfied"] else f"not satisfied ({rep['witness']})"
            _emit(f"{result['kind']}: Eisenstein at p={rep['prime']} {status}", args.out)
        else:
            _emit(_dump(result), args.out)
        return EXIT_OK if result["report"]["satisfied"] else EXIT_FAIL

    raise AssertionError(args.verb)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args)
    except (GuardError, DegreeBoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
