"""Command-line front-end: enumerate, compose, verify, export.

Exit codes: 0 success, 1 verification failure, 2 usage error.  Output is
byte-deterministic for a fixed command line: every listing is sorted and
JSON is emitted with sorted keys.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import anticyclic, lattice
from . import noncrossing as nc
from . import projective as pj
from . import verify as vf
from .dendriform import DendElem
from .errors import DegreeError, TamariError
from .trees import enumerate_trees, from_text

HARD_CAP = 9


@dataclass
class Config:
    max_degree: int = 6
    fmt: str = "text"

    def __post_init__(self) -> None:
        if not 1 <= self.max_degree <= HARD_CAP:
            raise DegreeError(f"max degree must be in 1..{HARD_CAP}")


class UsageError(Exception):
    pass


def _parse_operand(text: str) -> DendElem:
    """A tree literal like ``(o (o o))`` or an element JSON document."""
    text = text.strip()
    if text.startswith("{"):
        try:
            return DendElem.from_json(text)
        except (KeyError, ValueError, TypeError) as exc:
            raise UsageError(f"bad element JSON: {exc}") from exc
    try:
        return DendElem.basis(from_text(text))
    except ValueError as exc:
        raise UsageError(f"bad tree literal {text!r}: {exc}") from exc


def _emit(args, payload: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def cmd_enumerate(args) -> int:
    cfg = Config(max_degree=args.max_degree, fmt=args.format)
    n = args.n
    if not 1 <= n <= cfg.max_degree:
        raise UsageError(f"n must be in 1..{cfg.max_degree} (raise --max-degree)")
    if args.kind == "trees":
        items = [t.text for t in enumerate_trees(n)]
    elif args.kind == "nct":
        items = [nc.ncp_to_json_obj(p) for p in nc.enumerate_nct(n, cfg.max_degree)]
    elif args.kind == "ncp":
        items = [nc.ncp_to_json_obj(p) for p in nc.enumerate_ncp(n, cfg.max_degree)]
    else:
        table = pj.projective_table(n)
        items = [
            {
                "tree": x.text,
                "element": pe.elem.to_json_obj(),
                "nct": nc.ncp_to_json_obj(pe.nct),
            }
            for x, pe in sorted(table.items(), key=lambda kv: kv[0].text)
        ]
    if cfg.fmt == "json":
        doc = {"kind": args.kind, "n": n, "count": len(items), "items": items}
        _emit(args, json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        lines = [i if isinstance(i, str) else json.dumps(i, sort_keys=True) for i in items]
        lines.append(f"count: {len(items)}")
        _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_compose(args) -> int:
    a = _parse_operand(args.a)
    b = _parse_operand(args.b)
    from . import dendriform as dd

    try:
        if args.op == "circ":
            result = dd.compose(a, args.i, b)
        elif args.op == "star":
            result = dd.star(a, b)
        elif args.op == "diese":
            result = anticyclic.diese(a, b)
        elif args.op == "over":
            result = dd.over_elem(a, b)
        else:
            result = dd.under_elem(a, b)
    except DegreeError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "text":
        _emit(args, repr(result) + "\n")
    else:
        _emit(args, json.dumps(result.to_json_obj(), indent=2, sort_keys=True) + "\n")
    return 0


def cmd_verify(args) -> int:
    if args.suite == "all":
        ids = vf.suite_ids()
    else:
        ids = [s.strip() for s in args.suite.split(",") if s.strip()]
        unknown = [i for i in ids if i not in vf.SUITES]
        if unknown:
            raise UsageError(f"unknown suite(s): {', '.join(unknown)}")
    results = vf.run_suites(ids, max_degree=args.max_degree, jobs=args.jobs)
    ok = all(r.passed for r in results)
    if args.format == "text":
        lines = [
            f"{'PASS' if r.passed else 'FAIL'} {r.suite} "
            f"(degree <= {r.max_degree}, {r.checks} checks, {r.seconds:.2f}s)"
            + ("" if r.passed else f"  {r.failures[:1]}")
            for r in results
        ]
        lines.append(f"{'PASS' if ok else 'FAIL'}: {sum(r.passed for r in results)}"
                     f"/{len(results)} suites")
        _emit(args, "\n".join(lines) + "\n")
    else:
        doc = {
            "passed": ok,
            "max_degree": args.max_degree,
            "suites": [r.to_json_obj() for r in results],
        }
        _emit(args, json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return 0 if ok else 1


def cmd_export(args) -> int:
    cfg = Config(max_degree=args.max_degree, fmt=args.format)
    n = args.n
    if not 1 <= n <= cfg.max_degree:
        raise UsageError(f"n must be in 1..{cfg.max_degree} (raise --max-degree)")
    obj, fmt = args.object, args.format
    if obj == "hasse" and fmt == "dot":
        payload = lattice.hasse_dot(n)
    elif obj == "hasse" and fmt == "json":
        payload = lattice.matrices_json(n)
    elif obj == "theta" and fmt == "json":
        payload = anticyclic.matrices_json(n)
    elif obj == "nct" and fmt == "json":
        items = [nc.ncp_to_json_obj(p) for p in nc.enumerate_nct(n, cfg.max_degree)]
        payload = json.dumps(
            {"kind": "nct", "n": n, "count": len(items), "items": items},
            indent=2,
            sort_keys=True,
        ) + "\n"
    elif obj == "nct" and fmt == "dot":
        plants = nc.enumerate_nct(n, cfg.max_degree)
        payload = "".join(
            nc.ncp_dot(p, name=f"nct_{n}_{k}") for k, p in enumerate(plants)
        )
    elif obj == "nct" and fmt == "svg":
        payload = nc.ncp_svg(nc.enumerate_nct(n, cfg.max_degree))
    else:
        raise UsageError(f"unsupported combination: {obj} as {fmt}")
    _emit(args, payload)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tamari",
        description="Tamari lattices, the dendriform operad and noncrossing trees",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enumerate", help="list a combinatorial family")
    p_enum.add_argument("kind", choices=["trees", "nct", "ncp", "projectives"])
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--max-degree", type=int, default=6, dest="max_degree")
    p_enum.add_argument("--format", choices=["text", "json"], default="text")
    p_enum.add_argument("--output")
    p_enum.set_defaults(fn=cmd_enumerate)

    p_comp = sub.add_parser("compose", help="compose two elements")
    p_comp.add_argument("op", choices=["circ", "star", "diese", "over", "under"])
    p_comp.add_argument("a", help="tree literal or element JSON")
    p_comp.add_argument("b", help="tree literal or element JSON")
    p_comp.add_argument("--i", type=int, default=1, help="slot for circ")
    p_comp.add_argument("--format", choices=["text", "json"], default="json")
    p_comp.add_argument("--output")
    p_comp.set_defaults(fn=cmd_compose)

    p_ver = sub.add_parser("verify", help="run verification suites")
    p_ver.add_argument("--suite", default="all", help="'all' or comma-separated ids")
    p_ver.add_argument("--max-degree", type=int, default=6, dest="max_degree")
    p_ver.add_argument("--jobs", type=int, default=1)
    p_ver.add_argument("--format", choices=["text", "json"], default="json")
    p_ver.add_argument("--output")
    p_ver.add_argument("--list", action="store_true", help="list suite ids and exit")
    p_ver.set_defaults(fn=cmd_verify)

    p_exp = sub.add_parser("export", help="write a structure to DOT/JSON/SVG")
    p_exp.add_argument("object", choices=["hasse", "nct", "theta"])
    p_exp.add_argument("--n", type=int, required=True)
    p_exp.add_argument("--format", choices=["dot", "json", "svg"], required=True)
    p_exp.add_argument("--max-degree", type=int, default=6, dest="max_degree")
    p_exp.add_argument("--output")
    p_exp.set_defaults(fn=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.list:
        sys.stdout.write("\n".join(vf.suite_ids()) + "\n")
        return 0
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DegreeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TamariError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
