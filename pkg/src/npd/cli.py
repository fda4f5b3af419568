"""Command line entry point: ``npd verify`` and ``npd table``."""
from __future__ import annotations

import argparse
import json
import sys

from .errors import NpdError
from .suites import SUITE_NAMES, Config, run_suite

TSV_FIELDS = ["check", "group", "params", "expected", "actual", "pass", "runtime_ms", "seed"]


def _qs(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")


def _dump(v) -> str:
    return json.dumps(v, sort_keys=True, separators=(",", ":"))


def format_results(results, fmt: str) -> str:
    lines = []
    if fmt == "tsv":
        lines.append("\t".join(TSV_FIELDS))
        for r in results:
            d = r.to_dict()
            lines.append("\t".join(v if isinstance(v, str) else _dump(v)
                                   for v in (d[k] for k in TSV_FIELDS)))
    else:
        lines.extend(_dump(r.to_dict()) for r in results)
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    cfg = Config(seed=args.seed, max_n=args.max_n, qs=args.q, timings=args.timings)
    results = run_suite(args.suite, cfg)
    text = format_results(results, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    failed = [r for r in results if not r.passed]
    for r in failed:
        print(f"FAIL {r.check} {r.group} {_dump(r.params)}", file=sys.stderr)
    return 0 if not failed else 1


def cmd_table(args) -> int:
    from .characters import character_table
    print(_dump(character_table(args.n, args.group).to_json()))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="npd", description="Exact checks on products of normal subsets.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", default="all", choices=["all"] + SUITE_NAMES, help="suite name or 'all'")
    v.add_argument("--max-n", type=int, default=None, help="override the default degree cap")
    v.add_argument("--q", type=_qs, default=None, help="field sizes, e.g. 2,3")
    v.add_argument("--seed", type=int, default=0, help="root seed for per-check seeds")
    v.add_argument("--format", choices=["json", "tsv"], default="json", help="output format")
    v.add_argument("--out", default=None, help="write results here instead of stdout")
    v.add_argument("--timings", action="store_true", help="record wall-clock runtime_ms (breaks byte-identity)")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="print a character table as JSON")
    t.add_argument("n", type=int)
    t.add_argument("--group", choices=["Sn", "An"], default="Sn")
    t.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NpdError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
