"""
Command-line front end.

Exit codes: 0 on success, 1 when a verification or bijection check fails,
2 on bad arguments.

    cyclic-avoid count --one-line 3421,4321 --cycle 213 --n 7
    cyclic-avoid seq --spec "4321;213" --from 2 --to 10 --format csv
    cyclic-avoid verify --theorem C3.6 --to 10
    cyclic-avoid bijection --map L22 --spec "3421,4321;213" --n 8
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import formats
from .bijections import MAPS, TRANSPORT_CASES, get_map, round_trip_check, transport_check
from .enumerator import ENUMERATION_CAP, count_class, enumerate_class, partition_by_two, sequence, split_plus_minus
from .errors import UnknownTheorem
from .perm import AvoidanceSpec, Pattern, format_cycle_word
from .verify import REGISTRY, verify_theorem


class UsageError(Exception):
    pass


def _spec_from(args) -> AvoidanceSpec:
    if args.spec is not None:
        if args.one_line is not None or args.cycle is not None:
            raise UsageError("use either --spec or --one-line/--cycle, not both")
        return AvoidanceSpec.parse(args.spec)
    if args.cycle is None and args.one_line is None:
        raise UsageError("a class is required: --spec 'p1,p2;cycle' or --one-line/--cycle")
    one_line = [p for p in (args.one_line or "").split(",") if p.strip()]
    return AvoidanceSpec.of(one_line, args.cycle)


def _emit(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_count(args) -> int:
    spec = _spec_from(args)
    print(count_class(args.n, spec, jobs=args.jobs))
    return 0


def cmd_enum(args) -> int:
    spec = _spec_from(args)
    lines = (format_cycle_word(w) + "\n" for w in enumerate_class(args.n, spec))
    if args.output:
        _emit("".join(lines), args.output)
    else:
        for line in lines:
            sys.stdout.write(line)
    return 0


def cmd_seq(args) -> int:
    spec = _spec_from(args)
    rows = sequence(spec, args.n_from, args.n_to, cap=args.cap, jobs=args.jobs)
    _emit(formats.render(rows, args.format), args.output)
    return 0


def cmd_verify(args) -> int:
    tau = Pattern.parse(args.tau) if args.tau else None
    report = verify_theorem(args.theorem, args.n_from, args.n_to, tau=tau, jobs=args.jobs)
    text = report.to_json() + "\n" if args.format == "json" else report.to_table() + "\n"
    _emit(text, args.output)
    return 0 if report.all_match else 1


def cmd_bijection(args) -> int:
    bm = get_map(args.map)
    if args.spec is not None:
        spec_in = AvoidanceSpec.parse(args.spec)
        if args.spec_out is not None:
            spec_out = AvoidanceSpec.parse(args.spec_out)
        elif bm.map_id == "INV":
            spec_out = spec_in.mirror()
        else:
            spec_out = spec_in
        cases = [(spec_in, spec_out, None)]
        for case in TRANSPORT_CASES.get(bm.map_id, []):
            if (case.spec_in, case.spec_out) == (spec_in, spec_out):
                cases = [(spec_in, spec_out, case.where)]
    else:
        cases = [(c.spec_in, c.spec_out, c.where) for c in TRANSPORT_CASES[bm.map_id]]
    n_from = args.n_from if args.n_from is not None else args.n
    ok = True
    out = []
    for n in range(n_from, args.n + 1):
        passed = round_trip_check(bm.map_id, n)
        ok &= passed
        out.append({"map": bm.map_id, "check": "round_trip", "n": n, "pass": passed})
        for spec_in, spec_out, where in cases:
            passed = transport_check(bm.map_id, spec_in, spec_out, n, where)
            ok &= passed
            out.append({"map": bm.map_id, "check": "transport", "spec_in": str(spec_in),
                        "spec_out": str(spec_out), "n": n, "pass": passed})
    _emit("".join(json.dumps(row) + "\n" for row in out), args.output)
    return 0 if ok else 1


def cmd_partition(args) -> int:
    spec = _spec_from(args)
    part = partition_by_two(args.n, spec)
    splits = [split_plus_minus(args.n, spec, r) for r in range(4, args.n + 1)]
    if args.format == "json":
        doc = {"n": args.n, "spec": str(spec), "total": part.total,
               "counts_by_j": {str(j): c for j, c in part.counts_by_j.items()},
               "plus_minus": [{"r": s.r, "plus": s.plus_count, "minus": s.minus_count}
                              for s in splits]}
        text = json.dumps(doc) + "\n"
    else:
        lines = [f"class ({spec}), n={args.n}, total={part.total}", "  j  count"]
        lines += [f"{j:>3}  {c}" for j, c in part.counts_by_j.items()]
        if splits:
            lines.append("  r   plus  minus")
            lines += [f"{s.r:>3}  {s.plus_count:>5}  {s.minus_count:>5}" for s in splits]
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclic-avoid",
        description="Cyclic permutations avoiding patterns in one-line and standard cycle form.")
    sub = parser.add_subparsers(dest="command", required=True)

    cls = argparse.ArgumentParser(add_help=False)
    cls.add_argument("--spec", help="class as 'p1,p2;cycle', e.g. '3421,4321;213'")
    cls.add_argument("--one-line", help="comma-separated one-line patterns")
    cls.add_argument("--cycle", help="cycle-word pattern")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", help="write to this file instead of stdout")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for counting")

    p = sub.add_parser("count", parents=[cls, common], help="size of the class at n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enum", parents=[cls, common], help="list the class members as cycle words")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("seq", parents=[cls, common], help="class sizes over a range of n")
    p.add_argument("--from", dest="n_from", type=int, default=1)
    p.add_argument("--to", dest="n_to", type=int, required=True)
    p.add_argument("--format", choices=formats.FORMATS, default="table")
    p.add_argument("--cap", type=int, default=ENUMERATION_CAP)
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("verify", parents=[common], help="compare brute-force counts to a closed form")
    p.add_argument("--theorem", required=True, choices=sorted(REGISTRY))
    p.add_argument("--tau", help="pattern ending in 21 for the parametric family T3.4")
    p.add_argument("--from", dest="n_from", type=int, default=None)
    p.add_argument("--to", dest="n_to", type=int, required=True)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bijection", parents=[common], help="round-trip and transport checks for a map")
    p.add_argument("--map", required=True, choices=sorted(MAPS))
    p.add_argument("--spec", help="class checked on the domain side (default: the map's presets)")
    p.add_argument("--spec-out", help="class checked on the image side (default: same, or mirror for INV)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--from", dest="n_from", type=int, default=None, help="sweep sizes from here up to --n")
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("partition", parents=[cls, common], help="counts by the cycle position of 2")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_partition)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, UnknownTheorem, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"{parser.prog}: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
