"""Command line front end.

    qhook verify class <id> [lambda=.. mu=.. k=.. m=.. eps=.. n=..]
    qhook verify all [--max-part P] [--max-km K] [--max-n N] [--out FILE]
    qhook verify batch FILE [--out FILE]
    qhook gf (--poset FILE | --instance SPEC) [--N n] [--hlf]
    qhook hooks (--poset FILE | --instance SPEC)
    qhook qint --expr FILE
    qhook pfe --id NAME --n K

Exit status: 0 when every check passes, 1 on any failure, 2 on bad input.
Reports leave out timings unless --timings is given, so reruns compare equal.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import classes as C
from .classes.partial_fractions import PF_IDS, verify_partial_fraction
from .exprfile import parse_qint
from .gfseries import DEFAULT_N, check_hlf, gf_truncated
from .posets import HookError, build_PnmX, hook_lengths, is_d_complete, parse_poset
from .qintegral import integrate_region


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None


def _load_poset(args):
    if bool(args.poset) == bool(args.instance):
        raise InputError("give exactly one of --poset or --instance")
    if args.poset:
        return parse_poset(_read(args.poset)), Path(args.poset).name
    inst = C.parse_instance_line(args.instance)
    n, m, X = C.class_spec(inst)
    return build_PnmX(n, m, X), C.format_instance(inst)


def _run_one(inst, direct12=False):
    return C.verify_class(inst, direct12=direct12)


def _run_instances(insts, jobs: int, direct12: bool):
    insts = sorted(insts, key=C.ClassInstance.key)
    if jobs > 1 and len(insts) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            reports = list(ex.map(_run_one, insts, [direct12] * len(insts), chunksize=4))
    else:
        reports = [_run_one(i, direct12) for i in insts]
    return sorted(reports, key=lambda r: r.instance.key())


def _emit(lines, out: str | None):
    text = "".join(line + "\n" for line in lines)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_verify(args) -> int:
    if args.what == "class":
        if not args.rest:
            raise InputError("verify class needs a class id")
        insts = [C.parse_instance_line("class " + " ".join(args.rest))]
    elif args.what == "all":
        if args.rest:
            raise InputError(f"unexpected arguments {args.rest}")
        bounds = C.SweepBounds(args.max_part, args.max_km, args.max_n)
        ids = [C.canonical_id(c) for c in args.classes.split(",")] if args.classes else C.CLASS_IDS
        insts = C.sweep(ids, bounds)
    else:
        if len(args.rest) != 1:
            raise InputError("verify batch needs one instance file")
        insts = C.parse_instance_file(_read(args.rest[0]))
    reports = _run_instances(insts, args.jobs, args.direct12)
    _emit([r.line(args.timings) for r in reports], args.out)
    bad = sum(not r.passed for r in reports)
    print(f"{len(reports) - bad} passed, {bad} failed", file=sys.stderr)
    return 1 if bad else 0


def cmd_gf(args) -> int:
    P, desc = _load_poset(args)
    if args.N < 0:
        raise InputError("N must be nonnegative")
    print(" ".join(map(str, gf_truncated(P, args.N).as_ints())))
    if args.hlf:
        res = is_d_complete(P)
        if not res.ok:
            print(f"not d-complete: {res.witness}")
            return 1
        rep = check_hlf(P, args.N, desc)
        print(rep.line(args.timings))
        return 0 if rep.match else 1
    return 0


def cmd_hooks(args) -> int:
    P, _ = _load_poset(args)
    try:
        h = hook_lengths(P)
    except HookError as e:
        print(f"no hook lengths: {e}")
        return 1
    print(" ".join(map(str, h)))
    return 0


def cmd_qint(args) -> int:
    prob = parse_qint(_read(args.expr))
    print(integrate_region(prob.expr, prob.region))
    return 0


def cmd_pfe(args) -> int:
    if args.id not in PF_IDS:
        raise InputError(f"unknown identity {args.id!r}; choose from {', '.join(PF_IDS)}")
    if args.n < 1:
        raise InputError("n must be positive")
    rep = verify_partial_fraction(args.id, args.n, args.max_part)
    print(rep.line(args.timings))
    return 0 if rep.passed else 1


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qhook", description="Hook length verification for d-complete posets.")
    sub = p.add_subparsers(dest="cmd", required=True)

    v = sub.add_parser("verify", help="check class identities")
    v.add_argument("what", choices=["class", "all", "batch"])
    v.add_argument("rest", nargs="*")
    v.add_argument("--max-part", type=int, default=2)
    v.add_argument("--max-km", type=int, default=2)
    v.add_argument("--max-n", type=int, default=4)
    v.add_argument("--classes", help="comma separated class ids (default: all)")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--direct12", action="store_true", help="also run the six-variable class 12 integral")
    v.add_argument("--out")
    v.add_argument("--timings", action="store_true")
    v.set_defaults(func=cmd_verify)

    for name, func, doc in (("gf", cmd_gf, "truncated P-partition generating function"),
                            ("hooks", cmd_hooks, "hook lengths in file order")):
        g = sub.add_parser(name, help=doc)
        g.add_argument("--poset")
        g.add_argument("--instance", help='e.g. "class 3 lambda=1,0 mu=0,0 m=1"')
        if name == "gf":
            g.add_argument("--N", type=int, default=DEFAULT_N)
            g.add_argument("--hlf", action="store_true", help="also compare with the hook product")
            g.add_argument("--timings", action="store_true")
        g.set_defaults(func=func)

    q = sub.add_parser("qint", help="evaluate a q-integral file")
    q.add_argument("--expr", required=True)
    q.set_defaults(func=cmd_qint)

    f = sub.add_parser("pfe", help="check a partial-fraction identity")
    f.add_argument("--id", required=True)
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--max-part", type=int, default=3, help="alt_identity partition bound")
    f.add_argument("--timings", action="store_true")
    f.set_defaults(func=cmd_pfe)
    return p


def run_cli(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (InputError, ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())
