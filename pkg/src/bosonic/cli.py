"""
Command-line front end.

    bosonic hl-r --rank 2 --lambda 1,0 --json
    bosonic partition-function --model colored --family R --rank 3 \\
        --lambda 2,1,0 --top-flag 1,2,3 --right-flag 2,1,3 --json
    bosonic verify --check ybe-colored --rank 3 --mmax 3 --json
    bosonic sigma --rank 3 --lambda 1,0,-1 --w 2,1,3 --method lattice --json

Exit status: 0 on success (all requested checks pass), 1 if a verification
fails, 2 on usage errors. Output is deterministic for fixed arguments.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import demazure, lattice, spherical, verify
from .laurent import LaurentPoly
from .weights import Family, weight_table
from .weyl import Permutation, iter_weights, partitions_in_box

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

CHECKS = (
    "ybe-uncolored", "ybe-colored", "ybe-aux", "local-lifting", "global-lifting",
    "colored-evaluation", "uncolored-pf", "flag-recursion", "monostatic", "operators", "tau",
    "sigma", "macdonald", "k-biinvariance",
)

DEMAZURE_OPS = ("partial", "partial-circ", "dl", "dl-inv", "dl-word", "omega", "theta")


class UsageError(ValueError):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _env_jobs() -> int:
    return verify.jobs_from_env(1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bosonic", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, lam=True, family=False):
        p.add_argument("--rank", type=int, required=True)
        if lam:
            p.add_argument("--lambda", dest="lam", type=_int_list, required=True,
                           help="comma-separated parts, e.g. 2,1,0")
        if family:
            p.add_argument("--family", choices=["P", "R"], default="R")
        p.add_argument("--json", action="store_true", help="emit canonical JSON")

    p = sub.add_parser("hl-p", help="Hall-Littlewood P-polynomial")
    common(p)
    p = sub.add_parser("hl-r", help="Hall-Littlewood R-polynomial")
    common(p)

    p = sub.add_parser("partition-function", help="partition function of a lattice system")
    common(p, family=True)
    p.add_argument("--model", choices=["uncolored", "colored"], default="uncolored")
    p.add_argument("--top-flag", type=_int_list)
    p.add_argument("--right-flag", type=_int_list)
    p.add_argument("--M", type=int, help="rightmost column label (default min(lambda_r, 0))")
    p.add_argument("--N", type=int, help="leftmost column label (default max(lambda_1, 0))")
    p.add_argument("--method", choices=["sweep", "enumerate", "transfer"], default="sweep")
    p.add_argument("--dump-states", action="store_true",
                   help="print every state as a JSON line instead of the sum")

    p = sub.add_parser("tau", help="tau^lambda_{w,y}")
    common(p)
    p.add_argument("--w", type=_int_list, required=True, help="one-line notation")
    p.add_argument("--y", type=_int_list, required=True, help="one-line notation")

    p = sub.add_parser("demazure-apply", help="apply a divided-difference operator")
    common(p, lam=False)
    p.add_argument("--op", choices=DEMAZURE_OPS, required=True)
    p.add_argument("--index", type=int, help="simple reflection index i")
    p.add_argument("--w", type=_int_list, help="permutation for dl-word")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--monomial", type=_int_list, help="z-exponents of the input monomial")
    src.add_argument("--poly", help="input polynomial as JSON")

    p = sub.add_parser("sigma", help="Iwahori-spherical matrix coefficient")
    common(p)
    p.add_argument("--w", type=_int_list, help="one-line notation (required unless --method macdonald/sum)")
    p.add_argument("--method", choices=["lattice", "tau", "macdonald", "sum"], default="tau")

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("--check", choices=CHECKS, required=True)
    p.add_argument("--rank", type=int, default=3)
    p.add_argument("--lambda", dest="lam", type=_int_list)
    p.add_argument("--family", choices=["P", "R"], default="R")
    p.add_argument("--top-flag", type=_int_list)
    p.add_argument("--nmax", type=int, default=4, help="vertical occupancy bound")
    p.add_argument("--mmax", type=int, default=3, help="colored multiplicity bound")
    p.add_argument("--k", type=int, help="aux column color (default: all)")
    p.add_argument("--index", type=int, help="simple reflection index for flag-recursion")
    p.add_argument("--w", type=_int_list, help="permutation for flag-recursion")
    p.add_argument("--bound", type=int, default=2, help="|mu_i| bound for operator/tau sweeps")
    p.add_argument("--random", type=int, default=0, help="extra random inputs (operators)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--fault", action="store_true", help="inject a weight fault (negative control)")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (env BOSONIC_JOBS)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("dump-weights", help="print a Boltzmann weight table")
    p.add_argument("--kind", required=True, choices=[
        "uncolored", "monochrome", "fused", "rmatrix-uncolored", "rmatrix-colored", "rmatrix-aux"])
    p.add_argument("--family", choices=["P", "R"], default="R")
    p.add_argument("--rank", type=int, default=2)
    p.add_argument("--nmax", type=int, default=2)
    p.add_argument("--json", action="store_true")
    return parser


def _check_weight(args, dominant=False):
    if args.lam is None:
        raise UsageError("--lambda is required")
    if len(args.lam) != args.rank:
        raise UsageError(f"--lambda has {len(args.lam)} parts but --rank is {args.rank}")
    if dominant and any(a < b for a, b in zip(args.lam, args.lam[1:])):
        raise UsageError(f"--lambda {args.lam} must be weakly decreasing")
    return tuple(args.lam)


def _perm(values, rank, name) -> Permutation:
    if values is None:
        raise UsageError(f"--{name} is required")
    try:
        w = Permutation(tuple(values))
    except ValueError as exc:
        raise UsageError(f"--{name}: {exc}")
    if w.rank != rank:
        raise UsageError(f"--{name} has {w.rank} letters but --rank is {rank}")
    return w


def _emit_poly(f: LaurentPoly, args, out):
    print(f.to_json() if args.json else str(f), file=out)


def _cmd_hl(args, out, kind):
    lam = _check_weight(args, dominant=True)
    f = demazure.p_polynomial(lam) if kind == "P" else demazure.r_polynomial(lam)
    _emit_poly(f, args, out)
    return EXIT_OK


def _cmd_partition_function(args, out):
    lam = _check_weight(args, dominant=True)
    try:
        if args.model == "colored":
            spec = lattice.colored_system(lam, args.top_flag or (), args.right_flag or (),
                                          args.family, M=args.M, N=args.N)
        else:
            spec = lattice.uncolored_system(lam, args.family, M=args.M, N=args.N)
    except lattice.InvalidSystem as exc:
        raise UsageError(str(exc))
    if args.dump_states:
        for state in lattice.enumerate_states(spec):
            print(_dumps(state.to_dict()), file=out)
        return EXIT_OK
    if args.method == "transfer":
        if args.model != "uncolored":
            raise UsageError("--method transfer needs --model uncolored")
        f = lattice.partition_function_transfer(spec)
    elif args.method == "enumerate":
        f = lattice.partition_function_enumerated(spec)
    else:
        f = lattice.partition_function(spec)
    _emit_poly(f, args, out)
    return EXIT_OK


def _cmd_tau(args, out):
    lam = _check_weight(args)
    f = demazure.tau(lam, _perm(args.w, args.rank, "w"), _perm(args.y, args.rank, "y"))
    _emit_poly(f, args, out)
    return EXIT_OK


def _cmd_demazure(args, out):
    r = args.rank
    if args.monomial is not None:
        if len(args.monomial) != r:
            raise UsageError("--monomial length must equal --rank")
        f = LaurentPoly.monomial(args.monomial)
    else:
        try:
            f = LaurentPoly.from_json(args.poly)
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"--poly: {exc}")
        if f.rank != r:
            raise UsageError("--poly rank differs from --rank")
    single = {"partial": demazure.partial_op, "partial-circ": demazure.partial_circ_op,
              "dl": demazure.dl_apply, "dl-inv": demazure.dl_inv_apply}
    if args.op in single:
        if args.index is None or not 1 <= args.index < r:
            raise UsageError(f"--index must be in 1..{r - 1}")
        g = single[args.op](args.index, f)
    elif args.op == "dl-word":
        g = demazure.dl_word_apply(_perm(args.w, r, "w"), f)
    elif args.op == "omega":
        g = demazure.omega(f)
    else:
        g = demazure.theta_sum(f)
    _emit_poly(g, args, out)
    return EXIT_OK


def _cmd_sigma(args, out):
    lam = _check_weight(args, dominant=args.method == "macdonald")
    if args.method == "macdonald":
        value = spherical.macdonald_spherical(lam)
    elif args.method == "sum":
        value = spherical.spherical_sum(lam)
    else:
        w = _perm(args.w, args.rank, "w")
        fn = spherical.sigma_via_lattice if args.method == "lattice" else spherical.sigma_via_tau
        value = fn(lam, w)
    print(value.to_json() if args.json else str(value), file=out)
    return EXIT_OK


def _run_check(args) -> verify.VerificationReport:
    r = args.rank
    jobs = args.jobs if args.jobs is not None else _env_jobs()
    check = args.check
    if check == "ybe-uncolored":
        return verify.check_ybe_uncolored(args.family, args.nmax, args.fault, jobs)
    if check == "ybe-colored":
        return verify.check_ybe_colored(args.family, r, args.mmax, args.fault, jobs)
    if check == "ybe-aux":
        return verify.check_ybe_aux(args.family, r, args.k, args.mmax, args.fault, jobs)
    if check == "local-lifting":
        return verify.check_local_lifting(r, args.nmax, args.family)
    if check == "operators":
        return verify.check_operator_algebra(r, args.bound, args.random, args.seed)
    if check == "tau":
        return verify.check_tau_properties(r, args.bound)
    if check == "global-lifting":
        if args.lam is None:
            return verify.global_lifting_sweep(range(1, r + 1), 3, args.family)
        return verify.check_global_lifting(_check_weight(args, True), args.top_flag, r,
                                           args.family)
    if check == "uncolored-pf":
        if args.lam is None:
            return verify.uncolored_pf_sweep(range(1, r + 1), 4)
        return verify.check_uncolored_pf(_check_weight(args, True))
    if check == "monostatic":
        return verify.check_monostatic(_check_weight(args, True), args.top_flag, args.family)
    if check == "colored-evaluation":
        return verify.check_colored_evaluation(_check_weight(args, True), r, args.family)
    if check == "flag-recursion":
        w = _perm(args.w, r, "w") if args.w is not None else None
        return verify.check_flag_recursion(_check_weight(args, True), r, args.index, w, args.family)
    if check == "sigma":
        if args.lam is not None:
            w = _perm(args.w, r, "w") if args.w is not None else None
            return spherical.check_sigma_methods_agree(_check_weight(args), w)
        report = verify.VerificationReport("sigma-methods", {"rank": r, "bound": args.bound})
        for lam in iter_weights(r, -args.bound, args.bound):
            report.merge(spherical.check_sigma_methods_agree(lam))
        return report
    if check in ("macdonald", "k-biinvariance"):
        fn = spherical.check_macdonald if check == "macdonald" else spherical.check_k_biinvariance
        if args.lam is not None:
            return fn(_check_weight(args, True))
        report = verify.VerificationReport(check, {"rank": r, "max_part": 3})
        for lam in partitions_in_box(r, 3):
            report.merge(fn(lam))
        return report
    raise UsageError(f"unknown check {check}")


def _cmd_verify(args, out):
    if args.fault and not args.check.startswith("ybe"):
        raise UsageError("--fault applies to the ybe-* checks only")
    report = _run_check(args)
    if args.json:
        print(_dumps(report.to_dict()), file=out)
    else:
        print(report.summary(), file=out)
        for key, value in report.details.items():
            print(f"{key}: {value}", file=out)
        for failure in report.failures[:5]:
            print(f"  failure {_dumps(verify._jsonable(failure.config))}: "
                  f"{failure.lhs} != {failure.rhs}", file=out)
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_dump_weights(args, out):
    rows = weight_table(args.kind, Family.parse(args.family), args.rank, args.nmax)
    if args.json:
        print(_dumps(rows), file=out)
    else:
        for row in rows:
            weight = LaurentPoly.from_dict(row["weight"])
            spins = ", ".join(f"{k}={v}" for k, v in row.items() if k != "weight")
            print(f"{spins}: {weight}", file=out)
    return EXIT_OK


COMMANDS = {
    "hl-p": lambda a, o: _cmd_hl(a, o, "P"),
    "hl-r": lambda a, o: _cmd_hl(a, o, "R"),
    "partition-function": _cmd_partition_function,
    "tau": _cmd_tau,
    "demazure-apply": _cmd_demazure,
    "sigma": _cmd_sigma,
    "verify": _cmd_verify,
    "dump-weights": _cmd_dump_weights,
}


def run(argv: Sequence[str] | None = None, out=None) -> int:
    """Parse ``argv`` and dispatch; returns the exit status."""
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "rank", 1) is not None and getattr(args, "rank", 1) < 1:
        print("bosonic: error: --rank must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"bosonic: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
