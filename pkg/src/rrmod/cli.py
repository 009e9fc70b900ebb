"""Command line entry point: ``rrmod <subcommand> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 on bad usage.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from .cusps import GroupDesc, cusp_width, enumerate_cusps

DEFAULT_ORDER = 60


def default_prec() -> int:
    raw = os.environ.get("RRMOD_DEFAULT_PREC")
    if raw is None:
        return 192
    try:
        p = int(raw)
    except ValueError:
        raise UsageError(f"RRMOD_DEFAULT_PREC must be an integer, got {raw!r}") from None
    if p < 64:
        raise UsageError("RRMOD_DEFAULT_PREC must be at least 64")
    return p


class UsageError(Exception):
    pass


def parse_group(text: str) -> GroupDesc:
    t = text.replace(" ", "").replace("Γ", "Gamma").lower()
    m = re.fullmatch(r"gamma0\((\d+)\)", t)
    if m:
        return GroupDesc.gamma0(int(m[1]))
    m = re.fullmatch(r"gamma1\((\d+)\)", t)
    if m:
        return GroupDesc.gamma1(int(m[1]))
    m = re.fullmatch(r"gamma1\((\d+)\)(?:cap|&|∩)gamma0\((\d+)\)", t)
    if m:
        N, M = int(m[1]), int(m[2])
        if M % N:
            raise UsageError(f"Gamma0 level {M} must be a multiple of {N}")
        return GroupDesc.mixed(N, M // N)
    raise UsageError(f"unrecognised group {text!r}; use Gamma0(m), Gamma1(N) or Gamma1(N)capGamma0(M)")


def _spec_from_args(args):
    from .etaforms import L_QUOTIENT, K_QUOTIENT, F_QUOTIENT, R_QUOTIENT, parse_spec, rab_quotient

    if args.spec:
        return parse_spec(args.spec)
    name = args.function
    m = re.fullmatch(r"rab\((-?\d+),\s*(-?\d+)\)", name)
    if m:
        return rab_quotient(int(m[1]), int(m[2]))
    table = {"l": L_QUOTIENT, "k": K_QUOTIENT, "f": F_QUOTIENT, "r": R_QUOTIENT}
    if name not in table:
        raise UsageError(f"no quotient form for function {name!r}")
    spec = table[name]
    if getattr(args, "scale", 1) != 1:
        spec = spec.scaled(args.scale)
    return spec


# ---- subcommands --------------------------------------------------------------


def cmd_qexp(args) -> int:
    from .etaforms import named_series, quotient_series

    if args.order < 1:
        raise UsageError("--order must be positive")
    s = quotient_series(_spec_from_args(args), args.order) if args.spec else named_series(args.function, args.order)
    print(s.to_json() if args.json else s)
    return 0


def cmd_cusps(args) -> int:
    G = parse_group(args.group)
    reps = enumerate_cusps(G)
    if args.json:
        print(json.dumps({"group": str(G), "cusps": [{"cusp": str(x), "width": cusp_width(G, x)} for x in reps]}))
    else:
        print(f"{G}: {len(reps)} cusps")
        for x in reps:
            print(f"  {str(x):>8}  width {cusp_width(G, x)}")
    return 0


def cmd_orders(args) -> int:
    from .orders import order_table

    G = parse_group(args.group)
    table = order_table(_spec_from_args(args), G)
    if args.json:
        print(json.dumps({
            "group": str(G),
            "orders": {str(x): str(o) for x, o in table.entries.items()},
            "degree": str(table.degree()),
        }))
    else:
        print(table.format())
        print(f"divisor degree {table.degree()}")
    return 0


def cmd_modeq(args) -> int:
    from .modeq import derive_modeq, verify_modeq

    if args.level < 1:
        raise UsageError("--level must be positive")
    L = derive_modeq(args.level)
    status = 0
    out = {"level": args.level, "coeffs": json.loads(L.to_json())}
    if args.verify is not None:
        if args.verify < 50:
            raise UsageError("--verify needs T >= 50")
        chk = verify_modeq(L, args.level, args.verify)
        out["verified_through"] = args.verify if chk else None
        if not chk:
            out["first_failure"] = str(chk.first_failure)
            status = 1
    if args.json:
        print(json.dumps(out))
    else:
        print(L)
        if args.verify is not None:
            print(f"verify through q^{args.verify}: {'ok' if status == 0 else 'FAILED at q^' + out['first_failure']}")
    return status


def cmd_classpoly(args) -> int:
    from .classfield import class_polynomial

    if args.disc >= 0 or args.disc % 4:
        raise UsageError("--disc must be a negative discriminant divisible by 4")
    F = class_polynomial(args.disc, 10, args.prec)
    if args.json:
        d = F.to_dict()
        d["coeffs"] = [int(c) for c in F.coeffs]
        print(json.dumps(d))
    else:
        print(F.format())
    return 0


def cmd_eval(args) -> int:
    from .numeric import BigComplex, ConvergenceError, eval_product

    try:
        tau = BigComplex.parse(args.tau, args.prec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if tau.im <= 0:
        raise UsageError("tau must lie in the upper half-plane")
    try:
        v = eval_product(args.function, tau, args.prec)
    except (ValueError, TypeError, ConvergenceError) as exc:
        raise UsageError(str(exc)) from None
    print(v)
    return 0


def cmd_verify_suite(args) -> int:
    from .suite import run_suite

    rep = run_suite(quick=args.quick, prec=args.prec)
    print(rep.format())
    n_fail = sum(1 for ok in rep.checks.values() if not ok)
    print(f"{len(rep.checks) - n_fail}/{len(rep.checks)} checks passed")
    return 0 if n_fail == 0 else 1


def build_parser(prec: int) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rrmod", description="Rogers-Ramanujan / l(tau) toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    def function_args(sp, default="l"):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--function", default=default, help="r, k, l, f, j, eta or rab(a,b) (default %(default)s)")
        g.add_argument("--spec", help="quotient spec, e.g. 'geneta 10: {1: -2, 2: 3, 3: 2, 4: -3}'")

    sp = sub.add_parser("qexp", help="print a q-expansion")
    function_args(sp)
    sp.add_argument("--order", type=int, default=DEFAULT_ORDER, help="number of terms (default %(default)s)")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_qexp)

    sp = sub.add_parser("cusps", help="inequivalent cusps and widths")
    sp.add_argument("--group", default="Gamma1(10)", help="e.g. Gamma0(10), Gamma1(10), Gamma1(10)capGamma0(20)")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_cusps)

    sp = sub.add_parser("orders", help="orders of a quotient at every cusp")
    function_args(sp)
    sp.add_argument("--scale", type=int, default=1, help="replace tau by scale*tau (named functions only)")
    sp.add_argument("--group", default="Gamma1(10)")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_orders)

    sp = sub.add_parser("modeq", help="derive the modular equation of level n for l")
    sp.add_argument("--level", type=int, required=True)
    sp.add_argument("--verify", type=int, metavar="T", help="also check the equation through q^T")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_modeq)

    sp = sub.add_parser("classpoly", help="class polynomial F_10 of l at sqrt(d_K)/2")
    sp.add_argument("--disc", type=int, required=True)
    sp.add_argument("--prec", type=int, default=prec, help="bits (default %(default)s)")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_classpoly)

    sp = sub.add_parser("eval", help="evaluate a function at tau")
    sp.add_argument("--function", default="l")
    sp.add_argument("--tau", required=True, help="e.g. i, i/2, 0.1+1.3i")
    sp.add_argument("--prec", type=int, default=prec, help="bits (default %(default)s)")
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("verify-suite", help="run every identity and invariant check")
    sp.add_argument("--quick", action="store_true", help="skip level 13 and the larger class polynomials")
    sp.add_argument("--prec", type=int, default=prec)
    sp.set_defaults(func=cmd_verify_suite)
    return p


def run(argv=None) -> int:
    try:
        parser = build_parser(default_prec())
    except UsageError as exc:
        print(f"rrmod: error: {exc}", file=sys.stderr)
        return 2
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "prec", 64) < 64:
        print("rrmod: error: --prec must be at least 64", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"rrmod: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"rrmod: error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        # a computation that could not be certified
        print(f"rrmod: failed: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
