"""Command-line front end.

Exit codes: 0 success, 1 a mathematical check failed, 2 bad usage or input.
All results are JSON on stdout.
"""
import argparse
import json
import sys
from fractions import Fraction

from . import serialize as ser
from .exactcore import SymCoeff
from .formsdb import FORMS, form
from .laplacian import LiftProblem, LiftError, eigenpoly, solve_alpha, solve_beta, build_lift, verify_eigen
from .nhform import NHForm, raise_op, lower4, nh_derive, delta_power
from .quasimod import (QMForm, qm_derive, qm_div_neg2iy, qm_delta, qm_raise, qm_lower, qm_shift1,
                       qm_mul, verify_transformation)
from .rankincohen import rc_solve, rc_apply
from .suites import SUITES, run_suite
from .vvops import (VVTuple, qm_to_tuple, tuple_to_qm, vv_raise, vv_ibar_over, vv_D, vv_lower,
                    vv_tilde_delta, vv_weight, vv_lowering, vv_raising)


class UsageError(Exception):
    pass


def rational(text) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as err:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from err


def parse_tau(text) -> complex:
    try:
        tau = complex(text.replace(" ", "").replace("i", "j"))
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from err
    if tau.imag <= 0:
        raise argparse.ArgumentTypeError("tau must lie in the upper half-plane")
    return tau


def parse_gamma(text):
    try:
        g = tuple(int(x) for x in text.split(","))
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"gamma must be four integers: {text!r}") from err
    if len(g) != 4 or g[0] * g[3] - g[1] * g[2] != 1:
        raise argparse.ArgumentTypeError("gamma must be 'a,b,c,d' with ad - bc = 1")
    return g


def load(source, order):
    """A form from a JSON file, '-' for stdin, or a built-in name such as E4."""
    if source in FORMS:
        return form(source, order)
    try:
        if source == "-":
            obj = json.load(sys.stdin)
        else:
            with open(source) as fh:
                obj = json.load(fh)
        return ser.form_from_json(obj)
    except OSError as err:
        raise UsageError(f"cannot read {source}: {err.strerror}") from err
    except (ValueError, KeyError, TypeError, AttributeError) as err:
        raise UsageError(f"malformed form in {source}: {err}") from err


def emit(obj, out):
    out.write(ser.dumps(obj, indent=2, sort_keys=True))
    out.write("\n")


def _expect(x, cls, what):
    if not isinstance(x, cls):
        raise UsageError(f"{what} needs a {cls.__name__}, got {type(x).__name__}")
    return x


def _need(args, name):
    v = getattr(args, name)
    if v is None:
        raise UsageError(f"--{name} is required for {args.op}")
    return v


def _triple(args):
    a, b, c = args.a, args.b, args.c
    if c is None:
        if a == 1:
            raise UsageError("c cannot be inferred when a = 1")
        c = (1 - a * b) / (1 - a)
    if a * b + (1 - a) * c != 1:
        raise UsageError("the triple must satisfy ab + (1-a)c = 1")
    return a, b, c


QM_OPS = {
    "derive": lambda f, a, g: qm_derive(f),
    "div-neg2iy": lambda f, a, g: qm_div_neg2iy(f),
    "delta": lambda f, a, g: qm_delta(f),
    "raise": lambda f, a, g: qm_raise(f, _need(a, "l")),
    "lower": lambda f, a, g: qm_lower(f),
    "shift1": lambda f, a, g: qm_shift1(f),
    "mul": lambda f, a, g: qm_mul(f, _expect(g, QMForm, "mul")),
    "to-tuple": lambda f, a, g: qm_to_tuple(f),
}
VV_OPS = {
    "vv-raise": lambda T, a: vv_raise(T),
    "vv-shift": lambda T, a: vv_ibar_over(T),
    "vv-D": lambda T, a: vv_D(T),
    "vv-lower": lambda T, a: vv_lower(T),
    "vv-tilde-delta": lambda T, a: vv_tilde_delta(T, _need(a, "l")),
    "vv-weight": lambda T, a: vv_weight(T),
    "lowering": lambda T, a: vv_lowering(T, _need(a, "b"), _need(a, "c")),
    "raising": lambda T, a: vv_raising(T, _need(a, "a")),
    "to-qm": lambda T, a: tuple_to_qm(T),
}
NH_OPS = {
    "nh-raise": lambda F, a: raise_op(F, _need(a, "l")),
    "nh-lower": lambda F, a: lower4(F),
    "nh-derive": lambda F, a: nh_derive(F),
    "delta-power": lambda F, a: delta_power(F, _need(a, "l"), int(_need(a, "s"))),
}


def cmd_apply(args, out):
    x = load(args.input, args.order)
    if args.op in QM_OPS:
        g = load(args.other, args.order) if args.other else None
        res = QM_OPS[args.op](_expect(x, QMForm, args.op), args, g)
    elif args.op in VV_OPS:
        res = VV_OPS[args.op](_expect(x, VVTuple, args.op), args)
    else:
        res = NH_OPS[args.op](_expect(x, NHForm, args.op), args)
    emit(res, out)
    return 0


def cmd_rc(args, out):
    try:
        R = rc_solve(args.n, args.k, args.l, args.d, args.e)
    except ArithmeticError as err:
        emit({"error": str(err)}, out)
        return 1
    result = {"n": R.n, "k": R.k, "l": R.l, "d": R.d, "e": R.e, "excluded": R.excluded,
              "kernel_dim": R.kernel_dim, "coefficients": R.bracket(0),
              "basis": [R.bracket(i) for i in range(len(R.basis))]}
    if args.apply:
        f, g = (_expect(load(p, args.order), QMForm, "rc --apply") for p in args.apply)
        if f.weight != args.k or g.weight != args.l or f.depth > args.d or g.depth > args.e:
            raise UsageError("the forms do not match --k/--d and --l/--e")
        result["bracket"] = rc_apply(f, g, args.n, R.bracket(args.basis))
    emit(result, out)
    return 0


def _problem(args):
    a, b, c = _triple(args)
    try:
        return LiftProblem(a, b, c, args.k, args.d)
    except ValueError as err:
        raise UsageError(str(err)) from err


def cmd_eigenpoly(args, out):
    prob = _problem(args)
    ep = eigenpoly(prob)
    info = dict(ep.info)
    if ep.branch.startswith("beta"):
        tb = solve_beta(prob)
        alpha = {str(s): b for s, b in enumerate(tb.betas)}
    else:
        table = solve_alpha(prob)
        alpha = {str(s): {"numerator": table.P[s], "denominator": table.N[s]} for s in table.N}
    result = {"branch": ep.branch, "classification": info, "alpha_table": alpha, "poly": ep.poly,
              "discriminant": ep.discriminant()}
    if ep.branch == "mu" and args.mu is None:
        result["note"] = "bivariate in (lambda, mu); pass --mu to get roots"
        result["roots"] = []
    else:
        roots, residual = ep.roots(args.mu or 0)
        result["rational_roots"] = [{"root": r, "multiplicity": m} for r, m in roots]
        result["roots"] = [r for r, _ in roots]
        result["residual"] = residual
    emit(result, out)
    return 0


def cmd_lift(args, out):
    prob = _problem(args)
    if args.phi:
        phi = _expect(load(args.phi, args.order), NHForm, "lift --phi")
    else:
        w = prob.k - 2 * prob.d
        phi = NHForm(w, {0: SymCoeff.gen("phi", w)})
    try:
        T = build_lift(prob, args.lam, phi, args.mu)
    except LiftError as err:
        emit({"error": str(err)}, out)
        return 1
    emit(T, out)
    return 0


def cmd_verify_eigen(args, out):
    T = _expect(load(args.input, args.order), VVTuple, "verify-eigen")
    a, b, c = _triple(args)
    ok, resid = verify_eigen(T, a, b, c, args.lam)
    emit({"eigen": ok, "residual": resid.trimmed()}, out)
    return 0 if ok else 1


def cmd_verify_transform(args, out):
    f = _expect(load(args.input, args.order), QMForm, "verify-transform")
    chk = verify_transformation(f, args.gamma, args.tau, args.tol)
    status = "pass" if chk.ok else ("inconclusive" if chk.inconclusive else "fail")
    emit({"status": status, "residual": chk.residual, "truncation_bound": chk.bound,
          "lhs": chk.lhs, "rhs": chk.rhs}, out)
    return 0 if chk.ok else 1


def cmd_forms(args, out):
    if args.action == "list":
        emit(sorted(FORMS), out)
        return 0
    if not args.name:
        raise UsageError("forms emit needs --name")
    f = form(args.name, args.order)
    emit(f if args.qm or f.depth > 0 else f.components[0], out)
    return 0


def _report_key(r):
    return (r.relation, json.dumps(ser.to_jsonable(r.params), sort_keys=True))


def cmd_suite(args, out):
    names = sorted(SUITES) if args.name == "all" else [args.name]
    all_ok = True
    results = []
    for name in names:
        res = run_suite(name, seed=args.seed, depth=args.depth)
        all_ok &= res.passed
        reports = sorted(res.reports, key=_report_key)
        counts = {}
        for r in reports:
            c = counts.setdefault(r.relation, {"pass": 0, "fail": 0})
            c["pass" if r.passed else "fail"] += 1
        entry = {"suite": name, "seed": args.seed, "passed": res.passed, "cases": len(reports),
                 "relations": counts, "failures": [r for r in reports if not r.passed][:args.max_failures],
                 "counterexamples": res.counterexamples[:args.max_failures]}
        if args.reports:
            entry["reports"] = reports
        results.append(entry)
    emit(results if len(results) > 1 else results[0], out)
    return 0 if all_ok else 1


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for random inputs (default 0)")
    common.add_argument("--order", type=int, default=argparse.SUPPRESS,
                        help="q-expansion order for built-in forms (default 40)")
    common.add_argument("--tol", type=float, default=argparse.SUPPRESS,
                        help="numeric tolerance (default 1e-6)")

    p = argparse.ArgumentParser(prog="qmforms", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("apply", parents=[common], help="apply an operator to a form")
    sp.add_argument("op", choices=sorted({**QM_OPS, **VV_OPS, **NH_OPS}))
    sp.add_argument("input", help="JSON file, '-' for stdin, or a built-in form name")
    sp.add_argument("--other", help="second factor for mul")
    sp.add_argument("--l", type=rational, help="weight index for raise operators")
    sp.add_argument("--s", type=int, help="power for delta-power")
    for name in ("a", "b", "c"):
        sp.add_argument(f"--{name}", type=rational)
    sp.set_defaults(func=cmd_apply)

    sp = sub.add_parser("rc", parents=[common], help="Rankin-Cohen coefficients")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=rational, required=True)
    sp.add_argument("--l", type=rational, required=True)
    sp.add_argument("--d", type=int, default=0)
    sp.add_argument("--e", type=int, default=0)
    sp.add_argument("--apply", nargs=2, metavar=("F", "G"))
    sp.add_argument("--basis", type=int, default=0, help="kernel basis element used by --apply")
    sp.set_defaults(func=cmd_rc)

    def triple_args(sp, with_depth=True):
        sp.add_argument("--a", type=rational, required=True)
        sp.add_argument("--b", type=rational, required=True)
        sp.add_argument("--c", type=rational, help="inferred from ab + (1-a)c = 1 when omitted")
        if with_depth:
            sp.add_argument("--k", type=rational, required=True)
            sp.add_argument("--d", type=int, required=True)

    sp = sub.add_parser("eigenpoly", parents=[common], help="eigenvalue polynomial and lift coefficients")
    triple_args(sp)
    sp.add_argument("--mu", type=rational)
    sp.set_defaults(func=cmd_eigenpoly)

    sp = sub.add_parser("lift", parents=[common], help="build an eigen-lift")
    triple_args(sp)
    sp.add_argument("--lambda", dest="lam", type=rational, required=True)
    sp.add_argument("--phi", help="NHForm JSON of weight k-2d (default: a generic symbol)")
    sp.add_argument("--mu", type=rational)
    sp.set_defaults(func=cmd_lift)

    sp = sub.add_parser("verify-eigen", parents=[common], help="check Delta T = -lambda T")
    sp.add_argument("input")
    triple_args(sp, with_depth=False)
    sp.add_argument("--lambda", dest="lam", type=rational, required=True)
    sp.set_defaults(func=cmd_verify_eigen)

    sp = sub.add_parser("verify-transform", parents=[common], help="numeric transformation law")
    sp.add_argument("input")
    sp.add_argument("--gamma", type=parse_gamma, required=True)
    sp.add_argument("--tau", type=parse_tau, required=True)
    sp.set_defaults(func=cmd_verify_transform)

    sp = sub.add_parser("forms", parents=[common], help="built-in q-expansions")
    sp.add_argument("action", choices=["emit", "list"])
    sp.add_argument("--name", choices=sorted(FORMS))
    sp.add_argument("--qm", action="store_true", help="emit the quasi-modular form with companions")
    sp.set_defaults(func=cmd_forms)

    sp = sub.add_parser("suite", parents=[common], help="randomised verification suites")
    sp.add_argument("--name", choices=sorted(SUITES) + ["all"], required=True)
    sp.add_argument("--depth", type=int)
    sp.add_argument("--reports", action="store_true", help="include every individual report")
    sp.add_argument("--max-failures", type=int, default=5)
    sp.set_defaults(func=cmd_suite)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    for name, default in (("seed", 0), ("order", 40), ("tol", 1e-6)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args, out)
    except UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
