"""Command-line surface: build the Taft-family objects, solve the
invariant-map algebras, and run the verification suites with
machine-readable reports.

Exit codes: 0 when every selected claim passes, 1 on a mathematical
failure, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .cyclotomic import FieldContext, make_field
from .hopf import check_hopf
from .braiding import check_rmatrix, regular_module, trivial_module
from .constructions import (
    check_braided_hopf,
    check_hopf_morphism,
    comodule_algebra_K,
    regular_comodule_algebra,
    taft_model,
    taft_presentation_check,
)
from .adjoint import (
    ClosureFailure,
    chi0_crosscheck,
    connectedness,
    problem_for,
    solve_adjoint,
    verify_braided_commutative,
    verify_center_algebra,
    verify_conditions_direct,
    verify_relative_center,
    verify_yd,
)
from .braided_adjoint import build_h_ad, regular_case_iso, pi_dinatural_check, verify_h_ad
from .reports import VerificationReport, document, emit_json

BASIS_CONVENTION = ("bosonization x^a # g^b at a*n+b; K(d,xi) h^a w^b at a*n+b; "
                    "tensor legs i*dim_right+j")


def field_axiom_spotcheck(ctx: FieldContext, seed: int, count: int = 100,
                          report: VerificationReport | None = None,
                          prefix: str = "field") -> VerificationReport:
    """Field axioms on pseudo-random triples with a fixed seed."""
    rep = report if report is not None else VerificationReport()
    rng = random.Random(seed)

    def rand_scalar():
        return ctx.scalar([Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                           for _ in range(ctx.degree)])

    bad_assoc = bad_dist = bad_inv = None
    for trial in range(count):
        a, b, c = rand_scalar(), rand_scalar(), rand_scalar()
        if not ((a + b) + c - (a + (b + c))).is_zero() or \
           not ((a * b) * c - (a * (b * c))).is_zero():
            bad_assoc = {"trial": trial}
            break
        if not (a * (b + c) - (a * b + a * c)).is_zero():
            bad_dist = {"trial": trial}
            break
        if not a.is_zero() and not (a * a.inv() - ctx.one()).is_zero():
            bad_inv = {"trial": trial}
            break
    rep.add(f"{prefix}/associativity-spot", bad_assoc is None, bad_assoc)
    rep.add(f"{prefix}/distributivity-spot", bad_dist is None, bad_dist)
    rep.add(f"{prefix}/inverse-spot", bad_inv is None, bad_inv)
    return rep


def _parse_n_list(text: str) -> list[int]:
    return [int(part) for part in text.split(",") if part]


def _suite_hopf(n: int, seed: int, rep: VerificationReport) -> None:
    model = taft_model(n)
    field_axiom_spotcheck(model.ctx, seed, report=rep, prefix=f"n{n}/field")
    check_hopf(model.taft, rep, prefix=f"n{n}/hopf")
    taft_presentation_check(model.taft, n, rep, prefix=f"n{n}/presentation")
    check_braided_hopf(model.line, rep, prefix=f"n{n}/braided-line")
    check_hopf_morphism(model.taft, model.t_hopf, model.pi, rep, prefix=f"n{n}/projection")


def _suite_rmatrix(n: int, rep: VerificationReport) -> None:
    model = taft_model(n)
    check_rmatrix(model.rmatrix, rep, prefix=f"n{n}/rmatrix")


def _suite_adjoint(n: int, rep: VerificationReport) -> None:
    model = taft_model(n)
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    for d in divisors:
        k = comodule_algebra_K(n, d, 0)
        alg = solve_adjoint(problem_for(model, k, {"ad1", "ad3"}))
        rep.add(f"n{n}/module-variant-K({d},0)/dim", alg.dim == n * n, {"dim": alg.dim})
        verify_yd(alg, rep, prefix=f"n{n}/module-variant-K({d},0)/yd")
        verify_center_algebra(alg, rep, prefix=f"n{n}/module-variant-K({d},0)/center")
        verify_braided_commutative(alg, rep, prefix=f"n{n}/module-variant-K({d},0)/braided")
        rep.add(f"n{n}/module-variant-K({d},0)/connected", connectedness(alg) == 1,
                {"dim_invariants": connectedness(alg)})
    chi0_crosscheck(n, n, 0, rep, prefix=f"n{n}/chi0")
    kreg = regular_comodule_algebra(n)
    alg = solve_adjoint(problem_for(model, kreg, {"ad1", "ad2", "ad3"}))
    rep.add(f"n{n}/relative-regular/dim", alg.dim == n, {"dim": alg.dim})
    verify_conditions_direct(alg, rep, prefix=f"n{n}/relative-regular/conditions")
    verify_yd(alg, rep, prefix=f"n{n}/relative-regular/yd")
    verify_center_algebra(alg, rep, prefix=f"n{n}/relative-regular/center")
    verify_braided_commutative(alg, rep, prefix=f"n{n}/relative-regular/braided")
    verify_relative_center(alg, regular_module(model.t_hopf.algebra), rep,
                           prefix=f"n{n}/relative-regular/centralizer")
    rep.add(f"n{n}/relative-regular/connected", connectedness(alg) == 1,
            {"dim_invariants": connectedness(alg)})


def _emit(args, payload: dict, ctx: FieldContext) -> None:
    data = emit_json(document(ctx, BASIS_CONVENTION, payload))
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.write(b"\n")


def _finish(args, rep: VerificationReport, payload: dict, ctx: FieldContext) -> int:
    payload = dict(payload)
    payload["report"] = rep
    _emit(args, payload, ctx)
    if not args.out:
        return 0 if rep.ok else 1
    for line in rep.summary_lines():
        print(line)
    return 0 if rep.ok else 1


def cmd_taft(args) -> int:
    n = args.n
    model = taft_model(n)
    rep = VerificationReport()
    check_hopf(model.taft, rep, prefix="hopf")
    taft_presentation_check(model.taft, n, rep, prefix="presentation")
    check_braided_hopf(model.line, rep, prefix="braided-line")
    check_hopf_morphism(model.taft, model.t_hopf, model.pi, rep, prefix="projection")
    payload = {"n": n, "hopf": model.taft, "projection": model.pi,
               "rmatrix": model.rmatrix}
    return _finish(args, rep, payload, model.ctx)


def cmd_adjoint(args) -> int:
    n, d = args.n, args.d
    xi = Fraction(args.xi)
    conditions = {c.strip() for c in args.conditions.split(",") if c.strip()}
    model = taft_model(n)
    k = comodule_algebra_K(n, d, xi)
    problem = problem_for(model, k, conditions, rbar=args.rbar)
    pipeline = "reduced" if args.reduced or not args.full else "full"
    rep = VerificationReport()
    try:
        alg = solve_adjoint(problem, pipeline=pipeline)
    except ClosureFailure as exc:
        rep.add("solve/closure", False, {"error": str(exc), "witness": exc.witness})
        return _finish(args, rep, {"problem": problem.describe()}, model.ctx)
    rep.add("solve/dim", True, {"dim": alg.dim})
    verify_conditions_direct(alg, rep)
    verify_yd(alg, rep)
    verify_center_algebra(alg, rep)
    verify_braided_commutative(alg, rep)
    rep.add("solve/connected", connectedness(alg) == 1, {"dim_invariants": connectedness(alg)})
    if "ad2" in conditions:
        verify_relative_center(alg, regular_module(model.t_hopf.algebra), rep)
    payload = {"dim": alg.dim, "algebra": alg}
    return _finish(args, rep, payload, model.ctx)


def cmd_braided_adjoint(args) -> int:
    n = args.n
    model = taft_model(n)
    had = build_h_ad(model)
    names = [m.strip() for m in args.modules.split(",") if m.strip()]
    mods = {}
    for name in names:
        if name == "regular":
            mods[name] = regular_module(model.taft.algebra)
        elif name == "trivial":
            mods[name] = trivial_module(model.taft)
        else:
            raise SystemExit(f"unknown module name {name!r} (use regular,trivial)")
    rep = VerificationReport()
    verify_h_ad(had, mods, rep)
    for name, x in mods.items():
        for vname, v in (("trivial", trivial_module(model.t_hopf)),
                         ("regular", regular_module(model.t_hopf.algebra))):
            pi_dinatural_check(had, x, v, rep, prefix=f"pi-dinatural/{name}-{vname}")
    kreg = regular_comodule_algebra(n)
    alg = solve_adjoint(problem_for(model, kreg, {"ad1", "ad2", "ad3"}))
    regular_case_iso(alg, had, rep)
    payload = {"n": n, "action": had.ht_module.action}
    return _finish(args, rep, payload, model.ctx)


def cmd_verify(args) -> int:
    ns = _parse_n_list(args.n)
    rep = VerificationReport()
    for n in ns:
        if args.suite in ("hopf", "all"):
            _suite_hopf(n, args.seed, rep)
        if args.suite in ("rmatrix", "all"):
            _suite_rmatrix(n, rep)
        if args.suite in ("adjoint", "all"):
            _suite_adjoint(n, rep)
    ctx = make_field(max(ns)) if ns else make_field(1)
    return _finish(args, rep, {"suite": args.suite, "n": ns}, ctx)


def cmd_report(args) -> int:
    with open(args.json, "rb") as fh:
        data = json.load(fh)
    rep = data.get("report", data)
    claims = rep.get("claims", [])
    n_fail = 0
    for claim in claims:
        status = claim.get("status", "?")
        if status == "fail":
            n_fail += 1
        print(f"[{status.upper():>4}] {claim.get('claim_id')}")
        if status == "fail" and claim.get("witness") is not None:
            print(f"       witness: {json.dumps(claim['witness'], sort_keys=True)}")
    print(f"{len(claims)} claims, {n_fail} failing")
    return 0 if n_fail == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopfadjoint",
        description="exact computations with Taft-family Hopf algebras and "
                    "their braided commutative invariant algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("taft", help="build and verify the bosonization for one n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_taft)

    p = sub.add_parser("adjoint", help="solve the invariant-map algebra for K(d, xi)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--xi", default="0")
    p.add_argument("--conditions", default="ad1,ad2,ad3")
    p.add_argument("--reduced", action="store_true",
                   help="use the reduced pipeline (default)")
    p.add_argument("--full", action="store_true",
                   help="use the full Hom-space pipeline")
    p.add_argument("--rbar", action="store_true",
                   help="mirrored R-matrix convention in the comodule condition")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_adjoint)

    p = sub.add_parser("braided-adjoint", help="build and verify the braided adjoint algebra")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--modules", default="regular,trivial")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_braided_adjoint)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=["hopf", "rmatrix", "adjoint", "all"], required=True)
    p.add_argument("--n", required=True, help="comma-separated list, e.g. 2,3")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", help="summarise a previously written JSON report")
    p.add_argument("--json", required=True)
    p.set_defaults(func=cmd_report)
    return parser


def cli_main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


def main() -> None:
    raise SystemExit(cli_main())


if __name__ == "__main__":
    main()
