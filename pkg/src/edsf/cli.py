"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 a checked claim failed.
"""

from __future__ import annotations

import argparse
import math
import sys

from . import eds, fermat, heights, modred
from .ec_core import parse_curve, parse_point
from .errors import EdsfError, FactorizationTimeout
from .factorint import factorize, ord_q
from .registry import load_registry
from .report import Report
from .tables import TABLES, report_paper

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_CHECK = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text):
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _add_common(p):
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--seed", type=int, default=0, help="seed for Pollard rho")
    p.add_argument("--budget-secs", type=float, default=60.0, help="factorization budget per number")


def _add_source(p):
    p.add_argument("--id", help="registry id")
    p.add_argument("--curve", help="a1,a2,a3,a4,a6")
    p.add_argument("--point", help="x,y")


def build_parser():
    parser = _Parser(prog="edsf", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eds", help="divisibility sequence terms D_n")
    _add_source(p)
    p.add_argument("--indices", type=_int_list, required=True)
    _add_common(p)

    p = sub.add_parser("fermat", help="generalized elliptic Fermat numbers")
    _add_source(p)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--k-max", type=int, default=4)
    p.add_argument("--factor", action="store_true")
    _add_common(p)

    p = sub.add_parser("verify", help="check a theorem on concrete data")
    p.add_argument(
        "--theorem",
        required=True,
        choices=["coprimality", "order-universality", "ss-lemma", "growth", "magnified"],
    )
    _add_source(p)
    p.add_argument("--pair", help="SOURCE->TARGET registry ids")
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--k-max", type=int, default=3)
    p.add_argument("--k", type=int, default=5, help="level for the growth check")
    p.add_argument("--k0", type=int, default=1, help="first level for magnified divisibility")
    p.add_argument("--N", type=_int_list, help="moduli for order universality")
    p.add_argument("--n-max", type=int, default=27, help="bound on n*m for the valuation lemma")
    p.add_argument("--tol", type=float, default=0.05, help="relative tolerance for growth")
    _add_common(p)

    p = sub.add_parser("report-paper", help="regenerate the reference tables")
    p.add_argument("--only", choices=sorted(TABLES))
    _add_common(p)
    return parser


def _resolve(args, registry):
    if args.id and (args.curve or args.point):
        raise UsageError("--id cannot be combined with --curve/--point")
    if args.id:
        rec = registry.get(args.id)
        return rec.curve, rec.point, {"id": args.id}
    if args.curve and args.point:
        return parse_curve(args.curve), parse_point(args.point), {"curve": args.curve, "point": args.point}
    raise UsageError("give --id, or both --curve and --point")


def _factor_str(n, args):
    try:
        return str(factorize(n, seed=args.seed, budget_secs=args.budget_secs))
    except FactorizationTimeout as exc:
        partial, rest = exc.partial
        return f"{partial} * [composite {rest}]"


def cmd_eds(args, registry):
    c, p, inputs = _resolve(args, registry)
    inputs["indices"] = args.indices
    report = Report("eds", inputs)
    for n in args.indices:
        report.add(f"D_{n}", eds.eds_term(c, p, n))
    return report


def cmd_fermat(args, registry):
    c, p, inputs = _resolve(args, registry)
    inputs.update(m=args.m, k_max=args.k_max)
    report = Report("fermat", inputs)
    for k in range(args.k_max + 1):
        value = fermat.fermat_value(c, p, args.m, k)
        report.add(f"F_{k}^({args.m})", value)
        if args.factor:
            report.add(f"F_{k}^({args.m}) factors", _factor_str(value, args))
    return report


def _verify_coprimality(args, registry, report):
    c, p, inputs = _resolve(args, registry)
    report.inputs.update(inputs)
    table = fermat.gcd_matrix(c, p, args.m, args.k_max)
    prime_power = len(factorize(args.m).factors) <= 1
    for (k, l), g in table.items():
        report.check(f"gcd(F_{k}, F_{l}) divides {args.m}", args.m % g == 0, gcd=g)
        if prime_power:
            report.check(f"gcd(F_{k}, F_{l}) in {{1, {args.m}}}", g in (1, args.m), gcd=g)


def _verify_order_universality(args, registry, report):
    c, p, inputs = _resolve(args, registry)
    report.inputs.update(inputs)
    modred.require_ou_base(args.m)
    moduli = args.N
    if not moduli:
        bad = 6 * c.disc * args.m
        moduli = set()
        for k in range(1, args.k_max + 1):
            f = fermat.fermat_value(c, p, args.m, k)
            moduli.update(q for q in factorize(f, seed=args.seed, budget_secs=args.budget_secs).primes()
                          if bad % q)
        moduli = sorted(moduli)
    report.inputs["N"] = list(moduli)
    for N in moduli:
        for k in range(args.k_max + 1):
            ok, lhs, rhs = modred._ou_level(c, p, args.m, N, k)
            report.check(
                f"N={N}, k={k}: order m^k <=> N | D_(m^k), N does not divide D_(m^(k-1))",
                ok,
                order_is_m_k=lhs,
                divisibility=rhs,
            )


def _verify_ss(args, registry, report):
    c, p, inputs = _resolve(args, registry)
    report.inputs.update(inputs)
    m = args.m
    for n in range(1, args.n_max // m + 1):
        dn = eds.eds_term(c, p, n)
        for q in factorize(dn, seed=args.seed, budget_secs=args.budget_secs).primes():
            r = eds.verify_ss_valuation(c, p, q, n, m)
            claim = f"ord_{q}(D_{m * n}) " + ("=" if m % 2 else ">=") + f" ord_{q}({m}*D_{n})"
            ok = r.equal if m % 2 else r.lhs >= r.rhs
            report.check(claim, ok, lhs=r.lhs, rhs=r.rhs)


def _verify_growth(args, registry, report):
    c, p, inputs = _resolve(args, registry)
    report.inputs.update(inputs)
    g = fermat.growth_ratio(c, p, args.m, args.k)
    coeff = fermat.growth_coefficient(args.m)
    report.add("hhat(P)", g.height)
    report.add("log(F_k)/m^(2k)", g.ratio)
    report.add(f"({coeff})*hhat(P)", g.limit_prediction)
    report.check(
        f"|log(F_{args.k})/{args.m}^{2 * args.k} - ({coeff}) hhat| / hhat < {args.tol}",
        g.relative_error < args.tol,
        relative_error=g.relative_error,
    )


def _verify_magnified(args, registry, report):
    if not args.pair or "->" not in args.pair:
        raise UsageError("--pair SOURCE->TARGET is required")
    src_id, tgt_id = (s.strip() for s in args.pair.split("->", 1))
    pair = registry.pair(src_id, tgt_id)
    src, tgt = registry.get(src_id), registry.get(tgt_id)
    report.inputs.update(pair=args.pair, degree=pair.degree)
    report.check(f"gcd(m, degree) = 1", pair.admits(args.m), m=args.m, degree=pair.degree)
    res = fermat.magnified_divisibility(src.curve, src.point, tgt.curve, tgt.point, args.m, args.k_max, args.k0)
    for row in res.rows:
        report.check(f"F_{row.k}({src_id}) | F_{row.k}({tgt_id})", row.divides, source=row.source, target=row.target)
    ratio = heights.degree_ratio(src.curve, src.point, tgt.curve, tgt.point)
    report.add("hhat(P)/hhat(P')", ratio)
    report.check(
        "height ratio within 5% of the degree",
        abs(ratio - pair.degree) / pair.degree < 0.05,
        ratio=ratio,
        degree=pair.degree,
    )


VERIFIERS = {
    "coprimality": _verify_coprimality,
    "order-universality": _verify_order_universality,
    "ss-lemma": _verify_ss,
    "growth": _verify_growth,
    "magnified": _verify_magnified,
}


def cmd_verify(args, registry):
    report = Report("verify", {"theorem": args.theorem, "m": args.m})
    VERIFIERS[args.theorem](args, registry, report)
    return report


def cmd_report_paper(args, registry):
    return report_paper(registry, only=args.only, seed=args.seed, budget_secs=args.budget_secs)


COMMANDS = {
    "eds": cmd_eds,
    "fermat": cmd_fermat,
    "verify": cmd_verify,
    "report-paper": cmd_report_paper,
}


def _glue_values(argv):
    # "--point -2,2" would otherwise read -2,2 as an option
    out = []
    it = iter(argv)
    for a in it:
        if a in ("--curve", "--point"):
            nxt = next(it, None)
            out.append(a if nxt is None else f"{a}={nxt}")
        else:
            out.append(a)
    return out


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(_glue_values(sys.argv[1:] if argv is None else argv))
    try:
        registry = load_registry()
        report = COMMANDS[args.command](args, registry)
    except UsageError as exc:
        print(f"edsf: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (EdsfError, KeyError, ValueError) as exc:
        print(f"edsf: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    print(report.to_json() if args.json else report.to_text())
    return EXIT_OK if report.passed else EXIT_CHECK


if __name__ == "__main__":
    sys.exit(main())
