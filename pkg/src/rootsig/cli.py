"""Command-line front end.

Every subcommand prints one result to stdout (JSON by default, byte
stable for fixed flags) and keeps progress chatter on stderr.  With
--oracle the closed form and the brute-force path are both run and a
disagreement exits nonzero, so any run can be used as a self-test.

Exit codes: 0 success, 2 usage, 3 hypothesis violation, 4 cap
exceeded, 5 oracle mismatch, 1 other errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import deformation, quasiperiod, signature, tutteeval
from .deformation import FAMILIES, build_family, build_uniform
from .errors import HypothesisError, OracleMismatchError, RootsigError, UsageError
from .rootsystem import coefficient_vector, parse_root_tuple


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")


def _emit_text(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _family_lm(args) -> tuple[int | None, int | None]:
    """Resolve the shift interval for families defined by one."""
    fam = args.family
    m = args.m
    if fam == "uniform":
        if args.l is None or m is None:
            raise UsageError("uniform family needs --l and --m")
        return args.l, m
    if m is None:
        m = 1
    if fam == "shi":
        return 1 - m, m
    if fam == "catalan":
        return -m, m
    if fam == "linial":
        return 1, m
    return None, None  # ish


def _cmd_signature(args) -> int:
    s = parse_root_tuple(args.roots, args.n)
    if args.oracle:
        got = {
            "graph": signature.signature_graph(s),
            "cofactor": signature.signature_cofactor(s),
        }
        if got["graph"] != got["cofactor"]:
            raise OracleMismatchError(f"graph {got['graph']} != cofactor {got['cofactor']} for {args.roots}")
        sig = got["graph"]
    else:
        sig = signature.compute_signature(s, method=args.method)
    if args.format == "json":
        _emit({"a": sig.a, "b": sig.b})
    else:
        _emit_text(f"{{{sig.a},{sig.b}}}")
    return 0


def _census_obj(args, method: str):
    return signature.census_bruteforce(
        args.n, method=method, workers=args.workers, cap_override=args.cap_override
    )


def _cmd_census(args) -> int:
    if args.oracle:
        by_graph = _census_obj(args, "graph")
        by_cof = _census_obj(args, "cofactor")
        closed = signature.census_formula(args.n)
        for name, other in (("cofactor", by_cof), ("formula", closed)):
            if (other.counts, other.degenerate_count) != (by_graph.counts, by_graph.degenerate_count):
                raise OracleMismatchError(f"census mismatch between graph and {name} at n={args.n}")
        census = by_graph
    else:
        census = _census_obj(args, args.method)
    if args.format == "json":
        _emit(signature.census_to_json_object(census))
    else:
        _emit_text(signature.census_text_triangle(census))
    return 0


def _cmd_formula(args) -> int:
    census = signature.census_formula(args.n)
    if args.oracle:
        brute = signature.census_bruteforce(
            args.n, method=args.method, workers=args.workers, cap_override=args.cap_override
        )
        if (brute.counts, brute.degenerate_count) != (census.counts, census.degenerate_count):
            raise OracleMismatchError(f"closed-form census disagrees with enumeration at n={args.n}")
    if args.format == "json":
        _emit(signature.census_to_json_object(census))
    else:
        _emit_text(signature.census_text_triangle(census))
    return 0


def _verify_matrix(dm) -> None:
    """Recompute every column from its label; structural self-test."""
    cone = dm.cone_index()
    if cone != dm.p - 1:
        raise OracleMismatchError("cone column is not last")
    for j in range(dm.p):
        col = dm.matrix.column(j)
        if j == cone:
            want = (0,) * dm.n + (1,)
        else:
            root = dm.root_of_column(j)
            want = coefficient_vector(root, dm.n) + (-dm.shift_of_column(j),)
        if col != want:
            raise OracleMismatchError(f"column {j} ({dm.labels[j]}) does not match its label")


def _cmd_build(args) -> int:
    dm = build_family(args.family, args.n, l=args.l, m=args.m)
    if args.oracle:
        _verify_matrix(dm)
    if args.format == "json":
        _emit(deformation.to_json_object(dm))
    else:
        _emit_text(deformation.to_csv(dm))
    return 0


def _tutte_text(ev, brute=None) -> str:
    rows = [
        ("t11", ev.t11),
        ("arith11", ev.arith11),
        ("case 1", ev.cases.get(1, 0)),
        ("case 2", ev.cases.get(2, 0)),
        ("case 3", ev.cases.get(3, 0)),
    ]
    lines = []
    if brute is None:
        lines.extend(f"{k:<8} {v}" for k, v in rows)
    else:
        bvals = [brute.t11, brute.arith11, brute.cases.get(1, 0), brute.cases.get(2, 0), brute.cases.get(3, 0)]
        lines.append(f"{'':<8} {'formula':>10} {'bruteforce':>10}")
        lines.extend(f"{k:<8} {v:>10} {bv:>10}" for (k, v), bv in zip(rows, bvals))
    return "\n".join(lines)


def _cmd_tutte(args) -> int:
    if args.family == "ish":
        raise UsageError("no closed Tutte form for the ish cone; only interval families are supported")
    l, m = _family_lm(args)
    ev = tutteeval.tutte11_formula(args.n, l, m, mode=args.mode)
    if not args.oracle:
        if args.format == "json":
            _emit(tutteeval.tutte_to_json_object(ev))
        else:
            _emit_text(_tutte_text(ev))
        return 0

    brute = tutteeval.tutte11_bruteforce(build_uniform(args.n, l, m), workers=args.workers)
    match = (ev.t11, ev.arith11, ev.cases) == (brute.t11, brute.arith11, brute.cases)
    if args.format == "json":
        _emit(
            {
                "bruteforce": tutteeval.tutte_to_json_object(brute),
                "formula": tutteeval.tutte_to_json_object(ev),
                "match": match,
            }
        )
    else:
        _emit_text(_tutte_text(ev, brute) + f"\nmatch: {'yes' if match else 'no'}")
    if not match:
        raise OracleMismatchError(
            f"formula ({ev.t11},{ev.arith11}) != bruteforce ({brute.t11},{brute.arith11}) in mode {args.mode}"
        )
    return 0


def _formula_period(args, l, m) -> int | None:
    try:
        if args.family == "ish":
            return quasiperiod.period_formula_ish(args.n)
        return quasiperiod.period_formula(args.n, l, m)
    except HypothesisError:
        return None


def _cmd_period(args) -> int:
    dm = build_family(args.family, args.n, l=args.l, m=args.m)
    l, m = _family_lm(args)
    formula = _formula_period(args, l, m)
    report = quasiperiod.make_period_report(
        dm, formula_value=formula, workers=args.workers, cap_override=args.cap_override
    )
    if args.format == "json":
        _emit(
            {
                "agree": report.agree,
                "formula": report.formula_value,
                "mu_bound": report.mu_bound,
                "rho_exact": report.rho_exact,
            }
        )
    else:
        _emit_text(
            f"rho_exact = {report.rho_exact}\nmu_bound = {report.mu_bound}\n"
            f"formula = {report.formula_value}\nagree = {'yes' if report.agree else 'no'}"
        )
    if args.oracle and not report.agree:
        raise OracleMismatchError(
            f"period values disagree: rho={report.rho_exact} mu={report.mu_bound} formula={report.formula_value}"
        )
    return 0


def _cmd_charquasi(args) -> int:
    dm = build_family(args.family, args.n, l=args.l, m=args.m)
    qp = quasiperiod.fit_quasipolynomial(
        dm, q_max=args.qmax, workers=args.workers, cap_override=args.cap_override
    )
    if args.oracle:
        for q in range(1, min(args.qmax, 2 * qp.period + 3) + 1):
            counted = quasiperiod.complement_count(dm, q, workers=args.workers)
            by_ie = quasiperiod.complement_count_formula(dm, q, cap_override=args.cap_override)
            if counted != by_ie:
                raise OracleMismatchError(f"grid count {counted} != inclusion-exclusion {by_ie} at q={q}")
    if args.format == "json":
        _emit(quasiperiod.quasipolynomial_to_json_object(qp))
    else:
        lines = [f"period = {qp.period}", f"q0 = {qp.q0}"]
        lines.extend(
            f"class {k} mod {qp.period}: {list(qp.constituents[k - 1])}" for k in range(1, qp.period + 1)
        )
        _emit_text("\n".join(lines))
    return 0


def _add_common(p: argparse.ArgumentParser, *, family: bool = False, lm: bool = False) -> None:
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--cap-override", action="store_true", dest="cap_override")
    if family:
        p.add_argument("--family", choices=FAMILIES, default="uniform")
    if lm:
        p.add_argument("--l", type=int, default=None)
        p.add_argument("--m", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rootsig", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("signature", help="signature of a root subset")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--roots", required=True, help='semicolon list "i,j;i,j;..."')
    p.add_argument("--method", choices=("graph", "cofactor"), default="graph")
    _add_common(p)
    p.set_defaults(func=_cmd_signature)

    p = sub.add_parser("census", help="signature counts over all (n+1)-subsets")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("graph", "cofactor"), default="graph")
    _add_common(p)
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("formula", help="closed-form signature counts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("graph", "cofactor"), default="graph")
    _add_common(p)
    p.set_defaults(func=_cmd_formula)

    p = sub.add_parser("build", help="deformation matrix of a cone family")
    p.add_argument("--n", type=int, required=True)
    _add_common(p, family=True, lm=True)
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("tutte", help="Tutte evaluation at (1,1)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("paper", "corrected"), default="corrected")
    _add_common(p, family=True, lm=True)
    p.set_defaults(func=_cmd_tutte)

    p = sub.add_parser("period", help="lcm period three ways")
    p.add_argument("--n", type=int, required=True)
    _add_common(p, family=True, lm=True)
    p.set_defaults(func=_cmd_period)

    p = sub.add_parser("charquasi", help="characteristic quasi-polynomial fit")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--qmax", type=int, default=45)
    _add_common(p, family=True, lm=True)
    p.set_defaults(func=_cmd_charquasi)

    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except RootsigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
