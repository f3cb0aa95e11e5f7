"""Command-line front end.

Exit codes: 0 success or all checks passed, 1 a mismatch was found,
2 usage error (bad flags, unknown names, depth above HF_MAX_DEPTH).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .cfrac import CFSpec, cf_even_contraction, cf_odd_contraction, jfraction_series, moment_series
from .errors import HankelCFError
from .exact import Poly
from .hankel import closed_bernoulli_numbers, closed_bernoulli_odd, closed_chen, closed_euler, hankel_det
from .numerics import IDENTITIES, validate_identity
from .orthopoly import FAMILIES, family_params, family_sequence, jacobi_from_moments, named_family, orth_poly_det
from .render import TABLE_FORMATS, dump_json, factor_even_linear, poly_latex, render_table
from .sequences import make_sequence, shifted
from .shift import shifted_hankel_prop62
from .verify import run_verification

__all__ = ["CLOSED_FORMS", "build_parser", "main"]


class UsageError(Exception):
    pass


CLOSED_FORMS = {
    "bernoulli-num": lambda n: Poly.const(closed_bernoulli_numbers(n)),
    "bernoulli-odd-half": closed_bernoulli_odd,
    "euler-num": lambda n: closed_euler("numbers", n),
    "euler-poly": lambda n: closed_euler("polys", n),
    "euler-nu-half(0)": lambda n: closed_euler(0, n),
    "euler-nu-half(1)": lambda n: closed_euler(1, n),
    "euler-nu-half(2)": lambda n: closed_euler(2, n),
    "bernoulli-even-at-half": lambda n: Poly.const(closed_chen(n)),
}


def _depth_cap() -> int | None:
    raw = os.environ.get("HF_MAX_DEPTH")
    if not raw:
        return None
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"HF_MAX_DEPTH must be an integer, got {raw!r}") from None
    if cap < 0:
        raise UsageError("HF_MAX_DEPTH must be >= 0")
    return cap


def _check_depth(value: int, flag: str) -> int:
    if value < 0:
        raise UsageError(f"{flag} must be >= 0")
    cap = _depth_cap()
    if cap is not None and value > cap:
        raise UsageError(f"{flag} {value} exceeds HF_MAX_DEPTH={cap}")
    return value


def _seq(name: str):
    try:
        return make_sequence(name)
    except HankelCFError as exc:
        raise UsageError(str(exc)) from None


def _poly_out(p: Poly, fmt: str) -> str:
    if fmt == "latex":
        return poly_latex(p)
    return p.pretty()


# ---------------------------------------------------------------------------
# Subcommands; each returns (exit code, text)
# ---------------------------------------------------------------------------


def cmd_seq(args) -> tuple[int, str]:
    count = _check_depth(args.count, "--count")
    seq = _seq(args.seq)
    terms = seq.terms(count)
    if args.format == "json":
        return 0, dump_json(seq.to_json(count))
    return 0, "\n".join(f"c_{k} = {_poly_out(p, args.format)}" for k, p in enumerate(terms))


def cmd_hankel(args) -> tuple[int, str]:
    n = _check_depth(args.n, "--n")
    seq = _seq(args.seq)
    det = hankel_det(seq, n)
    closed = None
    if args.closed_form:
        if seq.name not in CLOSED_FORMS:
            raise UsageError(f"no closed form for {seq.name}; available: {', '.join(CLOSED_FORMS)}")
        closed = CLOSED_FORMS[seq.name](n)
    match = closed is None or closed == det
    if args.format == "json":
        out = {"n": n, "sequence": seq.name, "det": det.to_text()}
        if closed is not None:
            out.update(closed=closed.to_text(), match=match)
        return (0 if match else 1), dump_json(out)
    if args.format == "latex":
        body = factor_even_linear(det).latex() if det and seq.name == "bernoulli-odd-half" else poly_latex(det)
        text = f"H_{{{n}}} = {body}"
    else:
        text = f"H_{n}({seq.name}) = {det.pretty()}"
    if closed is not None:
        text += f"\nclosed form {'matches' if match else 'DIFFERS: ' + closed.pretty()}"
    return (0 if match else 1), text


def cmd_orthpoly(args) -> tuple[int, str]:
    n = _check_depth(args.n, "--n")
    try:
        p = named_family(args.family, n)
    except HankelCFError as exc:
        raise UsageError(str(exc)) from None
    code = 0
    check = None
    if args.check:
        check = orth_poly_det(family_sequence(args.family), n) == p
        code = 0 if check else 1
    if args.format == "json":
        out = {"family": args.family, "n": n, "poly": p.to_text()}
        if check is not None:
            out["matches_determinant"] = check
        return code, dump_json(out)
    text = f"P_{n}(y) = {p.pretty()}"
    if check is not None:
        text += f"\ndeterminant formula {'agrees' if check else 'DISAGREES'}"
    return code, text


def cmd_jacobi(args) -> tuple[int, str]:
    depth = _check_depth(args.depth, "--depth")
    params = jacobi_from_moments(_seq(args.seq), depth)
    if args.format == "json":
        return 0, dump_json({"sequence": _seq(args.seq).name, "depth": depth, **params.to_json()})
    lines = [f"c0 = {params.c0.pretty()}"]
    lines += [f"s_{i} = {p.pretty()}" for i, p in enumerate(params.s)]
    lines += [f"t_{i + 1} = {p.pretty()}" for i, p in enumerate(params.t)]
    return 0, "\n".join(lines)


_FAMILY_KIND = {"bernoulli-odd": "bernoulli-odd", "euler-nu(0)": "euler-nu0", "euler-nu(1)": "euler-nu1",
                "euler-nu(2)": "euler-nu2"}


def cmd_cfrac_expand(args) -> tuple[int, str]:
    order = _check_depth(args.order, "--order")
    try:
        params = family_params(args.family, order // 2 + 2)
        seq = family_sequence(args.family)
    except HankelCFError as exc:
        raise UsageError(str(exc)) from None
    series = jfraction_series(params, order)
    match = series.agrees_with(moment_series(seq, order), order)
    coeffs = [series.coeff(e) for e in range(0, order + 1, 2)]
    if args.format == "json":
        return (0 if match else 1), dump_json({"family": args.family, "order": order, "variable": "z",
                                           "coefficients": {str(2 * k): c.to_text() for k, c in enumerate(coeffs)},
                                           "matches_moments": match})
    lines = [f"[z^{2 * k}] {c.pretty()}" for k, c in enumerate(coeffs)]
    lines.append(f"moment series {'matches' if match else 'DIFFERS'} through z^{order}")
    return (0 if match else 1), "\n".join(lines)


def _parse_quantity(value) -> Poly:
    if isinstance(value, list):
        return Poly.from_text([str(v) for v in value])
    return Poly.const(Fraction(str(value)))


def _load_cfspec(source: str) -> CFSpec:
    try:
        text = sys.stdin.read() if source == "-" else open(source, encoding="utf-8").read()
        data = json.loads(text)
        nums = [_parse_quantity(v) for v in data["num"]]
        dens = [_parse_quantity(v) for v in data["den"]]
        b0 = _parse_quantity(data.get("b0", "0"))
    except (OSError, ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot read CFSpec JSON: {exc}") from None
    return CFSpec.from_lists(b0, nums, dens)


def _cfspec_json(cf: CFSpec) -> dict:
    b0, nums, dens = cf.to_lists()
    return {"b0": Poly.coerce(b0).to_text(), "num": [Poly.coerce(v).to_text() for v in nums],
            "den": [Poly.coerce(v).to_text() for v in dens]}


def cmd_cfrac_contract(args) -> tuple[int, str]:
    depth = _check_depth(args.depth, "--depth")
    cf = _load_cfspec(args.input)
    need = 2 * depth if args.mode == "even" else 2 * depth + 1
    if cf.depth_hint < need:
        raise UsageError(f"{args.mode} contraction to depth {depth} needs {need} partial quantities, "
                         f"got {cf.depth_hint}")
    out = cf_even_contraction(cf, depth) if args.mode == "even" else cf_odd_contraction(cf, depth)
    if args.format == "json":
        return 0, dump_json({"mode": args.mode, "depth": depth, **_cfspec_json(out)})
    b0, nums, dens = out.to_lists()
    lines = [f"b0 = {Poly.coerce(b0).pretty()}"]
    lines += [f"a_{m} = {Poly.coerce(a).pretty()}    b_{m} = {Poly.coerce(b).pretty()}"
              for m, (a, b) in enumerate(zip(nums, dens), start=1)]
    return 0, "\n".join(lines)


def cmd_shift(args) -> tuple[int, str]:
    n = _check_depth(args.n, "--n")
    seq = _seq(args.seq)
    values = {}
    if args.via in ("prop", "both"):
        values["prop"] = shifted_hankel_prop62(seq, n, args.shift)
    if args.via in ("direct", "both"):
        values["direct"] = hankel_det(shifted(seq, args.shift), n)
    match = len(set(values.values())) == 1
    if args.format == "json":
        out = {"sequence": seq.name, "n": n, "shift": args.shift, **{k: v.to_text() for k, v in values.items()}}
        if len(values) == 2:
            out["match"] = match
        return (0 if match else 1), dump_json(out)
    lines = [f"H_{n}(a_{{k+{args.shift}}}) via {k}: {v.pretty()}" for k, v in values.items()]
    if len(values) == 2:
        lines.append("agree" if match else "DISAGREE")
    return (0 if match else 1), "\n".join(lines)


def cmd_table(args) -> tuple[int, str]:
    rows = None if args.rows is None else _check_depth(args.rows, "--rows")
    return 0, render_table(args.which, args.format, rows)


def cmd_validate(args) -> tuple[int, str]:
    depth = _check_depth(args.depth, "--depth")
    params = {k: getattr(args, k) for k in ("s", "a", "b") if getattr(args, k) is not None}
    report = validate_identity(args.identity, params, depth)
    ok = report.passed(args.tol)
    out = {**report.to_json(), "tol": args.tol, "passed": ok}
    if args.format == "json":
        return (0 if ok else 1), dump_json(out)
    return (0 if ok else 1), (f"{args.identity} {params}: lhs={report.lhs!r} rhs={report.rhs!r} "
                              f"abs_err={report.abs_err:.3e} {'PASS' if ok else 'FAIL'}")


def cmd_verify(args) -> tuple[int, str]:
    cap = _depth_cap()
    max_depth = args.max_depth
    if max_depth is not None:
        _check_depth(max_depth, "--max-depth")
    elif cap is not None:
        max_depth = max(cap, 1)
    report = run_verification(args.scope, max_depth, args.seed, timing=not args.no_timing)
    code = 0 if report["passed"] else 1
    if args.format == "json":
        return code, dump_json(report)
    lines = []
    for r in report["results"]:
        timing = f" ({r['seconds']:.2f}s)" if "seconds" in r else ""
        lines.append(f"{'PASS' if r['passed'] else 'FAIL'}  {r['id']}{timing}")
        lines += [f"      {f}" for f in r["failures"]]
    passed = sum(r["passed"] for r in report["results"])
    lines.append(f"{passed}/{len(report['results'])} identities verified")
    return code, "\n".join(lines)


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hankelcf", description="Exact Hankel determinants, orthogonal "
                                     "polynomials and J-fractions for Bernoulli and Euler moment sequences.")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, choices=("plain", "json")):
        p.add_argument("--format", choices=choices, default="plain")

    p = sub.add_parser("seq", help="print the first terms of a moment sequence")
    p.add_argument("--seq", required=True)
    p.add_argument("--count", type=int, default=6)
    fmt(p, ("plain", "json", "latex"))
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("hankel", help="Hankel determinant H_n, optionally against its closed form")
    p.add_argument("--seq", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--closed-form", action="store_true")
    fmt(p, ("plain", "json", "latex"))
    p.set_defaults(func=cmd_hankel)

    p = sub.add_parser("orthpoly", help="member of a named orthogonal family")
    p.add_argument("--family", required=True, help=", ".join(FAMILIES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check", action="store_true", help="compare with the determinant formula")
    fmt(p)
    p.set_defaults(func=cmd_orthpoly)

    p = sub.add_parser("jacobi", help="recurrence coefficients recovered from the moments")
    p.add_argument("--seq", required=True)
    p.add_argument("--depth", type=int, required=True)
    fmt(p)
    p.set_defaults(func=cmd_jacobi)

    p = sub.add_parser("cfrac", help="J-fraction expansion and CF contraction")
    cf_sub = p.add_subparsers(dest="cf_command", required=True)
    q = cf_sub.add_parser("expand", help="expand a family's J-fraction as a power series in z")
    q.add_argument("--family", required=True, help=", ".join(_FAMILY_KIND))
    q.add_argument("--order", type=int, required=True)
    fmt(q)
    q.set_defaults(func=cmd_cfrac_expand)
    q = cf_sub.add_parser("contract", help="even or odd canonical contraction of a literal CF")
    q.add_argument("--mode", choices=("even", "odd"), required=True)
    q.add_argument("--depth", type=int, required=True)
    q.add_argument("--input", default="-", help="CFSpec JSON file, '-' for stdin")
    fmt(q)
    q.set_defaults(func=cmd_cfrac_contract)

    p = sub.add_parser("shift", help="Hankel determinant of a shifted sequence")
    p.add_argument("--seq", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--shift", type=int, choices=(1, 2), required=True)
    p.add_argument("--via", choices=("prop", "direct", "both"), default="both")
    fmt(p)
    p.set_defaults(func=cmd_shift)

    p = sub.add_parser("table", help="regenerate table 1, 2 or 3")
    p.add_argument("which", type=int, choices=(1, 2, 3))
    p.add_argument("--rows", type=int, default=None, help="last row index")
    fmt(p, TABLE_FORMATS)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("table3", help="shorthand for 'table 3'")
    p.add_argument("--rows", type=int, default=None)
    fmt(p, TABLE_FORMATS)
    p.set_defaults(func=cmd_table, which=3)

    p = sub.add_parser("validate", help="numerically check an analytic continued fraction")
    p.add_argument("--identity", choices=IDENTITIES, required=True)
    p.add_argument("--s", type=float)
    p.add_argument("--a", type=float)
    p.add_argument("--b", type=float)
    p.add_argument("--depth", type=int, default=30)
    p.add_argument("--tol", type=float, default=1e-10)
    fmt(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("verify", help="run the identity verification suite")
    p.add_argument("scope", nargs="?", default="all", help="'all', a module name, an identity id or alias")
    p.add_argument("--max-depth", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-timing", action="store_true", help="omit timings (byte-identical reruns)")
    fmt(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, text = args.func(args)
    except (UsageError, HankelCFError) as exc:
        print(f"hankelcf: error: {exc}", file=sys.stderr)
        return 2
    print(text)
    return code

