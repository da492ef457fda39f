"""``demival`` command-line front end.

Output is JSON on stdout by default; ``--text`` gives a human rendering.
Exit codes: 0 success, 1 domain error (JSON ``{"error": {...}}``),
2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from contextlib import contextmanager

from .checks import SUITES, run_suites
from .errors import DemivalError, ParseError
from .factor import DEFAULT_DEGREE_BOUND, kronecker_factor
from .fields import QuadraticField, RationalField, base_field
from .formatting import format_rational
from .function_field import (
    bezout_coefficients,
    coefficient_cofactors,
    content_value,
    contract_ideal,
    extend,
    kronecker_ring_member,
    rw_principal_generator,
    t_instance,
    u_instance,
    w_instance,
)
from .number_rings import (
    QuadIdeal,
    ideal_add,
    ideal_inverse,
    ideal_membership,
    ideal_mul,
    is_principal_search,
)
from .parser import parse_element, parse_ideal_generators, parse_polynomial, parse_rational_function
from .polynomials import RationalFunction
from .valuation import combination_value, reconstruct_unit
from .value_groups import INFINITY, meet_all, to_json


class UsageError(Exception):
    pass


class _ArgParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _text(x) -> str:
    if isinstance(x, RationalFunction) and x.is_constant():
        x = x.constant_value()
    try:
        return format_rational(x)
    except (TypeError, ValueError):
        return str(x)


def _value_text(value) -> str:
    if value is INFINITY:
        return "infinity"
    if not value:
        return "{}"
    return "{" + ", ".join(f"{label}: {e}" for label, e in value.entries) + "}"


def _need_rational(base, what: str):
    if not isinstance(base, RationalField):
        raise DemivalError(f"{what} is only available with --ring q", "ring_mismatch")


def _need_quadratic(base, what: str):
    if not isinstance(base, QuadraticField):
        raise DemivalError(f"{what} needs --ring quad:<d>", "ring_mismatch")


def _instance(base, name: str, degree_bound: int):
    if name == "divisor":
        return base.valuation
    if name == "w":
        return w_instance(base)
    _need_rational(base, f"valuation {name}")
    return t_instance(degree_bound) if name == "t" else u_instance(degree_bound)


def _read(base, text: str, valuation: str):
    if valuation == "divisor":
        return parse_element(text, base)
    return parse_rational_function(text, base)


def _ideal_json(I: QuadIdeal) -> dict:
    return {
        "generators": [_text(g) for g in QuadraticField(I.d).ideal_generators(I)],
        "hnf": {"den": I.den, "a": I.a, "b": I.b, "c": I.c},
        "norm": format_rational(I.norm()),
    }


# ---------------------------------------------------------------------------
# subcommands: each returns (payload, human text)


def cmd_valuate(args, base):
    v = _instance(base, args.valuation, args.degree_bound)
    value = v(_read(base, args.expr, args.valuation))
    return to_json(value), _value_text(value)


def cmd_content(args, base):
    p = parse_polynomial(args.poly, base)
    value = content_value(p, base)
    payload = {"content": to_json(value)}
    if p:
        ideal = base.content_ideal(p.coeffs)
        payload["ideal"] = _text(ideal) if isinstance(base, RationalField) else _ideal_json(ideal)["generators"]
    return payload, f"content value {_value_text(value)}"


def cmd_bezout(args, base):
    p, q = parse_polynomial(args.p, base), parse_polynomial(args.q, base)
    c, d = bezout_coefficients(p, q)
    m = c * p + d * q
    meet = meet_all([content_value(p, base), content_value(q, base)])
    value = content_value(m, base)
    payload = {"c": str(c), "d": str(d), "m": str(m), "meet": to_json(meet),
               "value": to_json(value), "verified": value == meet}
    return payload, f"c = {c}\nd = {d}\nm = {m}\nw(m) = {_value_text(value)} (meet {_value_text(meet)})"


def _gens(args, base):
    if not args.gens:
        raise UsageError("--gens needs at least one generator")
    return [parse_rational_function(g, base) for g in args.gens]


def cmd_pgen(args, base):
    out = rw_principal_generator(extend(base, _gens(args, base)))
    w = w_instance(base)
    value = w(out.m)
    payload = {
        "generator": _text(out.m),
        "w": to_json(value),
        "cofactors": [_text(q) for q in out.cofactors],
        "coefficients": [_text(k) for k in out.coefficients],
        "certificate": [
            {"x": _text(c.x), "y": _text(c.y), "c": _text(c.c), "d": _text(c.d), "m": _text(c.m)}
            for c in out.certificates
        ],
        "verified": combination_value(out) == out.m,
    }
    lines = [f"generator {_text(out.m)}", f"w = {_value_text(value)}"]
    lines += [f"  {_text(c.c)} * ({_text(c.x)}) + {_text(c.d)} * ({_text(c.y)}) = {_text(c.m)}"
              for c in out.certificates]
    return payload, "\n".join(lines)


def cmd_cofactors(args, base):
    p = parse_polynomial(args.poly, base)
    cof = coefficient_cofactors(p, base)
    members = [kronecker_ring_member(c, base) for c in cof]
    payload = {"cofactors": [_text(c) for c in cof], "in_ring": members}
    return payload, "\n".join(f"{_text(c)}  in R(w): {m}" for c, m in zip(cof, members))


def cmd_contract(args, base):
    J = extend(base, _gens(args, base))
    gens = contract_ideal(J)
    value = meet_all(base.valuation(g) for g in gens)
    payload = {"generators": [_text(g) for g in gens], "value": to_json(value)}
    return payload, f"({', '.join(_text(g) for g in gens)})  value {_value_text(value)}"


def cmd_factor(args, base):
    _need_rational(base, "factor")
    result = kronecker_factor(parse_polynomial(args.poly, base), args.degree_bound, args.factor_bound)
    parts = [f"({f})^{e}" if e > 1 else f"({f})" for f, e in result.factors]
    return result.to_json(), " * ".join([format_rational(result.unit)] + parts)


def _ideal(base, text: str) -> QuadIdeal:
    return QuadIdeal.from_generators(base.ctx, parse_ideal_generators(text, base))


def cmd_ideal(args, base):
    _need_quadratic(base, "ideal")
    op = args.op
    wanted = {"mul": 2, "add": 2, "inverse": 1, "member": 2, "principal-search": 1}[op]
    if len(args.operands) != wanted:
        raise UsageError(f"ideal {op} takes {wanted} operand(s)")
    if op == "member":
        x = parse_element(args.operands[0], base)
        found = ideal_membership(x, _ideal(base, args.operands[1]))
        return {"member": found}, str(found).lower()
    if op == "principal-search":
        if args.bound is None:
            raise UsageError("principal-search needs --bound")
        g = is_principal_search(_ideal(base, args.operands[0]), args.bound)
        if g is None:
            return {"principal": False}, "no generator within the search box"
        return {"principal": True, "generator": _text(g)}, f"principal, generated by {_text(g)}"
    ideals = [_ideal(base, t) for t in args.operands]
    if op == "mul":
        I = ideal_mul(*ideals)
    elif op == "add":
        I = ideal_add(*ideals)
    else:
        I = ideal_inverse(ideals[0])
    return {"ideal": _ideal_json(I)}, str(I)


def cmd_reconstruct(args, base):
    v = _instance(base, args.valuation, args.degree_bound)
    x = _read(base, args.expr, args.valuation)
    unit = reconstruct_unit(v, x)
    value = v(unit)
    return {"unit": _text(unit), "value": to_json(value)}, f"{_text(unit)}  value {_value_text(value)}"


def cmd_check(args, base):
    results = run_suites(args.seed, args.samples, args.suite or None)
    ok = all(r.ok for r in results)
    payload = {"seed": args.seed, "ok": ok, "suites": [r.to_json() for r in results]}
    text = "\n".join(f"{'PASS' if r.ok else 'FAIL'} {r.name} ({r.samples} samples, {r.failure_count} failures)"
                     for r in results)
    return payload, text


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _ArgParser(add_help=False)
    common.add_argument("--ring", default="q", help="q or quad:<d>")
    common.add_argument("--json", dest="format", action="store_const", const="json", default="json")
    common.add_argument("--text", dest="format", action="store_const", const="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=None)
    common.add_argument("--bound", type=int, default=None)
    common.add_argument("--degree-bound", type=int, default=DEFAULT_DEGREE_BOUND)
    common.add_argument("--factor-bound", type=int, default=None)

    parser = _ArgParser(prog="demival", description="Exact demi-valuation computations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgParser)

    def add(name, fn, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=fn)
        return p

    valuations = ("divisor", "w", "t", "u")
    p = add("valuate", cmd_valuate, "value of an element")
    p.add_argument("--valuation", choices=valuations, default="divisor")
    p.add_argument("expr")
    add("content", cmd_content, "content value of a polynomial").add_argument("poly")
    p = add("bezout", cmd_bezout, "content-attaining combination of two polynomials")
    p.add_argument("p")
    p.add_argument("q")
    add("pgen", cmd_pgen, "principal generator in R(w)").add_argument("--gens", nargs="+", default=[])
    add("cofactors", cmd_cofactors, "coefficient cofactors in R(w)").add_argument("poly")
    add("contract", cmd_contract, "contraction of an R(w) ideal").add_argument("--gens", nargs="+", default=[])
    add("factor", cmd_factor, "factor a polynomial over Q").add_argument("poly")
    p = add("ideal", cmd_ideal, "quadratic ideal arithmetic")
    p.add_argument("op", choices=("mul", "add", "inverse", "member", "principal-search"))
    p.add_argument("operands", nargs="+")
    p = add("reconstruct", cmd_reconstruct, "unit part of an element")
    p.add_argument("--valuation", choices=valuations, default="divisor")
    p.add_argument("expr")
    add("check", cmd_check, "run the property suites").add_argument(
        "--suite", action="append", choices=sorted(SUITES))
    return parser


def _dumps(payload) -> str:
    return json.dumps(payload, separators=(",", ":"))


@contextmanager
def _factor_bound(bound: int | None):
    """Apply ``--factor-bound`` for one command through the environment knob."""
    if bound is None:
        yield
        return
    old = os.environ.get("DEMIVAL_FACTOR_BOUND")
    os.environ["DEMIVAL_FACTOR_BOUND"] = str(bound)
    try:
        yield
    finally:
        if old is None:
            del os.environ["DEMIVAL_FACTOR_BOUND"]
        else:
            os.environ["DEMIVAL_FACTOR_BOUND"] = old


def run_command(argv) -> tuple[int, str]:
    """Run one command; returns ``(exit code, stdout text)``."""
    try:
        args = build_parser().parse_args(argv)
        with _factor_bound(args.factor_bound):
            payload, text = args.handler(args, base_field(args.ring))
    except (UsageError, ParseError) as exc:
        return 2, _dumps({"error": {"code": getattr(exc, "code", "usage"), "message": str(exc)}})
    except DemivalError as exc:
        return 1, _dumps({"error": {"code": exc.code, "message": str(exc)}})
    code = 1 if payload.get("ok") is False else 0
    if args.format == "text":
        return code, text
    return code, _dumps(payload)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if any(a in ("-h", "--help") for a in argv):
        build_parser().parse_args(argv)  # argparse prints help and exits
    code, out = run_command(argv)
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
