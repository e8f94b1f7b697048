"""Command-line interface: every subsystem behind one entry point.

Output is JSON (default) or plain text; identical invocations produce
byte-identical output.  Arbitrary-precision quantities are rendered as
decimal strings.  Exit codes: 0 success, 2 invalid input, 3 computational
precondition failure (non-square-free m, unfactorable input, ...).

QUADRANTAL_PRECISION overrides the default decimal digits (minimum 30).
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import census as census_mod
from . import cyclotomic as cyclo_mod
from .arith import FactorBoundExceeded, NotSquareFree, SquareFreeUnverified
from .numberfield import (
    NumberField,
    composed_min_poly,
    denominator_clearing,
    primitive_element_shift,
    tuple_discriminant,
)
from .polynomial import (
    Poly,
    content_and_primitive_part,
    cyclotomic_poly_prime,
    eisenstein_witness,
    poly_divmod,
    poly_gcd,
)
from .quadring import (
    QuadIdeal,
    QuadraticField,
    class_group,
    factor_ideal,
    ideal_from_generators,
    ideal_gcd,
    ideal_divides_and_quotient,
    ideal_pow,
    ideal_product,
    is_principal,
    minkowski_bound,
    split_prime,
    unit_ideal,
)
from .units import PeriodOverflow, continued_fraction_of_omega, pell_solve, unit_group_report


class InputError(ValueError):
    """Malformed command-line input (exit code 2)."""


PRECONDITION_ERRORS = (NotSquareFree, SquareFreeUnverified, FactorBoundExceeded, PeriodOverflow)


def decimal_precision(default: int = 50) -> int:
    env = os.environ.get("QUADRANTAL_PRECISION")
    if env is None:
        return default
    try:
        return max(30, int(env))
    except ValueError:
        raise InputError(f"QUADRANTAL_PRECISION must be an integer, got {env!r}")


# ---------------------------------------------------------------------------
# parsing helpers
# ---------------------------------------------------------------------------

def parse_poly(text: str) -> Poly:
    """Polynomial text, a JSON coefficient array, or {'minpoly': [...]}."""
    text = text.strip()
    try:
        if text.startswith("{"):
            return Poly.from_json_array(json.loads(text)["minpoly"])
        if text.startswith("["):
            return Poly.from_json_array(json.loads(text))
        return Poly.from_text(text)
    except (ValueError, KeyError, json.JSONDecodeError) as e:
        raise InputError(f"cannot parse polynomial {text!r}: {e}")


def parse_element_coords(text: str):
    """Element coordinates: 'a,b,...' or {'coords': [...]} JSON."""
    text = text.strip()
    try:
        if text.startswith("{"):
            data = json.loads(text)
            return [str(c) for c in data["coords"]]
        return [part.strip() for part in text.split(",")]
    except (ValueError, KeyError, json.JSONDecodeError) as e:
        raise InputError(f"cannot parse element {text!r}: {e}")


_QUADINT_TERM = re.compile(r"^(-?\d+)$|^(-?\d*)\s*\*?\s*w$")


def parse_quad_int(field: QuadraticField, text: str):
    """a+b*w syntax: integers, w, 3w, 1+2w, 2-w, ..."""
    s = text.replace(" ", "")
    s = re.sub(r"(?<=[0-9w])-", "+-", s)
    a = b = 0
    for term in s.split("+"):
        if not term:
            continue
        m = _QUADINT_TERM.match(term)
        if not m:
            raise InputError(f"cannot parse ring element term {term!r} in {text!r}")
        if m.group(1) is not None:
            a += int(m.group(1))
        else:
            coeff = m.group(2)
            b += int(coeff) if coeff not in ("", "-") else (-1 if coeff == "-" else 1)
    return field.integer(a, b)


def parse_ideal(field: QuadraticField, text: str) -> QuadIdeal:
    """'(g1, g2, ...)' generator syntax or the {'m','a','b','c'} JSON triple."""
    text = text.strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
            ideal = QuadIdeal.from_json_dict(data)
        except (ValueError, KeyError, json.JSONDecodeError) as e:
            raise InputError(f"cannot parse ideal JSON {text!r}: {e}")
        if ideal.field != field:
            raise InputError(f"ideal JSON is for m={ideal.field.m}, expected m={field.m}")
        return ideal
    if not (text.startswith("(") and text.endswith(")")):
        raise InputError(f"ideal must be '(gen, gen, ...)' or a JSON triple, got {text!r}")
    gens = [parse_quad_int(field, part) for part in text[1:-1].split(",") if part.strip()]
    if not gens:
        raise InputError("ideal needs at least one generator")
    return ideal_from_generators(field, gens)


def make_field(m: int) -> QuadraticField:
    return QuadraticField(m)


# ---------------------------------------------------------------------------
# emitters
# ---------------------------------------------------------------------------

def emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in _text_lines(payload, ""):
            print(line)


def _text_lines(value, prefix: str):
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)):
                yield f"{prefix}{k}:"
                yield from _text_lines(v, prefix + "  ")
            else:
                yield f"{prefix}{k}: {v}"
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, (dict, list)):
                yield from _text_lines(v, prefix + "  ")
            else:
                yield f"{prefix}- {v}"
    else:
        yield f"{prefix}{value}"


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------

def cmd_poly(args) -> dict:
    if args.action == "divrem":
        q, r = poly_divmod(parse_poly(args.dividend), parse_poly(args.divisor))
        return {"quotient": q.to_json_array(), "remainder": r.to_json_array(),
                "quotient_text": q.to_text(), "remainder_text": r.to_text()}
    if args.action == "gcd":
        g = poly_gcd(parse_poly(args.a), parse_poly(args.b))
        return {"gcd": g.to_json_array(), "gcd_text": g.to_text()}
    if args.action == "content":
        c, pp = content_and_primitive_part(parse_poly(args.poly))
        return {"content": str(c), "primitive": pp.to_json_array()}
    if args.action == "eisenstein":
        w = eisenstein_witness(parse_poly(args.poly))
        return {"witness": None if w is None else str(w)}
    if args.action == "cyclotomic":
        p = cyclotomic_poly_prime(args.p)
        return {"p": args.p, "poly": p.to_json_array(), "poly_text": p.to_text()}
    raise InputError(f"unknown poly action {args.action!r}")


def _field_from_args(args) -> NumberField:
    return NumberField(parse_poly(args.minpoly))


def cmd_field(args) -> dict:
    if args.action == "trace-norm":
        f = _field_from_args(args)
        el = f.element(parse_element_coords(args.element))
        t, n = el.trace_and_norm()
        return {"trace": str(t), "norm": str(n)}
    if args.action == "discriminant":
        f = _field_from_args(args)
        tup = [f.element(parse_element_coords(part)) for part in args.tuple.split(";")]
        return {"discriminant": str(tuple_discriminant(tup))}
    if args.action == "minpoly-of":
        f = _field_from_args(args)
        el = f.element(parse_element_coords(args.element))
        mp = el.minimal_polynomial()
        return {
            "minpoly": mp.to_json_array(),
            "minpoly_text": mp.to_text(),
            "is_algebraic_integer": mp.is_integral(),
        }
    if args.action == "compose":
        out = composed_min_poly(args.op, parse_poly(args.p), parse_poly(args.q))
        return {"op": args.op, "poly": out.to_json_array(), "poly_text": out.to_text()}
    if args.action == "primitive-element":
        c = primitive_element_shift(parse_poly(args.p), parse_poly(args.q))
        return {"c": str(c)}
    if args.action == "denominator-clearing":
        f = _field_from_args(args)
        el = f.element(parse_element_coords(args.element))
        n, b = denominator_clearing(el)
        return {"n": str(n), "cleared_coords": [str(c) for c in (b.repr[i] for i in range(f.degree))]}
    raise InputError(f"unknown field action {args.action!r}")


def cmd_quad(args) -> dict:
    field = make_field(args.m)
    if args.action == "ring":
        return {
            "m": field.m,
            "d": field.d,
            "omega": "(1+sqrt(m))/2" if field.half else "sqrt(m)",
            "signature": list(field.signature),
        }
    if args.action == "split":
        return split_prime(field, args.q).to_json_dict()
    if args.action == "factor":
        ideal = parse_ideal(field, args.ideal)
        factors = factor_ideal(ideal)
        out = {
            "schema_version": 1,
            "m": field.m,
            "ideal": ideal.to_json_dict(),
            "factors": [
                {"prime": p.to_json_dict(), "norm": str(p.norm()), "multiplicity": v}
                for p, v in factors
            ],
        }
        if args.verify:
            prod = unit_ideal(field)
            for p, v in factors:
                prod = ideal_product(prod, ideal_pow(p, v))
            out["verification"] = {"product_equals_input": prod == ideal}
        return out
    if args.action == "product":
        a = parse_ideal(field, args.ideal_a)
        b = parse_ideal(field, args.ideal_b)
        return {"product": ideal_product(a, b).to_json_dict()}
    if args.action == "gcd":
        a = parse_ideal(field, args.ideal_a)
        b = parse_ideal(field, args.ideal_b)
        return {"gcd": ideal_gcd(a, b).to_json_dict()}
    if args.action == "quotient":
        a = parse_ideal(field, args.ideal_a)
        b = parse_ideal(field, args.ideal_b)
        k = ideal_divides_and_quotient(b, a)
        if k is None:
            return {"divides": False}
        return {"divides": True, "quotient": k.to_json_dict()}
    if args.action == "principal":
        ideal = parse_ideal(field, args.ideal)
        gen = is_principal(ideal)
        if gen is None:
            return {"principal": False}
        return {"principal": True, "generator": gen.to_json_dict()}
    if args.action == "minkowski":
        return {"m": field.m, **minkowski_bound(field).to_json_dict()}
    if args.action == "classgroup":
        report = class_group(field)
        out = report.to_json_dict()
        if args.verify:
            out["verification"] = _verify_class_group(report)
        return out
    raise InputError(f"unknown quad action {args.action!r}")


def _verify_class_group(report) -> dict:
    h = report.h
    t = report.table
    ok_identity = all(t[0][j] == j for j in range(h))
    ok_comm = all(t[i][j] == t[j][i] for i in range(h) for j in range(h))
    ok_assoc = all(
        t[t[i][j]][k] == t[i][t[j][k]] for i in range(h) for j in range(h) for k in range(h)
    )
    ok_inverse = all(any(t[i][j] == 0 for j in range(h)) for i in range(h))
    inv_principal = True
    for i in range(h):
        j = list(t[i]).index(0)
        prod = ideal_product(report.representatives[i], report.representatives[j])
        if is_principal(prod) is None:
            inv_principal = False
    return {
        "identity": ok_identity,
        "commutative": ok_comm,
        "associative": ok_assoc,
        "inverses": ok_inverse,
        "inverse_products_principal": inv_principal,
    }


def cmd_units(args) -> dict:
    field = make_field(args.m)
    out = unit_group_report(field, precision=decimal_precision(50)).to_json_dict()
    if field.m > 0:
        quotients, period = continued_fraction_of_omega(field)
        out["continued_fraction"] = {"quotients": quotients, "period": period}
    return out


def cmd_pell(args) -> dict:
    sol = pell_solve(args.m, args.kind)
    if sol is None:
        return {"m": args.m, "kind": args.kind, "solvable": False}
    return {"m": args.m, "kind": args.kind, "solvable": True, **sol.to_json_dict()}


def cmd_cyclo(args) -> dict:
    if args.action == "split":
        return cyclo_mod.split_prime_cyclotomic(args.m, args.q).to_json_dict()
    if args.action == "lists":
        c, i = cyclo_mod.class_number_one_lists()
        return {"cyclotomic": list(c), "imaginary_quadratic": list(i)}
    raise InputError(f"unknown cyclo action {args.action!r}")


def cmd_census(args) -> dict:
    field = make_field(args.m)
    result = census_mod.census_check(
        field, args.k, per_class=args.per_class, precision=decimal_precision(30)
    )
    out = result.to_json_dict()
    if args.csv:
        rows = census_mod.checkpoint_ratios(field, args.k)
        with open(args.csv, "w") as fh:
            fh.write("k,z_over_k\n")
            for kp, ratio in rows:
                fh.write(f"{kp},{ratio!r}\n")
        out["csv"] = args.csv
    return out


# ---------------------------------------------------------------------------
# argument wiring
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="quadrantal",
        description="exact computations in quadratic number rings and small number fields",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("json", "text"), default="json")
        return p

    poly = sub.add_parser("poly", help="polynomial utilities").add_subparsers(
        dest="action", required=True
    )
    p = fmt(poly.add_parser("divrem"))
    p.add_argument("--dividend", required=True)
    p.add_argument("--divisor", required=True)
    p = fmt(poly.add_parser("gcd"))
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p = fmt(poly.add_parser("content"))
    p.add_argument("--poly", required=True)
    p = fmt(poly.add_parser("eisenstein"))
    p.add_argument("--poly", required=True)
    p = fmt(poly.add_parser("cyclotomic"))
    p.add_argument("--p", type=int, required=True)

    field = sub.add_parser("field", help="number-field computations").add_subparsers(
        dest="action", required=True
    )
    p = fmt(field.add_parser("trace-norm"))
    p.add_argument("--minpoly", required=True)
    p.add_argument("--element", required=True)
    p = fmt(field.add_parser("discriminant"))
    p.add_argument("--minpoly", required=True)
    p.add_argument("--tuple", required=True, help="elements separated by ';'")
    p = fmt(field.add_parser("minpoly-of"))
    p.add_argument("--minpoly", required=True)
    p.add_argument("--element", required=True)
    p = fmt(field.add_parser("compose"))
    p.add_argument("--op", choices=("sum", "product"), required=True)
    p.add_argument("--p", required=True)
    p.add_argument("--q", required=True)
    p = fmt(field.add_parser("primitive-element"))
    p.add_argument("--p", required=True)
    p.add_argument("--q", required=True)
    p = fmt(field.add_parser("denominator-clearing"))
    p.add_argument("--minpoly", required=True)
    p.add_argument("--element", required=True)

    quad = sub.add_parser("quad", help="quadratic ring and ideal calculus").add_subparsers(
        dest="action", required=True
    )
    for name in ("ring", "minkowski"):
        p = fmt(quad.add_parser(name))
        p.add_argument("--m", type=int, required=True)
    p = fmt(quad.add_parser("split"))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p = fmt(quad.add_parser("factor"))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--ideal", required=True)
    p.add_argument("--verify", action="store_true")
    for name in ("product", "gcd", "quotient"):
        p = fmt(quad.add_parser(name))
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--ideal-a", required=True)
        p.add_argument("--ideal-b", required=True)
    p = fmt(quad.add_parser("principal"))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--ideal", required=True)
    p = fmt(quad.add_parser("classgroup"))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--verify", action="store_true")

    p = fmt(sub.add_parser("units", help="unit group, fundamental unit, regulator"))
    p.add_argument("--m", type=int, required=True)

    p = fmt(sub.add_parser("pell", help="least solutions of Pell equations"))
    p.add_argument("--m", type=int, required=True)
    p.add_argument(
        "--kind", choices=("plusOne", "minusOne", "plusFour", "minusFour"), required=True
    )

    cyclo = sub.add_parser("cyclo", help="cyclotomic splitting parameters").add_subparsers(
        dest="action", required=True
    )
    p = fmt(cyclo.add_parser("split"))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    fmt(cyclo.add_parser("lists"))

    p = fmt(sub.add_parser("census", help="ideal counts against the density law"))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--per-class", action="store_true")
    p.add_argument("--csv", help="write (k', Z(k')/k') checkpoints to this file")

    return top


_HANDLERS = {
    "poly": cmd_poly,
    "field": cmd_field,
    "quad": cmd_quad,
    "units": cmd_units,
    "pell": cmd_pell,
    "cyclo": cmd_cyclo,
    "census": cmd_census,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload = _HANDLERS[args.command](args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except PRECONDITION_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    emit(payload, args.format)
    return 0


if __name__ == "__main__":
    sys.exit(main())
