"""Command-line front end.

Usage is ``pyth <command> [flags] [args]``. Triples and conic points are
comma-separated integers without spaces; the two parameters are integers or
exact fractions like ``-3`` or ``1/2`` (decimals are refused to keep the
arithmetic exact). Results print as text by default or as one JSON object
with ``--format json``. Exit codes: 0 on success, 1 when a value is outside
an operation's domain, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import conic, forms, products, ptpm
from .core import DomainError, exact, triple_from_point

_RAT_RE = re.compile(r"^[+-]?\d+(?:/[1-9]\d*)?$")


def _rat_arg(text: str):
    if not _RAT_RE.match(text):
        raise argparse.ArgumentTypeError(
            f"expected an integer or exact fraction p/q, got {text!r}"
        )
    return exact(Fraction(text))


def _vec_arg(text: str):
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        ) from None
    if len(parts) not in (2, 3):
        raise argparse.ArgumentTypeError(
            f"expected 2 (point) or 3 (triple) components, got {len(parts)}"
        )
    return parts


def _triple_arg(text: str):
    parts = _vec_arg(text)
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected a triple x,y,z, got {text!r}")
    return parts


def _nonneg_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _num(value):
    """JSON-safe exact scalar: ints stay ints, fractions become 'p/q' strings."""
    return value if isinstance(value, int) else str(value)


def _vec_json(vec):
    return [_num(c) for c in vec]


def _mat_json(matrix):
    return [[_num(e) for e in row] for row in matrix.rows]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pyth",
        description="Exact products, inverses, and verification suites for Pythagorean triples.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format (default: text)")

    bg = argparse.ArgumentParser(add_help=False)
    bg.add_argument("--beta", type=_rat_arg, help="first family parameter (integer or p/q)")
    bg.add_argument("--gamma", type=_rat_arg, help="second family parameter (integer or p/q)")

    p = sub.add_parser("product", parents=[common, bg], help="multiply two triples")
    p.add_argument("--op", choices=("bullet", "te", "bs"), default="bullet",
                   help="product kind (default: bullet)")
    p.add_argument("lhs", type=_triple_arg)
    p.add_argument("rhs", type=_triple_arg)

    p = sub.add_parser("power", parents=[common, bg], help="n-th power of a triple")
    p.add_argument("--op", choices=("bullet", "te", "bs"), default="bullet")
    p.add_argument("base", type=_triple_arg)
    p.add_argument("n", type=_nonneg_arg)

    p = sub.add_parser("inverse", parents=[common, bg],
                       help="inverse of a level-1 conic point (u,v) or of a triple in the morphism image")
    p.add_argument("vec", type=_vec_arg, metavar="point-or-triple")

    p = sub.add_parser("matrix", parents=[common, bg],
                       help="family matrix at a triple x,y,z or conic point u,v")
    p.add_argument("--tikoo", choices=ptpm.TIKOO_KINDS, help="use a classical special-case matrix instead")
    p.add_argument("vec", type=_vec_arg, metavar="point-or-triple")

    p = sub.add_parser("verify", parents=[common, bg], help="run a verification suite")
    p.add_argument("target", choices=("natural", "ptpm", "axioms"))
    p.add_argument("--tikoo", choices=ptpm.TIKOO_KINDS)
    p.add_argument("--op", choices=("bullet", "te", "bs"), default="bullet")
    p.add_argument("--bound", type=_nonneg_arg, default=4, help="scan bound for ptpm (default: 4)")
    p.add_argument("--seed", type=int, help="add seeded random samples to the axiom grid")

    p = sub.add_parser("pell", parents=[common], help="fundamental solution of x^2 - d*y^2 = 1")
    p.add_argument("d", type=int)

    p = sub.add_parser("enumerate", parents=[common, bg], help="integer points on the unit conic")
    p.add_argument("--count", type=_nonneg_arg, help="identity plus forward powers of the fundamental point")
    p.add_argument("--bound", type=_nonneg_arg, help="exhaustive scan of |u|,|v| <= bound instead")

    p = sub.add_parser("conic-through", parents=[common, bg],
                       help="gamma putting the point on the unit conic for the given beta")
    p.add_argument("point", type=_vec_arg)

    return parser


def _require_bg(args, parser, why: str):
    if args.beta is None or args.gamma is None:
        parser.error(f"--beta and --gamma are required {why}")
    return args.beta, args.gamma


def _product_kind(args, parser):
    if args.op == "te":
        return products.TE_PRODUCT
    if args.op == "bs":
        return products.BS_PRODUCT
    if getattr(args, "tikoo", None):
        return products.bullet(ptpm.tikoo_form(args.tikoo))
    return products.bullet_bg(_require_bg(args, parser, "for --op bullet"))


def _op_fields(args):
    fields = {"op": args.op}
    if args.op == "bullet":
        if getattr(args, "tikoo", None):
            fields["tikoo"] = args.tikoo
        else:
            fields["beta"] = str(args.beta)
            fields["gamma"] = str(args.gamma)
    return fields


def _cmd_product(args, parser):
    kind = _product_kind(args, parser)
    result = products.product(kind, args.lhs, args.rhs)
    payload = {**_op_fields(args), "lhs": list(args.lhs), "rhs": list(args.rhs),
               "result": list(result)}
    return payload, str(result)


def _cmd_power(args, parser):
    kind = _product_kind(args, parser)
    result = products.power(kind, args.base, args.n)
    payload = {**_op_fields(args), "base": list(args.base), "exponent": args.n,
               "result": list(result)}
    return payload, str(result)


def _cmd_inverse(args, parser):
    beta, gamma = _require_bg(args, parser, "for inverse")
    payload = {"beta": str(beta), "gamma": str(gamma)}
    if len(args.vec) == 2:
        result = conic.conic_inverse((beta, gamma), args.vec)
        payload.update({"point": list(args.vec), "inverse": list(result)})
    else:
        result = conic.triple_inverse_of_triple((beta, gamma), args.vec)
        payload.update({"triple": list(args.vec), "inverse": list(result)})
    return payload, str(result)


def _cmd_matrix(args, parser):
    if args.tikoo:
        if len(args.vec) != 3:
            parser.error("--tikoo matrices take a triple x,y,z")
        matrix = ptpm.tikoo_matrix(args.tikoo, args.vec)
        payload = {"tikoo": args.tikoo, "triple": list(args.vec)}
    else:
        beta, gamma = _require_bg(args, parser, "unless --tikoo is given")
        if len(args.vec) == 2:
            triple = triple_from_point(args.vec)
            payload = {"beta": str(beta), "gamma": str(gamma), "point": list(args.vec)}
        else:
            triple = args.vec
            payload = {"beta": str(beta), "gamma": str(gamma), "triple": list(args.vec)}
        matrix = ptpm.ptpm_matrix((beta, gamma), triple)
    payload.update({"matrix": _mat_json(matrix), "integral": matrix.is_integral,
                    "det": _num(matrix.det())})
    return payload, str(matrix)


def _cmd_pell(args, parser):
    sol = conic.pell_minimal(args.d)
    return {"d": args.d, "x": sol.x, "y": sol.y}, f"{sol.x},{sol.y}"


def _cmd_enumerate(args, parser):
    beta, gamma = _require_bg(args, parser, "for enumerate")
    if (args.count is None) == (args.bound is None):
        parser.error("enumerate requires exactly one of --count or --bound")
    if args.count is not None:
        points = conic.enumerate_unit_points((beta, gamma), args.count)
        payload = {"beta": str(beta), "gamma": str(gamma), "count": args.count}
    else:
        points = conic.unit_points_in_box((beta, gamma), args.bound)
        payload = {"beta": str(beta), "gamma": str(gamma), "bound": args.bound}
    payload["points"] = [list(p) for p in points]
    return payload, "\n".join(str(p) for p in points)


def _cmd_conic_through(args, parser):
    if args.beta is None:
        parser.error("--beta is required for conic-through")
    if len(args.point) != 2:
        parser.error("conic-through takes a point u,v")
    gamma = conic.conic_through(args.point, args.beta)
    payload = {"point": list(args.point), "beta": str(args.beta), "gamma": str(gamma)}
    return payload, str(gamma)


def _verify_form(args, parser):
    if args.tikoo:
        return ptpm.tikoo_form(args.tikoo), {"tikoo": args.tikoo}
    beta, gamma = _require_bg(args, parser, "unless --tikoo is given")
    return ptpm.ptpm_form((beta, gamma)), {"beta": str(beta), "gamma": str(gamma)}


def _witness_json(witness):
    if witness is None:
        return None
    return [list(_vec_json(part)) if isinstance(part, (tuple, list)) else _num(part)
            for part in witness]


def _cmd_verify(args, parser):
    if args.target == "natural":
        form, label = _verify_form(args, parser)
        report = forms.is_natural(form)
        payload = {
            "target": "natural", **label,
            "composes": report.composes,
            "commutes": report.commutes,
            "fixes_identity": report.fixes_identity,
            "natural": report.is_natural,
            "compose_witness": _witness_json(report.compose_witness),
            "commute_witness": _witness_json(report.commute_witness),
        }
        lines = [
            _law_line("composition nu(nu(a).b) = nu(a).nu(b)", report.composes, report.compose_witness),
            _law_line("commutativity nu(a).b = nu(b).a", report.commutes, report.commute_witness),
            _law_line("identity nu(1,0,1) = I", report.fixes_identity, None),
            f"natural: {'yes' if report.is_natural else 'no'}",
        ]
        return payload, "\n".join(lines)

    if args.target == "ptpm":
        form, label = _verify_form(args, parser)
        report = ptpm.preserves_pythagorean(form, args.bound)
        payload = {
            "target": "ptpm", **label, "bound": args.bound,
            "preserved": report.preserved,
            "pairs_checked": report.pairs_checked,
            "witness": list(report.witness) if report.witness else None,
            "image": _vec_json(report.image) if report.image else None,
        }
        if report.preserved:
            text = f"preserved: yes (pairs checked: {report.pairs_checked})"
        else:
            text = (f"preserved: NO  witness (m,n,u,v)={report.witness}  "
                    f"image={','.join(str(c) for c in report.image)}")
        return payload, text

    kind = _product_kind(args, parser)
    extra = 25 if args.seed is not None else 0
    report = products.verify_axioms(kind, extra_random=extra, seed=args.seed or 0)
    payload = {
        "target": "axioms", **_op_fields(args),
        "commutative": report.commutative.holds,
        "associative": report.associative.holds,
        "identity": report.identity.holds,
        "pythagorean_closure": report.pythagorean_closure.holds,
        "commutative_monoid": report.is_commutative_monoid,
        "witnesses": {
            "commutative": _witness_json(report.commutative.witness),
            "associative": _witness_json(report.associative.witness),
            "identity": _witness_json(report.identity.witness),
            "pythagorean_closure": _witness_json(report.pythagorean_closure.witness),
        },
    }
    if args.seed is not None:
        payload["seed"] = args.seed
    lines = [
        _law_line("commutative", report.commutative.holds, report.commutative.witness),
        _law_line("associative", report.associative.holds, report.associative.witness),
        _law_line("identity (1,0,1)", report.identity.holds, report.identity.witness),
        _law_line("closure on Pythagorean triples", report.pythagorean_closure.holds,
                  report.pythagorean_closure.witness),
        f"commutative monoid: {'yes' if report.is_commutative_monoid else 'no'}",
    ]
    return payload, "\n".join(lines)


def _law_line(label: str, holds: bool, witness) -> str:
    if holds:
        return f"{label}: pass"
    suffix = f"  witness: {witness}" if witness is not None else ""
    return f"{label}: FAIL{suffix}"


_HANDLERS = {
    "product": _cmd_product,
    "power": _cmd_power,
    "inverse": _cmd_inverse,
    "matrix": _cmd_matrix,
    "verify": _cmd_verify,
    "pell": _cmd_pell,
    "enumerate": _cmd_enumerate,
    "conic-through": _cmd_conic_through,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, text = _HANDLERS[args.command](args, parser)
    except DomainError as err:
        print(f"error: {type(err).__name__}: {err}", file=sys.stderr)
        return 1
    print(json.dumps(payload) if args.format == "json" else text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
