"""Command-line front end: ``qeta VERB [options]``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 arithmetic error such as evaluating at a pole.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import fshuffle, nsym, oracle, products, qsym, serialize, verify
from .compositions import parse_composition
from .errors import PoleError, QetaError
from .fshuffle import SharpParams
from .linear import FreeWordElement, NSymElement, QSymElement
from .scalars import Scalar, parse_scalar

DEFAULT_MAXDEG = 6

_BASIS_ALIASES = {
    "m": "M", "l": "L", "eta": "Eta", "h": "H", "etastar": "EtaStar", "x": "x",
}


class CliError(Exception):
    def __init__(self, message, code=2):
        super().__init__(message)
        self.code = code


def _basis(name: str) -> str:
    try:
        return _BASIS_ALIASES[name.lower()]
    except KeyError:
        raise CliError(f"unknown basis {name!r}; expected one of {sorted(_BASIS_ALIASES)}")


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise CliError(f"expected a rational number, got {text!r}")


def _env_maxdeg() -> int:
    raw = os.environ.get("QETA_MAXDEG")
    if raw is None:
        return DEFAULT_MAXDEG
    try:
        return int(raw)
    except ValueError:
        raise CliError(f"QETA_MAXDEG must be an integer, got {raw!r}")


def _is_element_text(text: str) -> bool:
    return ":" in text or text.strip().startswith("{") or os.path.isfile(text)


# -- output ------------------------------------------------------------------------


def _emit(obj, args):
    """Print an element, tensor, series or scalar after optional specialization."""
    if args.q is not None:
        q0 = _rational(args.q)
        if isinstance(obj, Scalar):
            obj = Scalar.from_fraction(obj.evaluate(q0))
        else:
            obj = obj.specialize(q0)
    if isinstance(obj, Scalar):
        print(json.dumps(obj.to_json()) if args.json else str(obj))
        return
    if args.json:
        print(serialize.dumps(obj))
        return
    print("\n".join(obj.lines()) if obj else "0")


# -- verbs -------------------------------------------------------------------------------


def cmd_expand(args):
    f = serialize.parse_element(args.element)
    if args.poly:
        if not isinstance(f, QSymElement):
            raise CliError("--poly applies to QSym elements only")
        p = oracle.expand(f, args.nvars, args.maxdeg)
        if args.q is not None:
            q0 = _rational(args.q)
            p = oracle.TruncatedPolynomial(p.nvars, p.maxdeg, {
                m: Scalar.from_fraction(c.evaluate(q0)) for m, c in p.terms.items()})
        print(p.to_text() or "0")
        return 0
    target = _basis(args.to) if args.to else f.canonical
    _emit(f.to(target), args)
    return 0


def cmd_convert(args):
    f = serialize.parse_element(args.element)
    _emit(f.to(_basis(args.to)), args)
    return 0


def _params(args) -> SharpParams:
    if args.u is not None:
        if args.a is not None or args.b is not None:
            raise CliError("give either --u or --a/--b, not both")
        return SharpParams.for_eta(_rational(args.u))
    a = parse_scalar(args.a) if args.a is not None else None
    b = parse_scalar(args.b) if args.b is not None else None
    default = SharpParams.for_eta(1)
    return SharpParams(a if a is not None else default.a, b if b is not None else default.b)


def cmd_product(args):
    if _is_element_text(args.left) or _is_element_text(args.right):
        f, g = serialize.parse_element(args.left), serialize.parse_element(args.right)
        if type(f) is not type(g):
            raise CliError("both factors must belong to the same algebra")
        if isinstance(f, FreeWordElement):
            _emit(fshuffle.sharp(f, g, _params(args)), args)
        else:
            _emit(f * g, args)
        return 0
    delta, eps = parse_composition(args.left), parse_composition(args.right)
    method = args.method
    if method in ("v1", "v2", "v3"):
        out = products.eta_product(delta, eps, method)
    elif method == "m":
        out = qsym.to_eta(qsym.m_product(qsym.eta_basis(delta), qsym.eta_basis(eps)))
    else:
        out = qsym.to_eta(oracle.oracle_product(qsym.eta_basis(delta), qsym.eta_basis(eps)))
    _emit(out, args)
    return 0


def cmd_coproduct(args):
    f = serialize.parse_element(args.element)
    if isinstance(f, QSymElement):
        out = qsym.coproduct(f) if args.method == "formula" else qsym.coproduct_m(f.to("M"))
        if args.method == "m" and f.basis == "Eta":
            out = out.to(("Eta", "Eta"))
    elif isinstance(f, NSymElement):
        out = nsym.coproduct(f) if args.method == "formula" else nsym.coproduct_h(f)
        if args.method == "m" and f.basis == "EtaStar":
            out = out.to(("EtaStar", "EtaStar"))
    else:
        out = fshuffle.deconcat(f)
    _emit(out, args)
    return 0


def cmd_antipode(args):
    if (args.comp is None) == (args.element is None):
        raise CliError("give exactly one of --comp or --element")
    method = args.method
    if args.element is not None:
        f = serialize.parse_element(args.element)
        if isinstance(f, FreeWordElement):
            out = fshuffle.apply_antipode(f, _params(args))
        elif isinstance(f, QSymElement) and method == "m":
            out = qsym.antipode(f)
        else:
            raise CliError("--element works with method m (QSym) or f (words)")
        _emit(out, args)
        return 0
    alpha = parse_composition(args.comp)
    if method == "s" and args.q is not None and _rational(args.q) == 0:
        raise CliError("pole: antipode method s uses p = 1/q, which does not exist at q=0",
                       code=3)
    if method == "m":
        out = qsym.antipode(qsym.element("Eta", alpha))
    elif method == "s":
        out = qsym.antipode_eta_s(alpha)
    elif method == "s2":
        out = qsym.antipode_eta_s2(alpha)
    else:
        out = fshuffle.antipode_f(alpha, _params(args))
    _emit(out, args)
    return 0


def cmd_pair(args):
    h, f = serialize.parse_element(args.left), serialize.parse_element(args.right)
    if isinstance(h, QSymElement) and isinstance(f, NSymElement):
        h, f = f, h
    if not (isinstance(h, NSymElement) and isinstance(f, QSymElement)):
        raise CliError("pair needs one NSym element and one QSym element")
    _emit(nsym.pairing(h, f), args)
    return 0


def cmd_stufufufflers(args):
    if args.lengths is not None:
        if args.left is not None or args.right is not None:
            raise CliError("give either --lengths or --left/--right")
        fs = products.enumerate_stufufufflers(*args.lengths)
        if args.json:
            print(json.dumps([{"fP": list(f.fP), "fQ": list(f.fQ)} for f in fs]))
        else:
            print("\n".join(str(f) for f in fs))
        print(f"count: {len(fs)}", file=sys.stderr)
        return 0
    if args.left is None or args.right is None:
        raise CliError("give --lengths L M or both --left and --right")
    delta, eps = parse_composition(args.left), parse_composition(args.right)
    fs = products.enumerate_stufufufflers(len(delta), len(eps))
    rows = [(f, products.stats(f, delta, eps)) for f in fs]
    if args.json:
        print(json.dumps([{"fP": list(f.fP), "fQ": list(f.fQ), "wt": list(s.wt),
                           "loss": s.loss, "poise": s.poise} for f, s in rows]))
    else:
        for f, s in rows:
            wt = ",".join(map(str, s.wt))
            print(f"{f}  wt={wt} loss={s.loss} poise={s.poise}")
    print(f"count: {len(fs)}", file=sys.stderr)
    return 0


def cmd_sharp(args):
    p = _params(args)
    delta, eps = parse_composition(args.left), parse_composition(args.right)
    if args.explicit:
        out = fshuffle.sharp_explicit(delta, eps, p)
    else:
        out = fshuffle.sharp(fshuffle.word(delta), fshuffle.word(eps), p)
    _emit(out, args)
    return 0


def cmd_verify(args):
    maxdeg = args.maxdeg if args.maxdeg is not None else _env_maxdeg()
    if maxdeg < 0:
        raise CliError("--maxdeg must be nonnegative")
    results = verify.run_suite(args.suite, maxdeg)
    if args.json:
        print(json.dumps([{"family": r.name, "passed": r.total - len(r.failures),
                           "total": r.total, "failures": r.failures[:5]} for r in results]))
    else:
        print(verify.format_results(results))
    return 0 if all(r.ok for r in results) else 1


# -- parser --------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--q", metavar="RATIONAL",
                        help="specialize q to this rational value at output time")

    parser = argparse.ArgumentParser(
        prog="qeta",
        description="Exact computations with enriched q-monomial quasisymmetric functions.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("expand", parents=[common],
                       help="expand an element in its canonical basis or as a polynomial")
    p.add_argument("element", help="shorthand like eta:1,3,1, JSON, or a file path")
    p.add_argument("--to", help="target basis (default M for QSym, H for NSym)")
    p.add_argument("--poly", action="store_true", help="dump a truncated polynomial expansion")
    p.add_argument("--nvars", type=int, help="number of variables for --poly (default maxdeg)")
    p.add_argument("--maxdeg", type=int, help="truncation degree for --poly (default: degree)")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("convert", parents=[common], help="rewrite an element in another basis")
    p.add_argument("element")
    p.add_argument("--to", required=True, help="M, L, eta, H or etastar")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("product", parents=[common],
                       help="eta_left * eta_right, or the product of two elements")
    p.add_argument("--left", required=True, help="composition, or an element")
    p.add_argument("--right", required=True, help="composition, or an element")
    p.add_argument("--method", choices=["v1", "v2", "v3", "m", "oracle"], default="v1")
    _add_param_flags(p)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("coproduct", parents=[common], help="coproduct of an element")
    p.add_argument("element")
    p.add_argument("--method", choices=["formula", "m"], default="formula",
                   help="closed formula in the element's basis, or via M/H")
    p.set_defaults(func=cmd_coproduct)

    p = sub.add_parser("antipode", parents=[common], help="antipode of eta_comp or an element")
    p.add_argument("--comp", help="composition alpha")
    p.add_argument("--element", help="an element (methods m and f)")
    p.add_argument("--method", choices=["m", "s", "s2", "f"], default="s2")
    _add_param_flags(p)
    p.set_defaults(func=cmd_antipode)

    p = sub.add_parser("pair", parents=[common], help="pairing of an NSym and a QSym element")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("stufufufflers", parents=[common],
                       help="enumerate stufufufflers, with statistics for given compositions")
    p.add_argument("--lengths", type=int, nargs=2, metavar=("L", "M"))
    p.add_argument("--left")
    p.add_argument("--right")
    p.set_defaults(func=cmd_stufufufflers)

    p = sub.add_parser("sharp", parents=[common], help="the product x_left # x_right")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--explicit", action="store_true", help="use the stufufuffler sum")
    _add_param_flags(p)
    p.set_defaults(func=cmd_sharp)

    p = sub.add_parser("verify", parents=[common], help="run the identity checks")
    p.add_argument("--maxdeg", type=int, help=f"degree bound (default $QETA_MAXDEG or {DEFAULT_MAXDEG})")
    p.add_argument("--suite", choices=verify.SUITES + ("all",), default="all")
    p.set_defaults(func=cmd_verify)
    return parser


def _add_param_flags(p):
    p.add_argument("--a", help="parameter a of the # product (default q-1)")
    p.add_argument("--b", help="parameter b of the # product (default -q)")
    p.add_argument("--u", help="rational u; sets a=(q-1)u and b=-q*u^2")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except PoleError as exc:
        print(f"error: pole: {exc}", file=sys.stderr)
        return 3
    except QetaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
