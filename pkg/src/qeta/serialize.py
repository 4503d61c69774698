"""JSON and shorthand text formats for elements, tensors and series.

Element JSON::

    {"algebra": "QSym", "basis": "Eta",
     "terms": [{"comp": [1, 3, 1], "coeff": {"num": [1], "den": [1]}}]}

Tensors use ``"bases": [b1, b2]`` and terms ``{"left": [...], "right": [...], "coeff": ...}``.
Words may carry ``"params": {"a": scalar, "b": scalar}``.  Terms are written
in canonical order so output is byte-stable.

Shorthand: ``"eta:1,3,1"``, ``"M:"`` (the unit), ``"L:2,1"``, ``"H:2"``,
``"etastar:1,1"``, ``"x:1,2,1"``.
"""
from __future__ import annotations

import json
import os

from .compositions import as_composition, parse_composition
from .errors import DomainError, ParseError, QetaError
from .linear import FreeWordElement, NSymElement, QSymElement, TensorElement
from .nsym import NSymSeries
from .scalars import Scalar

_ALGEBRAS = {"QSym": QSymElement, "NSym": NSymElement, "F": FreeWordElement}

SHORTHANDS = {
    "m": ("QSym", "M"),
    "l": ("QSym", "L"),
    "eta": ("QSym", "Eta"),
    "h": ("NSym", "H"),
    "etastar": ("NSym", "EtaStar"),
    "x": ("F", "x"),
}


def to_json(obj) -> dict:
    if isinstance(obj, NSymSeries):
        return {"trunc": obj.trunc, "coeffs": [to_json(c) for c in obj.coeffs]}
    if isinstance(obj, TensorElement):
        return {
            "algebra": obj.leg_algebra,
            "bases": list(obj.basis),
            "terms": [{"left": list(a), "right": list(b), "coeff": c.to_json()}
                      for (a, b), c in obj.items()],
        }
    out = {
        "algebra": obj.algebra,
        "basis": obj.basis,
        "terms": [{"comp": list(k), "coeff": c.to_json()} for k, c in obj.items()],
    }
    if isinstance(obj, FreeWordElement) and obj.params is not None:
        out["params"] = {"a": obj.params.a.to_json(), "b": obj.params.b.to_json()}
    return out


def dumps(obj, indent=None) -> str:
    return json.dumps(to_json(obj), indent=indent)


def _comp(value, where):
    if not isinstance(value, list):
        raise ParseError(f"{where}: composition must be an array")
    try:
        return as_composition(value)
    except DomainError as exc:
        raise ParseError(f"{where}: {exc}") from None


def _coeff(term, where):
    if "coeff" not in term:
        raise ParseError(f"{where}: missing 'coeff'")
    try:
        return Scalar.from_json(term["coeff"])
    except ParseError as exc:
        raise ParseError(f"{where}: {exc}") from None


def from_json(data):
    """Inverse of :func:`to_json`."""
    if not isinstance(data, dict):
        raise ParseError("top-level JSON value must be an object")
    if "trunc" in data:
        try:
            return NSymSeries(data["trunc"], tuple(from_json(c) for c in data["coeffs"]))
        except (KeyError, TypeError, QetaError) as exc:
            raise ParseError(f"bad series: {exc}") from None
    algebra = data.get("algebra")
    if algebra not in _ALGEBRAS:
        raise ParseError(f"unknown algebra {algebra!r}; expected one of {sorted(_ALGEBRAS)}")
    terms = data.get("terms")
    if not isinstance(terms, list):
        raise ParseError("'terms' must be an array")
    cls = _ALGEBRAS[algebra]
    if "bases" in data:
        bases = data["bases"]
        if not (isinstance(bases, list) and len(bases) == 2 and all(b in cls.bases for b in bases)):
            raise ParseError(f"bad tensor bases {bases!r} for {algebra}")
        out = {}
        for i, t in enumerate(terms):
            where = f"term {i}"
            if not isinstance(t, dict):
                raise ParseError(f"{where}: must be an object")
            key = (_comp(t.get("left"), where), _comp(t.get("right"), where))
            out[key] = out.get(key, Scalar()) + _coeff(t, where)
        return TensorElement(algebra, tuple(bases), out)
    basis = data.get("basis")
    if basis not in cls.bases:
        raise ParseError(f"unknown basis {basis!r} for {algebra}; expected one of {cls.bases}")
    out = {}
    for i, t in enumerate(terms):
        where = f"term {i}"
        if not isinstance(t, dict):
            raise ParseError(f"{where}: must be an object")
        key = _comp(t.get("comp"), where)
        out[key] = out.get(key, Scalar()) + _coeff(t, where)
    if cls is FreeWordElement:
        params = None
        if "params" in data:
            from .fshuffle import SharpParams

            p = data["params"]
            try:
                params = SharpParams(Scalar.from_json(p["a"]), Scalar.from_json(p["b"]))
            except (KeyError, TypeError) as exc:
                raise ParseError(f"bad params: {exc}") from None
        return FreeWordElement(basis, out, params)
    return cls(basis, out)


def loads(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        line = text.splitlines()[exc.lineno - 1] if text.splitlines() else ""
        raise ParseError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}\n  {line}"
        ) from None
    return from_json(data)


def parse_shorthand(text: str):
    head, sep, body = text.strip().partition(":")
    if not sep or head.lower() not in SHORTHANDS:
        raise ParseError(
            f"expected '<basis>:<composition>' with basis in {sorted(SHORTHANDS)}, got {text!r}"
        )
    algebra, basis = SHORTHANDS[head.lower()]
    return _ALGEBRAS[algebra](basis, {parse_composition(body): 1})


def parse_element(text: str):
    """Parse a shorthand, a JSON document, or the path of a file holding either."""
    src = text.strip()
    if not src.startswith("{") and os.path.isfile(src):
        with open(src, encoding="utf-8") as fh:
            src = fh.read().strip()
    if src.startswith("{"):
        return loads(src)
    return parse_shorthand(src)
