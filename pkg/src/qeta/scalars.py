"""Exact rational functions in one formal parameter ``q``.

A :class:`Scalar` is a quotient ``num/den`` of integer polynomials kept in a
canonical form: coprime over the rationals, joint integer content 1, and a
denominator with positive leading coefficient.  Equal values therefore have
equal representations, which is what lets linear combinations drop zeros and
compare structurally.

Polynomials are tuples of ints in ascending degree without trailing zeros;
the zero polynomial is ``()``.
"""
from __future__ import annotations

import ast
from fractions import Fraction
from math import gcd
from numbers import Rational

from .errors import ParseError, PoleError

# -- integer polynomial helpers ----------------------------------------------


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _neg(a):
    return tuple(-c for c in a)


def _sub(a, b):
    return _add(a, _neg(b))


def _mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _scale(a, k):
    return _trim(c * k for c in a) if k else ()


def _content(a):
    g = 0
    for c in a:
        g = gcd(g, c)
    return g


def _primitive(a):
    if not a:
        return ()
    g = _content(a)
    if a[-1] < 0:
        g = -g
    return tuple(c // g for c in a)


def _prem(a, b):
    """A multiple of the remainder of ``a`` by ``b`` with integer coefficients."""
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    while r and len(r) - 1 >= db:
        lead, shift = r[-1], len(r) - 1 - db
        r = [lb * c for c in r]
        for i, c in enumerate(b):
            r[i + shift] -= lead * c
        r = list(_trim(r))
    return tuple(r)


def poly_gcd(a, b):
    """Primitive gcd over Z[q] with positive leading coefficient."""
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _primitive(_prem(a, b))
    return a


def _divexact(a, b):
    """Quotient of ``a`` by ``b`` over Z; the division must be exact."""
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    if len(r) - 1 < db:
        if r:
            raise ArithmeticError("inexact polynomial division")
        return ()
    quot = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if c == 0:
            continue
        qc, rem = divmod(c, lb)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        shift = k - db
        quot[shift] = qc
        for i, bc in enumerate(b):
            r[i + shift] -= qc * bc
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    return _trim(quot)


def _normalize(num, den):
    if not den:
        raise PoleError("division by zero")
    if not num:
        return (), (1,)
    if den == (1,):
        return num, den
    if len(den) > 1:
        g = poly_gcd(num, den)
        if len(g) > 1:
            num, den = _divexact(num, g), _divexact(den, g)
    c = gcd(_content(num), _content(den))
    if den[-1] < 0:
        c = -c
    if c != 1:
        num = tuple(x // c for x in num)
        den = tuple(x // c for x in den)
    return num, den


def _poly_str(p, var="q"):
    if not p:
        return "0"
    parts = []
    for deg in range(len(p) - 1, -1, -1):
        c = p[deg]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if deg == 0:
            body = str(mag)
        else:
            mono = var if deg == 1 else f"{var}^{deg}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _horner(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


# -- the field element ---------------------------------------------------------


class Scalar:
    """An element of Q(q) in canonical form; immutable and hashable."""

    __slots__ = ("num", "den")

    def __init__(self, num=(), den=(1,)):
        num, den = _normalize(_trim(num), _trim(den))
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def _raw(cls, num, den=(1,)):
        obj = object.__new__(cls)
        object.__setattr__(obj, "num", num)
        object.__setattr__(obj, "den", den)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @classmethod
    def from_int(cls, n: int) -> "Scalar":
        return cls._raw((n,) if n else ())

    @classmethod
    def from_fraction(cls, x) -> "Scalar":
        x = Fraction(x)
        return cls((x.numerator,), (x.denominator,))

    @classmethod
    def coerce(cls, x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, int):
            return cls.from_int(x)
        if isinstance(x, Rational):
            return cls.from_fraction(x)
        raise TypeError(f"cannot convert {type(x).__name__} to Scalar")

    # predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self) -> bool:
        return self.den == (1,)

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return Fraction(self.num[0] if self.num else 0, self.den[0])

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == (1,) and other.den == (1,):
            return Scalar._raw(_add(self.num, other.num))
        if self.den == other.den:
            return Scalar(_add(self.num, other.num), self.den)
        return Scalar(
            _add(_mul(self.num, other.den), _mul(other.num, self.den)),
            _mul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(_neg(self.num), self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.num or not other.num:
            return ZERO
        if self.den == (1,) and other.den == (1,):
            return Scalar._raw(_mul(self.num, other.num))
        return Scalar(_mul(self.num, other.num), _mul(self.den, other.den))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self.num:
            raise PoleError("division by zero")
        return Scalar(self.den, self.num)

    def __truediv__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.num == other.num and self.den == other.den
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # substitutions ------------------------------------------------------

    def evaluate(self, q0) -> Fraction:
        """Exact value at the rational point ``q0``."""
        q0 = Fraction(q0)
        d = _horner(self.den, q0)
        if d == 0:
            raise PoleError(f"{self} has a pole at q = {q0}")
        return _horner(self.num, q0) / d

    def specialize(self, q0) -> "Scalar":
        return Scalar.from_fraction(self.evaluate(q0))

    def substitute_reciprocal(self) -> "Scalar":
        """The rational function ``x(1/q)``."""
        if not self.num:
            return self
        dn, dd = len(self.num) - 1, len(self.den) - 1
        num = _mul(tuple(reversed(self.num)), (0,) * dd + (1,))
        den = _mul(tuple(reversed(self.den)), (0,) * dn + (1,))
        return Scalar(num, den)

    # display ---------------------------------------------------------------

    def __str__(self):
        n = _poly_str(self.num)
        if self.den == (1,):
            return n
        d = _poly_str(self.den)
        if sum(1 for c in self.num if c) > 1:
            n = f"({n})"
        if sum(1 for c in self.den if c) > 1 or len(self.den) > 1 and self.den[-1] != 1:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"Scalar({self})"

    def is_atomic(self) -> bool:
        """True if ``str(self)`` can be printed without surrounding parentheses."""
        return self.den == (1,) and sum(1 for c in self.num if c) <= 1

    def to_json(self) -> dict:
        return {"num": list(self.num), "den": list(self.den)}

    @classmethod
    def from_json(cls, data) -> "Scalar":
        if not isinstance(data, dict) or "num" not in data:
            raise ParseError(f"scalar must be an object with 'num' and 'den': {data!r}")
        num, den = data["num"], data.get("den", [1])
        for part in (num, den):
            if not isinstance(part, list) or not all(
                isinstance(c, int) and not isinstance(c, bool) for c in part
            ):
                raise ParseError(f"scalar coefficients must be integer arrays: {data!r}")
        if not _trim(den):
            raise ParseError("scalar denominator is zero")
        return cls(tuple(num), tuple(den))


ZERO = Scalar._raw(())
ONE = Scalar._raw((1,))
q = Scalar._raw((0, 1))
r = Scalar._raw((1, 1))


def power(x, k: int) -> Scalar:
    return Scalar.coerce(x) ** k


def evaluate(x, q0) -> Fraction:
    return Scalar.coerce(x).evaluate(q0)


def substitute_reciprocal(x) -> Scalar:
    return Scalar.coerce(x).substitute_reciprocal()


# -- text syntax -------------------------------------------------------------

_NAMES = {"q": q, "r": r}


def parse_scalar(text: str) -> Scalar:
    """Parse an arithmetic expression in ``q`` such as ``"q-1"`` or ``"-q*(1/2)"``.

    ``r`` stands for ``q+1``, ``p`` for ``1/q``; ``^`` is accepted for powers.
    """
    src = text.strip().replace("^", "**")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError:
        raise ParseError(f"cannot parse scalar {text!r}") from None

    def walk(node):
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(
            node.value, bool
        ):
            return Scalar.from_int(node.value)
        if isinstance(node, ast.Name):
            if node.id == "p":
                return q.inverse()
            if node.id in _NAMES:
                return _NAMES[node.id]
            raise ParseError(f"unknown symbol {node.id!r} in {text!r}")
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            val = walk(node.operand)
            return -val if isinstance(node.op, ast.USub) else val
        if isinstance(node, ast.BinOp):
            left = walk(node.left)
            if isinstance(node.op, ast.Pow):
                exp = node.right
                sign = 1
                if isinstance(exp, ast.UnaryOp) and isinstance(exp.op, ast.USub):
                    sign, exp = -1, exp.operand
                if not (isinstance(exp, ast.Constant) and isinstance(exp.value, int)):
                    raise ParseError(f"exponent must be an integer literal in {text!r}")
                return left ** (sign * exp.value)
            right = walk(node.right)
            ops = {ast.Add: Scalar.__add__, ast.Sub: Scalar.__sub__, ast.Mult: Scalar.__mul__,
                   ast.Div: Scalar.__truediv__}
            for cls, fn in ops.items():
                if isinstance(node.op, cls):
                    return fn(left, right)
        raise ParseError(f"unsupported syntax in scalar {text!r}")

    return walk(tree)
