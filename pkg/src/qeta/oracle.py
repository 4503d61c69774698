"""Ground truth by brute force: QSym elements as polynomials in finitely many variables.

Setting ``x_{N+1} = x_{N+2} = ... = 0`` and dropping monomials above degree
``d`` loses nothing as long as ``N >= d``, so equalities of QSym elements of
degree at most ``d`` can be decided on these truncations.

Monomials are stored sparsely as tuples of ``(index, exponent)`` pairs with
1-based, strictly increasing indices; ``()`` is the constant monomial.
"""
from __future__ import annotations

import itertools
from math import comb

from .errors import TruncationError, UsageError, ValidationError
from .linear import QSymElement
from .scalars import ONE, Scalar, r


class TruncatedPolynomial:
    __slots__ = ("nvars", "maxdeg", "terms")

    def __init__(self, nvars: int, maxdeg: int, terms=None):
        self.nvars = nvars
        self.maxdeg = maxdeg
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            idx = [i for i, _ in mono]
            if idx != sorted(set(idx)) or any(not 1 <= i <= nvars for i in idx):
                raise ValidationError(f"bad monomial {mono} for {nvars} variables")
            if any(e < 1 for _, e in mono):
                raise ValidationError(f"exponents must be positive in {mono}")
            if sum(e for _, e in mono) > maxdeg:
                continue
            c = Scalar.coerce(c)
            if c:
                clean[mono] = c
        self.terms = clean

    @classmethod
    def _make(cls, nvars, maxdeg, terms):
        obj = cls.__new__(cls)
        obj.nvars, obj.maxdeg, obj.terms = nvars, maxdeg, terms
        return obj

    def __eq__(self, other):
        if not isinstance(other, TruncatedPolynomial):
            return NotImplemented
        return (self.nvars, self.maxdeg, self.terms) == (other.nvars, other.maxdeg, other.terms)

    __hash__ = None

    def __add__(self, other):
        _check_compatible(self, other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            _acc(out, m, c)
        return TruncatedPolynomial._make(self.nvars, min(self.maxdeg, other.maxdeg), out)

    def __mul__(self, other):
        return poly_product(self, other)

    def to_text(self) -> str:
        """One ``coeff * x1^a1*x2^a2`` line per monomial, graded lex order."""
        lines = []
        for mono in sorted(self.terms, key=_mono_key):
            c = self.terms[mono]
            cs = str(c) if c.is_atomic() else f"({c})"
            body = "*".join(f"x{i}^{e}" for i, e in mono) or "1"
            lines.append(f"{cs} * {body}")
        return "\n".join(lines)

    def __str__(self):
        return self.to_text() or "0"

    def __repr__(self):
        return f"TruncatedPolynomial(nvars={self.nvars}, maxdeg={self.maxdeg}, {len(self.terms)} terms)"


def _mono_key(mono):
    dense = [0] * (max((i for i, _ in mono), default=0))
    for i, e in mono:
        dense[i - 1] = e
    return (sum(e for _, e in mono), [-x for x in dense])


def _acc(out, key, c):
    v = out.get(key)
    v = c if v is None else v + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


def _check_compatible(p, p2):
    if p.nvars != p2.nvars:
        raise UsageError(f"variable count mismatch: {p.nvars} vs {p2.nvars}")


def _defaults(f: QSymElement, N, d):
    deg = max(f.degree(), 0)
    d = deg if d is None else d
    if d < deg:
        raise TruncationError(f"element has degree {deg} but maxdeg is {d}")
    N = d if N is None else N
    return N, d


def expand(f: QSymElement, N: int | None = None, d: int | None = None) -> TruncatedPolynomial:
    """Expand ``f`` through the M basis; defaults are ``d = deg f`` and ``N = d``."""
    N, d = _defaults(f, N, d)
    out = {}
    for alpha, c in f.to("M")._terms.items():
        for idx in itertools.combinations(range(1, N + 1), len(alpha)):
            _acc(out, tuple(zip(idx, alpha)), c)
    return TruncatedPolynomial._make(N, d, out)


def expand_eta_direct(alpha, N: int | None = None, d: int | None = None) -> TruncatedPolynomial:
    """Expand ``eta_alpha`` as a sum over weakly increasing index tuples.

    The weight of ``i_1 <= ... <= i_l`` is ``r`` to the number of distinct
    indices, times the monomial ``prod x_{i_j}^{alpha_j}``.
    """
    alpha = tuple(alpha)
    N, d = _defaults(QSymElement("Eta", {alpha: 1}), N, d)
    out = {}
    for idx in itertools.combinations_with_replacement(range(1, N + 1), len(alpha)):
        exps = {}
        for i, a in zip(idx, alpha):
            exps[i] = exps.get(i, 0) + a
        _acc(out, tuple(sorted(exps.items())), r ** len(exps))
    return TruncatedPolynomial._make(N, d, out)


def poly_product(p: TruncatedPolynomial, p2: TruncatedPolynomial) -> TruncatedPolynomial:
    _check_compatible(p, p2)
    d = min(p.maxdeg, p2.maxdeg)
    out = {}
    for m1, c1 in p.terms.items():
        d1 = sum(e for _, e in m1)
        for m2, c2 in p2.terms.items():
            if d1 + sum(e for _, e in m2) > d:
                continue
            merged = dict(m1)
            for i, e in m2:
                merged[i] = merged.get(i, 0) + e
            _acc(out, tuple(sorted(merged.items())), c1 * c2)
    return TruncatedPolynomial._make(p.nvars, d, out)


def one(N: int, d: int) -> TruncatedPolynomial:
    return TruncatedPolynomial._make(N, d, {(): ONE})


def extract_m(p: TruncatedPolynomial) -> QSymElement:
    """Recover the M-expansion, after checking that ``p`` is quasisymmetric."""
    if p.nvars < p.maxdeg:
        raise ValidationError(
            f"{p.nvars} variables cannot represent every composition up to degree {p.maxdeg}"
        )
    groups = {}
    for mono, c in p.terms.items():
        groups.setdefault(tuple(e for _, e in mono), []).append((mono, c))
    out = {}
    for alpha, members in groups.items():
        coeffs = {c for _, c in members}
        if len(coeffs) != 1:
            raise ValidationError(f"monomials of shape {alpha} carry different coefficients")
        if len(members) != comb(p.nvars, len(alpha)):
            raise ValidationError(
                f"shape {alpha} has {len(members)} of {comb(p.nvars, len(alpha))} monomials"
            )
        out[alpha] = members[0][1]
    return QSymElement._make("M", out)


def oracle_product(f: QSymElement, g: QSymElement, d: int | None = None) -> QSymElement:
    """``f * g`` in M computed by multiplying polynomial expansions."""
    if d is None:
        d = max(f.degree(), 0) + max(g.degree(), 0)
    return extract_m(poly_product(expand(f, d, d), expand(g, d, d)))
