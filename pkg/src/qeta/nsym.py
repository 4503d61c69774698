"""Noncommutative symmetric functions in the H basis and the dual eta basis.

``H_alpha = H_{alpha_1} ... H_{alpha_k}``; the product is concatenation.
The dual basis ``eta*`` is stored expanded in H; the ``EtaStar`` tag is only
used for display and for the coproduct formulas stated in that basis.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .compositions import as_composition, compositions, refinements
from .errors import DomainError, PoleError, UsageError
from .linear import NSymElement, QSymElement, TensorElement
from .scalars import ONE, ZERO, Scalar, q, r

_MINUS_ONE = Scalar.from_int(-1)


def _sign(k):
    return ONE if k % 2 == 0 else _MINUS_ONE


def _add(out, key, c):
    v = out.get(key)
    v = c if v is None else v + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


def element(basis: str, alpha) -> NSymElement:
    return NSymElement(basis, {tuple(alpha): 1})


def h_basis(alpha) -> NSymElement:
    return element("H", alpha)


def h_product(f: NSymElement, g: NSymElement) -> NSymElement:
    """Concatenation product; the result is tagged EtaStar if both factors are."""
    both_star = f.basis == "EtaStar" and g.basis == "EtaStar"
    if both_star:
        # eta* is multiplicative, so the product stays in the basis
        terms = f._terms
        other = g._terms
        basis = "EtaStar"
    else:
        terms, other, basis = to_h(f)._terms, to_h(g)._terms, "H"
    out = {}
    for a, ca in terms.items():
        for b, cb in other.items():
            _add(out, a + b, ca * cb)
    return NSymElement._make(basis, out)


# -- dual eta basis ---------------------------------------------------------------


@lru_cache(maxsize=None)
def _eta_star_in_h(alpha):
    la = len(alpha)
    return {beta: r ** (-len(beta)) * _sign(len(beta) - la) for beta in refinements(alpha)}


@lru_cache(maxsize=None)
def _h_in_eta_star(beta):
    scale = r ** len(beta)
    return {alpha: scale for alpha in refinements(beta)}


def eta_star(alpha) -> NSymElement:
    """``eta*_alpha`` expanded in H."""
    alpha = as_composition(alpha)
    return NSymElement._make("H", dict(_eta_star_in_h(alpha)))


def _linear(f, image, basis):
    out = {}
    for a, c in f._terms.items():
        for k, v in image(a).items():
            _add(out, k, c * v)
    return NSymElement._make(basis, out)


def to_h(f: NSymElement) -> NSymElement:
    if f.basis == "H":
        return f
    return _linear(f, _eta_star_in_h, "H")


def from_eta_star(g: NSymElement) -> NSymElement:
    if g.basis != "EtaStar":
        raise UsageError(f"from_eta_star expects the EtaStar basis, got {g.basis}")
    return to_h(g)


def to_eta_star(f: NSymElement) -> NSymElement:
    if f.basis == "EtaStar":
        return f
    return _linear(f, _h_in_eta_star, "EtaStar")


def convert(f: NSymElement, basis: str) -> NSymElement:
    if basis == "H":
        return to_h(f)
    if basis == "EtaStar":
        return to_eta_star(f)
    raise UsageError(f"NSym has no basis {basis!r}")


def eta_star_multiplicativity_check(alpha, beta) -> bool:
    lhs = h_product(eta_star(alpha), eta_star(beta))
    return lhs == eta_star(tuple(alpha) + tuple(beta))


# -- pairing -----------------------------------------------------------------------


def pairing(h: NSymElement, f: QSymElement) -> Scalar:
    """``<H_alpha, M_beta> = [alpha = beta]`` extended bilinearly."""
    if not isinstance(h, NSymElement) or not isinstance(f, QSymElement):
        raise UsageError("pairing takes an NSym element and a QSym element")
    h, f = to_h(h), f.to("M")
    if len(h._terms) > len(f._terms):
        h, f = f, h
    total = ZERO
    for k, c in h._terms.items():
        v = f._terms.get(k)
        if v is not None:
            total = total + c * v
    return total


# -- coproducts ------------------------------------------------------------------------


def coproduct_h(f: NSymElement) -> TensorElement:
    """``Delta(H_n) = sum_i H_i ⊗ H_{n-i}``, extended multiplicatively and linearly."""
    f = to_h(f)
    out = {}
    for alpha, c in f._terms.items():
        for cut in itertools.product(*(range(a + 1) for a in alpha)):
            left = tuple(i for i in cut if i)
            right = tuple(a - i for a, i in zip(alpha, cut) if a - i)
            _add(out, (left, right), c)
    return TensorElement._make(("H", "H"), out, "NSym")


@lru_cache(maxsize=None)
def _split_n(n: int) -> tuple:
    """Pairs ``(beta, gamma, coeff)`` in the coproduct of ``eta*_n``."""
    out = []
    for m in range(n + 1):
        for beta in compositions(m):
            for gamma in compositions(n - m):
                lb, lg = len(beta), len(gamma)
                if abs(lb - lg) > 1:
                    continue
                c = (-q) ** (max(lb, lg) - 1) * (q - 1) ** (lb == lg)
                out.append((beta, gamma, c))
    return tuple(out)


def coproduct_eta_star_n(n: int) -> TensorElement:
    if n < 1:
        raise DomainError("coproduct_eta_star_n needs n >= 1")
    out = {}
    for beta, gamma, c in _split_n(n):
        _add(out, (beta, gamma), c)
    return TensorElement._make(("EtaStar", "EtaStar"), out, "NSym")


def coproduct_eta_star(alpha) -> TensorElement:
    """Coproduct of ``eta*_alpha``: one split of every entry, legs concatenated."""
    if isinstance(alpha, NSymElement):
        f = to_eta_star(alpha)
        total = TensorElement("NSym", ("EtaStar", "EtaStar"))
        for a, c in f._terms.items():
            total = total + coproduct_eta_star(a).scale(c)
        return total
    alpha = as_composition(alpha)
    out = {}
    for choice in itertools.product(*(_split_n(a) for a in alpha)):
        left = tuple(itertools.chain.from_iterable(b for b, _, _ in choice))
        right = tuple(itertools.chain.from_iterable(g for _, g, _ in choice))
        c = ONE
        for _, _, x in choice:
            c = c * x
        _add(out, (left, right), c)
    return TensorElement._make(("EtaStar", "EtaStar"), out, "NSym")


def coproduct(f: NSymElement) -> TensorElement:
    if f.basis == "EtaStar":
        return coproduct_eta_star(f)
    return coproduct_h(f)


# -- generating series ---------------------------------------------------------------------


@dataclass(frozen=True)
class NSymSeries:
    """``sum_{d <= trunc} coeffs[d] t^d`` with ``coeffs[d]`` homogeneous of degree ``d``."""

    trunc: int
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(to_h(c) for c in self.coeffs)
        if len(coeffs) != self.trunc + 1:
            raise UsageError(f"series of order {self.trunc} needs {self.trunc + 1} coefficients")
        for d, c in enumerate(coeffs):
            if any(sum(k) != d for k in c._terms):
                raise UsageError(f"t^{d} coefficient is not homogeneous of degree {d}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def constant(cls, c, trunc: int) -> "NSymSeries":
        zero = NSymElement("H")
        return cls(trunc, (zero + Scalar.coerce(c),) + (zero,) * trunc)

    def _check(self, other):
        if self.trunc != other.trunc:
            raise UsageError(f"truncation mismatch: {self.trunc} vs {other.trunc}")

    def __add__(self, other):
        if not isinstance(other, NSymSeries):
            other = NSymSeries.constant(other, self.trunc)
        self._check(other)
        return NSymSeries(self.trunc, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return NSymSeries(self.trunc, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other if isinstance(other, NSymSeries) else -Scalar.coerce(other))

    def sub_const(self, c) -> "NSymSeries":
        return self - c

    def __mul__(self, other):
        if not isinstance(other, NSymSeries):
            return NSymSeries(self.trunc, tuple(a.scale(other) for a in self.coeffs))
        self._check(other)
        out = []
        for n in range(self.trunc + 1):
            acc = NSymElement("H")
            for i in range(n + 1):
                acc = acc + h_product(self.coeffs[i], other.coeffs[n - i])
            out.append(acc)
        return NSymSeries(self.trunc, tuple(out))

    mul = __mul__

    def __pow__(self, k: int):
        result = NSymSeries.constant(1, self.trunc)
        for _ in range(k):
            result = result * self
        return result

    def invert(self) -> "NSymSeries":
        """Two-sided inverse; the constant term must be a nonzero scalar."""
        c0 = self.coeffs[0]
        if set(c0._terms) - {()}:
            raise UsageError("constant term is not a scalar multiple of 1")
        c = c0.coefficient(())
        if not c:
            raise PoleError("constant term of the series is zero")
        inv_c = c.inverse()
        out = [NSymElement("H", {(): inv_c})]
        for n in range(1, self.trunc + 1):
            acc = NSymElement("H")
            for i in range(1, n + 1):
                acc = acc + h_product(self.coeffs[i], out[n - i])
            out.append(acc.scale(-inv_c))
        return NSymSeries(self.trunc, tuple(out))

    def __eq__(self, other):
        if not isinstance(other, NSymSeries):
            return NotImplemented
        return self.trunc == other.trunc and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    __hash__ = None

    def __str__(self):
        return "\n".join(f"t^{d}: {c}" for d, c in enumerate(self.coeffs))


def series_h(N: int) -> NSymSeries:
    return NSymSeries(N, tuple(h_basis((n,)) if n else h_basis(()) for n in range(N + 1)))


def series_g(N: int) -> NSymSeries:
    return NSymSeries(N, (NSymElement("H"),) + tuple(eta_star((n,)) for n in range(1, N + 1)))


def series_eta_star_length(k: int, N: int) -> NSymSeries:
    """``sum_{len(beta) = k, |beta| <= N} eta*_beta t^|beta|``."""
    coeffs = []
    for n in range(N + 1):
        acc = NSymElement("H")
        for beta in compositions(n):
            if len(beta) == k:
                acc = acc + eta_star(beta)
        coeffs.append(acc)
    return NSymSeries(N, tuple(coeffs))


def series_g_closed_form(N: int) -> NSymSeries:
    """``(H(t) - 1) (H(t) + q)^{-1}``."""
    H = series_h(N)
    return (H - 1) * (H + q).invert()

