"""Quasisymmetric functions in the M, L and enriched q-monomial (eta) bases.

Everything is computed in the monomial basis M and converted on demand.
Constructors ``m_basis``, ``l_basis`` and ``eta_basis`` return M-expansions;
``element(basis, alpha)`` returns the single tagged basis vector instead.

>>> from qeta.qsym import eta_basis
>>> print(eta_basis((2, 1)))
(q + 1) * M[3] + (q^2 + 2*q + 1) * M[2,1]
"""
from __future__ import annotations

from functools import lru_cache

from .compositions import (
    coarsenings,
    compositions,
    complement,
    deconcatenations,
    descent_set,
    refinements,
    reverse,
)
from .errors import DomainError, UsageError
from .linear import QSymElement, TensorElement
from .scalars import ONE, Scalar, q, r

_MINUS_ONE = Scalar.from_int(-1)


def _sign(k: int) -> Scalar:
    return ONE if k % 2 == 0 else _MINUS_ONE


def _unit_vec(basis, alpha):
    return QSymElement._make(basis, {tuple(alpha): ONE})


def _accumulate(out: dict, key, c: Scalar):
    v = out.get(key)
    v = c if v is None else v + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


def _linear(f: QSymElement, image, basis) -> QSymElement:
    """Extend ``image`` (composition -> dict of terms) linearly over ``f``."""
    out = {}
    for alpha, c in f._terms.items():
        for key, v in image(alpha).items():
            _accumulate(out, key, c * v)
    return QSymElement._make(basis, out)


def _require(f: QSymElement, basis: str, op: str):
    if not isinstance(f, QSymElement):
        raise UsageError(f"{op} expects a QSym element, got {type(f).__name__}")
    if f.basis != basis:
        raise UsageError(f"{op} expects the {basis} basis, got {f.basis}")


# -- basis vectors -------------------------------------------------------------


def element(basis: str, alpha) -> QSymElement:
    """The basis vector ``alpha`` of ``basis`` as a tagged single term."""
    return QSymElement(basis, {tuple(alpha): 1})


def m_basis(alpha) -> QSymElement:
    return element("M", alpha)


@lru_cache(maxsize=None)
def _l_in_m(alpha):
    return {beta: ONE for beta in refinements(alpha)}


@lru_cache(maxsize=None)
def _eta_in_m(alpha):
    return {beta: r ** len(beta) for beta in coarsenings(alpha)}


def l_basis(alpha) -> QSymElement:
    """``L_alpha`` expanded in M."""
    alpha = element("L", alpha).support()[0]
    return QSymElement._make("M", dict(_l_in_m(alpha)))


def eta_basis(alpha) -> QSymElement:
    """``eta_alpha`` expanded in M: the sum of ``r^len(beta) M_beta`` over coarsenings."""
    alpha = element("Eta", alpha).support()[0]
    return QSymElement._make("M", dict(_eta_in_m(alpha)))


# -- conversions ---------------------------------------------------------------


@lru_cache(maxsize=None)
def _m_in_eta(beta):
    lb = len(beta)
    scale = r ** (-lb)
    return {alpha: _sign(lb - len(alpha)) * scale for alpha in coarsenings(beta)}


@lru_cache(maxsize=None)
def _m_in_l(alpha):
    la = len(alpha)
    return {beta: _sign(len(beta) - la) for beta in refinements(alpha)}


def to_m(f: QSymElement) -> QSymElement:
    if f.basis == "M":
        return f
    if f.basis == "L":
        return _linear(f, _l_in_m, "M")
    return _linear(f, _eta_in_m, "M")


def from_eta(g: QSymElement) -> QSymElement:
    _require(g, "Eta", "from_eta")
    return to_m(g)


def to_eta(f: QSymElement) -> QSymElement:
    """Rewrite ``f`` in the eta basis (via M)."""
    if f.basis == "Eta":
        return f
    return _linear(to_m(f), _m_in_eta, "Eta")


def to_l(f: QSymElement) -> QSymElement:
    if f.basis == "L":
        return f
    return _linear(to_m(f), _m_in_l, "L")


def from_l(f: QSymElement) -> QSymElement:
    _require(f, "L", "from_l")
    return to_m(f)


_CONVERTERS = {"M": to_m, "L": to_l, "Eta": to_eta}


def convert(f: QSymElement, basis: str) -> QSymElement:
    if basis not in _CONVERTERS:
        raise UsageError(f"QSym has no basis {basis!r}")
    return _CONVERTERS[basis](f)


def eta_to_l(alpha) -> QSymElement:
    """``eta_alpha`` in the L basis, by the closed sign/q-power formula."""
    alpha = tuple(alpha)
    n = sum(alpha)
    if n == 0:
        raise DomainError("eta_to_l needs a composition of positive size")
    da = descent_set(alpha).members
    out = {}
    for gamma in compositions(n):
        dg = descent_set(gamma).members
        out[gamma] = r * _sign(len(dg - da)) * q ** len(dg & da)
    return QSymElement("L", out)


def l_to_eta(gamma) -> QSymElement:
    """The eta-expansion of ``r^n L_gamma`` where ``n = |gamma|``."""
    gamma = tuple(gamma)
    n = sum(gamma)
    if n == 0:
        raise DomainError("l_to_eta needs a composition of positive size")
    dg = descent_set(gamma).members
    full = set(range(1, n))
    out = {}
    for alpha in compositions(n):
        da = descent_set(alpha).members
        out[alpha] = _sign(len(dg - da)) * q ** len(full - (dg | da))
    return QSymElement("Eta", out)


# -- product -------------------------------------------------------------------


@lru_cache(maxsize=None)
def _quasi_shuffle(u, v):
    """Product ``M_u M_v`` as a dict of M-terms with integer coefficients."""
    if not u:
        return {v: 1}
    if not v:
        return {u: 1}
    out = {}
    a, b = u[0], v[0]
    for head, x, y in ((a, u[1:], v), (b, u, v[1:]), (a + b, u[1:], v[1:])):
        for w, c in _quasi_shuffle(x, y).items():
            key = (head,) + w
            out[key] = out.get(key, 0) + c
    return out


def m_product(f: QSymElement, g: QSymElement) -> QSymElement:
    _require(f, "M", "m_product")
    _require(g, "M", "m_product")
    out = {}
    for u, cu in f._terms.items():
        for v, cv in g._terms.items():
            c = cu * cv
            for w, k in _quasi_shuffle(u, v).items():
                _accumulate(out, w, c * k)
    return QSymElement._make("M", out)


def multiply(f: QSymElement, g: QSymElement) -> QSymElement:
    """Product in any bases; the result is in eta if both factors are, else M."""
    prod = m_product(to_m(f), to_m(g))
    if f.basis == "Eta" and g.basis == "Eta":
        return to_eta(prod)
    return prod


# -- coalgebra -----------------------------------------------------------------


def coproduct_m(f: QSymElement) -> TensorElement:
    _require(f, "M", "coproduct_m")
    out = {}
    for alpha, c in f._terms.items():
        for beta, gamma in deconcatenations(alpha):
            _accumulate(out, (beta, gamma), c)
    return TensorElement._make(("M", "M"), out, "QSym")


def coproduct_eta(alpha) -> TensorElement:
    """``Delta(eta_alpha)`` as the deconcatenation sum in eta ⊗ eta."""
    if isinstance(alpha, QSymElement):
        _require(alpha, "Eta", "coproduct_eta")
        out = {}
        for a, c in alpha._terms.items():
            for pair in deconcatenations(a):
                _accumulate(out, pair, c)
        return TensorElement._make(("Eta", "Eta"), out, "QSym")
    return coproduct_eta(element("Eta", alpha))


def coproduct(f: QSymElement) -> TensorElement:
    """Coproduct in the basis of ``f`` (L goes through M)."""
    if f.basis == "Eta":
        return coproduct_eta(f)
    return coproduct_m(to_m(f))


def counit(f) -> Scalar:
    """Coefficient of the unit; the same in every basis since all agree at size 0."""
    return f.coefficient(())


# -- antipodes -------------------------------------------------------------------


@lru_cache(maxsize=None)
def _antipode_m(alpha):
    s = _sign(len(alpha))
    return {gamma: s for gamma in coarsenings(reverse(alpha))}


def antipode_m(f: QSymElement) -> QSymElement:
    _require(f, "M", "antipode_m")
    return _linear(f, _antipode_m, "M")


def antipode(f: QSymElement) -> QSymElement:
    """Antipode of ``f`` expanded in M."""
    return antipode_m(to_m(f))


def antipode_eta_s2(alpha) -> QSymElement:
    """Antipode of ``eta_alpha`` in the eta basis; valid for every q."""
    alpha = tuple(alpha)
    la = len(alpha)
    s = _sign(la)
    out = {beta: s * (q - 1) ** (la - len(beta)) for beta in coarsenings(reverse(alpha))}
    return QSymElement("Eta", out)


def eta_basis_at(alpha, param: Scalar) -> QSymElement:
    """``eta_alpha`` for the parameter value ``param`` in place of q, in M."""
    rp = param + 1
    return QSymElement("M", {beta: rp ** len(beta) for beta in coarsenings(tuple(alpha))})


def antipode_eta_s(alpha) -> QSymElement:
    """Antipode of ``eta_alpha`` as ``(-q)^len * eta^{(1/q)}_{rev alpha}``, in M.

    Only meaningful for invertible q; the caller must not specialize at q=0.
    """
    alpha = tuple(alpha)
    return eta_basis_at(reverse(alpha), q.inverse()).scale((-q) ** len(alpha))


# -- further maps ------------------------------------------------------------------


def t_r(f: QSymElement) -> QSymElement:
    """``M_alpha -> r^len(alpha) M_alpha``."""
    _require(f, "M", "t_r")
    return QSymElement._make("M", {a: c * r ** len(a) for a, c in f._terms.items()})


def r_q(f: QSymElement) -> QSymElement:
    """``M_alpha -> r^len(bar alpha) M_{bar alpha}`` with ``bar`` the complement."""
    _require(f, "M", "r_q")
    out = {}
    for a, c in f._terms.items():
        b = complement(a)
        _accumulate(out, b, c * r ** len(b))
    return QSymElement._make("M", out)


def specialize(f: QSymElement, q0) -> QSymElement:
    return f.specialize(q0)


def eta_support_in(f: QSymElement, allowed, maxdeg=None) -> bool:
    """True iff every eta-support composition of ``f`` has all entries in ``allowed``."""
    if maxdeg is not None and f.degree() > maxdeg:
        raise DomainError(f"element of degree {f.degree()} exceeds maxdeg {maxdeg}")
    return all(all(allowed(x) for x in alpha) for alpha in to_eta(f).support())
