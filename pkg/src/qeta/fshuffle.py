"""The free algebra on letters ``x_1, x_2, ...`` with the two-parameter product ``#``.

A word ``x_{g1} x_{g2} ... x_{gk}`` is keyed by the composition ``(g1, ..., gk)``.
For parameters ``a, b`` the product satisfies ``1 # w = w # 1 = w`` and

    (x_i u) # (x_j v) = x_i (u # x_j v) + x_j (x_i u # v)
                        + a x_{i+j} (u # v) + b zeta_{i+j}(u # v)

where ``zeta_k`` adds ``k`` to the first letter and kills the empty word.
With ``a = q - 1`` and ``b = -q`` the map ``x_alpha -> eta_alpha`` is an
algebra morphism into QSym.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .compositions import as_composition, coarsenings, deconcatenations, reverse
from .errors import UsageError
from .linear import FreeWordElement, QSymElement, TensorElement
from .products import _enumerate, stats
from .qsym import eta_basis
from .scalars import ONE, Scalar, q


@dataclass(frozen=True)
class SharpParams:
    a: Scalar
    b: Scalar

    def __post_init__(self):
        object.__setattr__(self, "a", Scalar.coerce(self.a))
        object.__setattr__(self, "b", Scalar.coerce(self.b))

    @classmethod
    def for_eta(cls, u=1) -> "SharpParams":
        """``a = (q-1) u`` and ``b = -q u^2``, the values matching ``x_alpha -> u^len eta_alpha``."""
        u = Scalar.coerce(u)
        return cls((q - 1) * u, -q * u * u)

    def __str__(self):
        return f"a={self.a}, b={self.b}"


def word(alpha, params: SharpParams | None = None) -> FreeWordElement:
    return FreeWordElement("x", {as_composition(alpha): 1}, params)


def _add(out, key, c):
    v = out.get(key)
    v = c if v is None else v + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


def zeta(k: int, f: FreeWordElement) -> FreeWordElement:
    if k < 0:
        raise UsageError("zeta_k needs k >= 0")
    out = {}
    for w, c in f._terms.items():
        if w:
            _add(out, (w[0] + k,) + w[1:], c)
    return FreeWordElement._make("x", out, f.params)


@lru_cache(maxsize=None)
def _sharp_words(u, v, a, b):
    if not u:
        return {v: ONE}
    if not v:
        return {u: ONE}
    i, j = u[0], v[0]
    out = {}
    for w, c in _sharp_words(u[1:], v, a, b).items():
        _add(out, (i,) + w, c)
    for w, c in _sharp_words(u, v[1:], a, b).items():
        _add(out, (j,) + w, c)
    rest = _sharp_words(u[1:], v[1:], a, b)
    if a:
        for w, c in rest.items():
            _add(out, (i + j,) + w, a * c)
    if b:
        for w, c in rest.items():
            if w:
                _add(out, (w[0] + i + j,) + w[1:], b * c)
    return out


def sharp(f: FreeWordElement, g: FreeWordElement, params: SharpParams) -> FreeWordElement:
    """The product ``f # g`` by the defining recursion (memoized per word pair)."""
    out = {}
    for u, cu in f._terms.items():
        for v, cv in g._terms.items():
            c = cu * cv
            for w, x in _sharp_words(u, v, params.a, params.b).items():
                _add(out, w, c * x)
    return FreeWordElement._make("x", out, params)


def sharp_explicit(delta, eps, params: SharpParams) -> FreeWordElement:
    """``x_delta # x_eps`` as a sum of ``b^loss a^poise x_wt`` over stufufufflers."""
    delta, eps = as_composition(delta), as_composition(eps)
    out = {}
    for f in _enumerate(len(delta), len(eps)):
        st = stats(f, delta, eps)
        _add(out, st.wt, params.b ** st.loss * params.a ** st.poise)
    return FreeWordElement._make("x", out, params)


def deconcat(f: FreeWordElement) -> TensorElement:
    out = {}
    for w, c in f._terms.items():
        for pair in deconcatenations(w):
            _add(out, pair, c)
    return TensorElement._make(("x", "x"), out, "F")


def counit(f: FreeWordElement) -> Scalar:
    return f.coefficient(())


def antipode_f(alpha, params: SharpParams) -> FreeWordElement:
    """Closed form: ``(-1)^len sum_{D(beta) ⊆ D(rev alpha)} a^(len alpha - len beta) x_beta``."""
    alpha = as_composition(alpha)
    la = len(alpha)
    sign = ONE if la % 2 == 0 else -ONE
    out = {beta: sign * params.a ** (la - len(beta)) for beta in coarsenings(reverse(alpha))}
    return FreeWordElement("x", out, params)


def antipode_recursive(alpha, params: SharpParams) -> FreeWordElement:
    """Antipode from ``sum S(w_(1)) # w_(2) = counit``, solved prefix by prefix."""
    return _antipode_rec(as_composition(alpha), params)


@lru_cache(maxsize=None)
def _antipode_rec(w, params):
    if not w:
        return word((), params)
    total = FreeWordElement("x", {}, params)
    for i in range(len(w)):
        total = total + sharp(_antipode_rec(w[:i], params), word(w[i:]), params)
    return -total


def apply_antipode(f: FreeWordElement, params: SharpParams) -> FreeWordElement:
    total = FreeWordElement("x", {}, params)
    for w, c in f._terms.items():
        total = total + antipode_f(w, params).scale(c)
    return total


def eta_morphism(f: FreeWordElement, u=1, params: SharpParams | None = None) -> QSymElement:
    """``x_alpha -> u^len(alpha) eta_alpha``, expanded in M.

    ``u`` must be rational.  If ``f`` (or the caller) names SharpParams they
    must be the ones this morphism respects.
    """
    u = Scalar.coerce(u)
    if not u.is_constant():
        raise UsageError("u must be a rational constant")
    expected = SharpParams.for_eta(u)
    for p in (params, f.params):
        if p is not None and p != expected:
            raise UsageError(f"parameters ({p}) do not match u = {u}, which needs ({expected})")
    out = {}
    for w, c in f._terms.items():
        cu = c * u ** len(w)
        for beta, x in eta_basis(w)._terms.items():
            _add(out, beta, cu * x)
    return QSymElement._make("M", out)

