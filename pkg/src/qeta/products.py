"""Three closed-form product rules for ``eta_delta * eta_eps``.

v1 sums over simultaneous factorizations of the two compositions, v2 over
stufufufflers and v3 over triples ``(T, I, J)`` built from T-shuffles.
They are independent implementations and are tested against each other and
against the M-basis product.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .compositions import as_composition, collapse_IJ, t_prime, t_shuffle
from .errors import ParseError, UsageError
from .linear import QSymElement
from .scalars import ONE, q


@dataclass(frozen=True, order=True)
class Stufufuffler:
    """A surjective weakly increasing map from ``P ⊔ Q`` onto ``[k]``.

    ``fP[u]`` is the image of the u-th entry of delta, ``fQ[v]`` that of the
    v-th entry of eps.  Only the lengths of delta and eps matter.
    """

    fP: tuple
    fQ: tuple

    @property
    def k(self) -> int:
        return max(self.fP + self.fQ, default=0)

    def fibers(self):
        """Per target ``s``, the pair of fiber sizes ``(|fP^-1(s)|, |fQ^-1(s)|)``."""
        return [(self.fP.count(s), self.fQ.count(s)) for s in range(1, self.k + 1)]

    def is_valid(self) -> bool:
        if list(self.fP) != sorted(self.fP) or list(self.fQ) != sorted(self.fQ):
            return False
        if any(x < 1 for x in self.fP + self.fQ):
            return False
        return all(i + j >= 1 and abs(i - j) <= 1 for i, j in self.fibers())

    def __str__(self):
        return f"P:{','.join(map(str, self.fP))}|Q:{','.join(map(str, self.fQ))}"

    @classmethod
    def parse(cls, text: str) -> "Stufufuffler":
        try:
            p_part, q_part = text.strip().split("|")
            if not (p_part.startswith("P:") and q_part.startswith("Q:")):
                raise ValueError
            fP = tuple(int(x) for x in p_part[2:].split(",") if x)
            fQ = tuple(int(x) for x in q_part[2:].split(",") if x)
        except ValueError:
            raise ParseError(f"expected 'P:...|Q:...', got {text!r}") from None
        f = cls(fP, fQ)
        if not f.is_valid():
            raise ParseError(f"{text!r} is not a stufufuffler")
        return f


@dataclass(frozen=True)
class StufuffleStats:
    wt: tuple
    loss: int
    poise: int


@lru_cache(maxsize=None)
def _enumerate(l: int, m: int) -> tuple:
    out = []
    for k in range(0 if l + m == 0 else 1, l + m + 1):
        for fP in itertools.combinations_with_replacement(range(1, k + 1), l):
            for fQ in itertools.combinations_with_replacement(range(1, k + 1), m):
                f = Stufufuffler(fP, fQ)
                if f.k == k and f.is_valid():
                    out.append(f)
    return tuple(sorted(out))


def enumerate_stufufufflers(l: int, m: int) -> list:
    """All stufufufflers for lengths ``l`` and ``m``, sorted by ``(fP, fQ)``."""
    if l < 0 or m < 0:
        raise UsageError("lengths must be nonnegative")
    return list(_enumerate(l, m))


def stats(f: Stufufuffler, delta, eps) -> StufuffleStats:
    delta, eps = tuple(delta), tuple(eps)
    if len(delta) != len(f.fP) or len(eps) != len(f.fQ):
        raise UsageError(
            f"{f} has shape ({len(f.fP)}, {len(f.fQ)}) but compositions have "
            f"lengths ({len(delta)}, {len(eps)})"
        )
    k = f.k
    wt = [0] * k
    for s, x in zip(f.fP, delta):
        wt[s - 1] += x
    for s, x in zip(f.fQ, eps):
        wt[s - 1] += x
    fib = f.fibers()
    loss = sum(max(i, j) for i, j in fib) - k
    poise = sum(1 for i, j in fib if i == j)
    return StufuffleStats(tuple(wt), loss, poise)


def _add(out, key, c):
    v = out.get(key)
    v = c if v is None else v + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


def _coeff(loss: int, poise: int):
    return (-q) ** loss * (q - 1) ** poise


def eta_product_v1(delta, eps) -> QSymElement:
    """Sum over factorizations ``delta = b1...bk``, ``eps = g1...gk`` into blocks.

    Blocks may be empty but not both at once, and their lengths differ by at
    most one; block ``s`` contributes the entry ``|b_s| + |g_s|``.
    """
    delta, eps = as_composition(delta), as_composition(eps)
    out = {}

    def rec(i, j, entries, excess, equal):
        if i == len(delta) and j == len(eps):
            _add(out, tuple(entries), _coeff(excess, equal))
            return
        for a in range(len(delta) - i + 1):
            for b in range(max(0, a - 1), min(a + 1, len(eps) - j) + 1):
                if a + b == 0:
                    continue
                entries.append(sum(delta[i:i + a]) + sum(eps[j:j + b]))
                rec(i + a, j + b, entries, excess + max(a, b) - 1, equal + (a == b))
                entries.pop()

    rec(0, 0, [], 0, 0)
    return QSymElement._make("Eta", out)


def eta_product_v2(delta, eps) -> QSymElement:
    """Sum of ``(-q)^loss (q-1)^poise eta_wt`` over all stufufufflers."""
    delta, eps = as_composition(delta), as_composition(eps)
    out = {}
    for f in _enumerate(len(delta), len(eps)):
        st = stats(f, delta, eps)
        _add(out, st.wt, _coeff(st.loss, st.poise))
    return QSymElement._make("Eta", out)


def eta_product_v3(delta, eps) -> QSymElement:
    """Sum over ``T`` of size ``len(eps)`` and disjoint ``I ⊆ T'``, ``J ⊆ T' minus {1}``."""
    delta, eps = as_composition(delta), as_composition(eps)
    n, m = len(delta), len(eps)
    out = {}
    for T in itertools.combinations(range(1, n + m + 1), m):
        shuffled = t_shuffle(delta, eps, T)
        tp = sorted(t_prime(T, n + m))
        for labels in itertools.product((0, 1, 2), repeat=len(tp)):
            I = [t for t, x in zip(tp, labels) if x == 1]
            J = [t for t, x in zip(tp, labels) if x == 2]
            if 1 in J:
                continue
            _add(out, collapse_IJ(shuffled, I, J), _coeff(len(J), len(I)))
    return QSymElement._make("Eta", out)


def eta_product(delta, eps, method: str = "v1") -> QSymElement:
    routes = {"v1": eta_product_v1, "v2": eta_product_v2, "v3": eta_product_v3}
    if method not in routes:
        raise UsageError(f"unknown product method {method!r}")
    return routes[method](delta, eps)


def shuffle_terms(delta, eps) -> QSymElement:
    """The loss-0, poise-0 part of the product: plain shuffles, coefficient one each."""
    out = {}
    for f in _enumerate(len(delta), len(eps)):
        st = stats(f, delta, eps)
        if st.loss == 0 and st.poise == 0:
            _add(out, st.wt, ONE)
    return QSymElement._make("Eta", out)
