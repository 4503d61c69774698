"""Compositions, partial-sum sets and the combinatorial maps built on them.

A composition is a plain tuple of positive integers.  Every function here is
pure and returns fresh tuples/sets, so values can be shared freely.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, ParseError

Composition = tuple  # tuple[int, ...]


def as_composition(entries: Iterable[int]) -> Composition:
    """Validate ``entries`` and return them as a composition tuple."""
    comp = tuple(entries)
    for x in comp:
        if isinstance(x, bool) or not isinstance(x, int):
            raise DomainError(f"composition entries must be integers, got {x!r}")
        if x < 1:
            raise DomainError(f"composition entries must be positive, got {x}")
    return comp


def size(alpha: Composition) -> int:
    return sum(alpha)


def length(alpha: Composition) -> int:
    return len(alpha)


def sort_key(alpha: Composition):
    """Canonical order: size, then length, then entries lexicographically."""
    return (sum(alpha), len(alpha), tuple(alpha))


@dataclass(frozen=True)
class DescentSet:
    """A subset of ``[ambient - 1]`` together with its ambient ``n``.

    ``comp`` of a bare set is ambiguous without ``n``, so the ambient is part
    of the value and operations refuse to mix ambients.
    """

    ambient: int
    members: frozenset

    def __post_init__(self):
        if self.ambient < 0:
            raise DomainError(f"ambient must be nonnegative, got {self.ambient}")
        members = frozenset(self.members)
        object.__setattr__(self, "members", members)
        for x in members:
            if not 1 <= x <= self.ambient - 1:
                raise DomainError(
                    f"member {x} out of range [1, {self.ambient - 1}]"
                )

    @classmethod
    def of(cls, members: Iterable[int], ambient: int) -> "DescentSet":
        return cls(ambient, frozenset(members))

    def sorted(self) -> tuple:
        return tuple(sorted(self.members))

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.sorted())

    def __contains__(self, x):
        return x in self.members

    def _check(self, other: "DescentSet"):
        if self.ambient != other.ambient:
            raise DomainError(
                f"ambient mismatch: {self.ambient} vs {other.ambient}"
            )

    def issubset(self, other: "DescentSet") -> bool:
        self._check(other)
        return self.members <= other.members

    def complement(self) -> "DescentSet":
        return DescentSet(self.ambient, frozenset(range(1, self.ambient)) - self.members)

    def __or__(self, other):
        self._check(other)
        return DescentSet(self.ambient, self.members | other.members)

    def __and__(self, other):
        self._check(other)
        return DescentSet(self.ambient, self.members & other.members)

    def __sub__(self, other):
        self._check(other)
        return DescentSet(self.ambient, self.members - other.members)

    def __str__(self):
        return ",".join(map(str, self.sorted())) + f"@{self.ambient}"


def descent_set(alpha: Composition) -> DescentSet:
    """The set of proper partial sums of ``alpha``, inside ``[|alpha| - 1]``."""
    partial = list(itertools.accumulate(alpha))
    return DescentSet(sum(alpha), frozenset(partial[:-1]))


def comp_of_subset(subset: DescentSet) -> Composition:
    """Inverse of :func:`descent_set`."""
    n = subset.ambient
    if n == 0:
        return ()
    cuts = [0, *subset.sorted(), n]
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def reverse(alpha: Composition) -> Composition:
    return tuple(reversed(alpha))


def complement(alpha: Composition) -> Composition:
    """The composition whose partial-sum set is ``[n-1] \\ D(alpha)``."""
    return comp_of_subset(descent_set(alpha).complement())


def omega(gamma: Composition) -> Composition:
    return comp_of_subset(descent_set(reverse(gamma)).complement())


def concat(*parts: Composition) -> Composition:
    return tuple(itertools.chain.from_iterable(parts))


def reverse_subset(subset: DescentSet) -> DescentSet:
    n = subset.ambient
    return DescentSet(n, frozenset(n - x for x in subset.members))


@lru_cache(maxsize=None)
def compositions(n: int) -> tuple:
    """All compositions of ``n`` in canonical order."""
    if n < 0:
        raise DomainError(f"size must be nonnegative, got {n}")
    if n == 0:
        return ((),)
    out = []
    for k in range(n):
        for cut in itertools.combinations(range(1, n), k):
            out.append(comp_of_subset(DescentSet(n, frozenset(cut))))
    return tuple(sorted(out, key=sort_key))


def compositions_upto(n: int) -> Iterator[Composition]:
    for m in range(n + 1):
        yield from compositions(m)


@lru_cache(maxsize=None)
def coarsenings(gamma: Composition) -> tuple:
    """All ``beta`` with ``D(beta) ⊆ D(gamma)``, in canonical order."""
    cuts = descent_set(gamma).sorted()
    n = sum(gamma)
    out = []
    for k in range(len(cuts) + 1):
        for sub in itertools.combinations(cuts, k):
            out.append(comp_of_subset(DescentSet(n, frozenset(sub))))
    return tuple(sorted(out, key=sort_key))


@lru_cache(maxsize=None)
def refinements(gamma: Composition) -> tuple:
    """All ``beta`` with ``D(beta) ⊇ D(gamma)``, in canonical order."""
    n = sum(gamma)
    fixed = descent_set(gamma).members
    free = sorted(set(range(1, n)) - fixed)
    out = []
    for k in range(len(free) + 1):
        for sub in itertools.combinations(free, k):
            out.append(comp_of_subset(DescentSet(n, fixed | frozenset(sub))))
    return tuple(sorted(out, key=sort_key))


def deconcatenations(alpha: Composition) -> Iterator[tuple]:
    """Pairs ``(beta, gamma)`` with ``beta + gamma == alpha``."""
    for i in range(len(alpha) + 1):
        yield alpha[:i], alpha[i:]


def collapse(alpha: Composition, i: int) -> Composition:
    """Merge entries ``i`` and ``i+1`` (1-based) into their sum."""
    if not 1 <= i <= len(alpha) - 1:
        raise DomainError(f"collapse index {i} out of range [1, {len(alpha) - 1}]")
    return alpha[: i - 1] + (alpha[i - 1] + alpha[i],) + alpha[i + 1 :]


def collapse_set(alpha: Composition, indices: Iterable[int]) -> Composition:
    """Collapse at every index of ``indices``, largest first.

    Indices always refer to positions in the original ``alpha``.
    """
    out = tuple(alpha)
    for i in sorted(set(indices), reverse=True):
        if not 1 <= i <= len(alpha) - 1:
            raise DomainError(
                f"collapse index {i} out of range [1, {len(alpha) - 1}]"
            )
        out = collapse(out, i)
    return out


def collapse_IJ(alpha: Composition, I: Iterable[int], J: Iterable[int]) -> Composition:
    J = set(J)
    return collapse_set(alpha, set(I) | J | {j - 1 for j in J})


def t_shuffle(delta: Composition, eps: Composition, T: Iterable[int]) -> Composition:
    """Place ``eps`` at the positions of ``T`` and ``delta`` everywhere else."""
    T = set(T)
    total = len(delta) + len(eps)
    if len(T) != len(eps):
        raise DomainError(f"|T| = {len(T)} but eps has length {len(eps)}")
    if not all(1 <= t <= total for t in T):
        raise DomainError(f"T must be a subset of [1, {total}]")
    d_iter, e_iter = iter(delta), iter(eps)
    return tuple(next(e_iter) if k in T else next(d_iter) for k in range(1, total + 1))


def t_prime(T: Iterable[int], total: int) -> frozenset:
    T = set(T)
    return frozenset((T - {t - 1 for t in T}) - {total})


# -- text syntax -----------------------------------------------------------

def parse_composition(text: str) -> Composition:
    """Parse ``"1,3,1"``; the empty string is the empty composition."""
    text = text.strip()
    if text in ("", "()", "[]"):
        return ()
    text = text.strip("()[]")
    try:
        entries = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ParseError(f"not a composition: {text!r}") from None
    try:
        return as_composition(entries)
    except DomainError as exc:
        raise ParseError(str(exc)) from None


def format_composition(alpha: Sequence[int]) -> str:
    return ",".join(map(str, alpha))


def parse_subset(text: str) -> DescentSet:
    """Parse ``"2,3,6@8"``."""
    body, sep, amb = text.strip().partition("@")
    if not sep:
        raise ParseError(f"subset needs an explicit ambient, e.g. '2,3@5': {text!r}")
    try:
        ambient = int(amb)
        members = [int(tok) for tok in body.split(",")] if body.strip() else []
        return DescentSet(ambient, frozenset(members))
    except (ValueError, DomainError) as exc:
        raise ParseError(f"bad subset {text!r}: {exc}") from None
