"""Finitely supported linear combinations with Scalar coefficients.

Every element carries a basis tag and a dict of terms.  Zero coefficients
are dropped on construction, so ``support()`` is always the true support.
Elements of the same algebra in different bases compare equal when they
agree after conversion to the algebra's canonical basis (M for QSym, H for
NSym).
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .compositions import as_composition, format_composition, sort_key
from .errors import UsageError
from .scalars import ONE, Scalar

BASIS_NAMES = {"M": "M", "L": "L", "Eta": "eta", "H": "H", "EtaStar": "etastar", "x": "x"}


def _format_coeff(c: Scalar) -> str:
    s = str(c)
    return s if c.is_atomic() else f"({s})"


class Combination:
    """Base class; subclasses fix ``algebra``, ``bases`` and ``canonical``."""

    __slots__ = ("basis", "_terms")
    algebra = ""
    bases: tuple = ()
    canonical = ""

    def __init__(self, basis, terms=None):
        basis = self._check_basis(basis)
        clean = {}
        for key, coeff in (terms or {}).items():
            key = self._check_key(key)
            c = Scalar.coerce(coeff)
            if key in clean:
                c = clean[key] + c
            if c:
                clean[key] = c
            else:
                clean.pop(key, None)
        self.basis = basis
        self._terms = clean

    def _check_basis(self, basis):
        if basis not in self.bases:
            raise UsageError(f"{self.algebra} has no basis {basis!r}; expected one of {self.bases}")
        return basis

    @classmethod
    def _make(cls, basis, terms):
        """Trusted constructor: ``terms`` already has valid keys and no zeros."""
        obj = cls.__new__(cls)
        obj.basis = basis
        obj._terms = terms
        return obj

    def _like(self, terms, basis=None):
        return self._make(basis or self.basis, terms)

    @staticmethod
    def _check_key(key):
        return as_composition(key)

    @staticmethod
    def _sort_key(key):
        return sort_key(key)

    # access -------------------------------------------------------------------

    def coefficient(self, key) -> Scalar:
        from .scalars import ZERO

        return self._terms.get(tuple(key), ZERO)

    __getitem__ = coefficient

    def support(self) -> list:
        return sorted(self._terms, key=self._sort_key)

    def items(self) -> list:
        return [(k, self._terms[k]) for k in self.support()]

    def terms(self) -> dict:
        return dict(self._terms)

    def __iter__(self):
        return iter(self.support())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def degree(self) -> int:
        """Largest size of a support key (-1 for the zero element)."""
        return max((sum(k) for k in self._terms), default=-1)

    # linear structure ---------------------------------------------------------

    def _unit_key(self):
        return ()

    def _aligned(self, other):
        """Return ``other`` as an element of this class and basis, or None."""
        if isinstance(other, (int, Rational, Scalar)):
            c = Scalar.coerce(other)
            return self._like({self._unit_key(): c} if c else {})
        if type(other) is not type(self):
            return None
        if other.basis != self.basis:
            other = other.to(self.basis)
        return other

    def __add__(self, other):
        other = self._aligned(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k)
            v = c if v is None else v + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return self._like(out)

    __radd__ = __add__

    def __neg__(self):
        return self._like({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._aligned(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Combination":
        c = Scalar.coerce(c)
        if not c:
            return self._like({})
        if c == ONE:
            return self
        return self._like({k: v * c for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Rational, Scalar)):
            return self.scale(other)
        if type(other) is type(self):
            return self._product(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Rational, Scalar)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Rational, Scalar)):
            return self.scale(Scalar.coerce(other).inverse())
        return NotImplemented

    def _product(self, other):
        raise UsageError(f"no product defined for {type(self).__name__}")

    def map_coefficients(self, fn) -> "Combination":
        return type(self)(self.basis, {k: fn(c) for k, c in self._terms.items()})

    def specialize(self, q0) -> "Combination":
        """Evaluate every coefficient at ``q = q0``; raises PoleError at a pole."""
        q0 = Fraction(q0)
        return self.map_coefficients(lambda c: Scalar.from_fraction(c.evaluate(q0)))

    # comparison ----------------------------------------------------------------

    def to(self, basis):
        if basis == self.basis:
            return self
        raise UsageError(f"cannot convert {self.basis} to {basis}")

    def canonical_form(self):
        return self.to(self.canonical) if self.canonical else self

    def __eq__(self, other):
        if isinstance(other, (int, Rational, Scalar)):
            other = self._aligned(other)
        if type(other) is not type(self):
            return NotImplemented
        if self.basis == other.basis:
            return self._terms == other._terms
        return self.canonical_form()._terms == other.canonical_form()._terms

    __hash__ = None

    # display -------------------------------------------------------------------

    def _format_key(self, key) -> str:
        return f"{BASIS_NAMES[self.basis]}[{format_composition(key)}]"

    def lines(self) -> list:
        return [f"{_format_coeff(c)} * {self._format_key(k)}" for k, c in self.items()]

    def __str__(self):
        return " + ".join(self.lines()) if self._terms else "0"

    def __repr__(self):
        return f"{type(self).__name__}({self.basis!r}, {str(self)})"


class QSymElement(Combination):
    __slots__ = ()
    algebra = "QSym"
    bases = ("M", "L", "Eta")
    canonical = "M"

    def to(self, basis):
        from . import qsym

        return qsym.convert(self, basis)

    def _product(self, other):
        from . import qsym

        return qsym.multiply(self, other)


class NSymElement(Combination):
    __slots__ = ()
    algebra = "NSym"
    bases = ("H", "EtaStar")
    canonical = "H"

    def to(self, basis):
        from . import nsym

        return nsym.convert(self, basis)

    def _product(self, other):
        from . import nsym

        return nsym.h_product(self, other)


class FreeWordElement(Combination):
    """Linear combination of words ``x_{g1} x_{g2} ...`` keyed by compositions.

    ``params`` optionally records the SharpParams the element was produced
    under; it does not take part in equality.
    """

    __slots__ = ("params",)
    algebra = "F"
    bases = ("x",)
    canonical = "x"

    def __init__(self, basis="x", terms=None, params=None):
        super().__init__(basis, terms)
        self.params = params

    @classmethod
    def _make(cls, basis, terms, params=None):
        obj = super()._make(basis, terms)
        obj.params = params
        return obj

    def _like(self, terms, basis=None):
        return self._make(basis or self.basis, terms, self.params)

    def map_coefficients(self, fn):
        return FreeWordElement(self.basis, {k: fn(c) for k, c in self._terms.items()}, self.params)

    def _product(self, other):
        from . import fshuffle

        params = self.params or other.params
        if params is None:
            raise UsageError("word product needs SharpParams; use fshuffle.sharp")
        return fshuffle.sharp(self, other, params)


_LEG_CLASSES = {"QSym": QSymElement, "NSym": NSymElement, "F": FreeWordElement}


class TensorElement(Combination):
    """An element of ``A ⊗ A`` with a basis tag per leg.

    ``basis`` is a pair such as ``("Eta", "Eta")``.  Keys are pairs of
    compositions.
    """

    __slots__ = ("leg_algebra",)

    def __init__(self, algebra, basis, terms=None):
        if algebra not in _LEG_CLASSES:
            raise UsageError(f"unknown algebra {algebra!r}")
        self.leg_algebra = algebra
        super().__init__(basis, terms)

    def _check_basis(self, basis):
        basis = tuple(basis)
        legs = _LEG_CLASSES[self.leg_algebra].bases
        if len(basis) != 2 or any(b not in legs for b in basis):
            raise UsageError(f"bad tensor basis {basis!r} for {self.leg_algebra}")
        return basis

    @classmethod
    def _make(cls, basis, terms, algebra=None):
        obj = super()._make(tuple(basis), terms)
        obj.leg_algebra = algebra
        return obj

    def _like(self, terms, basis=None):
        return self._make(basis or self.basis, terms, self.leg_algebra)

    @property
    def algebra(self):
        return f"{self.leg_algebra}⊗{self.leg_algebra}"

    def map_coefficients(self, fn):
        return TensorElement(self.leg_algebra, self.basis,
                             {k: fn(c) for k, c in self._terms.items()})

    @staticmethod
    def _check_key(key):
        left, right = key
        return (as_composition(left), as_composition(right))

    @staticmethod
    def _sort_key(key):
        return (sort_key(key[0]), sort_key(key[1]))

    def _unit_key(self):
        return ((), ())

    def _aligned(self, other):
        if isinstance(other, TensorElement) and other.leg_algebra != self.leg_algebra:
            return None
        return super()._aligned(other)

    def _leg_class(self):
        return _LEG_CLASSES[self.leg_algebra]

    def map_legs(self, left_fn, right_fn, basis) -> "TensorElement":
        """Apply linear maps legwise; each fn sends a composition to an element."""
        out = {}
        lcache, rcache = {}, {}
        for (a, b), c in self._terms.items():
            if a not in lcache:
                lcache[a] = left_fn(a)
            if b not in rcache:
                rcache[b] = right_fn(b)
            for ka, ca in lcache[a]._terms.items():
                for kb, cb in rcache[b]._terms.items():
                    key = (ka, kb)
                    v = out.get(key)
                    v = c * ca * cb if v is None else v + c * ca * cb
                    if v:
                        out[key] = v
                    else:
                        out.pop(key, None)
        return self._make(tuple(basis), out, self.leg_algebra)

    def to(self, basis):
        basis = tuple(basis)
        if basis == self.basis:
            return self
        cls = self._leg_class()
        b0, b1 = self.basis
        return self.map_legs(
            lambda k: cls._make(b0, {k: ONE}).to(basis[0]),
            lambda k: cls._make(b1, {k: ONE}).to(basis[1]),
            basis,
        )

    def canonical_form(self):
        c = self._leg_class().canonical
        return self.to((c, c))

    def _product(self, other):
        """Legwise product ``(a⊗b)(c⊗d) = ac ⊗ bd``."""
        cls = self._leg_class()
        b0, b1 = self.basis
        other = other.to(self.basis)
        out = TensorElement(self.leg_algebra, self.basis)
        for (a, b), c in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                left = cls._make(b0, {a: ONE}) * cls._make(b0, {a2: ONE})
                right = cls._make(b1, {b: ONE}) * cls._make(b1, {b2: ONE})
                out = out + tensor(left.to(b0), right.to(b1)).scale(c * c2)
        return out

    def _format_key(self, key):
        a, b = key
        return (f"{BASIS_NAMES[self.basis[0]]}[{format_composition(a)}] ⊗ "
                f"{BASIS_NAMES[self.basis[1]]}[{format_composition(b)}]")


def tensor(f: Combination, g: Combination) -> TensorElement:
    """The tensor ``f ⊗ g`` of two elements of the same algebra."""
    if type(f) is not type(g):
        raise UsageError("tensor legs must belong to the same algebra")
    terms = {}
    for a, ca in f._terms.items():
        for b, cb in g._terms.items():
            terms[(a, b)] = ca * cb
    return TensorElement._make((f.basis, g.basis), {k: v for k, v in terms.items() if v},
                               f.algebra)
