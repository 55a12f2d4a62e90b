"""Sparse exact-rational linear combinations over a fixed basis."""
from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Iterator, Mapping


class Element(Mapping):
    """Immutable ``{basis key: nonzero Fraction}`` map.

    Subclasses pin down the basis type so that elements of different rings
    never add up by accident.  The empty map is zero.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Hashable, object] | Iterable = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, coeff in items:
            c = acc.get(key, 0) + Fraction(coeff)
            if c:
                acc[key] = c
            else:
                acc.pop(key, None)
        self._terms = acc
        self._hash = None

    @classmethod
    def basis(cls, key):
        return cls({key: 1})

    @classmethod
    def zero(cls):
        return cls()

    def __getitem__(self, key) -> Fraction:
        return self._terms[key]

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(
                f"cannot combine {type(self).__name__} with {type(other).__name__}")

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        return type(self)(list(self.items()) + list(other.items()))

    def __neg__(self):
        return type(self)({k: -c for k, c in self.items()})

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, Element):
            return NotImplemented
        s = Fraction(scalar)
        return type(self)({k: s * c for k, c in self.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Element):
            return type(other) is type(self) and self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def _label(self, key) -> str:
        return repr(key)

    def __repr__(self):
        if not self._terms:
            return f"{type(self).__name__}(0)"
        parts = []
        for k, c in self._terms.items():
            parts.append(self._label(k) if c == 1 else f"{c}*{self._label(k)}")
        return f"{type(self).__name__}({' + '.join(parts)})"


def linear_combine(cls, pairs):
    """Build ``sum(coeff * basis(key))`` from ``(coeff, key)`` pairs."""
    return cls((key, coeff) for coeff, key in pairs)


class BasisRing:
    """A finite-dimensional algebra whose basis is closed under the product.

    Subclasses supply ``basis``, ``degree``, ``basis_cup`` (a basis key or
    ``None`` for zero) and ``basis_pairing``; products and pairings of
    arbitrary elements follow by bilinearity.
    """

    element_type: type[Element] = Element
    name = "ring"

    def __init__(self, w):
        self.w = w

    basis: tuple

    def degree(self, key) -> Fraction:
        raise NotImplementedError

    def basis_cup(self, a, b):
        raise NotImplementedError

    def basis_pairing(self, a, b) -> Fraction:
        raise NotImplementedError

    def label(self, key) -> str:
        return str(key)

    @property
    def unit(self):
        return self.basis[0]

    def element(self, key) -> Element:
        return self.element_type.basis(key)

    def cup(self, x: Element, y: Element) -> Element:
        acc = []
        for a, ca in x.items():
            for b, cb in y.items():
                c = self.basis_cup(a, b)
                if c is not None:
                    acc.append((c, ca * cb))
        return self.element_type(acc)

    def pairing(self, x: Element, y: Element) -> Fraction:
        total = Fraction(0)
        for a, ca in x.items():
            for b, cb in y.items():
                total += ca * cb * self.basis_pairing(a, b)
        return total

    def __repr__(self):
        return f"{type(self).__name__}({self.w})"
