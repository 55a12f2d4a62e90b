"""Orbifold Chow ring of a weighted projective space, over exact rationals.

The basis consists of symbols ``eta(g, d)`` with ``g`` ranging over the
roots of unity fixing at least one coordinate and ``0 <= d <= #I(g) - 1``.
The normalisation of the classes is already absorbed into the structure
constants, so products are basis elements or zero and pairings are
``0`` or ``1/<w>``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .combinatorics import (
    Weights, age, fixed_set, gamma_inv, make_weights, twisted_sectors,
)
from .elements import BasisRing, Element


class ChowBasisIndex(NamedTuple):
    g: Fraction
    d: int


def eta_label(b: ChowBasisIndex) -> str:
    return f"eta(gamma={b.g}, {b.d})"


class ChowElement(Element):
    __slots__ = ()

    def _label(self, key):
        return eta_label(key)


class ChowRing(BasisRing):
    element_type = ChowElement
    name = "chow"

    def __init__(self, w):
        w = make_weights(w)
        super().__init__(w)
        self.basis = tuple(
            ChowBasisIndex(g, d)
            for g in twisted_sectors(w)
            for d in range(len(fixed_set(g, w))))
        self._valid = frozenset(self.basis)
        # Sectors are multiples of 1/lcm(w); products are computed on the
        # integer numerators, with ages scaled by the same lcm.
        L = self._lcm = w.lcm
        self._num = {g: int(g * L) for g in twisted_sectors(w)}
        self._age = [int(age(Fraction(p, L), w) * L) for p in range(L)]
        self._dim = [len(fixed_set(Fraction(p, L), w)) for p in range(L)]
        self._index = {(self._num[b.g], b.d): b for b in self.basis}

    def label(self, b):
        return eta_label(b)

    def validate(self, b) -> ChowBasisIndex:
        b = ChowBasisIndex(Fraction(b[0]), b[1])
        if b not in self._valid:
            raise ValueError(f"{eta_label(b)} is not a basis index for w={self.w}")
        return b

    def degree(self, b) -> Fraction:
        b = self.validate(b)
        return b.d + age(b.g, self.w)

    def basis_cup(self, b0, b1):
        L, A = self._lcm, self._age
        p0, p1 = self._num[b0.g], self._num[b1.g]
        p = (p0 + p1) % L
        dim = self._dim[p]
        if not dim:
            return None
        shifted = A[p0] + A[p1] - A[p] + L * (b0.d + b1.d)
        assert shifted >= 0 and shifted % L == 0, (b0, b1)
        d = shifted // L
        if d > dim - 1:
            return None
        return self._index[p, d]

    def basis_pairing(self, b0, b1) -> Fraction:
        L, A = self._lcm, self._age
        p0, p1 = self._num[b0.g], self._num[b1.g]
        if (p0 + p1) % L:
            return Fraction(0)
        if A[p0] + A[p1] + L * (b0.d + b1.d) == L * self.w.n:
            return Fraction(1, self.w.product)
        return Fraction(0)

    def dual(self, b) -> ChowBasisIndex:
        """The basis index pairing to ``1/<w>`` with ``b``."""
        b = self.validate(b)
        return ChowBasisIndex(gamma_inv(b.g), len(fixed_set(b.g, self.w)) - 1 - b.d)


@lru_cache(maxsize=64)
def chow_ring(w: Weights) -> ChowRing:
    return ChowRing(w)


def chow_basis(w) -> tuple[ChowBasisIndex, ...]:
    return chow_ring(make_weights(w)).basis


def chow_degree(w, b) -> Fraction:
    return chow_ring(make_weights(w)).degree(b)


def chow_cup(w, x: ChowElement, y: ChowElement) -> ChowElement:
    return chow_ring(make_weights(w)).cup(x, y)


def chow_pairing(w, x: ChowElement, y: ChowElement) -> Fraction:
    return chow_ring(make_weights(w)).pairing(x, y)


def eta(g, d: int = 0) -> ChowElement:
    """Shorthand for the basis element ``eta(g, d)``; ``g`` may be ``"1/3"``."""
    return ChowElement.basis(ChowBasisIndex(Fraction(g), d))
