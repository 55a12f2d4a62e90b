"""The graded group algebra of the ``|w|``-th roots of unity.

Basis element ``j`` stands for ``xi**j`` with ``xi = exp(2*pi*i/|w|)``.  The
degree ``deg(xi**j) = j - |w| * gamma(s(j))`` defines an increasing
filtration; the ring here is its associated graded, so a product of basis
elements survives only when degrees add up exactly.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache

from .combinatorics import (
    Weights, fixed_set, gamma_inv, k_min, make_weights, sector_enumeration,
)
from .elements import BasisRing, Element


def xi_label(j: int) -> str:
    return f"xi^{j}"


class ModelElement(Element):
    __slots__ = ()

    def _label(self, key):
        return xi_label(key)


class ModelRing(BasisRing):
    element_type = ModelElement
    name = "model"

    def __init__(self, w):
        w = make_weights(w)
        super().__init__(w)
        self.basis = tuple(range(w.total))
        args = sector_enumeration(w).args
        self._degrees = tuple(j - w.total * args[j] for j in self.basis)
        # degrees have denominators dividing lcm(w)
        self._scaled = tuple(int(d * w.lcm) for d in self._degrees)

    def label(self, j):
        return xi_label(j)

    def validate(self, j) -> int:
        if not 0 <= j < self.w.total:
            raise ValueError(f"exponent {j} outside [0, {self.w.total - 1}]")
        return j

    def degree(self, j) -> Fraction:
        return self._degrees[self.validate(j)]

    def basis_cup(self, j, k):
        m = (j + k) % self.w.total
        D = self._scaled
        if D[j] + D[k] == D[m]:
            return m
        return None

    def integral(self, z: ModelElement) -> Fraction:
        return z.coefficient(self.w.n) / self.w.product

    def basis_pairing(self, j, k) -> Fraction:
        m = self.basis_cup(j, k)
        return Fraction(1, self.w.product) if m == self.w.n else Fraction(0)

    def pairing(self, x, y):
        return self.integral(self.cup(x, y))

    def dual(self, j) -> int:
        """The exponent ``k`` with ``<xi**j, xi**k> = 1/<w>``."""
        w = self.w
        g = sector_enumeration(w)[self.validate(j)].arg
        d = j - k_min(g, w)
        return k_min(gamma_inv(g), w) + len(fixed_set(g, w)) - 1 - d


@lru_cache(maxsize=64)
def model_ring(w: Weights) -> ModelRing:
    return ModelRing(w)


def model_degree(w, j: int) -> Fraction:
    return model_ring(make_weights(w)).degree(j)


def model_cup(w, z1: ModelElement, z2: ModelElement) -> ModelElement:
    return model_ring(make_weights(w)).cup(z1, z2)


def model_integral(w, z: ModelElement) -> Fraction:
    return model_ring(make_weights(w)).integral(z)


def model_pairing(w, z1: ModelElement, z2: ModelElement) -> Fraction:
    return model_ring(make_weights(w)).pairing(z1, z2)


def dual_index(w, j: int) -> int:
    return model_ring(make_weights(w)).dual(j)


def poincare_polynomial(w) -> dict[Fraction, int]:
    """Multiplicity of each degree among the basis ``xi**0 .. xi**(|w|-1)``."""
    ring = model_ring(make_weights(w))
    counts = Counter(ring.degree(j) for j in ring.basis)
    return dict(sorted(counts.items()))


def is_gorenstein(w) -> bool:
    w = make_weights(w)
    return all(w.total % wi == 0 for wi in w)


def xi(j: int) -> ModelElement:
    return ModelElement.basis(j)
