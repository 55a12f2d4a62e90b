"""Combinatorics of roots of unity attached to a weight vector.

A root of unity ``g = exp(2*pi*i*t)`` is stored only through its argument
``t``, a reduced :class:`fractions.Fraction` in ``[0, 1)``.  Multiplying roots
adds arguments modulo one, so every quantity below is an exact rational and
no complex numbers are ever formed.

For weights ``w = (w_0, ..., w_n)`` this module provides

* the fixed set ``I(g) = {i : g**w_i == 1}``,
* the age ``a(g) = sum_i frac(t * w_i)``,
* the increasing enumeration ``s`` of the disjoint union of the groups of
  ``w_i``-th roots of unity,
* the window ends ``k_min`` / ``k_max`` of each argument in that enumeration,
* the set ``J(g, h)`` and the four-way partition of ``[0, n]`` built from it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple, Union

# Largest value allowed for |w| and <w>; matches a signed 64-bit word.
INT_LIMIT = 2**63 - 1

UnityRational = Fraction
ArgLike = Union[Fraction, int, str]


def unity(p: ArgLike, q: int = 1) -> Fraction:
    """Return the reduced argument ``p/q mod 1``."""
    return (Fraction(p) / q) % 1


def frac(x: Fraction) -> Fraction:
    """Fractional part, always in ``[0, 1)``."""
    return Fraction(x.numerator % x.denominator, x.denominator)


@dataclass(frozen=True)
class Weights:
    """A validated weight vector with its derived invariants.

    ``n`` is the dimension of the weighted projective space (one less than the
    number of weights), ``total`` is ``|w|`` and ``product`` is ``<w>``.
    """

    entries: tuple[int, ...]
    n: int = field(init=False)
    total: int = field(init=False)
    product: int = field(init=False)

    def __post_init__(self):
        entries = tuple(self.entries)
        if not entries:
            raise ValueError("weight vector must be non-empty")
        for e in entries:
            if isinstance(e, bool) or not isinstance(e, int):
                raise TypeError(f"weights must be integers, got {e!r}")
            if e <= 0:
                raise ValueError(f"weights must be positive, got {e}")
        total = sum(entries)
        product = math.prod(entries)
        if total > INT_LIMIT or product > INT_LIMIT:
            raise OverflowError(
                f"weights {entries} overflow the 64-bit range for |w| or <w>")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "n", len(entries) - 1)
        object.__setattr__(self, "total", total)
        object.__setattr__(self, "product", product)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    @property
    def lcm(self) -> int:
        return math.lcm(*self.entries)

    def __str__(self):
        return "(" + ",".join(map(str, self.entries)) + ")"


def make_weights(raw: Iterable[int] | Weights) -> Weights:
    """Build :class:`Weights` from any iterable of positive integers."""
    if isinstance(raw, Weights):
        return raw
    return Weights(tuple(raw))


def gamma_mul(g: Fraction, h: Fraction) -> Fraction:
    """Argument of the product ``gh``."""
    return (g + h) % 1


def gamma_inv(g: Fraction) -> Fraction:
    """Argument of the inverse ``g**-1``."""
    return (-g) % 1


@lru_cache(maxsize=None)
def fixed_set(g: Fraction, w: Weights) -> frozenset[int]:
    """Indices ``i`` with ``g**w_i == 1``, i.e. ``t * w_i`` integral."""
    p, q = g.numerator, g.denominator
    return frozenset(i for i, wi in enumerate(w.entries) if p * wi % q == 0)


@lru_cache(maxsize=None)
def age(g: Fraction, w: Weights) -> Fraction:
    """Sum of the fractional parts ``frac(t * w_i)``."""
    p, q = g.numerator, g.denominator
    return Fraction(sum(p * wi % q for wi in w.entries), q)


class Sector(NamedTuple):
    arg: Fraction
    origin: int


class SectorEnumeration(tuple):
    """The increasing bijection ``s: [0, |w|-1] -> disjoint union of U_{w_i}``.

    Entry ``k`` is ``s(k)`` as a :class:`Sector` ``(arg, origin)``.  Ties
    between equal arguments are broken by the origin index.
    """

    @property
    def args(self) -> tuple[Fraction, ...]:
        return tuple(s.arg for s in self)

    @property
    def origins(self) -> tuple[int, ...]:
        return tuple(s.origin for s in self)


@lru_cache(maxsize=None)
def sector_enumeration(w: Weights) -> SectorEnumeration:
    table = sorted(Sector(Fraction(k, wi), i)
                   for i, wi in enumerate(w.entries) for k in range(wi))
    return SectorEnumeration(table)


@lru_cache(maxsize=None)
def twisted_sectors(w: Weights) -> tuple[Fraction, ...]:
    """Sorted distinct arguments of the union of the ``U_{w_i}``."""
    return tuple(sorted(set(sector_enumeration(w).args)))


def in_sectors(g: Fraction, w: Weights) -> bool:
    return bool(fixed_set(g, w))


def k_min(g: Fraction, w: Weights) -> int:
    """First enumeration index whose argument is ``>= g``.

    Computed by the closed form ``a(g^-1) + |w| t``; valid for every root of
    unity, including those outside all ``U_{w_i}``, where it counts the
    indices with argument strictly below ``g``.
    """
    value = age(gamma_inv(g), w) + w.total * g
    assert value.denominator == 1, (g, w, value)
    return int(value)


def k_max(g: Fraction, w: Weights) -> int:
    """Last enumeration index with argument equal to ``g``."""
    if not fixed_set(g, w):
        raise ValueError(f"root with argument {g} lies in no U_w_i for w={w}")
    value = w.n + w.total * g - age(g, w)
    assert value.denominator == 1, (g, w, value)
    return int(value)


def j_set(g: Fraction, h: Fraction, w: Weights) -> frozenset[int]:
    """Indices where ``frac(g w_i) + frac(h w_i) + frac((gh)^-1 w_i) == 2``."""
    q = math.lcm(g.denominator, h.denominator)
    a = g.numerator * (q // g.denominator)
    b = h.numerator * (q // h.denominator)
    c = -(a + b) % q
    return frozenset(i for i, wi in enumerate(w.entries)
                     if a * wi % q + b * wi % q + c * wi % q == 2 * q)


class SectorPartition(NamedTuple):
    """Four disjoint index sets whose union is ``[0, n]``.

    ``frac(g w_i) + frac(h w_i) - frac(gh w_i)`` equals 0 on ``fixed``,
    1 on ``product_only``, 1 on ``carry`` and 0 on ``inverse_carry``.
    """

    fixed: frozenset[int]           # I(g) | I(h)
    product_only: frozenset[int]    # I(gh) - (I(g) & I(h))
    carry: frozenset[int]           # J(g, h)
    inverse_carry: frozenset[int]   # J(g^-1, h^-1)


PARTITION_DEFECT = (0, 1, 1, 0)


def sector_partition(g: Fraction, h: Fraction, w: Weights) -> SectorPartition:
    ig, ih = fixed_set(g, w), fixed_set(h, w)
    igh = fixed_set(gamma_mul(g, h), w)
    return SectorPartition(
        ig | ih,
        igh - (ig & ih),
        j_set(g, h, w),
        j_set(gamma_inv(g), gamma_inv(h), w),
    )
