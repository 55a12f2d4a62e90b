"""Brute-force reference computations, independent of the library code paths.

Each oracle works straight from the definitions with Fractions and explicit
enumeration; none of them calls into ``orbifold_ring``.
"""
import math
from fractions import Fraction


def fractional(x):
    return x - math.floor(x)


def enumeration(weights):
    """Sorted list of ``(k/w_i, i)`` over all ``i`` and ``0 <= k < w_i``."""
    return sorted((Fraction(k, wi), i) for i, wi in enumerate(weights) for k in range(wi))


def gamma_s(weights):
    return [a for a, _ in enumeration(weights)]


def fixed(g, weights):
    return {i for i, wi in enumerate(weights) if fractional(g * wi) == 0}


def age(g, weights):
    return sum((fractional(g * wi) for wi in weights), Fraction(0))


def inv(g):
    return fractional(-Fraction(g))


def k_min_by_count(g, weights):
    """Number of enumeration entries with argument strictly below ``g``."""
    return sum(1 for a in gamma_s(weights) if a < g)


def k_max_by_scan(g, weights):
    return max(k for k, a in enumerate(gamma_s(weights)) if a == g)


def j_terms(g, h, weights):
    gh_inv = inv(g + h)
    return {i for i, wi in enumerate(weights)
            if fractional(g * wi) + fractional(h * wi) + fractional(gh_inv * wi) == 2}


def model_degrees(weights):
    total = sum(weights)
    return [j - total * a for j, a in enumerate(gamma_s(weights))]


def model_table(weights):
    """Graded product on exponents, from the degree-additivity rule."""
    deg = model_degrees(weights)
    N = len(deg)
    table = {}
    for j in range(N):
        for k in range(N):
            m = (j + k) % N
            table[j, k] = m if deg[j] + deg[k] == deg[m] else None
    return table


def sectors(weights):
    return sorted(set(gamma_s(weights)))
