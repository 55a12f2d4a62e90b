"""Exact orbifold Chow rings of weighted projective spaces and their model
as a graded algebra of roots of unity."""
from .combinatorics import (
    Sector, SectorEnumeration, SectorPartition, Weights, age, fixed_set,
    gamma_inv, gamma_mul, j_set, k_max, k_min, make_weights,
    sector_enumeration, sector_partition, twisted_sectors, unity,
)
from .elements import Element, linear_combine
from .chow import (
    ChowBasisIndex, ChowElement, ChowRing, chow_basis, chow_cup, chow_degree,
    chow_pairing, eta,
)
from .model import (
    ModelElement, ModelRing, dual_index, is_gorenstein, model_cup,
    model_degree, model_integral, model_pairing, poincare_polynomial, xi,
)
from .isomorphism import (
    verify_combinatorics, verify_degree_lemma, verify_frobenius,
    verify_isomorphism, verify_sweep, verify_weights, xi_inverse, xi_map,
)
from .report import CheckRecord, VerificationReport

__version__ = "0.1.0"
