"""
Matching the Chow ring with the model ring
==========================================

The Chow ring has one generator per (twisted sector, power of the hyperplane
class).  The map Xi sends it to a single power of xi.  Here we look at the
map on an example and then let the verifier check every identity exhaustively.
"""

from orbifold_ring import (
    ChowRing, ModelRing, eta, make_weights, verify_weights, xi_inverse, xi_map,
)
from orbifold_ring.output import xi_table

w = make_weights((1, 2, 3))
chow, model = ChowRing(w), ModelRing(w)
print(xi_table(w).to_text())

# Xi turns a product of twisted classes into a product of powers of xi
a, b = eta("1/3"), eta("2/3")
lhs = xi_map(w, chow.cup(a, b))
rhs = model.cup(xi_map(w, a), xi_map(w, b))
print(f"Xi({a} * {b}) = {lhs}")
print(f"Xi({a}) * Xi({b}) = {rhs}")
print("inverse of xi^4:", xi_inverse(w, model.element(4)))

# pairings agree as well
print("pairings:", chow.pairing(a, b), model.pairing(xi_map(w, a), xi_map(w, b)))

# the full battery: Frobenius axioms for both rings plus every step of the map
report = verify_weights(w)
for record in report.records:
    print(record.line())
print(report.summary())

# a larger example with repeated weights
big = verify_weights((1, 2, 2, 3, 3, 3))
print(big.summary())
