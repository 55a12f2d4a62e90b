"""
The model ring on powers of xi
==============================

The model ring has basis xi^0, ..., xi^(|w|-1).  Each power gets a rational
degree, and a product of two powers survives exactly when degrees add.
"""

from orbifold_ring import (
    ModelRing, is_gorenstein, make_weights, model_degree, poincare_polynomial,
    xi,
)
from orbifold_ring.output import degree_table, mult_table, pairing_matrix

w = make_weights((1, 2, 3))
ring = ModelRing(w)

# degrees, products and pairings, rendered as the CLI would print them
print(degree_table(w, "model").to_text())
print(mult_table(w, "model").to_text())
print(pairing_matrix(w, "model").to_text())

# elements are sparse maps with exact rational coefficients
x = 2 * xi(3) + xi(1)
print("x       =", x)
print("x * x   =", ring.cup(x, x))
print("int x^2 =", ring.integral(ring.cup(x, x)))

# Betti numbers by degree
print("Poincare polynomial:", {str(k): m for k, m in poincare_polynomial(w).items()})

# when <w> is not divisible by every w_i the degrees stop being integers
v = make_weights((1, 1, 3))
print()
print(f"w = {v.entries} Gorenstein? {is_gorenstein(v)}")
print("degrees:", [str(model_degree(v, j)) for j in range(v.total)])
print("Poincare polynomial:", {str(k): m for k, m in poincare_polynomial(v).items()})
