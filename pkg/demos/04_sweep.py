"""
Sweeping many weight vectors
============================

The verifier scales to every weight vector in a box.  We also look for weight
vectors whose model degrees are all integers, and compare that list with the
Gorenstein ones.
"""

import itertools
import time

from orbifold_ring import is_gorenstein, make_weights, model_degree, verify_sweep

# every ordered vector of length 1..3 with entries at most 5
start = time.perf_counter()
report = verify_sweep(max_n=2, max_weight=5)
print(report.summary())
print(f"{len(report.failures)} failures in {time.perf_counter() - start:.1f}s")

# Gorenstein weights always give integer degrees.  Does the converse hold in a
# small box?  This is an observation, nothing is claimed beyond the box.
integral, gorenstein = set(), set()
for length in range(1, 5):
    for raw in itertools.combinations_with_replacement(range(1, 9), length):
        w = make_weights(raw)
        if all(model_degree(w, j).denominator == 1 for j in range(w.total)):
            integral.add(raw)
        if is_gorenstein(w):
            gorenstein.add(raw)

print(f"{len(gorenstein)} Gorenstein, {len(integral)} with integer degrees")
print("integer degrees but not Gorenstein:", sorted(integral - gorenstein) or "none")
