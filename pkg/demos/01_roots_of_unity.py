"""
Roots of unity attached to a weight vector
==========================================

Every weight w_i contributes its w_i-th roots of unity.  Listing all of them
with multiplicity, sorted by argument, gives the enumeration used throughout
the package.
"""

from orbifold_ring import (
    age, fixed_set, k_max, k_min, make_weights, sector_enumeration,
    twisted_sectors, unity,
)

w = make_weights((1, 2, 3))
print(f"w = {w.entries}: n = {w.n}, |w| = {w.total}, <w> = {w.product}")

# the enumeration, with the weight each root came from
s = sector_enumeration(w)
for j, (arg, origin) in enumerate(s):
    print(f"  s({j}) = exp(2 pi i * {arg})   from w_{origin} = {w[origin]}")

# each distinct root is a twisted sector: its fixed set, age, and the window
# of consecutive indices where it appears in the enumeration
print()
for g in twisted_sectors(w):
    print(f"  gamma = {g}: I = {sorted(fixed_set(g, w))}, age = {age(g, w)}, "
          f"window = [{k_min(g, w)}, {k_max(g, w)}]")

# k_min also makes sense for roots that are not sectors: it counts how many
# enumerated roots lie strictly below
print()
print("k_min(1/6) =", k_min(unity(1, 6), w), "  k_min(5/6) =", k_min(unity(5, 6), w))
