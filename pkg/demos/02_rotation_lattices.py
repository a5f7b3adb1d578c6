"""
Rotation lattices on binary trees
=================================

Plane binary trees of a fixed size, ordered by right rotations
(A (B C)) -> ((A B) C), form a lattice.  This script enumerates trees,
inspects canopies and left-border decompositions, and tabulates the
interval statistics that the rest of the package enumerates exactly.
"""

from intervalence import (
    canopy,
    composition,
    encode,
    enumerate_trees,
    interval_canopy_word,
    interval_statistics,
    interval_valence_polynomial,
    is_synchronous,
    left_border_factors,
    tamari_lattice,
)
from intervalence.tamari import stats_to_csv

# ----------------------------------------------------------------------
# Trees are nested pairs with None as the leaf; the text encoding writes a
# leaf as "o".  Size 3 gives the five trees below, indexed in text order.

for i, t in enumerate(enumerate_trees(3)):
    print(i, encode(t), "canopy", canopy(t), "composition", composition(t))

# ----------------------------------------------------------------------
# The lattice itself is a concrete poset on those indices.  Size 3 is the
# pentagon; the right comb is the minimum and the left comb the maximum.

lat = tamari_lattice(3)
print("\ncovers:", list(lat.poset.covers))
print("minimum", lat.minimum(), "maximum", lat.maximum())

# ----------------------------------------------------------------------
# The canopy is the word of leaf directions.  Along a cover it changes at
# most one letter, always from L to R -- some rotations leave it unchanged,
# such as the pentagon cover 3 < 1.

for a, b in lat.poset.covers:
    print(f"cover {a} < {b}: {lat.canopies[a]} -> {lat.canopies[b]}")

# Intervals whose endpoints share the canopy are called synchronous; their
# canopy word then uses only the letters LL and RR.
print("\nsynchronous intervals:",
      [(lo, hi) for lo, hi in lat.poset.intervals() if is_synchronous(lat, lo, hi)])
print("word of (4, 2):", interval_canopy_word(lat, 4, 2))

# ----------------------------------------------------------------------
# Cutting a tree along its left spine yields indecomposable factors; their
# sizes form a composition that refines monotonically up the lattice.

t = enumerate_trees(4)[7]
print("\ntree", encode(t))
print("factors:", [encode(f) for f in left_border_factors(t)])

# ----------------------------------------------------------------------
# Every interval carries four cover statistics (dx, dy, dybar, dxbar), the
# longest-chain length q, and the canopy letter counts.  The complete
# record table exports as CSV; the aggregated enumerator is a polynomial.

print("\nper-interval records for size 2:")
print(stats_to_csv(interval_statistics(2)))
print("interval enumerator of size 3:")
print(interval_valence_polynomial(3))
