"""
Betti tables and shift sequences
================================

Graded Betti numbers of a Stanley-Reisner ring come from the reduced homology
of induced subcomplexes.  This script builds a few complexes, prints their
Betti tables, and reads off the minimal and maximal shifts.
"""

from facering import betti_table, cycle, cross_polytope_boundary, example_seven, shift_profile
from facering.complex import from_facets

# %%
# The 4-cycle: two quadrics and one syzygy in degree 4.
square = cycle(4)
print(betti_table(square).format())
print("shifts:", shift_profile(square).M)

# %%
# The seven-vertex 2-complex has a pure resolution, so every row of its
# resolution lives in a single degree.
ex7 = example_seven()
prof = shift_profile(ex7)
print(betti_table(ex7).format())
print("m =", prof.m, "M =", prof.M, "upper skips", prof.upper_skips)

# %%
# Maximal shifts must increase up to the codimension but not past it:
# a hollow triangle plus an isolated vertex stalls at (3, 4, 4).
stall = from_facets(4, [(0, 1), (1, 2), (0, 2), (3,)])
print("codim", stall.codim, "M =", shift_profile(stall).M)

# %%
# The octahedron is a flag sphere; its resolution is pure and symmetric.
print(betti_table(cross_polytope_boundary(3)).format())
