"""
Flag complexes with pure resolutions
====================================

A flag complex with a pure resolution is 1-Leray, a cycle joined with a
simplex, or a cross-polytope boundary joined with a simplex.  We classify a
few examples and then certify the statement for every graph on up to six
vertices.
"""

from facering import classify_flag, cross_polytope_boundary, cycle, pure_flag_exhaustive, simplex
from facering.complex import path

for name, cx in [("path(4)", path(4)), ("cycle(4)", cycle(4)), ("cycle(6)", cycle(6)),
                 ("octahedron", cross_polytope_boundary(3)), ("cycle(5) * edge", cycle(5).join(simplex(1)))]:
    c = classify_flag(cx)
    print(f"{name:>16}: {c.describe()} {c.note}")

# %%
# Exhaustive certification over clique complexes of all graphs on <= 6 vertices.
rec = pure_flag_exhaustive(6)
print(rec.complexes_checked, "flag complexes;", rec.pure, "pure;", rec.categories)
print("certified:", rec.certified)
