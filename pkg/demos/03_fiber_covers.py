"""Fiber coverings: sublattices invariant under the monodromy.

A covering of the fiber torus extends over the bundle exactly when the
monodromy preserves the corresponding lattice; the covering bundle's
monodromy is the monodromy written in a basis of that lattice.
"""

from torusbundles import Lattice, Mat2, TorusBundle, construct_lowering_cover, find_genus_lowering, genus
from torusbundles.covers import restrict_monodromy

A = Mat2(1, 2, 0, 1)
L = Lattice.from_basis((2, 0), (0, 1))
print(f"{A} restricted to {L}: {restrict_monodromy(A, L)}")

# Genus-lowering covers of M_{2,2}: search every lattice of small index.
M = TorusBundle(Mat2(-1, -2, 2, 3))
for cover in find_genus_lowering(M, 8):
    print(f"{cover.sheets:2d} sheets  {cover.lattice}  ->  {cover.lifted.monodromy}"
          f"  genus {genus(M)} -> {genus(cover.lifted)}")

# The explicit family [[-1,-k],[a,ak-1]] covered by M_{1,ak}.
for a, k, m in [(2, 2, 1), (4, 3, 2), (3, 2, 1)]:
    cover = construct_lowering_cover(a, k, m, verify=False)
    print(f"a={a} k={k} m={m}: {cover.base.monodromy} <- {cover.lifted.monodromy}, "
          f"genus {genus(cover.base)} -> {genus(cover.lifted)}")
print("(a=3, k=2 starts from M_{3,2} = M_{1,6}, which already has genus two.)")

# A base that is not a double branched cover can still be covered by a genus-two bundle:
# the Heisenberg nilmanifold 3-fold covers the bundle with monodromy [[1,3],[0,1]].
for cover in find_genus_lowering(TorusBundle(Mat2(1, 3, 0, 1)), 3):
    print(f"{cover.base.monodromy} <- {cover.lifted.monodromy} via {cover.lattice}")
