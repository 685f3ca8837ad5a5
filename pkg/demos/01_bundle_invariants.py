"""Walk through the classical invariants of a few torus bundles."""

from torusbundles import Mat2, TorusBundle, genus, homeomorphic, homology, sakuma_pairs
from torusbundles.bundle import first_invariant_factor

# A monodromy matrix sends x to x^a y^c and y to x^b y^d: its columns are images.
examples = {
    "3-torus": Mat2(1, 0, 0, 1),
    "Heisenberg nilmanifold": Mat2(1, 1, 0, 1),
    "cat map": Mat2(2, 1, 1, 1),
    "M_{2,2}": TorusBundle.sakuma(2, 2).monodromy,
    "not a double branched cover": Mat2(1, 3, 3, 10),
}

for name, A in examples.items():
    M = TorusBundle(A)
    print(f"{name:28s} A = {A}")
    print(f"{'':28s} H_1 = {homology(M)},  n_1 = {first_invariant_factor(M)}")
    print(f"{'':28s} Sakuma pairs {sorted(sakuma_pairs(M))},  genus {genus(M)}")

# The one coincidence among Sakuma forms: M_{1,6} and M_{2,3} are the same manifold.
print("M_{1,6} ~ M_{2,3}:", homeomorphic(TorusBundle.sakuma(1, 6), TorusBundle.sakuma(2, 3)))
print("M_{1,2} ~ M_{2,2}:", homeomorphic(TorusBundle.sakuma(1, 2), TorusBundle.sakuma(2, 2)))
