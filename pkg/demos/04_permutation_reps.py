"""Transitive permutation representations of the torus and bundle groups."""

import random

from torusbundles import Mat2, Perm, TorusRep, classify_rep, covering_lattice, factor_bundle_rep, omega_rep
from torusbundles.intlat import Lattice
from torusbundles.permrep import coset_bundle_rep, random_relabel

r = omega_rep(2, 8, 4, 1)
print("omega(2,8,4,rho=2):")
print("  a ->", r.sigma)
print("  b ->", r.tau)

# Scramble the labels and recover the parameters together with a relabelling.
images = list(range(1, 17))
random.Random(1).shuffle(images)
scrambled = r.conjugate_by(Perm(images))
c = classify_rep(scrambled)
print(f"classified as m={c.m} n={c.n} d={c.d} rho={c.rho}; "
      f"relabelling reproduces omega: {scrambled.conjugate_by(c.conjugator) == r}")
print("covering lattice:", covering_lattice(c.m, c.n, c.rho))

eps = Perm.cycle(12)
c = classify_rep(TorusRep(eps, eps ** 8))
print(f"cyclic example: m={c.m} n={c.n} d={c.d} rho={c.rho}")

# A bundle covering built as a 3-fold power covering followed by a fiber covering.
A = Mat2(2, 1, 1, 1)
rep = random_relabel(coset_bundle_rep(A, 3, Lattice(2, 0, 1)), random.Random(4))
f = factor_bundle_rep(rep)
print(f"degree {rep.degree}: {f.m} blocks of size {f.block_size}; blocks permuted by t as {f.q_images[2]}")
print(f"fiber part on block 1: x -> {f.gamma.sx}, y -> {f.gamma.sy}, t^{f.m} -> {f.gamma.st}")
