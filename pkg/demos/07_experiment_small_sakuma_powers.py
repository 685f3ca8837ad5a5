"""Experiment: genus of power coverings of M_{1,b}.

For |b| >= 6 the powers keep genus three.  For small |b| the monodromy can be
periodic or parabolic, so we simply compute what happens.
"""

from torusbundles import TorusBundle, genus, power_cover
from torusbundles.bundle import homology

print("b   " + "  ".join(f"n={n}" for n in range(1, 9)))
for b in [-6, -5, -4, -3, -2, 0, 2, 3, 4, 5, 6, 7]:
    M = TorusBundle.sakuma(1, b)
    genera = [genus(power_cover(M, n).total) for n in range(1, 9)]
    ranks = [homology(power_cover(M, n).total).rank for n in range(1, 9)]
    print(f"{b:3d} " + "  ".join(f"{g}({r})" for g, r in zip(genera, ranks)))
print("entries: genus(H_1 rank)")
