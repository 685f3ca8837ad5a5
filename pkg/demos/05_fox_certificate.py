"""Fox derivatives of the bundle presentation and the rank-three certificate."""

from torusbundles.fox import EvalSpec, GENERATORS, bundle_relators, evaluate, format_word, jacobian, rank3_certificate

alpha = 4
spec = EvalSpec.standard(alpha)
print(f"presentation relators for alpha={alpha}:", [format_word(r) for r in bundle_relators(alpha)])
for r, row in zip(bundle_relators(alpha), jacobian(alpha)):
    for g, d in zip(GENERATORS, row):
        print(f"  d/d{g} {format_word(r):10s} = {str(d):40s} -> {evaluate(d, spec)} mod {alpha}")

print("certificate holds for 2 <= |alpha| <= 10:",
      all(rank3_certificate(a) for a in range(-10, 11) if abs(a) >= 2))
