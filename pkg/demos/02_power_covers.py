"""Power coverings never lower the genus of a genus-three torus bundle.

For each base we print the H_1 rank of a few powers and the certificate that
bounds the rank of the fundamental group below by three.
"""

from torusbundles import Mat2, TorusBundle, genus, power_cover, power_cover_certificate
from torusbundles.bundle import homology
from torusbundles.covers import f_seq

bases = [TorusBundle.sakuma(0, 2), TorusBundle.sakuma(3, 4), TorusBundle.sakuma(2, 2),
         TorusBundle(Mat2(1, 3, 3, 10))]

for M in bases:
    print(f"base {M.monodromy}  genus {genus(M)}")
    for n in range(2, 6):
        total = power_cover(M, n).total
        cert = power_cover_certificate(M, n)
        extra = f", alpha={cert.alpha}" if cert.alpha is not None else ""
        extra += f", f(n-1)={cert.f_factor}" if cert.f_factor is not None else ""
        print(f"  n={n}: H_1 = {homology(total)!s:22s} genus {genus(total)}  "
              f"[{cert.method}: {cert.case}{extra}]")

# The integer sequence f controls A^n - I for Sakuma forms; it grows quickly once |ab| >= 6.
print("f(n) for ab = 6:", [f_seq(6, n) for n in range(0, 10)])
