"""Power coverings and fiber coverings of torus bundles.

A power covering of ``M_A`` with ``n`` sheets is ``M_{A^n}``.  A covering of
fibers corresponds to a finite-index sublattice ``L`` of the fiber group with
``A L = L``; the covering bundle is ``M_B`` where ``B`` is ``A`` written in a
basis of ``L``.

The f-sequence helpers (:func:`f_seq`, :func:`geom_sum`,
:func:`closed_form_check`) reproduce the integer identities behind the fact
that power coverings never lower genus, and :func:`power_cover_certificate`
reports which rank bound certifies genus three for a given power.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .bundle import (
    TorusBundle,
    first_invariant_factor,
    genus,
    homology,
    sakuma_matrix,
    sakuma_pairs,
)
from .fox import rank3_certificate
from .intlat import IDENTITY, Lattice, Mat2, conjugate_gl2z, mat_pow, sublattices

__all__ = [
    "PowerCover",
    "FiberCover",
    "FClosedForm",
    "LatticeNotInvariant",
    "power_cover",
    "f_seq",
    "f_closed_form",
    "closed_form_check",
    "geom_sum",
    "power_formula",
    "geom_sum_formula",
    "extends",
    "restrict_monodromy",
    "restrict_by_change_of_basis",
    "fiber_cover",
    "find_genus_lowering",
    "construct_lowering_cover",
    "PowerCertificate",
    "power_cover_certificate",
]


class LatticeNotInvariant(ValueError):
    """Raised when the monodromy does not preserve the sublattice."""


@dataclass(frozen=True)
class PowerCover:
    base: TorusBundle
    sheets: int
    total: TorusBundle


@dataclass(frozen=True)
class FiberCover:
    base: TorusBundle
    lattice: Lattice
    lifted: TorusBundle

    @property
    def sheets(self) -> int:
        return self.lattice.index

    def lowers_genus(self) -> bool:
        return genus(self.lifted) < genus(self.base)


def power_cover(M: TorusBundle, n: int) -> PowerCover:
    if n < 1:
        raise ValueError("a power covering needs at least one sheet")
    return PowerCover(M, n, TorusBundle(mat_pow(M.monodromy, n)))


# ---------------------------------------------------------------------------
# the f-sequence
# ---------------------------------------------------------------------------

def f_seq(ab: int, n: int) -> int:
    """``f(-1) = 0``, ``f(0) = f(1) = 1``; then ``f(n) = f(n-1) - f(n-2)`` for
    odd ``n`` and ``ab f(n-1) - f(n-2)`` for even ``n``.
    """
    if n < -1:
        raise ValueError("f is defined for n >= -1")
    return _f_table(ab, n)[n + 1]


@lru_cache(maxsize=256)
def _f_table(ab: int, n: int) -> tuple[int, ...]:
    vals = [0, 1, 1]  # f(-1), f(0), f(1)
    for k in range(2, n + 1):
        prev, prev2 = vals[-1], vals[-2]
        vals.append(prev - prev2 if k % 2 else ab * prev - prev2)
    return tuple(vals[: n + 2])


@dataclass(frozen=True)
class FClosedForm:
    """Roots of ``1 + (2 - ab) t + t^2``; ``phi`` is the larger one."""

    ab: int
    phi: float
    phihat: float

    @classmethod
    def for_product(cls, ab: int) -> "FClosedForm":
        if abs(ab) < 6:
            raise ValueError("the closed form needs |ab| >= 6 (distinct real roots)")
        s = ab - 2
        root = math.sqrt(s * s - 4)
        return cls(ab, (s + root) / 2, (s - root) / 2)

    def value(self, n: int) -> float:
        p, q = self.phi, self.phihat

        def h(k):  # complete homogeneous sum of degree k-1 in p, q
            return (q ** k - p ** k) / (q - p)

        k, odd = divmod(n, 2)
        return h(k + 1) if odd else h(k) + h(k + 1)


def f_closed_form(ab: int, n: int) -> float:
    return FClosedForm.for_product(ab).value(n)


def closed_form_check(ab: int, n: int, tol: float) -> bool:
    """Compare the floating-point closed form of ``f(n)`` against the recurrence."""
    exact = f_seq(ab, n)
    approx = f_closed_form(ab, n)
    return abs(approx - exact) <= tol * max(abs(exact), 1)


def geom_sum(A: Mat2, n: int) -> Mat2:
    """``I + A + ... + A^n``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    total, power = IDENTITY, IDENTITY
    for _ in range(n):
        power = power @ A
        total = total + power
    return total


def power_formula(a: int, b: int, n: int) -> Mat2:
    """Closed form of ``M_{a,b}^n`` in terms of f."""
    f = lambda k: f_seq(a * b, k)
    return Mat2(-f(2 * n - 2), -a * f(2 * n - 1), b * f(2 * n - 1), f(2 * n))


def geom_sum_formula(a: int, b: int, n: int) -> Mat2:
    """Closed form of ``I + A + ... + A^n`` for ``A = M_{a,b}``, ``n >= 1``."""
    ab = a * b
    f = lambda k: f_seq(ab, k)
    if n % 2:
        inner = Mat2(-ab * f(n - 2), -a * f(n - 1), b * f(n - 1), ab * f(n))
    else:
        inner = Mat2(-f(n - 2), -a * f(n - 1), b * f(n - 1), f(n))
    return inner * f(n)


# ---------------------------------------------------------------------------
# fiber coverings
# ---------------------------------------------------------------------------

def extends(M: TorusBundle | Mat2, L: Lattice) -> bool:
    """True iff the monodromy maps both basis vectors of ``L`` into ``L``."""
    A = M.monodromy if isinstance(M, TorusBundle) else M
    return all(L.contains(A.apply(v)) for v in L.basis)


def _det(a, b, c, d):
    return a * d - b * c


def restrict_monodromy(M: TorusBundle | Mat2, L: Lattice) -> Mat2:
    """The monodromy of the fiber covering given by ``L``.

    With ``a1 = x^p y^q`` and ``a2 = x^s y^r`` the basis of ``L`` and ``n`` its
    index, each entry is a 2x2 determinant divided by ``n``.
    """
    A = M.monodromy if isinstance(M, TorusBundle) else M
    if not extends(A, L):
        raise LatticeNotInvariant(f"lattice {L} is not invariant under {A}")
    (p, q), (s, r) = L.basis
    al, be, ga, de = A.entries()
    n = L.index
    u1, u2 = p * al + q * be, p * ga + q * de
    w1, w2 = s * al + r * be, s * ga + r * de
    nums = (_det(u1, s, u2, r), _det(w1, s, w2, r),
            _det(p, u1, q, u2), _det(p, w1, q, w2))
    if any(x % n for x in nums):
        raise ArithmeticError(f"non-integral restriction of {A} to {L}")
    return Mat2(*(x // n for x in nums))


def restrict_by_change_of_basis(A: Mat2, L: Lattice) -> Mat2:
    """``P^-1 A P`` with ``P`` the basis matrix of ``L`` (independent check)."""
    P = L.basis_matrix()
    num = P.adjugate() @ A @ P
    n = P.det()
    if any(x % n for x in num.entries()):
        raise LatticeNotInvariant(f"lattice {L} is not invariant under {A}")
    return Mat2(*(x // n for x in num.entries()))


def fiber_cover(M: TorusBundle, L: Lattice) -> FiberCover:
    return FiberCover(M, L, TorusBundle(restrict_monodromy(M, L)))


def find_genus_lowering(M: TorusBundle, max_sheets: int) -> list[FiberCover]:
    """Every fiber covering with at most ``max_sheets`` sheets that lowers genus.

    Searches all sublattices, not only the shapes predicted by theory.
    """
    if max_sheets < 1:
        raise ValueError("max_sheets must be positive")
    base_genus = genus(M)
    found = []
    for n in range(1, max_sheets + 1):
        for L in sublattices(n):
            if not extends(M, L):
                continue
            cover = fiber_cover(M, L)
            if genus(cover.lifted) < base_genus:
                found.append(cover)
    return sorted(found, key=lambda c: (c.lattice.index, c.lattice))


def construct_lowering_cover(a: int, k: int, m: int, verify: bool = True) -> FiberCover:
    """Explicit fiber covering of ``[[-1, -k], [a, ak - 1]]`` by ``M_{1, ak}``.

    The lattice is ``<(n, 0), (-rho, m)>`` with ``n = k m`` and ``rho`` the
    smallest admissible non-negative value.  With ``verify`` the genus drop
    3 -> 2 is checked and a ``ValueError`` raised when it does not occur.
    """
    if abs(a) < 2 or k < 2 or m < 1:
        raise ValueError("need |a| >= 2, k >= 2 and m >= 1")
    n = k * m
    A = Mat2(-1, -k, a, a * k - 1)
    base = TorusBundle(A)
    for rho in range(0, n, m):
        L = Lattice.from_basis((n, 0), (-rho, m))
        if extends(A, L):
            break
    else:  # pragma: no cover - rho = 0 always works for this family
        raise ValueError("no admissible rho")
    cover = fiber_cover(base, L)
    if verify:
        g_base, g_lift = genus(base), genus(cover.lifted)
        if (g_base, g_lift) != (3, 2):
            raise ValueError(
                f"covering of {A} by {cover.lifted.monodromy} has genus {g_base} -> {g_lift}, "
                "not a genus drop 3 -> 2")
    return cover


# ---------------------------------------------------------------------------
# genus certificates for power coverings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PowerCertificate:
    """How the rank lower bound 3 for ``M_{A^n}`` is certified.

    ``method`` is ``"homology"`` (H_1 has rank 3) or ``"fox"`` (the Fox
    Jacobian of ``[[-1, -alpha], [0, -1]]`` dies mod ``alpha``).  ``case``
    names the branch of the case split that applies.
    """

    case: str
    method: str
    valid: bool
    homology_rank: int
    alpha: Optional[int] = None
    f_factor: Optional[int] = None


def power_cover_certificate(M: TorusBundle, n: int) -> PowerCertificate:
    """Certify ``rank pi_1(M_{A^n}) >= 3`` for a genus-three base and ``n >= 2``."""
    if n < 2:
        raise ValueError("power certificates concern n >= 2")
    if genus(M) != 3:
        raise ValueError("certificates are for genus-three bases")
    An = mat_pow(M.monodromy, n)
    h_rank = homology(TorusBundle(An)).rank
    if first_invariant_factor(M) not in (1, 2):
        return PowerCertificate("not double branched", "homology", h_rank == 3, h_rank)
    a, b = _sakuma_representative(M)
    if a == 0 and b == 0:
        return PowerCertificate("a = b = 0", "homology", h_rank == 3, h_rank)
    if a == 0 or b == 0:
        c = a or b
        if n % 2 == 0:
            return PowerCertificate("one of a, b zero, n even", "homology", h_rank == 3, h_rank)
        alpha = n * c
        target = Mat2(-1, -alpha, 0, -1)
        if conjugate_gl2z(An, target) is None:
            alpha = -alpha
            target = Mat2(-1, -alpha, 0, -1)
        ok = conjugate_gl2z(An, target) is not None and rank3_certificate(alpha)
        return PowerCertificate("one of a, b zero, n odd", "fox", ok, h_rank, alpha=alpha)
    if a % 2 == 0 and b % 2 == 0:
        return PowerCertificate("a, b both even", "homology", h_rank == 3, h_rank)
    # A^n - I = (A - I)(I + ... + A^(n-1)), and the sum is f(n-1) times an integer matrix
    factor = f_seq(a * b, n - 1)
    A = sakuma_matrix(a, b)
    assert geom_sum(A, n - 1) == geom_sum_formula(a, b, n - 1)
    return PowerCertificate("|a|, |b| >= 2", "homology", h_rank == 3, h_rank, f_factor=factor)


def _sakuma_representative(M: TorusBundle) -> tuple[int, int]:
    pairs = sakuma_pairs(M)
    if not pairs:
        raise ValueError(f"{M} is not a double branched cover")
    return min(pairs, key=lambda p: (abs(p[0]) + abs(p[1]), p))
