"""Orientable torus bundles ``M_A`` and their classical invariants.

The monodromy ``A = [[alpha, beta], [gamma, delta]]`` acts on the fiber group
by ``x -> x^alpha y^gamma`` and ``y -> x^beta y^delta``.  The invariants
below follow Sakuma's classification: homology from the Smith form of
``A - I``, the double-branched-cover test, the ``{a, b}`` pairs of the normal
form ``[[-1, -a], [b, ab - 1]]`` and the genus-two criterion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .intlat import AbelianGroupDecomp, IDENTITY, Mat2, cokernel, conjugate_gl2z, snf

__all__ = [
    "TorusBundle",
    "sakuma_matrix",
    "homology",
    "is_double_branched",
    "sakuma_pairs",
    "genus",
    "homeomorphic",
]


@dataclass(frozen=True)
class TorusBundle:
    """Mapping torus of an orientation-preserving torus homeomorphism."""

    monodromy: Mat2

    def __post_init__(self):
        if self.monodromy.det() != 1:
            raise ValueError(f"monodromy {self.monodromy} must have determinant 1")

    @classmethod
    def sakuma(cls, a: int, b: int) -> "TorusBundle":
        """``M_{a,b}``, the bundle with monodromy ``[[-1, -a], [b, ab - 1]]``."""
        return cls(sakuma_matrix(a, b))

    def __str__(self) -> str:
        return f"M[{self.monodromy}]"


def sakuma_matrix(a: int, b: int) -> Mat2:
    return Mat2(-1, -a, b, a * b - 1)


def _monodromy(M: TorusBundle | Mat2) -> Mat2:
    return M.monodromy if isinstance(M, TorusBundle) else M


def homology(M: TorusBundle) -> AbelianGroupDecomp:
    """``H_1(M_A) = Z + coker(A - I)``."""
    coker = cokernel(_monodromy(M) - IDENTITY)
    return AbelianGroupDecomp(coker.free_rank + 1, coker.torsion)


def first_invariant_factor(M: TorusBundle) -> int:
    """``n_1``, the first Smith entry of ``A - I`` (0 when ``A = I``)."""
    return snf(_monodromy(M) - IDENTITY).D[0]


def is_double_branched(M: TorusBundle) -> bool:
    return first_invariant_factor(M) in (1, 2)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def sakuma_pairs(M: TorusBundle) -> set[tuple[int, int]]:
    """All ``{a, b}`` (as sorted tuples) with ``A`` conjugate to ``M_{a,b}``'s monodromy.

    Every pair has ``a * b = tr(A) + 2``.  When that product is zero the
    candidates form an infinite family; ``-A`` is then parabolic and its
    content ``k`` pins the pairs down to ``{0, k}`` and ``{0, -k}``.
    """
    A = _monodromy(M)
    target = A.trace() + 2
    if target == 0:
        k = (A + IDENTITY).content()
        candidates = {(0, k), (0, -k)}
    else:
        candidates = set()
        for d in _divisors(target):
            for a in (d, -d):
                candidates.add(tuple(sorted((a, target // a))))
    return {pair for pair in candidates
            if conjugate_gl2z(A, sakuma_matrix(*pair)) is not None}


def genus(M: TorusBundle) -> int:
    """Heegaard genus: 2 when ``A`` or ``A^-1`` is conjugate to
    ``[[-1, -1], [b, b - 1]]`` with ``b = tr(A) + 2``, otherwise 3.
    """
    A = _monodromy(M)
    form = sakuma_matrix(1, A.trace() + 2)
    if conjugate_gl2z(A, form) is not None or conjugate_gl2z(A.inverse(), form) is not None:
        return 2
    return 3


def homeomorphic(M1: TorusBundle, M2: TorusBundle) -> bool:
    A1, A2 = _monodromy(M1), _monodromy(M2)
    return (conjugate_gl2z(A1, A2) is not None
            or conjugate_gl2z(A1, A2.inverse()) is not None)
