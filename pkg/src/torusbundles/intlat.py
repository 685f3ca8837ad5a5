"""Exact integer linear algebra for 2x2 monodromies and lattices in Z^2.

Everything here works on Python ints, so entries never overflow.  The
module provides

* :class:`Mat2`, an immutable 2x2 integer matrix,
* :func:`snf`, the Smith normal form of a small square integer matrix,
* :class:`Lattice` and :func:`sublattices` for finite-index subgroups of Z^2,
* :func:`conjugate_gl2z`, a complete GL(2,Z) conjugacy decision with an
  explicit conjugator, and :func:`conjugate_bounded_oracle`, a brute-force
  search used to cross-check it.

Vectors are exponent pairs ``(i, j)`` standing for ``x^i y^j``.  A matrix acts
on column vectors, so column ``k`` of a monodromy is the image of the k-th
generator of the torus group.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

__all__ = [
    "Mat2",
    "SmithDecomposition",
    "AbelianGroupDecomp",
    "Lattice",
    "snf",
    "mat_pow",
    "sublattices",
    "divisor_sum",
    "cokernel",
    "normal_form",
    "conjugate_gl2z",
    "conjugate_bounded_oracle",
    "IDENTITY",
]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, u, v)`` with ``u*a + v*b == g == gcd(a, b) >= 0``."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


@dataclass(frozen=True)
class Mat2:
    """2x2 integer matrix ``[[e11, e12], [e21, e22]]``."""

    e11: int
    e12: int
    e21: int
    e22: int

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Mat2":
        (a, b), (c, d) = rows
        return cls(int(a), int(b), int(c), int(d))

    @classmethod
    def from_columns(cls, col1: Sequence[int], col2: Sequence[int]) -> "Mat2":
        return cls(int(col1[0]), int(col2[0]), int(col1[1]), int(col2[1]))

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1, 0, 0, 1)

    @classmethod
    def scalar(cls, k: int) -> "Mat2":
        return cls(k, 0, 0, k)

    @property
    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.e11, self.e12), (self.e21, self.e22))

    @property
    def columns(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.e11, self.e21), (self.e12, self.e22))

    def entries(self) -> tuple[int, int, int, int]:
        return (self.e11, self.e12, self.e21, self.e22)

    def det(self) -> int:
        return self.e11 * self.e22 - self.e12 * self.e21

    def trace(self) -> int:
        return self.e11 + self.e22

    def content(self) -> int:
        """gcd of the four entries (0 for the zero matrix)."""
        return math.gcd(self.e11, self.e12, self.e21, self.e22)

    def is_unimodular(self) -> bool:
        return self.det() in (1, -1)

    def is_scalar(self) -> bool:
        return self.e12 == 0 and self.e21 == 0 and self.e11 == self.e22

    def adjugate(self) -> "Mat2":
        return Mat2(self.e22, -self.e12, -self.e21, self.e11)

    def transpose(self) -> "Mat2":
        return Mat2(self.e11, self.e21, self.e12, self.e22)

    def inverse(self) -> "Mat2":
        d = self.det()
        if d not in (1, -1):
            raise ValueError(f"matrix {self} is not unimodular (det {d})")
        adj = self.adjugate()
        return adj if d == 1 else -adj

    def apply(self, v: Sequence[int]) -> tuple[int, int]:
        x, y = v
        return (self.e11 * x + self.e12 * y, self.e21 * x + self.e22 * y)

    def __matmul__(self, other: "Mat2") -> "Mat2":
        if not isinstance(other, Mat2):
            return NotImplemented
        a, b, c, d = self.entries()
        p, q, r, s = other.entries()
        return Mat2(a * p + b * r, a * q + b * s, c * p + d * r, c * q + d * s)

    def __mul__(self, k: int) -> "Mat2":
        if isinstance(k, Mat2):
            return self @ k
        return Mat2(self.e11 * k, self.e12 * k, self.e21 * k, self.e22 * k)

    __rmul__ = __mul__

    def __add__(self, other: "Mat2") -> "Mat2":
        return Mat2(self.e11 + other.e11, self.e12 + other.e12,
                    self.e21 + other.e21, self.e22 + other.e22)

    def __sub__(self, other: "Mat2") -> "Mat2":
        return Mat2(self.e11 - other.e11, self.e12 - other.e12,
                    self.e21 - other.e21, self.e22 - other.e22)

    def __neg__(self) -> "Mat2":
        return Mat2(-self.e11, -self.e12, -self.e21, -self.e22)

    def __pow__(self, k: int) -> "Mat2":
        return mat_pow(self, k)

    def __str__(self) -> str:
        return f"{self.e11},{self.e12};{self.e21},{self.e22}"

    def tolist(self) -> list[list[int]]:
        return [[self.e11, self.e12], [self.e21, self.e22]]


IDENTITY = Mat2.identity()
_S = Mat2(0, -1, 1, 0)
_J = Mat2(0, 1, 1, 0)


def mat_pow(A: Mat2, k: int) -> Mat2:
    """Exact ``A**k`` by repeated squaring; negative ``k`` needs det = +-1."""
    if k < 0:
        A = A.inverse()
        k = -k
    result = IDENTITY
    base = A
    while k:
        if k & 1:
            result = result @ base
        base = base @ base
        k >>= 1
    return result


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ M @ V == diag(D)`` with U, V unimodular and ``D[i] | D[i+1]``."""

    U: tuple[tuple[int, ...], ...]
    V: tuple[tuple[int, ...], ...]
    D: tuple[int, ...]



def snf(M: Sequence[Sequence[int]] | Mat2) -> SmithDecomposition:
    """Smith normal form of a square integer matrix.

    Returns unimodular ``U``, ``V`` and non-negative diagonal entries
    ``t_1 | t_2 | ... | t_m`` (zeros last) with ``U @ M @ V = diag(t)``.
    """
    if isinstance(M, Mat2):
        M = M.tolist()
    a = [[int(x) for x in row] for row in M]
    m = len(a)
    if any(len(row) != m for row in a):
        raise ValueError("snf expects a square matrix")
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(m)] for i in range(m)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):  # row dst += k * row src
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        U[dst] = [x + k * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, k):  # col dst += k * col src
        for row in a:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]

    for t in range(m):
        while True:
            nonzero = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, m) if a[i][j]]
            if not nonzero:
                break
            _, pi, pj = min(nonzero)
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(t, i, -(a[i][t] // p))
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, m):
                if a[t][j]:
                    add_col(t, j, -(a[t][j] // p))
                    dirty = dirty or a[t][j] != 0
            if dirty:
                continue
            # pivot must divide the rest of the block
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, m)
                        if a[i][j] % p), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]
    return SmithDecomposition(
        U=tuple(tuple(r) for r in U),
        V=tuple(tuple(r) for r in V),
        D=tuple(a[i][i] for i in range(m)),
    )


@dataclass(frozen=True)
class AbelianGroupDecomp:
    """Finitely generated abelian group ``Z^free_rank + Z_t1 + ... + Z_tk``."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    @property
    def rank(self) -> int:
        return self.free_rank + len(self.torsion)

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts.extend(f"Z_{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


def cokernel(M: Sequence[Sequence[int]] | Mat2) -> AbelianGroupDecomp:
    """Cokernel of a square integer matrix, read off its Smith form."""
    D = snf(M).D
    return AbelianGroupDecomp(
        free_rank=sum(1 for t in D if t == 0),
        torsion=tuple(t for t in D if t > 1),
    )


# ---------------------------------------------------------------------------
# Sublattices of Z^2
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Lattice:
    """Finite-index subgroup of Z^2 with basis ``(d1, 0)`` and ``(c, d2)``.

    Field order doubles as the canonical sort order ``(d1, c, d2)``.
    """

    d1: int
    c: int
    d2: int

    def __post_init__(self):
        if self.d1 < 1 or self.d2 < 1 or not 0 <= self.c < self.d1:
            raise ValueError(f"not a canonical lattice: d1={self.d1}, c={self.c}, d2={self.d2}")

    @classmethod
    def full(cls) -> "Lattice":
        return cls(1, 0, 1)

    @classmethod
    def from_basis(cls, v1: Sequence[int], v2: Sequence[int]) -> "Lattice":
        """Canonical form of the lattice spanned by two independent vectors."""
        (x1, y1), (x2, y2) = v1, v2
        if x1 * y2 - x2 * y1 == 0:
            raise ValueError("basis vectors are linearly dependent")
        # column operations: gather gcd of the y-coordinates in the second vector
        g, u, v = _xgcd(y1, y2)
        second = (u * x1 + v * x2, g)
        first_x = (y2 // g) * x1 - (y1 // g) * x2
        d1 = abs(first_x)
        return cls(d1, second[0] % d1, g)

    @property
    def index(self) -> int:
        return self.d1 * self.d2

    @property
    def basis(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.d1, 0), (self.c, self.d2))

    def basis_matrix(self) -> Mat2:
        """Matrix whose columns are the basis vectors (the ``(p, s; q, r)`` shape)."""
        return Mat2(self.d1, self.c, 0, self.d2)

    def contains(self, v: Sequence[int]) -> bool:
        x, y = v
        if y % self.d2:
            return False
        return (x - self.c * (y // self.d2)) % self.d1 == 0

    def reduce(self, v: Sequence[int]) -> tuple[int, int]:
        """Canonical representative of ``v`` modulo the lattice."""
        x, y = v
        k = y // self.d2
        x -= k * self.c
        y -= k * self.d2
        return (x % self.d1, y)

    def image(self, A: Mat2) -> "Lattice":
        """The lattice ``A L`` (A must be invertible over Q)."""
        return Lattice.from_basis(*(A.apply(v) for v in self.basis))

    def quotient_type(self) -> tuple[int, int]:
        """``(m, n)`` with ``Z^2 / L = Z_m + Z_n`` and ``m | n``."""
        m, n = snf(self.basis_matrix()).D
        return m, n

    def __str__(self) -> str:
        return f"<({self.d1},0),({self.c},{self.d2})>"


def divisor_sum(n: int) -> int:
    return sum(d for d in range(1, n + 1) if n % d == 0)


def sublattices(n: int) -> list[Lattice]:
    """All sublattices of Z^2 of index ``n``, in canonical order."""
    if n < 1:
        raise ValueError("index must be positive")
    return [Lattice(d1, c, n // d1)
            for d1 in range(1, n + 1) if n % d1 == 0
            for c in range(d1)]


# ---------------------------------------------------------------------------
# GL(2, Z) conjugacy
# ---------------------------------------------------------------------------

def _primitive(v: tuple[int, int]) -> tuple[int, int]:
    g = math.gcd(*v)
    return (v[0] // g, v[1] // g)


def _kernel_vector(N: Mat2) -> tuple[int, int]:
    """Primitive vector spanning the kernel of a rank-1 matrix."""
    if N.e11 or N.e12:
        return _primitive((-N.e12, N.e11))
    return _primitive((-N.e22, N.e21))


def _complete_basis(v: tuple[int, int]) -> Mat2:
    """Unimodular matrix (det 1) whose first column is the primitive vector v."""
    g, u, w = _xgcd(v[0], v[1])
    assert g == 1
    return Mat2(v[0], -w, v[1], u)


def _min_cyclic_vector(A: Mat2) -> tuple[int, int]:
    """Vector minimising |det[v, Av]| for an elliptic A.

    ``det[v, Av]`` is a definite binary quadratic form in v; Lagrange
    reduction of the standard basis finds a minimal vector.
    """
    sign = 1 if A.e21 > 0 else -1

    def q(v):
        x, y = v
        return sign * (A.e21 * x * x + (A.e22 - A.e11) * x * y - A.e12 * y * y)

    u, w = (1, 0), (0, 1)
    while True:
        if q(w) < q(u):
            u, w = w, u
        qu = q(u)
        b = q((u[0] + w[0], u[1] + w[1])) - qu - q(w)
        k = (b + qu) // (2 * qu)
        if k == 0:
            return u
        w = (w[0] - k * u[0], w[1] - k * u[1])


def _max_steps(num: tuple[int, int], den: tuple[int, int]) -> int:
    """Largest k with num - k*den non-negative in both coordinates."""
    return min(x // y for x, y in zip(num, den) if y)


def _peel_word(P: Mat2) -> list[tuple[str, int]]:
    """Run-length word in R, L for a non-negative det-1 matrix."""
    runs: list[tuple[str, int]] = []
    while P != IDENTITY:
        a, b, c, d = P.entries()
        if a >= c and b >= d:
            k = _max_steps((a, b), (c, d))
            P = Mat2(a - k * c, b - k * d, c, d)
            letter = "R"
        elif c >= a and d >= b:
            k = _max_steps((c, d), (a, b))
            P = Mat2(a, b, c - k * a, d - k * b)
            letter = "L"
        else:  # pragma: no cover - excluded by det 1 and non-negativity
            raise AssertionError(f"rows of {P} are not comparable")
        if runs and runs[-1][0] == letter:
            runs[-1] = (letter, runs[-1][1] + k)
        else:
            runs.append((letter, k))
    return runs


def _run_matrix(letter: str, k: int) -> Mat2:
    return Mat2(1, k, 0, 1) if letter == "R" else Mat2(1, 0, k, 1)


def _hyperbolic_normal_form(A: Mat2) -> tuple[Mat2, Mat2, tuple[int, ...]]:
    """Canonical RL-word representative for det 1, trace > 2."""
    t = A.trace()
    h = IDENTITY
    while not (A.e12 > 0 and A.e21 > 0):
        if A.e12 < 0 and A.e21 < 0:
            X = _S
        elif abs(A.e21) <= abs(A.e12):
            # conjugating by R^k moves e11 by k*e21; centre it on t/2
            c = A.e21
            k0 = (t - 2 * A.e11) // (2 * c)
            k = min((k0, k0 + 1), key=lambda k: abs(2 * (A.e11 + k * c) - t))
            X = Mat2(1, k, 0, 1)
        else:
            b = A.e12
            k0 = (2 * A.e11 - t) // (2 * b)
            k = min((k0, k0 + 1), key=lambda k: abs(2 * (A.e11 - k * b) - t))
            X = Mat2(1, 0, k, 1)
        A = X @ A @ X.inverse()
        h = X @ h

    runs = _peel_word(A)
    if runs[0][0] == runs[-1][0]:
        X = _run_matrix(*runs[-1])
        A = X @ A @ X.inverse()
        h = X @ h
        runs = [(runs[0][0], runs[0][1] + runs[-1][1])] + runs[1:-1]
    exps = tuple(k for _, k in runs)
    best = None
    for j in range(len(exps)):
        rot = exps[j:] + exps[:j]
        starts_with = runs[j][0]
        if best is None or rot < best[0]:
            best = (rot, j, starts_with)
    rot, j, starts_with = best
    prefix = IDENTITY
    for letter, k in runs[:j]:
        prefix = prefix @ _run_matrix(letter, k)
    g = prefix.inverse() @ h
    if starts_with != "R":
        g = _J @ g
    N = IDENTITY
    for i, k in enumerate(rot):
        N = N @ _run_matrix("R" if i % 2 == 0 else "L", k)
    return N, g, rot


def normal_form(A: Mat2) -> tuple[Mat2, Mat2]:
    """Canonical representative ``N`` of the GL(2,Z) class of ``A`` and
    a unimodular ``g`` with ``g A g^-1 = N``.
    """
    d = A.det()
    if d not in (1, -1):
        raise ValueError(f"matrix {A} is not unimodular")
    if A.is_scalar():
        return A, IDENTITY
    t = A.trace()
    if d == 1:
        if t < -2:
            N, g = normal_form(-A)
            return -N, g
        if t > 2:
            N, g, _ = _hyperbolic_normal_form(A)
            return N, g
        if abs(t) == 2:
            eps = 1 if t == 2 else -1
            v = _kernel_vector(A - Mat2.scalar(eps))
            basis = _complete_basis(v)
            g = basis.inverse()
            N = g @ A @ basis
            if N.e12 * eps < 0:
                flip = Mat2(1, 0, 0, -1)
                g = flip @ g
                N = flip @ N @ flip
            return N, g
        # elliptic: basis (v, Av) with |det| = 1 exists
        v = _min_cyclic_vector(A)
        basis = Mat2.from_columns(v, A.apply(v))
        g = basis.inverse()
        return g @ A @ basis, g
    # det -1
    if t == 0:
        v = _kernel_vector(A - IDENTITY)
        w = _kernel_vector(A + IDENTITY)
        basis = Mat2.from_columns(v, w)
        if basis.det() not in (1, -1):
            u = ((v[0] + w[0]) // 2, (v[1] + w[1]) // 2)
            basis = Mat2.from_columns(u, A.apply(u))
        g = basis.inverse()
        return g @ A @ basis, g
    # the centraliser of A^2 is abelian and contains A, so any conjugator
    # normalising A^2 gives the same representative of A
    _, g = normal_form(A @ A)
    return g @ A @ g.inverse(), g


def conjugate_gl2z(A: Mat2, B: Mat2) -> Optional[Mat2]:
    """Unimodular ``g`` with ``g A g^-1 = B``, or None when none exists."""
    if not A.is_unimodular() or not B.is_unimodular():
        raise ValueError("conjugacy is decided for unimodular matrices only")
    if A.det() != B.det() or A.trace() != B.trace():
        return None
    NA, gA = normal_form(A)
    NB, gB = normal_form(B)
    if NA != NB:
        return None
    g = gB.inverse() @ gA
    assert g @ A == B @ g
    return g


def conjugate_bounded_oracle(A: Mat2, B: Mat2, bound: int) -> Optional[Mat2]:
    """Exhaustive search for a unimodular ``g`` with entries in ``[-bound, bound]``
    and ``g A = B g``.  Sound, but only complete up to the bound.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    rng = range(-bound, bound + 1)
    b11, b12, b21, b22 = B.entries()

    def row_times_A(p, q):
        return (p * A.e11 + q * A.e21, p * A.e12 + q * A.e22)

    def check(p, q, r, s):
        if max(abs(r), abs(s)) > bound or p * s - q * r not in (1, -1):
            return None
        g = Mat2(p, q, r, s)
        return g if g @ A == B @ g else None

    for p in rng:
        for q in rng:
            if p == 0 and q == 0:
                continue
            # first row of gA = B g reads (p,q)A = b11 (p,q) + b12 (r,s)
            u, v = row_times_A(p, q)
            u, v = u - b11 * p, v - b11 * q
            if b12:
                if u % b12 or v % b12:
                    continue
                found = check(p, q, u // b12, v // b12)
                if found is not None:
                    return found
            else:
                if u or v:
                    continue
                for r in rng:
                    for s in rng:
                        found = check(p, q, r, s)
                        if found is not None:
                            return found
    return None
