"""Permutation representations of torus and torus-bundle groups.

Points are numbered ``1..k`` in the public interface.  Products follow
function composition: ``(p * q)(i) == p(q(i))``.

* :func:`omega_rep` builds the transitive representation ``omega(m, n, d, rho)``
  of ``Z^2 = <a, b>`` with image ``Z_m + Z_n``.
* :func:`classify_rep` conjugates any transitive abelian representation onto
  one of those.
* :func:`covering_lattice` gives the subgroup ``<a^n, a^-rho b^m>`` of the
  corresponding covering.
* :func:`factor_bundle_rep` splits a representation of a bundle group into the
  block structure of a power covering and the fiber covering on one block.
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .intlat import Lattice, Mat2, mat_pow

__all__ = [
    "Perm",
    "TorusRep",
    "BundleRep",
    "Classification",
    "Factorization",
    "omega_rep",
    "classify_rep",
    "covering_lattice",
    "factor_bundle_rep",
    "coset_bundle_rep",
]


class Perm:
    """Permutation of ``{1, ..., k}``."""

    __slots__ = ("_img",)

    def __init__(self, images: Sequence[int]):
        img = tuple(int(i) - 1 for i in images)
        if sorted(img) != list(range(len(img))):
            raise ValueError(f"{list(images)} is not a permutation of 1..{len(img)}")
        self._img = img

    @classmethod
    def _raw(cls, img: Sequence[int]) -> "Perm":
        p = cls.__new__(cls)
        p._img = tuple(img)
        return p

    @classmethod
    def identity(cls, k: int) -> "Perm":
        return cls._raw(range(k))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Perm":
        img = list(range(degree))
        seen = set()
        for cyc in cycles:
            for i, point in enumerate(cyc):
                if not 1 <= point <= degree:
                    raise ValueError(f"point {point} outside 1..{degree}")
                if point in seen:
                    raise ValueError(f"point {point} repeated")
                seen.add(point)
                img[point - 1] = cyc[(i + 1) % len(cyc)] - 1
        return cls._raw(img)

    @classmethod
    def cycle(cls, degree: int) -> "Perm":
        """The standard cycle ``(1, 2, ..., degree)``."""
        return cls._raw([(i + 1) % degree for i in range(degree)])

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in self._img)

    def __call__(self, point: int) -> int:
        return self._img[point - 1] + 1

    def __mul__(self, other: "Perm") -> "Perm":
        if self.degree != other.degree:
            raise ValueError("degrees differ")
        return Perm._raw(self._img[j] for j in other._img)

    def __invert__(self) -> "Perm":
        inv = [0] * self.degree
        for i, j in enumerate(self._img):
            inv[j] = i
        return Perm._raw(inv)

    inverse = __invert__

    def __pow__(self, k: int) -> "Perm":
        base = self if k >= 0 else ~self
        k = abs(k)
        out = Perm.identity(self.degree)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate_by(self, v: "Perm") -> "Perm":
        """``v * self * v^-1``: relabel point ``i`` as ``v(i)``."""
        return v * self * ~v

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self._img == other._img

    def __hash__(self) -> int:
        return hash(self._img)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self._img))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i + 1)
                i = self._img[i]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles(include_fixed=True))) if self.degree else 1

    def restrict(self, points: Sequence[int]) -> "Perm":
        """Restriction to an invariant set, relabelled ``1..len(points)`` in the given order."""
        index = {p: i for i, p in enumerate(points)}
        try:
            return Perm._raw(index[self(p)] for p in points)
        except KeyError:
            raise ValueError("the point set is not invariant") from None

    def __str__(self) -> str:
        cyc = self.cycles()
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc) if cyc else "()"

    def __repr__(self) -> str:
        return f"Perm({str(self)}, degree={self.degree})"

    @classmethod
    def parse(cls, s: str, degree: int) -> "Perm":
        """Parse cycle notation such as ``"(1,2,3)(4,5)"``; ``""`` or ``"()"`` is the identity."""
        text = s.replace(" ", "")
        if text in ("", "()"):
            return cls.identity(degree)
        if not re.fullmatch(r"(\(\d+(,\d+)*\))+", text):
            raise ValueError(f"malformed cycle notation: {s!r}")
        cycles = [tuple(int(x) for x in body.split(","))
                  for body in re.findall(r"\(([^)]*)\)", text)]
        return cls.from_cycles(cycles, degree)


def _orbits(gens: Sequence[Perm], degree: int) -> list[list[int]]:
    """Orbits of the group generated by ``gens``, sorted by least element."""
    seen = [False] * (degree + 1)
    orbits = []
    for start in range(1, degree + 1):
        if seen[start]:
            continue
        orbit = [start]
        seen[start] = True
        for p in orbit:
            for g in gens:
                q = g(p)
                if not seen[q]:
                    seen[q] = True
                    orbit.append(q)
        orbits.append(sorted(orbit))
    return orbits


def _is_transitive(gens: Sequence[Perm], degree: int) -> bool:
    return degree == 0 or len(_orbits(gens, degree)) == 1


@dataclass(frozen=True)
class TorusRep:
    """Images of the commuting generators ``a`` and ``b``."""

    sigma: Perm
    tau: Perm

    def __post_init__(self):
        if self.sigma.degree != self.tau.degree:
            raise ValueError("sigma and tau act on different sets")
        if self.sigma * self.tau != self.tau * self.sigma:
            raise ValueError("sigma and tau do not commute")

    @property
    def degree(self) -> int:
        return self.sigma.degree

    def conjugate_by(self, v: Perm) -> "TorusRep":
        return TorusRep(self.sigma.conjugate_by(v), self.tau.conjugate_by(v))

    def is_transitive(self) -> bool:
        return _is_transitive((self.sigma, self.tau), self.degree)


@dataclass(frozen=True)
class BundleRep:
    """Images of the fiber generators ``x, y`` and the circle generator ``t``."""

    sx: Perm
    sy: Perm
    st: Perm

    def __post_init__(self):
        if not self.sx.degree == self.sy.degree == self.st.degree:
            raise ValueError("generators act on different sets")
        if self.sx * self.sy != self.sy * self.sx:
            raise ValueError("sx and sy do not commute")
        if not _is_transitive((self.sx, self.sy, self.st), self.degree):
            raise ValueError("the representation is not transitive")

    @property
    def degree(self) -> int:
        return self.sx.degree

    def conjugate_by(self, v: Perm) -> "BundleRep":
        return BundleRep(self.sx.conjugate_by(v), self.sy.conjugate_by(v), self.st.conjugate_by(v))


# ---------------------------------------------------------------------------
# omega(m, n, d, rho)
# ---------------------------------------------------------------------------

def _check_omega_params(m: int, n: int, d: int, i0: int) -> None:
    if m < 1 or n < 1 or d < 1:
        raise ValueError("m, n, d must be positive")
    if n % m or n % (d * m):
        raise ValueError("need m | n and dm | n")
    if not 0 <= i0 <= d - 1 or math.gcd(d, i0) != 1:
        raise ValueError("need 0 <= i0 < d and gcd(d, i0) = 1")


def omega_rep(m: int, n: int, d: int, i0: int) -> TorusRep:
    """``omega(m, n, d, rho)`` with ``rho = i0 n / d`` on ``m n`` points.

    ``a`` acts as ``m`` disjoint ``n``-cycles ``(jn+1, ..., jn+n)``; ``b``
    moves each point to the same position of the next cycle, and from the
    last cycle back to the first shifted by ``rho``.
    """
    _check_omega_params(m, n, d, i0)
    deg = m * n
    sigma = Perm.from_cycles([range(j * n + 1, j * n + n + 1) for j in range(m)], deg)
    if d == 1:
        tau_cycles = [[j + i * n for i in range(m)] for j in range(1, n + 1)]
    else:
        rho = i0 * n // d
        r = [((k - 1) * rho) % n + 1 for k in range(1, d + 1)]
        first = [r[k] + (j - 1) * n for k in range(d) for j in range(1, m + 1)]
        tau_cycles = [[p + ell for p in first] for ell in range(n // d)]
    tau = Perm.from_cycles([c for c in tau_cycles if len(c) > 1], deg)
    return TorusRep(sigma, tau)


@dataclass(frozen=True)
class Classification:
    """Parameters of ``omega(m, n, d, rho)`` and a conjugator onto it.

    ``swapped`` records that the roles of ``sigma`` and ``tau`` were exchanged so
    that the first generator has order ``n``.
    """

    m: int
    n: int
    d: int
    rho: int
    conjugator: Perm
    swapped: bool = False

    @property
    def i0(self) -> int:
        return self.rho * self.d // self.n


def classify_rep(r: TorusRep) -> Classification:
    """Identify a transitive abelian representation with some ``omega(m, n, d, rho)``.

    Conjugating ``r`` (generators swapped when ``swapped``) by the returned
    permutation gives exactly ``omega_rep(m, n, d, i0)``.
    """
    k = r.degree
    if not r.is_transitive():
        raise ValueError("representation is not transitive")
    sigma, tau = r.sigma, r.tau
    n = math.lcm(sigma.order(), tau.order())
    m = k // n
    swapped = False
    if sigma.order() != n:
        if tau.order() != n:
            raise ValueError("neither generator has order equal to the exponent of the image")
        sigma, tau = tau, sigma
        swapped = True
    d = tau.order() // m
    # label the sigma-cycle through tau^j(1) as block j, starting at tau^j(1)
    img = [0] * k
    start = 1
    for j in range(m):
        p = start
        for pos in range(n):
            img[p - 1] = j * n + pos
            p = sigma(p)
        start = tau(start)
    v = Perm._raw(img)
    # tau^m(1) = sigma^rho(1) fixes the shift on returning to the first block
    rho = img[(tau ** m)(1) - 1]
    cls = Classification(m, n, d, rho, v, swapped)
    assert TorusRep(sigma, tau).conjugate_by(v) == omega_rep(m, n, d, cls.i0)
    return cls


def covering_lattice(m: int, n: int, rho: int) -> Lattice:
    """Canonical form of ``<a^n, a^-rho b^m>`` (index ``m n``)."""
    if m < 1 or n < 1 or n % m:
        raise ValueError("need m | n")
    rho %= n
    if rho % m:
        raise ValueError("need m | rho")
    return Lattice.from_basis((n, 0), (-rho, m))


# ---------------------------------------------------------------------------
# bundle representations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Factorization:
    """Block structure of a bundle representation.

    ``blocks[i]`` lists the points of block ``i + 1``; ``block_of[p]`` is the
    block number of point ``p``.  ``q_images`` are the induced permutations of
    blocks for ``sx, sy, st``; ``gamma`` restricts ``sx, sy, st^m`` to block 1
    (points relabelled in increasing order).
    """

    m: int
    blocks: tuple[tuple[int, ...], ...]
    block_of: dict[int, int]
    q_images: tuple[Perm, Perm, Perm]
    gamma: BundleRep
    kernel_generators: tuple[Perm, ...]

    @property
    def block_size(self) -> int:
        return len(self.blocks[0])


def _kernel_generators(r: BundleRep) -> list[Perm]:
    """Conjugates ``st^j s st^-j`` of the fiber generators, ``0 <= j < order(st)``."""
    gens = []
    conj = Perm.identity(r.degree)
    for _ in range(r.st.order()):
        for s in (r.sx, r.sy):
            c = conj * s * ~conj
            if c not in gens:
                gens.append(c)
        conj = r.st * conj
    return gens


def factor_bundle_rep(r: BundleRep) -> Factorization:
    """Split ``r`` into the power-covering block action and the fiber part."""
    K = _kernel_generators(r)
    blocks = _orbits(K, r.degree)
    sizes = {len(b) for b in blocks}
    if len(sizes) != 1:  # pragma: no cover - impossible for a normal subgroup
        raise AssertionError(f"orbits of unequal size {sorted(sizes)}")
    m = len(blocks)
    block_of = {p: i + 1 for i, b in enumerate(blocks) for p in b}

    def induced(g: Perm) -> Perm:
        images = []
        for b in blocks:
            targets = {block_of[g(p)] for p in b}
            if len(targets) != 1:  # pragma: no cover
                raise AssertionError("blocks are not preserved")
            images.append(targets.pop())
        return Perm(images)

    q = (induced(r.sx), induced(r.sy), induced(r.st))
    first = blocks[0]
    gamma = BundleRep(r.sx.restrict(first), r.sy.restrict(first), (r.st ** m).restrict(first))
    return Factorization(m, tuple(tuple(b) for b in blocks), block_of, q, gamma, tuple(K))


def coset_bundle_rep(A: Mat2, m: int, L: Lattice) -> BundleRep:
    """Action of ``Z^2 x|_A Z`` on the cosets of ``L x| <t^m>``.

    This is the representation of the composite covering: the ``m``-fold power
    covering followed by the fiber covering given by ``L`` (which must be
    invariant under ``A^m``).  Points are the pairs ``(i, u)`` with
    ``0 <= i < m`` and ``u`` a residue modulo ``A^i L``, numbered in
    lexicographic order.
    """
    if m < 1:
        raise ValueError("m must be positive")
    Am = mat_pow(A, m)
    if not all(L.contains(Am.apply(v)) for v in L.basis):
        raise ValueError("lattice is not invariant under A^m")
    layers = [L.image(mat_pow(A, i)) for i in range(m)]
    points = []
    for i, Li in enumerate(layers):
        for x in range(Li.d1):
            for y in range(Li.d2):
                points.append((i, (x, y)))
    index = {pt: k + 1 for k, pt in enumerate(points)}

    def label(i: int, w: tuple[int, int]) -> int:
        i %= m
        return index[(i, layers[i].reduce(w))]

    # the coset of (w, t^c) is labelled by (c mod m, w mod A^c L); left
    # multiplication: x, y translate w, and t sends (w, t^c) to (A w, t^(c+1))
    sx = Perm([label(i, (u[0] + 1, u[1])) for i, u in points])
    sy = Perm([label(i, (u[0], u[1] + 1)) for i, u in points])
    st = Perm([label(i + 1, A.apply(u)) for i, u in points])
    return BundleRep(sx, sy, st)


def random_relabel(r: BundleRep, rng: Optional[random.Random] = None) -> BundleRep:
    rng = rng or random.Random()
    images = list(range(1, r.degree + 1))
    rng.shuffle(images)
    return r.conjugate_by(Perm(images))
