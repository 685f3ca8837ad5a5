"""Fox free differential calculus and the rank-three certificate.

Words live in a free group on single-letter generators.  A word is a tuple of
``(generator, +1 | -1)`` letters, kept freely reduced.  Elements of the
integral group ring are :class:`FormalSum` objects mapping reduced words to
non-zero integer coefficients.

The certificate concerns the bundle with monodromy ``[[-1, -alpha], [0, -1]]``
and the presentation ``<x, y, t | t x t^-1 x, t y t^-1 y x^alpha, x y x^-1 y^-1>``.
Under ``x, y -> 1`` and ``t -> -1`` in ``Z/alpha`` every relator maps to 1 and
every Fox derivative of every relator maps to 0, which bounds the rank of
the fundamental group below by three.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping

__all__ = [
    "GENERATORS",
    "Word",
    "word",
    "power",
    "reduce_word",
    "inverse",
    "FormalSum",
    "fox_derivative",
    "EvalSpec",
    "evaluate",
    "evaluate_word",
    "bundle_relators",
    "jacobian",
    "expected_jacobian",
    "rank3_certificate",
]

GENERATORS = ("x", "y", "t")

Letter = tuple[str, int]
Word = tuple[Letter, ...]


def reduce_word(w: Iterable[Letter]) -> Word:
    out: list[Letter] = []
    for g, e in w:
        if e not in (1, -1):
            raise ValueError(f"exponent {e} of {g!r} must be +-1")
        if out and out[-1] == (g, -e):
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def word(spec: str) -> Word:
    """Parse ``"t x T x"``: lower case is a generator, upper case its inverse."""
    letters = []
    for ch in spec.replace(" ", ""):
        letters.append((ch.lower(), -1 if ch.isupper() else 1))
    return reduce_word(letters)


def power(g: str, k: int) -> Word:
    return ((g, 1 if k > 0 else -1),) * abs(k)


def inverse(w: Word) -> Word:
    return tuple((g, -e) for g, e in reversed(w))


def format_word(w: Word) -> str:
    if not w:
        return "1"
    return "".join(g if e == 1 else g.upper() for g, e in w)


@dataclass(frozen=True)
class FormalSum:
    """Element of the integral group ring of a free group."""

    terms: Mapping[Word, int] = field(default_factory=dict)

    def __post_init__(self):
        clean: dict[Word, int] = {}
        for w, c in self.terms.items():
            w = reduce_word(w)
            clean[w] = clean.get(w, 0) + c
        object.__setattr__(self, "terms", {w: c for w, c in clean.items() if c})

    @classmethod
    def of(cls, *words: Word, coefficient: int = 1) -> "FormalSum":
        terms: dict[Word, int] = {}
        for w in words:
            terms[w] = terms.get(w, 0) + coefficient
        return cls(terms)

    @classmethod
    def one(cls) -> "FormalSum":
        return cls({(): 1})

    def __add__(self, other: "FormalSum") -> "FormalSum":
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return FormalSum(terms)

    def __neg__(self) -> "FormalSum":
        return FormalSum({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + (-other)

    def left_mul(self, u: Word) -> "FormalSum":
        """``u * self`` for a group element ``u``."""
        return FormalSum({u + w: c for w, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, FormalSum) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0])):
            body = format_word(w)
            if c == 1:
                parts.append(f"+ {body}")
            elif c == -1:
                parts.append(f"- {body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {abs(c)}{body}")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def fox_derivative(w: Iterable[Letter], g: str) -> FormalSum:
    """Fox derivative of ``w`` with respect to generator ``g``.

    Each occurrence ``g`` contributes ``+prefix``; each ``g^-1`` contributes
    ``-prefix g^-1``, where ``prefix`` is the part of the word before it.
    The input need not be reduced.
    """
    if not isinstance(g, str) or len(g) != 1 or not g.islower():
        raise ValueError(f"unknown generator {g!r}")
    terms: dict[Word, int] = {}
    prefix: list[Letter] = []
    for letter in w:
        h, e = letter
        if len(h) != 1 or not h.islower():
            raise ValueError(f"unknown generator {h!r}")
        if h == g and e == 1:
            key = reduce_word(prefix)
            terms[key] = terms.get(key, 0) + 1
        prefix.append(letter)
        if h == g and e == -1:
            key = reduce_word(prefix)
            terms[key] = terms.get(key, 0) - 1
    return FormalSum(terms)


@dataclass(frozen=True)
class EvalSpec:
    """Ring homomorphism to ``Z/|modulus|`` sending each generator to a unit."""

    modulus: int
    assignment: Mapping[str, int]

    def __post_init__(self):
        n = abs(self.modulus)
        if n < 2:
            raise ValueError("the modulus must satisfy |alpha| >= 2")
        for g, v in self.assignment.items():
            if math.gcd(v, n) != 1:
                raise ValueError(f"image {v} of {g!r} is not a unit mod {n}")

    @property
    def n(self) -> int:
        return abs(self.modulus)

    @classmethod
    def standard(cls, alpha: int) -> "EvalSpec":
        """``x, y -> 1`` and ``t -> -1``."""
        return cls(alpha, {"x": 1, "y": 1, "t": -1})


def evaluate_word(w: Word, spec: EvalSpec) -> int:
    n = spec.n
    value = 1
    for g, e in w:
        u = spec.assignment[g] % n
        value = value * (u if e == 1 else pow(u, -1, n)) % n
    return value


def evaluate(fs: FormalSum, spec: EvalSpec) -> int:
    return sum(c * evaluate_word(w, spec) for w, c in fs.terms.items()) % spec.n


def bundle_relators(alpha: int) -> tuple[Word, Word, Word]:
    """Relators ``t x t^-1 x``, ``t y t^-1 y x^alpha`` and ``[x, y]``."""
    r1 = word("txTx")
    r2 = reduce_word(word("tyTy") + power("x", alpha))
    r3 = word("xyXY")
    return r1, r2, r3


def jacobian(alpha: int) -> list[list[FormalSum]]:
    """Rows are relators, columns the derivatives by x, y, t."""
    return [[fox_derivative(r, g) for g in GENERATORS] for r in bundle_relators(alpha)]


def expected_jacobian(alpha: int) -> list[list[FormalSum]]:
    """The same Jacobian written out by hand, with ``P`` the derivative of ``x^alpha``."""
    one = FormalSum.one()
    zero = FormalSum()
    f = lambda s: FormalSum.of(word(s))
    if alpha > 0:
        P = FormalSum.of(*(power("x", i) for i in range(alpha)))
    else:
        P = -FormalSum.of(*(power("x", -i) for i in range(1, -alpha + 1)))
    return [
        [f("txT") + f("t"), zero, one - f("txT")],
        [P.left_mul(word("tyTy")), f("tyT") + f("t"), one - f("tyT")],
        [one - f("xyX"), f("x") - f("xyXY"), zero],
    ]


def rank3_certificate(alpha: int) -> bool:
    """True when the evaluation kills the whole Fox Jacobian and fixes every relator."""
    if abs(alpha) < 2:
        raise ValueError("the certificate needs |alpha| >= 2")
    spec = EvalSpec.standard(alpha)
    relators = bundle_relators(alpha)
    if any(evaluate_word(r, spec) != 1 for r in relators):
        return False
    return all(evaluate(d, spec) == 0 for row in jacobian(alpha) for d in row)
