"""Seifert fibered spaces ``(Oo, g; b1/a1, ..., bt/at)`` over orientable surfaces.

Pairs are kept exactly as given (no normalization of ``b`` modulo ``a``),
so two symbols compare equal only when they are written identically.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Optional, Sequence

__all__ = [
    "SeifertSymbol",
    "NoAdmissibleShift",
    "cyclic_cover",
    "admissible_shifts",
    "seifert_genus",
    "find_lowering",
]


class NoAdmissibleShift(ValueError):
    """No integers ``r_i`` make the cyclic cover well defined."""


@dataclass(frozen=True)
class SeifertSymbol:
    g: int
    fibers: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.g < 0:
            raise ValueError("only orientable orbit surfaces (g >= 0) are supported")
        fibers = tuple((int(a), int(b)) for a, b in self.fibers)
        for a, b in fibers:
            if a < 1:
                raise ValueError(f"fiber multiplicity {a} must be positive")
            if math.gcd(a, b) != 1:
                raise ValueError(f"pair {b}/{a} is not coprime")
        object.__setattr__(self, "fibers", fibers)

    @classmethod
    def parse(cls, s: str) -> "SeifertSymbol":
        """Parse ``"Oo,g;b1/a1,b2/a2"`` (the fiber list may be empty)."""
        text = s.replace(" ", "")
        m = re.fullmatch(r"\(?Oo,(\d+)(?:;(.*?))?\)?", text)
        if not m:
            raise ValueError(f"malformed Seifert symbol: {s!r}")
        fibers = []
        if m.group(2):
            for part in m.group(2).split(","):
                fm = re.fullmatch(r"(-?\d+)/(\d+)", part)
                if not fm:
                    raise ValueError(f"malformed fiber {part!r}")
                fibers.append((int(fm.group(2)), int(fm.group(1))))
        return cls(int(m.group(1)), tuple(fibers))

    def __str__(self) -> str:
        body = ",".join(f"{b}/{a}" for a, b in self.fibers)
        return f"Oo,{self.g}" + (f";{body}" if body else "")


def admissible_shifts(sym: SeifertSymbol, n: int) -> list[int]:
    """Integers ``r_i`` with ``a_i r_i + b_i = 0 (mod n)`` and ``sum r_i = 0``.

    Each congruence fixes ``r_i`` modulo ``n / gcd(a_i, n)``; the sum can be
    brought to zero exactly when the sum of particular solutions is divisible
    by the gcd of those moduli.
    """
    if n < 1:
        raise ValueError("n must be positive")
    base, steps = [], []
    for a, b in sym.fibers:
        h = math.gcd(a, n)
        if b % h:
            raise NoAdmissibleShift(f"{a} r = {-b} (mod {n}) has no solution")
        step = n // h
        r0 = (-(b // h) * pow(a // h, -1, step)) % step if step > 1 else 0
        base.append(r0)
        steps.append(step)
    if not base:
        return []
    total = sum(base)
    # write -total as an integer combination of the steps
    g, coeffs = steps[0], [1]
    for s in steps[1:]:
        d, u, v = _xgcd(g, s)
        coeffs = [c * u for c in coeffs] + [v]
        g = d
    if total % g:
        raise NoAdmissibleShift(f"shift sum {total} is not a multiple of {g}")
    k = -total // g
    return [r + k * c * s for r, c, s in zip(base, coeffs, steps)]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def cyclic_cover(sym: SeifertSymbol, n: int, r: Optional[Sequence[int]] = None) -> SeifertSymbol:
    """The ``n``-fold cyclic cover unwrapping the fibers: ``b_i -> (a_i r_i + b_i) / n``."""
    if n < 1:
        raise ValueError("n must be positive")
    if r is None:
        r = admissible_shifts(sym, n)
    r = list(r)
    if len(r) != len(sym.fibers):
        raise ValueError(f"expected {len(sym.fibers)} shifts, got {len(r)}")
    if sum(r) != 0:
        raise ValueError("the shifts must sum to zero")
    fibers = []
    for (a, b), ri in zip(sym.fibers, r):
        num = a * ri + b
        if num % n:
            raise ValueError(f"{a}*{ri} + {b} is not divisible by {n}")
        fibers.append((a, num // n))
    return SeifertSymbol(sym.g, tuple(fibers))


def seifert_genus(sym: SeifertSymbol) -> int:
    """Heegaard genus with a single exceptional pair: ``2g`` if ``b = +-1``, else ``2g + 1``."""
    if len(sym.fibers) != 1:
        raise ValueError("the genus formula applies to exactly one fiber pair")
    _, b = sym.fibers[0]
    return 2 * sym.g if abs(b) == 1 else 2 * sym.g + 1


def find_lowering(sym: SeifertSymbol) -> Optional[tuple[SeifertSymbol, int]]:
    """The ``|b|``-fold cover ``(Oo, g; +-1/a)`` when it lowers the genus, else ``None``."""
    if len(sym.fibers) != 1:
        raise ValueError("find_lowering expects exactly one fiber pair")
    _, b = sym.fibers[0]
    if abs(b) < 2:
        return None
    cover = cyclic_cover(sym, abs(b), [0])
    if seifert_genus(cover) != seifert_genus(sym) - 1:  # pragma: no cover
        raise AssertionError("cover does not lower the genus by one")
    return cover, abs(b)
