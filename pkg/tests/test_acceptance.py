"""Acceptance suite: one PASS/FAIL line per criterion.

Run ``pytest tests/test_acceptance.py -v`` (the lines are repeated in the
terminal summary) or ``python tests/test_acceptance.py`` for the lines alone.
Runtime limits are part of each criterion.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass, field

from torusbundles.bundle import (
    TorusBundle,
    first_invariant_factor,
    genus,
    homeomorphic,
    sakuma_matrix,
    sakuma_pairs,
)
from torusbundles.covers import (
    closed_form_check,
    construct_lowering_cover,
    extends,
    f_seq,
    find_genus_lowering,
    geom_sum,
    geom_sum_formula,
    power_cover,
    power_cover_certificate,
    power_formula,
    restrict_monodromy,
)
from torusbundles.fox import expected_jacobian, jacobian, rank3_certificate
from torusbundles.intlat import (
    Lattice,
    Mat2,
    conjugate_bounded_oracle,
    divisor_sum,
    mat_pow,
    sublattices,
)
from torusbundles.permrep import coset_bundle_rep, factor_bundle_rep, omega_rep, random_relabel
from torusbundles.seifert import SeifertSymbol, admissible_shifts, cyclic_cover, find_lowering, seifert_genus

@dataclass
class Outcome:
    ok: bool = True
    notes: list[str] = field(default_factory=list)

    def check(self, condition: bool, note: str) -> None:
        if not condition:
            self.ok = False
            self.notes.append(note)

RESULTS: dict[str, str] = {}

def record(key: str, title: str, outcome: Outcome, seconds: float, limit: float) -> bool:
    within = seconds < limit
    ok = outcome.ok and within
    notes = list(outcome.notes)
    if not within:
        notes.append(f"runtime {seconds:.3f}s exceeds {limit}s")
    detail = f" [{'; '.join(notes)}]" if notes else ""
    RESULTS[key] = f"{'PASS' if ok else 'FAIL'} criterion {key}: {title} ({seconds:.3f}s < {limit}s){detail}"
    print(RESULTS[key])
    return ok

def timed(fn):
    start = time.perf_counter()
    outcome = fn()
    return outcome, time.perf_counter() - start

# ---------------------------------------------------------------------------

def criterion_1() -> tuple[Outcome, float]:
    omega_rep(2, 8, 4, 1)  # warm-up
    best, out = math.inf, Outcome()
    for _ in range(5):
        start = time.perf_counter()
        r = omega_rep(2, 8, 4, 1)
        best = min(best, time.perf_counter() - start)
    out.check(str(r.sigma) == "(1,2,3,4,5,6,7,8)(9,10,11,12,13,14,15,16)", f"a -> {r.sigma}")
    out.check(str(r.tau) == "(1,9,3,11,5,13,7,15)(2,10,4,12,6,14,8,16)", f"b -> {r.tau}")
    return out, best

def criterion_2() -> Outcome:
    out = Outcome()
    for a, b in itertools.product(range(-5, 6), repeat=2):
        A = sakuma_matrix(a, b)
        power = A
        for n in range(1, 16):
            if n > 1:
                power = power @ A
            out.check(power == power_formula(a, b, n), f"A^{n} for (a,b)=({a},{b})")
            out.check(geom_sum(A, n) == geom_sum_formula(a, b, n), f"sum to {n} for ({a},{b})")
    return out

def criterion_3() -> Outcome:
    out = Outcome()
    products = [s * v for v in range(6, 41) for s in (1, -1)]
    for ab in products:
        for n in range(2, 41):
            out.check(abs(f_seq(ab, n)) > 1, f"|f({n})| <= 1 for ab={ab}")
        for n in range(0, 13):
            out.check(closed_form_check(ab, n, 1e-6), f"closed form at ab={ab}, n={n}")
    return out

GENUS3_EXTRA = [Mat2(1, 3, 3, 10), Mat2(-2, 3, -3, 4), Mat2(1, 4, 0, 1)]

def power_corpus() -> list[TorusBundle]:
    values = [0, 2, 3, 4, -2, -3, -4]
    bases = [TorusBundle.sakuma(a, b) for a, b in itertools.product(values, repeat=2)]
    bases = [M for M in bases if genus(M) == 3]
    return bases + [TorusBundle(A) for A in GENUS3_EXTRA]

def criterion_4() -> Outcome:
    out = Outcome()
    extra = [TorusBundle(A) for A in GENUS3_EXTRA]
    out.check(all(first_invariant_factor(M) >= 3 for M in extra), "extra bases must have n_1 >= 3")
    for M in power_corpus():
        for n in range(2, 7):
            total = power_cover(M, n).total
            out.check(genus(total) == 3, f"genus of power {n} of {M.monodromy}")
            cert = power_cover_certificate(M, n)
            out.check(cert.valid, f"{cert.method} certificate ({cert.case}) fails for {M.monodromy}, n={n}")
    return out

def criterion_5() -> Outcome:
    out = Outcome()
    for alpha in [a for a in range(-10, 11) if abs(a) >= 2]:
        out.check(rank3_certificate(alpha), f"certificate alpha={alpha}")
        out.check(jacobian(alpha) == expected_jacobian(alpha), f"Jacobian alpha={alpha}")
    return out

def all_conjugators(A: Mat2, F: Mat2, bound: int) -> list[Mat2]:
    """Every unimodular g with entries up to ``bound`` and ``g A = F g`` (F[0][1] != 0)."""
    found = []
    for p, q in itertools.product(range(-bound, bound + 1), repeat=2):
        u = p * A.e11 + q * A.e21 - F.e11 * p
        v = p * A.e12 + q * A.e22 - F.e11 * q
        if u % F.e12 or v % F.e12:
            continue
        g = Mat2(p, q, u // F.e12, v // F.e12)
        if abs(g.det()) == 1 and g @ A == F @ g:
            found.append(g)
    return found

def predicted_lowering_lattices(A: Mat2, max_sheets: int, bound: int = 25) -> set[Lattice]:
    """Covers of M_A predicted by the theorem: A is conjugate to
    ``[[-1, -k], [a, ak - 1]]`` with ``k >= 2``, ``a != +-1`` and the lattice is
    ``<x^(km), y^m>`` in those coordinates (``k m^2`` sheets)."""
    predicted = set()
    for pair in sakuma_pairs(TorusBundle(A)):
        for a, k in {pair, pair[::-1]}:
            if k < 2 or abs(a) == 1:
                continue
            F = Mat2(-1, -k, a, a * k - 1)
            m = 1
            while k * m * m <= max_sheets:
                model = Lattice.from_basis((k * m, 0), (0, m))
                for g in all_conjugators(A, F, bound):
                    predicted.add(model.image(g.inverse()))
                m += 1
    return predicted

def criterion_6_construction() -> Outcome:
    out = Outcome()
    for a, k, m in itertools.product((2, 3, 4), (2, 3), (1, 2)):
        try:
            cover = construct_lowering_cover(a, k, m)
            out.check(extends(cover.base, cover.lattice), f"a={a}, n/m={k}, m={m}: not invariant")
        except ValueError:
            out.check(False, f"a={a}, n/m={k}, m={m}: no genus drop 3 -> 2")
    return out

def criterion_6_prediction() -> Outcome:
    out = Outcome()
    A = Mat2(-1, -2, 2, 3)
    found = {c.lattice for c in find_genus_lowering(TorusBundle(A), 4)}
    predicted = predicted_lowering_lattices(A, 4)
    out.check(found == predicted, f"found {sorted(map(str, found))}, predicted {sorted(map(str, predicted))}")
    return out

def criterion_6_no_lowering() -> Outcome:
    out = Outcome()
    found = find_genus_lowering(TorusBundle(Mat2(1, 3, 3, 10)), 6)
    out.check(not found, "[[1,3],[3,10]] has lowering covers "
              + ", ".join(f"{c.lattice} -> {c.lifted.monodromy}" for c in found))
    return out

def criterion_7() -> Outcome:
    out = Outcome()
    rng = random.Random(43)
    lattices = [L for n in range(2, 9) for L in sublattices(n)]
    triples = 0
    while triples < 200:
        L = rng.choice(lattices)
        mats = []
        while len(mats) < 2:
            if rng.random() < 0.3:
                lam = rng.randint(-3, 3)
                A = Mat2(lam, 0, 0, lam) + Mat2(*(rng.randint(-2, 2) for _ in range(4))) * L.index
            else:
                A = Mat2(*(rng.randint(-6, 6) for _ in range(4)))
            if extends(A, L):
                mats.append(A)
        A1, A2 = mats
        lhs = restrict_monodromy(A1 @ A2, L)
        rhs = restrict_monodromy(A1, L) @ restrict_monodromy(A2, L)
        out.check(lhs == rhs, f"{A1}, {A2} on {L}")
        triples += 1
    return out

def criterion_8() -> Outcome:
    out = Outcome()
    r = range(-6, 7)
    count = 0
    for a, b, c, d in itertools.product(r, repeat=4):
        if a * d - b * c != 1:
            continue
        count += 1
        M = TorusBundle(Mat2(a, b, c, d))
        out.check(bool(sakuma_pairs(M)) == (first_invariant_factor(M) in (1, 2)), f"{M.monodromy}")
    out.check(count > 0, "empty range")
    M16, M23 = TorusBundle.sakuma(1, 6), TorusBundle.sakuma(2, 3)
    out.check(homeomorphic(M16, M23), "M_{1,6} vs M_{2,3}")
    out.check(conjugate_bounded_oracle(M16.monodromy, M23.monodromy, 50) is not None,
              "oracle disagrees on M_{1,6} vs M_{2,3}")
    out.check(not homeomorphic(TorusBundle.sakuma(1, 2), TorusBundle.sakuma(2, 2)), "M_{1,2} vs M_{2,2}")
    return out

def random_composite(rng: random.Random):
    while True:
        A = Mat2(*(rng.randint(-3, 3) for _ in range(4)))
        if A.det() != 1:
            continue
        m = rng.randint(1, 4)
        Am = mat_pow(A, m)
        options = [L for n in range(1, 24 // m + 1) for L in sublattices(n) if extends(Am, L)]
        L = rng.choice(options)
        return m, L, random_relabel(coset_bundle_rep(A, m, L), rng)

def criterion_9() -> Outcome:
    out = Outcome()
    rng = random.Random(9)
    for trial in range(100):
        m, L, r = random_composite(rng)
        f = factor_bundle_rep(r)
        out.check(r.degree <= 24, f"trial {trial}: degree {r.degree}")
        out.check(f.m == m, f"trial {trial}: m={f.m}, expected {m}")
        out.check(len({len(b) for b in f.blocks}) == 1, f"trial {trial}: unequal blocks")
        for g in f.kernel_generators:
            out.check(all(f.block_of[g(p)] == f.block_of[p] for p in range(1, r.degree + 1)),
                      f"trial {trial}: q does not kill K")
        block = set(f.blocks[0])
        orbit, frontier = {min(block)}, [min(block)]
        while frontier:
            p = frontier.pop()
            for g in f.kernel_generators:
                for q in (g(p), (~g)(p)):
                    if q not in orbit:
                        orbit.add(q)
                        frontier.append(q)
        out.check(orbit == block, f"trial {trial}: K not transitive on block 1")
    return out

def criterion_10() -> Outcome:
    out = Outcome()
    outputs = []
    for g in range(4):
        for alpha in range(1, 8):
            for beta in range(-7, 8):
                if abs(beta) < 2 or math.gcd(alpha, beta) != 1:
                    continue
                sym = SeifertSymbol(g, ((alpha, beta),))
                found = find_lowering(sym)
                out.check(found is not None and found[1] == abs(beta), f"{sym}")
                if found:
                    cover = found[0]
                    out.check(cover.fibers[0][1] == (1 if beta > 0 else -1), f"{sym} -> {cover}")
                    out.check(seifert_genus(sym) - seifert_genus(cover) == 1, f"drop for {sym}")
                    outputs.append((sym, abs(beta), [0], cover))
    rng = random.Random(10)
    while len(outputs) < 400:
        fibers = []
        for _ in range(rng.randint(1, 3)):
            a = rng.randint(1, 7)
            b = rng.choice([x for x in range(-9, 10) if math.gcd(a, x) == 1])
            fibers.append((a, b))
        sym, n = SeifertSymbol(rng.randint(0, 3), tuple(fibers)), rng.randint(1, 9)
        try:
            shifts = admissible_shifts(sym, n)
        except ValueError:
            continue
        outputs.append((sym, n, shifts, cyclic_cover(sym, n, shifts)))
    for sym, n, shifts, cover in outputs:
        for (a, b), r_i, (a2, B) in zip(sym.fibers, shifts, cover.fibers):
            out.check(a == a2 and n * B - a * r_i == b and math.gcd(a, B) == 1, f"{sym}, n={n}")
    return out

def cyclic_subgroups(n: int) -> set[frozenset]:
    return {frozenset(((k * x) % n, (k * y) % n) for k in range(n))
            for x, y in itertools.product(range(n), repeat=2)}

def brute_force_subgroups(n: int) -> set[frozenset]:
    """Order-n subgroups of (Z/n)^2, i.e. index-n sublattices of Z^2 (all contain n Z^2)."""
    cyc = list(cyclic_subgroups(n))
    found = set()
    for C1, C2 in itertools.combinations_with_replacement(cyc, 2):
        if len(C1) * len(C2) < n or n % len(C1) or n % len(C2):
            continue
        span = frozenset(((u[0] + v[0]) % n, (u[1] + v[1]) % n) for u in C1 for v in C2)
        if len(span) == n:
            found.add(span)
    return found

def criterion_11() -> Outcome:
    out = Outcome()
    for n in range(1, 201):
        subs = sublattices(n)
        out.check(len(subs) == len(set(subs)) == divisor_sum(n), f"count at n={n}")
    for n in range(1, 13):
        elements = list(itertools.product(range(n), repeat=2))
        ours = {frozenset(e for e in elements if L.contains(e)) for L in sublattices(n)}
        out.check(ours == brute_force_subgroups(n), f"oracle mismatch at n={n}")
    return out

# ---------------------------------------------------------------------------

def run_criterion(key, title, fn, limit):
    outcome, seconds = timed(fn)
    return record(key, title, outcome, seconds, limit)

def test_criterion_1_worked_omega_example():
    outcome, seconds = criterion_1()
    assert record("1", "omega(2,8,4,1) matches the worked example", outcome, seconds, 0.001)

def test_criterion_2_power_and_sum_formulas():
    assert run_criterion("2", "A^n and geometric sums match the f-formulas", criterion_2, 1.0)

def test_criterion_3_f_sequence_growth_and_closed_form():
    assert run_criterion("3", "|f(n)| > 1 and closed form within 1e-6", criterion_3, 1.0)

def test_criterion_4_power_covers_keep_genus_three():
    assert run_criterion("4", "power covers of genus-3 bases keep genus 3, certified", criterion_4, 5.0)

def test_criterion_5_fox_certificate():
    assert run_criterion("5", "rank-3 Fox certificate for 2 <= |alpha| <= 10", criterion_5, 0.1)

CRITERION_6: dict[str, tuple[Outcome, float]] = {}

def _criterion_6_part(name, fn):
    outcome, seconds = timed(fn)
    CRITERION_6[name] = (outcome, seconds)
    if len(CRITERION_6) == 3:
        total = Outcome()
        for part in CRITERION_6.values():
            for note in part[0].notes:
                total.check(False, note)
        record("6", "genus-lowering fiber covers: construction, prediction, none for [[1,3],[3,10]]",
               total, sum(s for _, s in CRITERION_6.values()), 10.0)
    return outcome

def test_criterion_6_construction_lowers_genus():
    outcome = _criterion_6_part("construction", criterion_6_construction)
    assert outcome.ok, "; ".join(outcome.notes)

def test_criterion_6_search_matches_prediction():
    outcome = _criterion_6_part("prediction", criterion_6_prediction)
    assert outcome.ok, "; ".join(outcome.notes)

def test_criterion_6_no_lowering_for_non_double_branched_base():
    outcome = _criterion_6_part("none", criterion_6_no_lowering)
    assert outcome.ok, "; ".join(outcome.notes)

def test_criterion_7_restriction_is_multiplicative():
    assert run_criterion("7", "restriction is multiplicative on 200 random triples", criterion_7, 1.0)

def test_criterion_8_sakuma_cross_validation():
    assert run_criterion("8", "Sakuma pairs exist iff n_1 in {1,2}; homeomorphism checks", criterion_8, 30.0)

def test_criterion_9_bundle_rep_factorization():
    assert run_criterion("9", "factorization of 100 random composite representations", criterion_9, 2.0)

def test_criterion_10_seifert_lowering():
    assert run_criterion("10", "Seifert genus-lowering covers and reconstruction", criterion_10, 1.0)

def test_criterion_11_sublattice_enumeration():
    assert run_criterion("11", "sublattice counts and brute-force oracle", criterion_11, 1.0)

if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
