"""Exit criteria: exact oracles and finite decay witnesses, one test per criterion."""

from __future__ import annotations

import math
import random
import time

from qreflection.characters import char_image_poly, dimension
from qreflection.chebyshev import QuadraticInteger, cheb_a_poly, pi_poly, trig_ratio_check
from qreflection.fusion import _tensor, tensor, tensor_sn_plus
from qreflection.haagerup import (
    CoefficientQuery,
    coefficient,
    convergence_sweep,
    fit_exponential_bound,
    n4_shell_profile,
    per_factor_bound,
    recheck_bound,
)
from qreflection.words import conjugate, enumerate_ball, parse_word, unit

S_RANGE = (1, 2, 3, 4)
N_RANGE = (4, 5, 7)


def test_1_dimension_consistency(criterion):
    _tensor.cache_clear()
    start = time.perf_counter()
    failures, pairs = 0, 0
    for s in S_RANGE:
        ball = enumerate_ball(6, s)
        dims = {n: {w: dimension(w, n) for w in ball} for n in N_RANGE}
        for alpha in ball:
            for beta in ball:
                decomposition = list(tensor(alpha, beta))
                pairs += 1
                for n in N_RANGE:
                    rhs = QuadraticInteger(0, 0, n)
                    for gamma, mult in decomposition:
                        rhs = rhs + mult * dimension(gamma, n)
                    failures += dims[n][alpha] * dims[n][beta] != rhs
    elapsed = time.perf_counter() - start
    ok = failures == 0 and elapsed < 60
    criterion(1, "dim(a)dim(b) = sum mult dim(c) exactly on B_6", ok,
              f"{pairs} pairs x {len(N_RANGE)} N, {failures} failures, {elapsed:.1f}s")
    assert failures == 0
    assert elapsed < 60


def test_2_character_homomorphism(criterion):
    failures, pairs = 0, 0
    for s in S_RANGE:
        ball = enumerate_ball(6, s)
        q = {w: char_image_poly(w).q_poly for w in ball}
        for alpha in ball:
            for beta in ball:
                rhs = sum((mult * char_image_poly(g).q_poly for g, mult in tensor(alpha, beta)), start=0 * q[alpha])
                failures += q[alpha] * q[beta] != rhs
                pairs += 1
    criterion(2, "Q_a Q_b = sum mult Q_c exactly on B_6", failures == 0, f"{pairs} pairs, {failures} failures")
    assert failures == 0


def test_3_worked_example(criterion):
    checks = []
    for s in S_RANGE:
        a2 = parse_word("a^2", s)
        checks.append(str(tensor(a2, a2)) == "a^4 + a^2 + 1")
        for n in range(2, 12):
            checks.append(dimension(a2, n) == n - 1)
            for j in range(1, s):
                checks.append(dimension(parse_word(f"a.z^{j}.a", s), n) == n)
    ok = all(checks)
    criterion(3, "a^2 x a^2 = a^4 + a^2 + 1; dim(a z^j a) = N; dim(a^2) = N - 1", ok, f"{len(checks)} checks")
    assert ok


def test_4_so3_bridge(criterion):
    bad = []
    for u in range(6):
        for t in range(6):
            left = parse_word(f"a^{2 * u}", 1) if u else unit(1)
            right = parse_word(f"a^{2 * t}", 1) if t else unit(1)
            got = {sum(w.blocks) // 2: m for w, m in tensor(left, right)}
            if got != {k: 1 for k in tensor_sn_plus(u, t)}:
                bad.append((u, t))
    criterion(4, "s = 1 fusion matches the SO(3)-type rule for u, t <= 5", not bad, f"mismatches {bad}")
    assert not bad


def test_5_chebyshev_identities(criterion):
    product_ok = all(
        cheb_a_poly(t) * cheb_a_poly(s) == cheb_a_poly(t + s) + cheb_a_poly(t - 1) * cheb_a_poly(s - 1)
        for t in range(1, 31)
        for s in range(1, 31)
    )
    bridge_ok = all(pi_poly(t).substitute_square() == cheb_a_poly(2 * t) for t in range(21))
    worst = max(
        abs(lhs - rhs)
        for x in (0.5, 1.0, 1.5)
        for t in range(1, 501)
        for lhs, rhs in [trig_ratio_check(t, x)]
    )
    ok = product_ok and bridge_ok and worst <= 1e-9
    criterion(5, "product identity, Pi_t(X^2) = A_2t(X), trig formula", ok,
              f"product={product_ok}, bridge={bridge_ok}, trig max err={worst:.2e}")
    assert product_ok and bridge_ok
    assert worst <= 1e-9


def test_6_decay_witness_n_ge_5(criterion):
    results = {}
    for n, s, x in [(5, 3, 4.41), (7, 2, 5.0)]:
        q = CoefficientQuery(n, s, x)
        c = fit_exponential_bound(q, 12)
        results[(n, s, x)] = (c, c is not None and 0 < c <= 1 and recheck_bound(q, 12, c))
    ok = all(passed for _, passed in results.values())
    criterion(6, "exponential bound fitted on B_12 and rechecked at 1e-12 slack", ok,
              ", ".join(f"N={n},s={s},x={x}: c={c}" for (n, s, x), (c, _) in results.items()))
    assert ok


# max |C_alpha(2)| on shells ell = 0, 2, ..., 12 at N = 4, s = 2 (exact Z[sqrt 2] oracle run)
N4_SHELL_MAX = [1.0, 1 / 2, 1 / 5, 1 / 6, 1 / 9, 1 / 10, 1 / 13]


def test_7_decay_witness_n_4(criterion):
    prof = n4_shell_profile(2, 2.0, 12)
    maxima = [sh.shell_max for sh in prof.shells]
    factor = per_factor_bound(2.0, 4, 500)
    frozen = all(math.isclose(a, b, rel_tol=1e-12) for a, b in zip(maxima, N4_SHELL_MAX))
    ok = factor < 1 and prof.factor_bound < 1 and maxima[6] < maxima[1] and frozen
    criterion(7, "N = 4: per-factor ratios < 1 and shell_max(12) < shell_max(2)", ok,
              f"D={factor:.6f}, shell_max(2)={maxima[1]:.6f}, shell_max(12)={maxima[6]:.6f}")
    assert ok


def test_8_convergence_witness(criterion):
    sweep = convergence_sweep(parse_word("a^2", 2), 5, [3, 4, 4.9])
    exact_ok = all(abs(d - e) <= 1e-12 for (_, d), e in zip(sweep, [0.5, 0.25, 0.025]))
    rng = random.Random(20241016)
    words = rng.sample(enumerate_ball(6, 3)[1:], 5)
    xs = [4 + (5 - 4) * k / 50 for k in range(50)]
    monotone = True
    for w in words:
        defects = [d for _, d in convergence_sweep(w, 5, xs)]
        monotone &= all(b <= a for a, b in zip(defects, defects[1:]))
        monotone &= convergence_sweep(w, 5, [5.0])[0][1] == 0
    ok = exact_ok and monotone
    criterion(8, "defects of a^2 at N = 5 and monotone sweeps toward N", ok,
              f"exact={exact_ok}, monotone={monotone}, words={[str(w) for w in words]}")
    assert ok


def test_9_structural_properties(criterion):
    failures = []
    for s in S_RANGE:
        ball = enumerate_ball(6, s)
        queries = [CoefficientQuery(5, s, 4.5), CoefficientQuery(4, s, 2.0), CoefficientQuery(7, s, 1.3)]
        for alpha in ball:
            c = conjugate(alpha)
            if conjugate(c) != alpha:
                failures.append(("involution", s, str(alpha)))
            if any(dimension(c, n) != dimension(alpha, n) for n in N_RANGE):
                failures.append(("dimension", s, str(alpha)))
            if char_image_poly(c).q_poly != char_image_poly(alpha).q_poly:
                failures.append(("character", s, str(alpha)))
            if any(coefficient(c, q) != coefficient(alpha, q) for q in queries):
                failures.append(("coefficient", s, str(alpha)))
            if parse_word(str(alpha), s) != alpha:
                failures.append(("round-trip", s, str(alpha)))
            for beta in ball:
                if tensor(alpha, beta)[unit(s)] != (1 if beta == c else 0):
                    failures.append(("trivial multiplicity", s, str(alpha), str(beta)))
    criterion(9, "involution, conjugate invariance, trivial multiplicity, round-trip on B_6", not failures,
              f"{len(failures)} failures")
    assert not failures
