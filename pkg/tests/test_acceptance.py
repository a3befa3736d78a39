"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Everything is exact arithmetic, so every comparison is structural equality
on canonical forms; there are no tolerances anywhere.  Run with
``pytest tests/test_acceptance.py -v -s`` to see the per-criterion lines.
"""

import random
import time
from fractions import Fraction

import hankel_lab.cli as cli
from hankel_lab.hankel import (det_bareiss, hankel_matrix,
                               inverse_first_column, matvec)
from hankel_lab.identities import (DEFAULT_SEED, _closed_fib_ratio, _cor3_rhs,
                                   _random_t_recs, check_aeration, check_cor1,
                                   check_cor2, check_cor3, check_cor4,
                                   check_cor5, check_cor6,
                                   check_fibonacci_consequences,
                                   check_hermite_lin, check_lemma,
                                   check_motzkin_lin, check_motzkin_section,
                                   check_schroder_lin, check_theorem1,
                                   check_theorem2, verify_d0_product_certified)
from hankel_lab.moments import (MomentSeq, apply_functional, general_moments,
                                motzkin_recurrence, motzkin_t, sym_moments)
from hankel_lab.opseq import (andrews_q_recurrence, carlitz_q_recurrence,
                              catalan_recurrence, central_binomial_recurrence,
                              hermite_recurrence, q_central_binomial_recurrence,
                              schroder_large_recurrence,
                              schroder_little_recurrence, sym_polys)
from hankel_lab.ring import QQ

INT_FAMILIES = [catalan_recurrence, central_binomial_recurrence,
                schroder_little_recurrence, schroder_large_recurrence,
                hermite_recurrence]
Q_FAMILIES = [carlitz_q_recurrence, andrews_q_recurrence,
              q_central_binomial_recurrence]


def _verdict(number: int, name: str, ok: bool) -> bool:
    print(f"ACCEPTANCE {number:2d} {name}: {'PASS' if ok else 'FAIL'}")
    return ok


def test_criterion_01_catalan_ratio():
    t0 = time.perf_counter()
    ok = check_cor1(8).passed
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 5.0
    assert _verdict(1, f"Catalan ratio n<=8 in {elapsed:.2f}s (<5s)", ok)


def test_criterion_02_central_binomial_ratio():
    assert _verdict(2, "central binomial ratio n<=8", check_cor2(8).passed)


def test_criterion_03_carlitz_symbolic_and_at_one():
    ok = check_cor3(4).passed
    ok = ok and check_cor3(8, q=1).passed
    ok = ok and all(_cor3_rhs(n, Fraction(1), QQ) == _closed_fib_ratio(n, QQ)
                    for n in range(9))
    assert _verdict(3, "Carlitz q-ratio symbolic n<=4, q=1 reproduces no. 1", ok)


def test_criterion_04_rational_function_t_corollaries():
    ok = check_cor4(3).passed and check_cor5(3).passed
    assert _verdict(4, "Andrews and q-central ratios, symbolic q, n<=3", ok)


def test_criterion_05_schroder_family():
    ok = check_cor6(6, grid_n_max=3).passed
    assert _verdict(5, "Schroeder specializations n<=6 and generic (q,a,b) "
                       "certified n<=3", ok)


def test_criterion_06_theorem1_and_lemma_battery():
    rng = random.Random(DEFAULT_SEED)
    recs = _random_t_recs(20, 26, rng)
    ok = all(check_lemma(r, 4).passed for r in recs)
    ok = ok and all(check_theorem1(r, 4).passed for r in recs)
    assert _verdict(6, "core identities on 20 fixed-seed random t, n<=4", ok)


def test_criterion_07_aeration():
    assert _verdict(7, "aerated ratio collapse n<=3", check_aeration(3).passed)


def test_criterion_08_theorem2_battery_and_hermite():
    rng = random.Random(DEFAULT_SEED)
    recs = _random_t_recs(20, 22, rng)
    ok = all(check_theorem2(r, 3).passed for r in recs)
    ok = ok and check_hermite_lin(3).passed
    assert _verdict(8, "linear-form theorem on random t n<=3 plus the "
                       "double-factorial/Hermite instance", ok)


def test_criterion_09_fibonacci_consequences():
    assert _verdict(9, "consecutive Catalan sums vs Fibonacci, n<=8",
                    check_fibonacci_consequences(8).passed)


def test_criterion_10_motzkin():
    ok = check_motzkin_section(4, det_n_max=8).passed
    ok = ok and check_motzkin_lin(4).passed
    assert _verdict(10, "Motzkin determinants, prefix, u-identities n<=4", ok)


def test_criterion_11_schroder_linear():
    assert _verdict(11, "little Schroeder linear ratios n<=5",
                    check_schroder_lin(5).passed)


def test_criterion_12_structural_invariants():
    ok = True
    # d(n,0) product formula against the eliminated determinant
    for family in INT_FAMILIES:
        rec = family()
        seq = sym_moments(rec)
        from hankel_lab.hankel import d0_product
        ok = ok and all(d0_product(rec, n)
                        == det_bareiss(hankel_matrix(seq, n, 0))
                        for n in range(7))
    trec = motzkin_t()
    tseq = sym_moments(trec)
    from hankel_lab.hankel import d0_product
    ok = ok and all(d0_product(trec, n) == det_bareiss(hankel_matrix(tseq, n, 0))
                    for n in range(7))
    for family in Q_FAMILIES:
        rec = family()
        seq = sym_moments(rec)
        ok = ok and all(d0_product(rec, n)
                        == det_bareiss(hankel_matrix(seq, n, 0))
                        for n in range(4))
        ok = ok and all(verify_d0_product_certified(family, n)
                        for n in range(4, 7))

    # closed-form first column of the inverse
    for family in INT_FAMILIES + Q_FAMILIES + [motzkin_t]:
        rec = family()
        seq = sym_moments(rec)
        for n in range(6):
            col = inverse_first_column(rec, n)
            product = matvec(hankel_matrix(seq, n, 0), col)
            ok = ok and product[0] == rec.domain.one
            ok = ok and all(v == rec.domain.zero for v in product[1:])

    # orthogonality of the moment functional
    for family in INT_FAMILIES + Q_FAMILIES + [motzkin_t]:
        rec = family()
        seq = sym_moments(rec)
        polys = sym_polys(rec, 13)
        for n in range(7):
            expected = rec.domain.one if n == 0 else rec.domain.zero
            ok = ok and apply_functional(seq, polys[n]) == expected
        # dual-basis responses of p_(2n+1)/x against even monomials
        x = polys[1]
        for n in range(7):
            tprod = rec.domain.one
            for i in range(n):
                tprod = tprod * rec.t(2 * i + 1)
            base = polys[2 * n + 1].shift_down_exact(1)
            for m in range(n + 1):
                value = apply_functional(seq, base * x ** (2 * m))
                expected = tprod if m == 0 else rec.domain.zero
                if n % 2:
                    expected = -expected
                ok = ok and value == expected
    assert _verdict(12, "d(n,0) products, inverse columns, orthogonality", ok)


def test_criterion_13_mutation_sensitivity():
    ok = True
    cat = sym_moments(catalan_recurrence())
    for k in (1, 2, 3):
        bad = MomentSeq.from_func(
            lambda n, _k=k: cat.at(n) + (1 if n == _k else 0), QQ, "perturbed")
        rep = check_cor1(6, seq=bad)
        ok = ok and any(not r.passed for r in rep.results if r.n >= k)
    motz = general_moments(motzkin_recurrence())
    for k in (1, 2, 3):
        bad = MomentSeq.from_func(
            lambda n, _k=k: motz.at(n) + (1 if n == _k else 0), QQ, "perturbed")
        ok = ok and any(det_bareiss(hankel_matrix(bad, n, 0)) != 1
                        for n in range(k, 7))
    assert _verdict(13, "single-moment perturbations break checks", ok)


def test_criterion_14_full_default_run():
    t0 = time.perf_counter()
    code = cli.main(["run", "all", "--out", "/dev/null"])
    elapsed = time.perf_counter() - t0
    ok = code == 0 and elapsed < 60.0
    assert _verdict(14, f"'run all' exits 0 in {elapsed:.1f}s (<60s)", ok)
