"""The identity-check registry: hand-computed witnesses, registry behavior,
mutation sensitivity, and q = 1 specialization agreement."""

import random
from fractions import Fraction

import pytest

from hankel_lab.hankel import RBuilder, det_bareiss, hankel_matrix, hankel_poly_det
from hankel_lab.identities import (REGISTRY, CheckReport, _closed_fib_ratio,
                                   _cor3_rhs, _eq36_rhs, _eq37_rhs, _eq38_rhs,
                                   _eq57_rhs, _motzkin_prefix_poly, check_aeration,
                                   check_cor1, check_cor3,
                                   check_cor4, check_cor5, check_cor6,
                                   check_corollaries,
                                   check_fibonacci_consequences,
                                   check_hermite_lin, check_lemma,
                                   check_motzkin_lin, check_motzkin_section,
                                   check_schroder_lin, check_theorem1,
                                   check_theorem2, run_check)
from hankel_lab.moments import MomentSeq, general_moments, motzkin_recurrence, sym_moments
from hankel_lab.opseq import SymRecurrence, catalan_recurrence
from hankel_lab.ring import QQ, QQ_U, Poly, RatFunc


def xpoly(*coeffs):
    return Poly(coeffs, "x", QQ)


# ---------------------------------------------------------------------------
# hand-computed witnesses

def test_lemma_hand_values():
    rep = check_lemma(catalan_recurrence(), 1)
    assert rep.passed
    # d(1, x) = 1 - x against the v-weighted combination r(1,x) - 2 r(0,x)
    cat = sym_moments(catalan_recurrence())
    assert hankel_poly_det(RBuilder.conv(cat), 1) == xpoly(1, -1)


def test_lemma_random_battery():
    rng = random.Random(11)
    for _ in range(5):
        values = [rng.choice([1, 2, 3]) for _ in range(20)]
        rec = SymRecurrence.from_list(values, QQ)
        assert check_lemma(rec, 4).passed, values


def test_theorem1_hand_value():
    rep = check_theorem1(catalan_recurrence(), 1)
    assert rep.passed
    cat = sym_moments(catalan_recurrence())
    d1 = hankel_poly_det(RBuilder.conv(cat), 1).substitute_x_squared()
    assert d1 == xpoly(1, 0, -1)  # = (-1) p_2(x, T) with T = t


def test_theorem1_random_battery():
    rng = random.Random(13)
    for _ in range(5):
        values = [rng.choice([1, 2, 3]) for _ in range(20)]
        rec = SymRecurrence.from_list(values, QQ)
        assert check_theorem1(rec, 4).passed, values


def test_theorem2_hand_value():
    rep = check_theorem2(catalan_recurrence(), 0)
    assert rep.passed
    cat = sym_moments(catalan_recurrence())
    lhs = hankel_poly_det(RBuilder.lin(cat), 0).substitute_x_squared()
    assert lhs == xpoly(-1, 0, 1)  # p_2(x)


def test_theorem2_random_battery():
    rng = random.Random(17)
    for _ in range(5):
        values = [rng.choice([1, 2, 3]) for _ in range(20)]
        rec = SymRecurrence.from_list(values, QQ)
        assert check_theorem2(rec, 3).passed, values


def test_cor1_closed_form_values():
    assert _closed_fib_ratio(1, QQ) == xpoly(1, 0, -1)
    assert _closed_fib_ratio(2, QQ) == xpoly(1, 0, -3, 0, 1)
    assert check_cor1(4).passed


def test_cor3_hand_value():
    from hankel_lab.ring import QQ_Q
    q = RatFunc.var("q")
    rhs = _cor3_rhs(1, q, QQ_Q)
    # q^(n^2) (1 - x^2/q) = q - x^2 at n = 1
    expected = Poly([q, RatFunc.const(0, "q"), RatFunc.const(-1, "q")], "x", QQ_Q)
    assert rhs == expected
    assert check_cor3(2).passed


def test_cor6_specialization_values():
    # little Schroeder at n = 1: ratio 1 - x^2/2; large: 1 - x^2
    assert _eq37_rhs(1) == Poly([1, 0, Fraction(-1, 2)], "x", QQ)
    assert _eq38_rhs(1) == xpoly(1, 0, -1)
    assert check_cor6(2).passed


def test_eq36_generic_matches_specializations():
    # at q = 1 the generic double sum collapses onto the two Schroeder forms
    for n in range(5):
        generic_little = _eq36_rhs(n, Fraction(1), Fraction(2), Fraction(1), QQ)
        assert generic_little == _eq37_rhs(n).scalar_mul(Fraction(2) ** n)
        generic_large = _eq36_rhs(n, Fraction(2), Fraction(1), Fraction(1), QQ)
        assert generic_large == _eq38_rhs(n)


def test_motzkin_prefix_and_degree_drop():
    rep = check_motzkin_section(3)
    assert rep.passed
    motz = general_moments(motzkin_recurrence())
    d2 = hankel_poly_det(RBuilder.conv(motz), 2).substitute_x_squared()
    assert d2 == _motzkin_prefix_poly(2)
    assert d2.degree == 2  # drops below the generic degree 4


def test_motzkin_lin_hand_value():
    rep = check_motzkin_lin(1)
    assert rep.passed
    # n = 0 witness: x M_1 - M_2 = -1 + u(x - u)
    from hankel_lab.moments import motzkin_u
    useq = motzkin_u()
    d = hankel_poly_det(RBuilder.lin(useq), 0, 1)
    u = RatFunc.var("u")
    assert d == Poly([-(u ** 2 + 1), u], "x", QQ_U)


def test_fibonacci_consequence_values():
    cat = sym_moments(catalan_recurrence())
    sums = MomentSeq.from_func(lambda n: cat.at(n) + cat.at(n + 1), QQ, "sums")
    assert det_bareiss(hankel_matrix(sums, 0, 0)) == 2      # F_3
    assert det_bareiss(hankel_matrix(sums, 1, 0)) == 5      # F_5
    shifted = MomentSeq.from_func(lambda n: cat.at(n + 1) + cat.at(n + 2), QQ, "s")
    assert det_bareiss(hankel_matrix(shifted, 0, 0)) == 3   # F_4
    assert check_fibonacci_consequences(3).passed


def test_hermite_lin():
    assert check_hermite_lin(3).passed


def test_schroder_lin_prefixes():
    assert _eq57_rhs(0, shifted=False) == xpoly(-1, 1)
    assert _eq57_rhs(1, shifted=False) == xpoly(1, -4, 1)
    assert _eq57_rhs(2, shifted=False) == xpoly(-1, 11, -7, 1)
    assert _eq57_rhs(0, shifted=True) == xpoly(-3, 1)
    assert _eq57_rhs(1, shifted=True) == xpoly(7, -6, 1)
    assert _eq57_rhs(2, shifted=True) == xpoly(-15, 23, -9, 1)
    assert check_schroder_lin(3).passed


def test_aeration_check():
    assert check_aeration(2).passed


def test_corollaries_aggregate():
    rep = check_corollaries(2)
    assert isinstance(rep, CheckReport)
    assert rep.passed


# ---------------------------------------------------------------------------
# specialization agreement

def test_cor3_at_one_reproduces_cor1():
    assert check_cor3(4, q=1).passed
    for n in range(5):
        assert _cor3_rhs(n, Fraction(1), QQ) == _closed_fib_ratio(n, QQ)


def test_cor45_specialized():
    assert check_cor4(2, q=2).passed
    assert check_cor5(2, q=Fraction(1, 2)).passed


# ---------------------------------------------------------------------------
# mutation sensitivity: perturbing one moment must break some check

def _perturbed(seq, k):
    return MomentSeq.from_func(
        lambda n: seq.at(n) + (1 if n == k else 0), seq.domain, f"perturbed@{k}")


@pytest.mark.parametrize("k", [1, 2, 3])
def test_mutation_sensitivity_catalan(k):
    cat = sym_moments(catalan_recurrence())
    rep = check_cor1(6, seq=_perturbed(cat, k))
    assert any(not r.passed for r in rep.results if r.n >= k)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_mutation_sensitivity_motzkin(k):
    motz = general_moments(motzkin_recurrence())
    bad = _perturbed(motz, k)
    hit = False
    for n in range(k, 7):
        if det_bareiss(hankel_matrix(bad, n, 0)) != 1:
            hit = True
            break
    assert hit


# ---------------------------------------------------------------------------
# registry plumbing

def test_registry_ids():
    expected = {"lemma", "thm1", "aeration", "cor1", "cor2", "cor3", "cor4",
                "cor5", "cor6", "motzkin", "thm2", "eq48", "eq50", "eq52",
                "eq57", "eq58"}
    assert set(REGISTRY) == expected
    for cid, check in REGISTRY.items():
        assert check.check_id == cid
        assert check.equations
        assert check.default_n >= 0


def test_run_check_unknown_id():
    with pytest.raises(KeyError):
        run_check("nosuch")


def test_run_check_rejects_negative_n():
    with pytest.raises(ValueError):
        run_check("cor1", n_max=-1)


def test_run_check_small():
    rep = run_check("eq48", n_max=2)
    assert rep.passed
    assert [r.n for r in rep.results] == [0, 1, 2]
    assert all(r.millis >= 0 for r in rep.results)
    assert all(r.lhs is not None for r in rep.results)
    assert all(r.rhs is None for r in rep.results)
