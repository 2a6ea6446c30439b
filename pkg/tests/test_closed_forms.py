from math import gcd

import pytest
from hypothesis import given, strategies as st

from cyclocode import closed_forms as cf
from cyclocode.cyclotomic import coset_of
from cyclocode.errors import ConditionUnmet, InconsistentInput
from cyclocode.field import build_tower
from cyclocode.kasami import (
    build_kasami_sets,
    coset_structure_checks,
    epsilon,
    epsilon_table,
    in_low,
    in_open_range,
    mod4_r,
    predicted_b_size,
    regime,
    u_of,
    v_of,
)
from cyclocode.sequence import MonomialFunction, generate, span_from_bm

from oracles import odd_epsilon_count

K52 = "x^16 + x^14 + x^10 + x^9 + x^8 + x^7 + x^5 + x^4 + x^3 + x^2 + x + 1"


# ---- counters and identities ------------------------------------------------

@pytest.mark.parametrize("t", range(1, 15))
def test_count_Nt_against_brute_force(t):
    assert cf.count_Nt(t) == odd_epsilon_count(t) == epsilon_table(t).odd_count()


def test_indicator():
    assert cf.indicator_Nq(2, 6) == 0 and cf.indicator_Nq(2, 7) == 1 and cf.indicator_Nq(3, 9) == 0
    with pytest.raises(ValueError):
        cf.indicator_Nq(1, 3)


def test_gcd_plus_one_examples():
    assert cf.gcd_identity_plus_one(2, 1, 3) == 1
    assert cf.gcd_identity_plus_one(3, 1, 2) == 4
    assert cf.gcd_identity_plus_one(2, 2, 4) == 5
    assert cf.gcd_identity_plus_one(3, 1, 3) == 2


@given(st.sampled_from([2, 3, 4, 5, 7, 8, 9]), st.integers(1, 16), st.integers(1, 16))
def test_gcd_identities_hold(q, m, h):
    v = cf.gcd_identity_tower(q, m, h)
    assert v == gcd(q**h + 1, (q**m - 1) // (q ** gcd(m, h) - 1))
    cf.gcd_identity_plus_one(q, m, h)


def test_epsilon_definition():
    assert epsilon(1, 3) == 3 and epsilon(3, 3) == 2 and epsilon(7, 3) == 1
    with pytest.raises(ValueError):
        epsilon(2, 3)
    assert u_of(0) == 0 and u_of(7) == 3 and u_of(8) == 4
    assert v_of(12) == 2 and v_of(0) > 10**6
    assert [mod4_r(m) for m in (4, 5, 6, 7, 8)] == [4, 1, 2, 3, 4]


# ---- Kasami index sets ------------------------------------------------------

@given(st.integers(3, 16), st.data())
def test_kasami_sets_basic(m, data):
    h = data.draw(st.integers(1, m // 2))
    S = build_kasami_sets(m, h)
    n = 2**m - 1
    assert len(S.A) == len(S.B) == 2**h
    assert set(S.B_star) <= set(S.B)
    assert all(0 <= j < n for j in S.B)
    # each of B2' and B2'' is used on one side of m = 3h only
    assert set(S.B2p if m >= 3 * h else S.B2pp) <= set(S.B)


@pytest.mark.parametrize("m", range(4, 15))
def test_predicted_coset_sizes_open_range(m):
    n = 2**m - 1
    for h in range(1, m // 2 + 1):
        if not in_open_range(m, h):
            continue
        for j in build_kasami_sets(m, h).B:
            assert predicted_b_size(m, h, j) == coset_of(2, n, j).size


@pytest.mark.parametrize("m, h", [(m, h) for m in range(3, 14) for h in range(1, m // 2 + 1) if in_low(m, h)])
def test_low_regime_structure(m, h):
    rep = coset_structure_checks(m, h)
    assert rep.ok, rep.violations


def test_regimes():
    assert regime(9, 2) == "low" and regime(7, 2) == "mid" and regime(5, 2) == "high"
    assert regime(6, 3) is None


# ---- profiles -----------------------------------------------------------------

def test_kasami_52_profile():
    p = cf.kasami_profile(5, 2)
    t = build_tower(2, 1, 5, ext_poly=[1, 0, 1, 0, 0, 1])
    assert p.L == 16 and not p.consistency_problems()
    assert p.expected_monic(t).to_text() == K52


@pytest.mark.parametrize("m, h", [(9, 2), (7, 2), (5, 2), (11, 3), (11, 4)])
def test_kasami_profiles_agree_with_bm(m, h):
    t = build_tower(2, 1, m)
    p = cf.kasami_profile(m, h)
    bm = span_from_bm(generate(t, MonomialFunction(2 ** (2 * h) - 2**h + 1)))
    assert p.L == bm.L and p.expected_monic(t) == bm.Ms_monic


@given(st.integers(3, 12), st.data())
def test_gold_profile_matches_bm(m, data):
    h = data.draw(st.integers(1, m - 1))
    try:
        p = cf.gold_profile(2, m, h)
    except ConditionUnmet:
        assert not ((m % 2 and gcd(m, h) == 1) or (m % 4 == 2 and gcd(m, h) == 2))
        return
    t = build_tower(2, 1, m)
    bm = span_from_bm(generate(t, MonomialFunction(2**h + 1)))
    assert bm.L == p.L and bm.Ms_monic == p.expected_monic(t)


def test_q23_and_ternary_profiles():
    p = cf.q23_profile(2, 1, 6)
    assert p.L == 18 and p.window == (3, 3)
    assert cf.q23_profile(2, 2, 6).L == 18
    tp = cf.ternary_h3_profile(8)
    assert tp.L == 57 and tp.window == (5, 8) and not tp.consistency_problems()


def test_q23_windows():
    assert cf.q23_window(2, 1, 7) == (3, 8)
    assert cf.q23_window(2, 2, 7) == (3, 5)
    assert cf.q23_window(2, 2, 6) == (3, 5)
    assert cf.q23_window(2, 4, 6) == (3, 4)
    assert cf.q23_window(3, 1, 9) == (3, 6)
    assert cf.q23_window(3, 1, 8) == (3, 8)
    assert cf.q23_window(7, 1, 7) == (3, 4)


@pytest.mark.parametrize(
    "fn, args",
    [
        (cf.gold_profile, (2, 6, 1)),
        (cf.gold_profile, (3, 5, 1)),
        (cf.kasami_profile, (6, 3)),
        (cf.bracken_leander_profile, (8,)),
        (cf.q23_profile, (2, 1, 5)),
        (cf.ternary_h3_profile, (9,)),
        (cf.ternary_h3_profile, (6,)),
    ],
)
def test_profiles_refuse_outside_their_range(fn, args):
    with pytest.raises(ConditionUnmet):
        fn(*args)


def test_distance_bounds():
    assert cf.kasami_distance_bounds(5, 2, "high") == (2, None)
    assert cf.kasami_distance_bounds(9, 2, "low")[0] == 6
    with pytest.raises(ConditionUnmet):
        cf.kasami_distance_bounds(9, 2, "high")


def test_expected_monic_rejects_wrong_tower():
    with pytest.raises(InconsistentInput):
        cf.kasami_profile(5, 2).expected_monic(build_tower(2, 1, 7))


def test_bracken_leander_measured_span():
    # the coset of 1 + 2^(2h) has size m/2 and its trace term cancels
    t = build_tower(2, 1, 4, ext_poly=[1, 1, 0, 0, 1])
    bm = span_from_bm(generate(t, MonomialFunction(7)))
    prof = cf.bracken_leander_profile(4)
    assert prof.expected_monic(t).to_text() == "x^10 + x^5 + 1"
    assert bm.L == 8
    assert bm.Ms_monic.to_text() == "x^8 + x^7 + x^5 + x^4 + x^3 + x + 1"
