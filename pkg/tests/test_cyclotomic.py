import pytest
from hypothesis import given, strategies as st

from cyclocode.cyclotomic import coset_of, minimal_poly, partition, product_of_minimal_polys, weight_base2
from cyclocode.errors import GcdViolation
from cyclocode.field import build_tower
from cyclocode.kasami import build_kasami_sets, in_low, predicted_b_size
from cyclocode.poly import Poly


def test_coset_examples():
    assert coset_of(2, 15, 0).members == (0,)
    c = coset_of(2, 15, 5)
    assert c.members == (5, 10) and c.size == 2 and c.leader == 5
    assert coset_of(2, 15, 1 + 4).size == 2


def test_gcd_violation():
    with pytest.raises(GcdViolation):
        coset_of(2, 14, 1)


def test_partition_examples():
    P = partition(2, 7)
    assert P.leaders == (0, 1, 3)
    assert [c.size for c in P] == [1, 3, 3]
    assert partition(2, 3).leaders == (0, 1)
    assert all(3 % c.size == 0 for c in partition(4, 63))


@given(st.sampled_from([(2, 31), (2, 63), (3, 26), (4, 63), (3, 80), (5, 24)]))
def test_partition_covers(qn):
    q, n = qn
    P = partition(q, n)
    seen = []
    for c in P:
        assert c.leader == min(c.members)
        assert all(coset_of(q, n, j).leader == c.leader for j in c.members)
        assert {(j * q) % n for j in c.members} == set(c.members)
        seen.extend(c.members)
    assert sorted(seen) == list(range(n))


def test_weight_base2():
    assert weight_base2(0) == 0
    assert weight_base2(2**5 - 1) == 5
    assert weight_base2(2 ** (7 - 2) + 3) == 3


TOWERS = [build_tower(2, 1, 4), build_tower(2, 1, 5, ext_poly=[1, 0, 1, 0, 0, 1]), build_tower(3, 1, 3), build_tower(2, 2, 3)]


def test_minimal_poly_examples():
    t = TOWERS[0]
    assert minimal_poly(t, 0).tolist() == [1, 1]
    assert minimal_poly(t, 5).to_text() == "x^2 + x + 1"
    n = t.n
    prod = product_of_minimal_polys(t, [(-1) % n, (-5) % n, (-7) % n])
    assert prod.to_text() == "x^10 + x^5 + 1"
    assert minimal_poly(TOWERS[1], 1).to_text() == "x^5 + x^2 + 1"


@pytest.mark.parametrize("t", TOWERS, ids=lambda t: f"{t.q}^{t.m}")
def test_product_over_leaders_is_xn_minus_1(t):
    P = partition(t.q, t.n)
    prod = Poly.one(t.small)
    for ld in P.leaders:
        mp = minimal_poly(t, ld)
        assert mp.degree == P.cosets[ld].size
        assert mp.lead == 1
        assert mp == minimal_poly(t, ld * t.q % t.n)
        prod = prod * mp
    assert prod == Poly.x_n_minus_1(t.small, t.n)


def test_kasami_b_cosets_low_range():
    for m, h in [(9, 2), (10, 2), (13, 3)]:
        assert in_low(m, h)
        n = 2**m - 1
        S = build_kasami_sets(m, h)
        leaders = [coset_of(2, n, j).leader for j in S.B]
        assert all(coset_of(2, n, j).size == m for j in S.B)
        assert len(set(leaders)) == len(leaders)


def test_coset_size_predictor_open_range():
    from cyclocode.kasami import in_open_range

    for m in range(4, 15):
        n = 2**m - 1
        for h in range(1, m // 2 + 1):
            if not in_open_range(m, h):
                continue
            S = build_kasami_sets(m, h)
            for j in S.B:
                assert coset_of(2, n, j).size == predicted_b_size(m, h, j), (m, h, j)
