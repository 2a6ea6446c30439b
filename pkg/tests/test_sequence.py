import numpy as np
import pytest
from hypothesis import given, strategies as st

from cyclocode.errors import InsufficientTerms, InvalidParams, NotMonomial
from cyclocode.field import build_tower, prime_field
from cyclocode.poly import Poly
from cyclocode.sequence import (
    MonomialFunction,
    PeriodicSequence,
    TraceExpansion,
    berlekamp_massey,
    check_reconstruction,
    expand_symbolic,
    generate,
    lucas_terms,
    span_from_bm,
    span_from_expansion,
)

from oracles import binary_trace_sequence, linear_complexity_periodic

GF2 = prime_field(2)


def test_identity_function_gives_complemented_msequence():
    t = build_tower(2, 1, 3)
    seq = generate(t, MonomialFunction(1))
    plain = [t.to_small(t.trace(t.big.exp(i))) for i in range(7)]
    assert seq.values.tolist() == [v ^ 1 for v in plain]
    assert span_from_bm(seq).L == 4


def test_sequence_matches_bit_oracle():
    for m, d in [(5, 13), (6, 5), (7, 13), (4, 7)]:
        t = build_tower(2, 1, m)
        poly = sum(c << i for i, c in enumerate(t.big.poly))
        assert generate(t, MonomialFunction(d)).values.tolist() == binary_trace_sequence(poly, m, d)


def test_bm_examples():
    assert berlekamp_massey(np.zeros(10, dtype=np.int64), field=GF2)[0] == 0
    mseq = np.array([1, 0, 0, 1, 0, 1, 1] * 2)
    L, c = berlekamp_massey(mseq, field=GF2)
    assert L == 3 and c.tolist()[0] == 1
    with pytest.raises(InsufficientTerms):
        berlekamp_massey(np.array([1]), field=GF2)


def test_bm_recurrence_reproduces_period():
    t = build_tower(3, 1, 4)
    seq = generate(t, MonomialFunction(7))
    L, c = berlekamp_massey(seq)
    s = seq.repeated(2 * seq.n).tolist()
    cc = c.tolist()
    for k in range(L, len(s)):
        assert sum(cc[i] * s[k - i] for i in range(L + 1)) % 3 == 0


@pytest.mark.parametrize("p, s, m, d", [(2, 1, 5, 13), (2, 1, 6, 11), (3, 1, 3, 5), (3, 1, 4, 14), (2, 2, 3, 21), (5, 1, 2, 7)])
def test_bm_matches_hankel_rank(p, s, m, d):
    t = build_tower(p, s, m)
    seq = generate(t, MonomialFunction(d))
    if s == 1:
        assert span_from_bm(seq).L == linear_complexity_periodic(seq.values.tolist(), p)


@pytest.mark.parametrize("p, s, m", [(2, 1, 4), (2, 1, 6), (3, 1, 3), (2, 2, 3), (3, 1, 4), (5, 1, 3), (3, 2, 2)])
@given(data=st.data())
def test_expansion_equals_bm(p, s, m, data):
    t = build_tower(p, s, m)
    d = data.draw(st.integers(1, t.n - 1))
    f = MonomialFunction(d)
    seq = generate(t, f)
    exp = expand_symbolic(t, f)
    assert check_reconstruction(exp, seq)
    a, b = span_from_bm(seq), span_from_expansion(exp)
    assert a.L == b.L == exp.span
    assert a.Ms_monic == b.Ms_monic
    assert a.Ms_unit.tolist()[0] == 1
    assert (Poly.x_n_minus_1(t.small, t.n) % a.Ms_monic).is_zero()
    # (x - 1) divides the minimal polynomial iff the constant coset survives
    assert (a.Ms_monic.eval(1) == 0) == exp.has_constant()
    # every coset is all-or-none
    idx = set(exp.indices)
    assert all((i * t.q) % t.n in idx for i in idx)


def test_gold_spans():
    t5 = build_tower(2, 1, 5)
    exp = expand_symbolic(t5, MonomialFunction(3))
    assert exp.span == 6 and exp.has_constant()
    t6 = build_tower(2, 1, 6)
    exp = expand_symbolic(t6, MonomialFunction(5))
    assert exp.span == 6 and not exp.has_constant()


def test_kasami_52_span():
    t = build_tower(2, 1, 5, ext_poly=[1, 0, 1, 0, 0, 1])
    assert span_from_bm(generate(t, MonomialFunction(13))).L == 16


def test_empty_and_constant_expansions():
    t = build_tower(2, 1, 4)
    r = span_from_expansion(TraceExpansion(t, {}))
    assert r.L == 0 and r.Ms_monic.tolist() == [1]
    r = span_from_expansion(TraceExpansion(t, {0: 1}))
    assert r.Ms_monic.tolist() == [1, 1] and r.Ms_unit.tolist() == [1, 1]


def test_inverse_uses_zero_at_zero():
    t = build_tower(3, 1, 2)
    # alpha^t + 1 = 0 at t = n/2 in odd characteristic
    seq = generate(t, MonomialFunction(t.n - 1))
    assert seq.values[t.n // 2] == 0


def test_lucas_terms_binary_submasks():
    assert sorted(e for e, _ in lucas_terms(13, 2)) == [0, 1, 4, 5, 8, 9, 12, 13]
    from math import comb

    for d, p in [(5, 3), (14, 3), (31, 5), (22, 7)]:
        want = {e: comb(d, e) % p for e in range(d + 1) if comb(d, e) % p}
        assert dict(lucas_terms(d, p)) == want


def test_errors():
    with pytest.raises(NotMonomial):
        MonomialFunction(0)
    with pytest.raises(InvalidParams):
        MonomialFunction(15).reduced(15)
    with pytest.raises(Exception):
        PeriodicSequence(GF2, 3, np.array([1, 0]))
