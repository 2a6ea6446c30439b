import pytest

from cyclocode.catalog import FAMILIES, ddt, differential_uniformity, resolve
from cyclocode.errors import FieldTooLarge, InvalidParams
from cyclocode.field import build_tower

from oracles import ddt_delta_binary

POLYS = {3: 0b1011, 4: 0b10011, 5: 0b100101, 6: 0b1000011, 7: 0b10000011}


def test_resolve_exponents():
    assert resolve("inverse", 5).d == 30
    assert resolve("gold", 5, 1).d == 3
    assert resolve("kasami", 7, 2).d == 13
    assert resolve("welch", 5, 2).d == 7
    assert resolve("niho1", 5, 2).d == 5
    assert resolve("niho2", 7, 3).d == 39
    assert resolve("dobbertin", 5, 1).d == 29
    assert resolve("bracken_leander", 4, 1).d == 7
    assert resolve("q23", 6, 1, q=3).d == 13
    assert resolve("raw_exponent", 5, d=11).d == 11


def test_resolve_claims_and_preconditions():
    assert resolve("inverse", 5).claimed == 2
    assert resolve("inverse", 6).claimed == 4
    assert resolve("gold", 6, 2).claim == "4-uniform"
    assert resolve("gold", 6, 1).claimed is None
    assert resolve("kasami", 8, 3).precondition is False
    assert resolve("gold", 3, 1, q=3).claim == "planar"
    assert resolve("gold", 2, 1, q=3).precondition is False
    assert resolve("bracken_leander", 8, 2).precondition is False


@pytest.mark.parametrize(
    "args",
    [("nope", 5, 1), ("gold", 5, None), ("welch", 5, 2, 3), ("niho1", 7, 3), ("niho2", 7, 2), ("gold", 5, 1, 6), ("raw_exponent", 5, None)],
)
def test_resolve_rejects(args):
    with pytest.raises(InvalidParams):
        resolve(*args)


@pytest.mark.parametrize("family, m, h", [("inverse", 5, None), ("inverse", 6, None), ("gold", 5, 1), ("gold", 6, 2), ("kasami", 7, 2), ("welch", 5, 2), ("niho1", 5, 2), ("niho2", 7, 3), ("dobbertin", 5, 1), ("bracken_leander", 4, 1)])
def test_ddt_matches_claim_and_oracle(family, m, h):
    spec = resolve(family, m, h)
    t = build_tower(2, 1, m)
    summ = ddt(spec, t.big)
    assert summ.delta == spec.claimed
    assert summ.delta == ddt_delta_binary(spec.d, POLYS[m], m)
    assert summ.rows_ok and summ.even_ok
    assert sum(summ.histogram.values()) == (2**m - 1) * 2**m


def test_ddt_non_claimed_exponents_match_oracle():
    for m, d in [(4, 3), (5, 5), (6, 7), (5, 15)]:
        t = build_tower(2, 1, m)
        assert differential_uniformity(d, t.big) == ddt_delta_binary(d, POLYS[m], m)


def test_ddt_planar_gold_odd_char():
    t = build_tower(3, 1, 3)
    assert differential_uniformity(resolve("gold", 3, 1, q=3), t.big) == 1
    s = ddt(4, t.big)
    assert s.even_ok is None and s.rows_ok


def test_ddt_rejects_large_or_mismatched_fields():
    with pytest.raises(FieldTooLarge):
        ddt(3, build_tower(2, 1, 17).big)
    with pytest.raises(InvalidParams):
        ddt(resolve("gold", 5, 1), build_tower(2, 1, 4).big)


def test_family_list():
    assert set(FAMILIES) >= {"inverse", "gold", "welch", "kasami", "niho1", "niho2", "dobbertin", "bracken_leander"}
