"""Lie-type cyclic-Sylow arithmetic: orders, criteria, golden grid, realization."""

import json
from pathlib import Path

import pytest

from blocktool.errors import InvalidInput, NotCoprime, RealizationMismatch, UnsupportedSeries
from blocktool.lietype import (
    LieTypeCase,
    cross_check_small_instance,
    cyclic_sylow_criterion,
    multiplicative_order,
    simple_group_order,
)

GOLDEN = Path(__file__).parent / "data" / "lietype_golden.json"


def naive_order(a, p):
    """Direct exponentiation oracle."""
    x = a % p
    d = 1
    while x != 1:
        x = x * a % p
        d += 1
    return d


# -- multiplicative order --------------------------------------------------------


def test_order_examples():
    assert multiplicative_order(2, 7) == 3
    assert multiplicative_order(1, 11) == 1
    assert multiplicative_order(2, 5) == 4


def test_order_matches_naive_oracle():
    for p in (3, 5, 7, 11, 13):
        for a in range(1, 20):
            if a % p == 0:
                continue
            assert multiplicative_order(a, p) == naive_order(a, p)


def test_order_requires_coprime():
    with pytest.raises(NotCoprime):
        multiplicative_order(14, 7)


# -- criterion ------------------------------------------------------------------------


def test_a2_q2_p7():
    rec = cyclic_sylow_criterion(LieTypeCase("A", 2, 2, 7))
    assert rec["criterion"] is True
    assert rec == {**rec, "d": 3, "set": [2, 3], "divides": [3]}


def test_a3_q2_p3_rank_bound_fails():
    rec = cyclic_sylow_criterion(LieTypeCase("A", 3, 2, 3))
    assert rec["rank_condition"] is False
    assert rec["criterion"] is False


def test_b2_q3_p5():
    rec = cyclic_sylow_criterion(LieTypeCase("B", 2, 3, 5))
    assert rec["d"] == 4 and rec["divides"] == [4]
    assert rec["criterion"] is True


def test_2a_uses_minus_q():
    rec = cyclic_sylow_criterion(LieTypeCase("2A", 2, 2, 5))
    assert rec["order_of"] == "-q"
    assert rec["d"] == naive_order(-2 % 5, 5)


def test_d4_multiset_counts_n_twice():
    # D_4: the degree multiset is {2,4,6} + {4}; d = 4 divides two entries
    rec = cyclic_sylow_criterion(LieTypeCase("D", 4, 3, 5))  # ord_5(3) = 4
    assert rec["d"] == 4
    assert rec["divides"] == [4, 4]
    assert rec["divisibility"] is False


def test_e_series_conditions():
    # 3D4: p not dividing q^4 - 1 and p >= 5
    rec = cyclic_sylow_criterion(LieTypeCase("3D4", None, 2, 7))
    assert rec["criterion"] is True  # 7 | 2^4-1? 15 = 3*5, no; 7 >= 5
    rec = cyclic_sylow_criterion(LieTypeCase("3D4", None, 2, 5))
    assert rec["criterion"] is False  # 5 | 15
    # E7 needs p >= 11 and the divisibility condition
    rec = cyclic_sylow_criterion(LieTypeCase("E7", None, 2, 7))
    assert rec["criterion"] is False
    rec = cyclic_sylow_criterion(LieTypeCase("E7", None, 2, 11))
    assert rec["divisibility"] == ((2 ** 4 - 1) * (2 ** 6 - 1) % 11 != 0)


def test_degenerate_ranks_rejected():
    with pytest.raises(UnsupportedSeries):
        LieTypeCase("A", 1, 2, 7)
    with pytest.raises(UnsupportedSeries):
        LieTypeCase("D", 3, 2, 7)
    with pytest.raises(UnsupportedSeries):
        LieTypeCase("E6", 5, 2, 7)
    with pytest.raises(UnsupportedSeries):
        LieTypeCase("F4", 4, 2, 7)


def test_parameter_validation():
    with pytest.raises(InvalidInput):
        LieTypeCase("A", 2, 6, 7)  # q not a prime power
    with pytest.raises(InvalidInput):
        LieTypeCase("A", 2, 4, 2)  # p equals the defining characteristic
    with pytest.raises(InvalidInput):
        LieTypeCase("A", 2, 2, 9)  # p not prime


# -- golden grid ---------------------------------------------------------------------


def test_golden_grid_matches_recomputation():
    golden = json.loads(GOLDEN.read_text())
    assert golden["schema"] == 1
    assert len(golden["rows"]) == 360
    for row in golden["rows"]:
        case = LieTypeCase(row["series"], row["n"], row["q"], row["p"])
        fresh = cyclic_sylow_criterion(case)
        assert fresh == row
        # independent recomputation of the order d
        base = -row["q"] if row["order_of"] == "-q" else row["q"]
        assert row["d"] == naive_order(base % row["p"], row["p"])


# -- realization cross-check -----------------------------------------------------------


def test_simple_group_orders():
    assert simple_group_order(LieTypeCase("A", 2, 2, 7)) == 168    # PSL(3,2)
    assert simple_group_order(LieTypeCase("A", 3, 2, 7)) == 20160  # PSL(4,2)
    assert simple_group_order(LieTypeCase("2A", 2, 2, 5)) == 72    # PSU(3,2)
    assert simple_group_order(LieTypeCase("B", 2, 3, 5)) == 25920  # PSp(4,3) = B2(3)


def test_cross_check_psl32_realization(corpus):
    G = corpus["psl32_deg7"]
    rec7 = cross_check_small_instance(LieTypeCase("A", 2, 2, 7), G)
    assert rec7["criterion"] is True
    assert rec7["sylow_order"] == 7 and rec7["sylow_cyclic"]
    assert rec7["consistent"]
    rec3 = cross_check_small_instance(LieTypeCase("A", 2, 2, 3), G)
    assert rec3["divisibility"] is True  # d = 2 divides only 2 in {2, 3}
    assert rec3["sylow_order"] == 3 and rec3["sylow_cyclic"]
    assert rec3["consistent"]


def test_cross_check_all_small_primes(corpus):
    G = corpus["psl32_deg7"]
    for p in (3, 5, 7, 11, 13):
        rec = cross_check_small_instance(LieTypeCase("A", 2, 2, p), G)
        assert rec["consistent"], rec


def test_cross_check_order_mismatch(corpus):
    with pytest.raises(RealizationMismatch):
        cross_check_small_instance(LieTypeCase("A", 2, 2, 7), corpus["a5"])
