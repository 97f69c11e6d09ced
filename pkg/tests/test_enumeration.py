import itertools
from collections import Counter
from pathlib import Path

import pytest

from keypipes.enumeration import (
    StateSpaceOverflow,
    _transition_table,
    cell_choices,
    enumerate_skew,
    enumerate_tilings,
    hpd_polynomial,
    hpd_polynomial_dp,
    skew_polynomial_dp,
)
from keypipes.model import build_boundary, cell_violations, validate_tiling, weight_tile_level
from keypipes.poly import key_polynomial
from keypipes.serialize import parse, serialize
from oracles import brute_fillings

EXAMPLE_SET = Path(__file__).parent / "data" / "example_set"


def test_worked_example_set():
    tilings = enumerate_tilings((1, 3, 0, 2), "WEEW", 3)
    assert len(tilings) == 13
    expected = sorted(p.read_text() for p in EXAMPLE_SET.glob("*.hpd"))
    assert sorted(serialize(t) for t in tilings) == expected
    assert hpd_polynomial((1, 3, 0, 2), "WEEW") == key_polynomial((1, 3, 0, 2))


def test_output_order_is_canonical():
    tilings = enumerate_tilings((0, 2, 1), "EWE")
    docs = [serialize(t) for t in tilings]
    assert docs == sorted(docs)
    assert all(validate_tiling(t) == [] for t in tilings)


@pytest.mark.parametrize("q", range(3))
@pytest.mark.parametrize("row_type", "WE")
def test_hand_table_matches_cell_rules(row_type, q):
    n = 3
    p = q + 1
    table = _transition_table(n, 0)
    for left in [None, 1, 2, 3]:
        for below in (False, True):
            from_rules = sorted(table.get((row_type, q, left, below), []), key=repr)
            hand = []
            for tile, right, up in cell_choices(row_type, p, left, below):
                assert cell_violations(tile, row_type, q, n) == []
                hand.append((right, up))
            assert sorted(hand, key=repr) == from_rules


@pytest.mark.parametrize("alpha,tau", [((1, 0, 2), "WEW"), ((2, 2), "EW"), ((0, 1, 1), "EEE"), ((2, 0, 1), "WWE")])
def test_enumeration_matches_brute_force(alpha, tau):
    bd = build_boundary(alpha, tau, max(alpha))
    brute = brute_fillings(bd.n, bd.width, tau, bd.top, bd.bottom, bd.left, bd.right)
    ours = [t.cells for t in enumerate_tilings(alpha, tau)]
    assert sorted(map(repr, brute)) == sorted(map(repr, ours))


def test_dp_matches_enumeration_small():
    for n in (1, 2, 3):
        for alpha in itertools.product(range(3), repeat=n):
            for tau in map("".join, itertools.product("WE", repeat=n)):
                assert hpd_polynomial_dp(alpha, tau) == hpd_polynomial(alpha, tau)


def test_wider_grids_give_the_same_sum():
    for alpha in [(1, 0, 2), (0, 2, 1), (2, 1, 2)]:
        for tau in ("WWW", "EWE", "EEW"):
            base = hpd_polynomial(alpha, tau)
            for extra in (1, 2):
                assert hpd_polynomial(alpha, tau, max(alpha) + extra) == base


def test_every_tau_gives_the_key_polynomial():
    alpha = (2, 1, 2)
    sums = {tau: hpd_polynomial(alpha, tau) for tau in map("".join, itertools.product("WE", repeat=3))}
    assert set(sums.values()) == {key_polynomial(alpha)}


def test_skew_enumeration():
    tilings = enumerate_skew((1, 3, 0, 2), (3, 1), 1, "WE", 3)
    assert len(tilings) == 2
    weights = Counter(str(weight_tile_level(t)) for t in tilings)
    assert weights == Counter({"x1^2": 1, "x1*x4": 1})
    assert str(skew_polynomial_dp((1, 3, 0, 2), (3, 1), 1, "WE", 3)) == "x1^2 + x1*x4"
    assert all(parse(serialize(t)) == t for t in tilings)


def test_state_limit():
    with pytest.raises(StateSpaceOverflow):
        hpd_polynomial_dp((3, 0, 2, 1), "WEWE", max_states=1)


def test_mismatched_lengths():
    with pytest.raises(ValueError):
        enumerate_tilings((1, 2), "WEW")
    with pytest.raises(ValueError):
        enumerate_tilings((1, 2), "WX")
