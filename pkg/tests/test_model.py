import dataclasses
import itertools
import json
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from keypipes.enumeration import enumerate_tilings
from keypipes.model import (
    EMPTY,
    H,
    LT,
    RB,
    RT,
    V,
    X,
    Tiling,
    build_boundary,
    build_skew_boundary,
    label_subcolumn,
    row_labeling,
    row_weight_exponent,
    trace_pipes,
    validate_tiling,
    weight_subtile_level,
    weight_tile_level,
)
from keypipes.poly import Polynomial
from keypipes.render import weighted_walls
from keypipes.serialize import parse

EXAMPLE_SET = Path(__file__).parent / "data" / "example_set"
EXAMPLE = parse((EXAMPLE_SET / "t13.hpd").read_text())
EXAMPLE_SET_TILINGS = [
    (parse((EXAMPLE_SET / entry["file"]).read_text()), entry) for entry in json.loads((EXAMPLE_SET / "weights.json").read_text())
]


def test_row_labels_follow_types():
    lab = row_labeling("WEEW")
    assert lab.k == 2
    assert lab.label_of_row == (1, 4, 3, 2)
    assert lab.row_of_label[2] == 3
    assert row_labeling("EEE").label_of_row == (3, 2, 1)
    assert row_labeling("WWW").label_of_row == (1, 2, 3)


def test_label_positions():
    bd = build_boundary((1, 3, 0, 2), "WEEW", 3)
    assert bd.top == {4: 1, 13: 2, 2: 3, 11: 4}
    assert bd.left == (1, None, None, 2)
    assert bd.right == (None, 4, 3, None)
    assert label_subcolumn(0, 1, 4) == 0


def test_skew_floor_labels_are_shifted():
    bd = build_skew_boundary((1, 3, 0, 2), (3, 1), 1, "WE", 3)
    assert bd.bottom == {13: 2, 6: 3}
    assert bd.left == (1, None) and bd.right == (None, 4)
    with pytest.raises(ValueError):
        build_skew_boundary((1, 3, 0, 2), (3, 1), 1, "EE", 3)


def test_boundary_rejects_small_grid():
    with pytest.raises(ValueError):
        build_boundary((1, 3), "WE", 2)


@pytest.mark.parametrize("t,entry", EXAMPLE_SET_TILINGS, ids=[e["file"] for _, e in EXAMPLE_SET_TILINGS])
def test_example_set_weights_and_dots(t, entry):
    assert validate_tiling(t) == []
    assert weight_tile_level(t) == Polynomial.monomial(entry["weight"])
    assert weighted_walls(t) == entry["weighted_tiles"]


def test_example_row_weights():
    got = [row_weight_exponent(row, typ, 4) for row, typ in zip(EXAMPLE.cells, EXAMPLE.tau)]
    assert got == [3, 0, 1, 2]


def test_pipes_run_from_sources_to_labels():
    paths = trace_pipes(EXAMPLE)
    assert sorted(paths) == [1, 2, 3, 4]
    # pipe 1 enters the first row from the left and leaves through the ceiling of sub-column 4
    assert paths[1][0] == ("v", 0, 0)
    assert paths[1][-1] == ("h", 0, 4)
    assert paths[4][0] == ("v", 1, 16)


def test_two_weight_rules_agree():
    for n in (1, 2, 3):
        for alpha in itertools.product(range(3), repeat=n):
            for tau in map("".join, itertools.product("WE", repeat=n)):
                for t in enumerate_tilings(alpha, tau):
                    assert weight_subtile_level(t) == weight_tile_level(t)


def test_tilings_are_immutable():
    with pytest.raises(dataclasses.FrozenInstanceError):
        EXAMPLE.tau = "WWWW"


def _with_cell(t, r, s, tile):
    cells = [list(row) for row in t.cells]
    cells[r][s] = tile
    return t.replace(cells=tuple(map(tuple, cells)))


def _rules(t):
    return {v.rule for v in validate_tiling(t)}


def test_each_rule_is_reported():
    assert "crossing-order" in _rules(_with_cell(EXAMPLE, 0, 2, X(3, 1)))
    assert "row-type" in _rules(_with_cell(EXAMPLE, 0, 4, RT(1)))
    assert "floor-ceiling" in _rules(_with_cell(EXAMPLE, 0, 3, V(3)))
    assert "color-range" in _rules(_with_cell(EXAMPLE, 0, 0, H(7)))
    assert "wall-consistency" in _rules(_with_cell(EXAMPLE, 0, 1, EMPTY))
    assert "boundary-mismatch" in _rules(_with_cell(EXAMPLE, 0, 0, RB(1)))
    short = EXAMPLE.replace(cells=EXAMPLE.cells[:3])
    assert _rules(short) == {"dimensions"}


CELLS = st.sampled_from([EMPTY] + [f(c) for c in range(1, 5) for f in (V, H, LT, RB, RT)] + [X(1, 3), X(4, 2)])


@given(st.integers(0, 3), st.integers(0, 15), CELLS)
def test_any_single_change_breaks_a_tiling(r, s, tile):
    if EXAMPLE.cells[r][s] == tile:
        return
    assert validate_tiling(_with_cell(EXAMPLE, r, s, tile))


def test_zero_row_grid():
    ok = Tiling(2, 1, "", (1, 0), (), beta=(1, 0), a=0)
    assert validate_tiling(ok) == []
    bad = Tiling(2, 1, "", (1, 0), (), beta=(0, 1), a=0)
    assert _rules(bad) == {"boundary-mismatch"}
