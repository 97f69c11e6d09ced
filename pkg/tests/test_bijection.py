import itertools
from pathlib import Path

import pytest

from keypipes.bijection import (
    InvalidStrip,
    Strip,
    StripBoundary,
    analyze_strip,
    decode_strip,
    encode_strip,
    flip_bottom_row,
    frozen_items,
    strip_of,
    strip_violations,
    swap_adjacent,
    swap_strip,
    transport,
    transport_schedule,
)
from keypipes.enumeration import enumerate_skew, enumerate_tilings
from keypipes.model import V, validate_tiling, weight_tile_level
from keypipes.serialize import parse
from keypipes.verify import Sweep, check_moves, check_transport
from oracles import brute_fillings
from strip_examples import five_ew, five_we, seven_ew, seven_we

CHAIN_DIR = Path(__file__).parent / "data" / "move_chain"


def chain_tiling(tau, i):
    return parse((CHAIN_DIR / f"{tau}_{i}.hpd").read_text())


def all_strips(bd: StripBoundary, order: str):
    left = (bd.left, None) if order == "WE" else (None, bd.left)
    right = (None, bd.right) if order == "WE" else (bd.right, None)
    return [
        Strip(bd, order, upper, lower)
        for upper, lower in brute_fillings(bd.n, bd.width, order, bd.top, bd.bottom, left, right, bd.start)
    ]


# -- analysis -----------------------------------------------------------------


def test_seven_color_analysis():
    a = analyze_strip(seven_we())
    frozen = set(range(0, 7)) | set(range(17, 23)) | set(range(32, 43)) | set(range(54, 63))
    assert a.frozen == frozen
    assert [iv.criticals for iv in a.intervals] == [(7, 16), (23, 26, 31), (43, 53)]
    assert [iv.bounds for iv in a.intervals] == [(1,), (0, 0), (1,)]
    assert [iv.w for iv in a.intervals] == [1, 1, 1]
    assert dict(a.critical)[26] == "middle"
    assert dict(a.critical)[7] == "left-end" and dict(a.critical)[16] == "right-end"
    # the floor position of pipe 2 is frozen by pipe 4
    assert 36 in a.frozen


def test_analysis_is_shared_by_both_orders():
    for we, ew in ((seven_we(), seven_ew()), (five_we(), five_ew())):
        a, b = analyze_strip(we), analyze_strip(ew)
        assert (a.frozen, a.critical, a.intervals) == (b.frozen, b.critical, b.intervals)


def test_two_pipe_strip():
    bd = StripBoundary(n=2, width=6, top={2: 1, 3: 2}, bottom={}, left=1, right=2)
    a = analyze_strip(bd)
    assert a.frozen == {0, 1, 4, 5}
    assert [u for u, _ in a.critical] == [2, 3]
    assert a.intervals[0].bounds == (0,)


def test_single_column_interval():
    bd = StripBoundary(n=1, width=1, top={0: 1}, bottom={0: 1}, left=None, right=None)
    a = analyze_strip(bd)
    assert a.critical == ((0, "isolated"),)
    assert a.intervals[0].k == 0
    for order in ("WE", "EW"):
        s = encode_strip(bd, order, ((),))
        assert (s.upper, s.lower) == ((V(1),), (V(1),))
        assert decode_strip(s) == ((),)


# -- worked strips --------------------------------------------------------------


def test_seven_color_strip_code_and_image():
    s = seven_we()
    assert strip_violations(s) == []
    assert decode_strip(s) == ((1,), (0, 0), (1,))
    assert swap_strip(s) == seven_ew()
    assert swap_strip(seven_ew()) == s


def test_five_color_fragment():
    s = five_we()
    assert strip_violations(s) == []
    a = analyze_strip(s)
    assert a.intervals[0].bounds == (2, 3, 1)
    assert decode_strip(s) == ((1, 2, 1),)
    assert encode_strip(s.boundary, "EW", ((1, 2, 1),)) == five_ew()
    assert encode_strip(s.boundary, "WE", ((1, 2, 1),)) == s


@pytest.mark.parametrize("example", [seven_we, five_we])
def test_brute_force_strips_match_codes(example):
    bd = example().boundary
    bounds = [iv.bounds for iv in analyze_strip(bd).intervals]
    all_codes = set(itertools.product(*[itertools.product(*[range(b + 1) for b in bs]) for bs in bounds]))
    for order in ("WE", "EW"):
        strips = all_strips(bd, order)
        assert len(strips) == len(all_codes)
        codes = set()
        for s in strips:
            code = decode_strip(s)
            codes.add(code)
            assert encode_strip(bd, order, code) == s
        assert codes == all_codes
    images = {swap_strip(s) for s in all_strips(bd, "WE")}
    assert images == set(all_strips(bd, "EW"))


@pytest.mark.parametrize("example", [seven_we, five_we])
def test_interval_weights(example):
    bd = example().boundary
    ws = sum(iv.w for iv in analyze_strip(bd).intervals)
    for order in ("WE", "EW"):
        shifted = set()
        for s in all_strips(bd, order):
            total = sum(sum(js) for js in decode_strip(s))
            west, east = s.weight()
            shifted.add((west - total, east - (ws - total)))
        assert len(shifted) == 1


def test_frozen_items_are_preserved():
    s = seven_we()
    items = frozen_items(s)
    assert items[36] == 4 and items[38] == 3 and items[55] == 1 and items[60] == 6
    assert items[0] == 9 and items[20] == 10 and items[37] == 7
    assert frozen_items(swap_strip(s)) == items
    for s in all_strips(five_we().boundary, "WE"):
        assert frozen_items(swap_strip(s)) == frozen_items(s)


def test_bad_codes_are_rejected():
    bd = five_we().boundary
    with pytest.raises(InvalidStrip):
        encode_strip(bd, "EW", ((1, 4, 1),))
    with pytest.raises(InvalidStrip):
        encode_strip(bd, "EW", ((1, 2),))
    with pytest.raises(InvalidStrip):
        encode_strip(bd, "EW", ())


# -- moves on tilings -----------------------------------------------------------


CHAIN_MOVES = [
    ("WWW", "WWE", None),
    ("WWE", "WEW", 1),
    ("WEE", "WEW", None),
    ("WEE", "EWE", 0),
    ("WEW", "EWW", 0),
    ("EWE", "EWW", None),
    ("EWE", "EEW", 1),
    ("EEW", "EEE", None),
]


@pytest.mark.parametrize("src,dst,row", CHAIN_MOVES)
def test_move_chain(src, dst, row):
    for i in (0, 1):
        t, u = chain_tiling(src, i), chain_tiling(dst, i)
        if row is None:
            assert flip_bottom_row(t) == u and flip_bottom_row(u) == t
        else:
            assert swap_adjacent(t, row) == u and swap_adjacent(u, row) == t


def test_chain_by_transport():
    for i in (0, 1):
        assert transport(chain_tiling("WWW", i), "EEE") == chain_tiling("EEE", i)
        assert transport(chain_tiling("EEE", i), "WWW") == chain_tiling("WWW", i)


def test_strips_cut_from_tilings_are_legal():
    for t in enumerate_tilings((1, 3, 0, 2), "WEEW"):
        for r in (0, 2):
            assert strip_violations(strip_of(t, r)) == []


def test_swap_keeps_the_side_colors():
    t = enumerate_tilings((1, 3, 0, 2), "WEEW")[0]
    u = swap_adjacent(t, 0)
    assert u.tau == "EWEW"
    assert u.boundary.left[1] == t.boundary.left[0]
    assert u.boundary.right[0] == t.boundary.right[1]


def test_swap_works_on_skew_tilings():
    for t in enumerate_skew((1, 3, 0, 2), (1, 0), 1, "WE", 3):
        u = swap_adjacent(t, 0)
        assert validate_tiling(u) == []
        assert weight_tile_level(u) == weight_tile_level(t)
        assert swap_adjacent(u, 0) == t


def test_move_errors():
    t = enumerate_tilings((1, 0, 2), "WWE")[0]
    with pytest.raises(ValueError):
        swap_adjacent(t, 0)
    with pytest.raises(IndexError):
        swap_adjacent(t, 2)
    skew = enumerate_skew((1, 3, 0, 2), (3, 1), 1, "WE", 3)[0]
    with pytest.raises(ValueError):
        flip_bottom_row(skew)


def test_schedule_reaches_the_target():
    for tau in map("".join, itertools.product("WE", repeat=4)):
        for target in map("".join, itertools.product("WE", repeat=4)):
            cur = list(tau)
            for move in transport_schedule(tau, target):
                if move[0] == "flip":
                    cur[-1] = "E" if cur[-1] == "W" else "W"
                else:
                    r = move[1]
                    assert cur[r] != cur[r + 1]
                    cur[r], cur[r + 1] = cur[r + 1], cur[r]
            assert "".join(cur) == target
    assert transport_schedule("WEEW", "WEEW") == []


def test_exhaustive_small_moves():
    sweep = Sweep(3, 2)
    moves, tables = check_moves(sweep)
    assert moves.ok, moves.line()
    trans = check_transport(sweep, tables)
    assert trans.ok, trans.line()
