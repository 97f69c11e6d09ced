"""Acceptance criteria 1-8, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py``; the lines appear in the terminal summary.
The sweeps cover every composition with at most four parts, each at most 3.
"""

import json
import sys
import time
from collections import Counter
from pathlib import Path

import pytest

HERE = Path(__file__).parent
sys.path.insert(0, str(HERE))

from keypipes.bijection import decode_strip, encode_strip, swap_strip  # noqa: E402
from keypipes.branching import branch_coefficient  # noqa: E402
from keypipes.enumeration import enumerate_tilings  # noqa: E402
from keypipes.model import weight_tile_level  # noqa: E402
from keypipes.poly import Polynomial, key_polynomial  # noqa: E402
from keypipes.verify import (  # noqa: E402
    Sweep,
    check_branching,
    check_dp,
    check_moves,
    check_round_trip,
    check_stability,
    check_key_identity,
    check_transport,
)
from acceptance_lines import LINES  # noqa: E402
from strip_examples import five_ew, five_we, seven_ew, seven_we  # noqa: E402
from test_render import CASES, golden_matches  # noqa: E402

MAX_N, MAX_PART = 4, 3
# every 97th (tiling, target) pair is also pushed through transport() directly
DIRECT_EVERY = 97


def emit(number: int, ok: bool, detail: str) -> None:
    detail = detail.removeprefix("PASS ").removeprefix("FAIL ")
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}"
    LINES[number] = line
    print(line)


@pytest.fixture(scope="module")
def sweep():
    return Sweep(MAX_N, MAX_PART)


@pytest.fixture(scope="module")
def moves(sweep):
    return check_moves(sweep)


def criterion_1():
    start = time.perf_counter()
    alpha = (1, 3, 0, 2)
    tilings = enumerate_tilings(alpha, "WEEW", 3)
    elapsed = time.perf_counter() - start
    entries = json.loads((HERE / "data" / "example_set" / "weights.json").read_text())
    expected = Counter(tuple(e["weight"]) for e in entries)
    got = Counter(next(iter(weight_tile_level(t).terms)) for t in tilings)
    total = Polynomial.zero(4)
    for t in tilings:
        total = total + weight_tile_level(t)
    ok = len(tilings) == 13 and got == expected and total == key_polynomial(alpha) and elapsed < 1.0
    return ok, f"13 tilings with the expected weights, sum is the key polynomial ({elapsed:.3f}s)"


def criterion_3():
    coeff = branch_coefficient((1, 3, 0, 2), (3, 1), 1, "WE")
    res = check_branching(MAX_N, 2)
    ok = str(coeff) == "x1^2 + x1*x4" and res.ok
    return ok, f"worked coefficient {coeff}; {res.line()}"


def strip_examples():
    problems = []
    if decode_strip(five_we()) != ((1, 2, 1),):
        problems.append("five-color code")
    if encode_strip(five_we().boundary, "EW", ((1, 2, 1),)) != five_ew():
        problems.append("five-color image")
    if swap_strip(seven_we()) != seven_ew():
        problems.append("seven-color image")
    return problems


def criterion_8_golden():
    return [name for name in sorted(CASES) if not golden_matches(name)]


def test_criterion_1_worked_example():
    ok, detail = criterion_1()
    emit(1, ok, detail)
    assert ok


def test_criterion_2_main_sweep(sweep):
    res = check_key_identity(sweep)
    emit(2, res.ok, res.line())
    assert res.ok


def test_criterion_3_branching():
    ok, detail = criterion_3()
    emit(3, ok, detail)
    assert ok


def test_criterion_4_bijections(moves):
    res, _ = moves
    problems = strip_examples()
    ok = res.ok and not problems
    emit(4, ok, res.line() + ("; worked strips: " + ", ".join(problems) if problems else "; worked strips reproduced"))
    assert ok


def test_criterion_5_transport(sweep, moves):
    _, tables = moves
    res = check_transport(sweep, tables, DIRECT_EVERY)
    emit(5, res.ok, res.line())
    assert res.ok


def test_criterion_6_transfer_matrix(sweep):
    res = check_dp(sweep)
    emit(6, res.ok, res.line())
    assert res.ok


def test_criterion_7_width_stability(sweep):
    res = check_stability(sweep)
    emit(7, res.ok, res.line())
    assert res.ok


def test_criterion_8_round_trip_and_goldens(sweep):
    res = check_round_trip(sweep)
    stale = criterion_8_golden()
    ok = res.ok and not stale
    emit(8, ok, res.line() + (f"; stale renders: {stale}" if stale else "; golden renders unchanged"))
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
