"""Exhaustive consistency sweeps over small compositions.

Each check returns a :class:`CheckResult`; nothing here raises on a failed
identity, so callers can report every problem at once.
"""

from __future__ import annotations

import itertools
from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass, field

from .bijection import flip_bottom_row, swap_adjacent, transport, transport_schedule
from .branching import branch_table
from .enumeration import enumerate_tilings, hpd_polynomial_dp
from .model import validate_tiling, weight_tile_level
from .poly import Polynomial, key_polynomial
from .serialize import parse, serialize

MAX_REPORTED = 5


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        self.failures.append(message)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        text = f"{status} {self.name} ({self.cases} cases)"
        if self.failures:
            text += ": " + "; ".join(self.failures[:MAX_REPORTED])
            if len(self.failures) > MAX_REPORTED:
                text += f" (+{len(self.failures) - MAX_REPORTED} more)"
        return text


def compositions(max_n: int, max_part: int, min_n: int = 1) -> Iterator[tuple[int, ...]]:
    for n in range(min_n, max_n + 1):
        yield from itertools.product(range(max_part + 1), repeat=n)


def row_types(n: int) -> list[str]:
    return ["".join(p) for p in itertools.product("WE", repeat=n)]


class Sweep:
    """Enumerations shared between checks, computed once per ``(alpha, tau)``."""

    def __init__(self, max_n: int, max_part: int):
        self.max_n = max_n
        self.max_part = max_part
        self._tilings: dict[tuple, list] = {}

    def tilings(self, alpha, tau):
        key = (alpha, tau)
        hit = self._tilings.get(key)
        if hit is None:
            hit = self._tilings[key] = enumerate_tilings(alpha, tau)
        return hit

    def cases(self):
        for alpha in compositions(self.max_n, self.max_part):
            for tau in row_types(len(alpha)):
                yield alpha, tau


def _total(tilings, n: int) -> Polynomial:
    total = Polynomial.zero(n)
    for t in tilings:
        total = total + weight_tile_level(t)
    return total


def check_key_identity(sweep: Sweep) -> CheckResult:
    res = CheckResult("tiling sums equal key polynomials")
    for alpha, tau in sweep.cases():
        res.cases += 1
        if _total(sweep.tilings(alpha, tau), len(alpha)) != key_polynomial(alpha):
            res.fail(f"alpha={alpha} tau={tau}")
    return res


def check_dp(sweep: Sweep) -> CheckResult:
    res = CheckResult("transfer-matrix sums equal enumeration sums")
    for alpha, tau in sweep.cases():
        res.cases += 1
        if hpd_polynomial_dp(alpha, tau) != _total(sweep.tilings(alpha, tau), len(alpha)):
            res.fail(f"alpha={alpha} tau={tau}")
    return res


def check_stability(sweep: Sweep, extra: tuple[int, ...] = (1, 2)) -> CheckResult:
    res = CheckResult("sums independent of the grid width")
    for alpha, tau in sweep.cases():
        base = _total(sweep.tilings(alpha, tau), len(alpha))
        for e in extra:
            res.cases += 1
            wider = _total(enumerate_tilings(alpha, tau, max(alpha) + e), len(alpha))
            if wider != base:
                res.fail(f"alpha={alpha} tau={tau} N=max+{e}")
    return res


def check_round_trip(sweep: Sweep) -> CheckResult:
    res = CheckResult("serialize/parse round trip")
    for alpha, tau in sweep.cases():
        for t in sweep.tilings(alpha, tau):
            res.cases += 1
            text = serialize(t)
            back = parse(text)
            if back != t or serialize(back) != text:
                res.fail(f"alpha={alpha} tau={tau}")
    return res


def _index(tilings) -> dict:
    return {t: i for i, t in enumerate(tilings)}


def check_moves(sweep: Sweep) -> tuple[CheckResult, dict]:
    """Flip and swap are weight-preserving involutions between enumerations.

    Also returns the move tables ``(alpha, tau, move) -> list of image
    indices`` reused by :func:`check_transport`.
    """
    res = CheckResult("flip and swap are weight-preserving bijections")
    tables: dict[tuple, list[int]] = {}
    for alpha, tau in sweep.cases():
        source = sweep.tilings(alpha, tau)
        moves = [("flip",)] + [("swap", r) for r in range(len(tau) - 1) if tau[r] != tau[r + 1]]
        for move in moves:
            if move[0] == "flip":
                target_tau = tau[:-1] + ("E" if tau[-1] == "W" else "W")
            else:
                r = move[1]
                target_tau = tau[:r] + tau[r + 1] + tau[r] + tau[r + 2 :]
            target = _index(sweep.tilings(alpha, target_tau))
            images = []
            for t in source:
                res.cases += 1
                try:
                    u = flip_bottom_row(t) if move[0] == "flip" else swap_adjacent(t, move[1])
                    back = flip_bottom_row(u) if move[0] == "flip" else swap_adjacent(u, move[1])
                except Exception as exc:  # report and carry on
                    res.fail(f"alpha={alpha} tau={tau} {move}: {type(exc).__name__}: {exc}")
                    images.append(None)
                    continue
                if back != t:
                    res.fail(f"alpha={alpha} tau={tau} {move}: not an involution")
                if validate_tiling(u):
                    res.fail(f"alpha={alpha} tau={tau} {move}: invalid image")
                if weight_tile_level(u) != weight_tile_level(t):
                    res.fail(f"alpha={alpha} tau={tau} {move}: weight changed")
                images.append(target.get(u))
            if sorted(i for i in images if i is not None) != list(range(len(target))):
                res.fail(f"alpha={alpha} tau={tau} {move}: images do not cover the target set")
            tables[(alpha, tau, move)] = images
    return res, tables


def check_transport(sweep: Sweep, tables: dict, direct_every: int = 1) -> CheckResult:
    """Transport along the fixed schedule is a weight-preserving bijection for every pair of row types.

    The map is composed from the per-move tables of :func:`check_moves`;
    every ``direct_every``-th tiling is also pushed through
    :func:`transport` itself to confirm the composition.
    """
    res = CheckResult("transport is a weight-preserving bijection")
    seen = 0
    for alpha, tau in sweep.cases():
        source = sweep.tilings(alpha, tau)
        weights = Counter(weight_tile_level(t) for t in source)
        for target_tau in row_types(len(tau)):
            res.cases += 1
            targets = sweep.tilings(alpha, target_tau)
            positions = list(range(len(source)))
            cur = tau
            for move in transport_schedule(tau, target_tau):
                images = tables[(alpha, cur, move)]
                positions = [None if p is None else images[p] for p in positions]
                if move[0] == "flip":
                    cur = cur[:-1] + ("E" if cur[-1] == "W" else "W")
                else:
                    r = move[1]
                    cur = cur[:r] + cur[r + 1] + cur[r] + cur[r + 2 :]
            if sorted(p for p in positions if p is not None) != list(range(len(targets))):
                res.fail(f"alpha={alpha} {tau}->{target_tau}: not onto")
                continue
            if Counter(weight_tile_level(t) for t in targets) != weights:
                res.fail(f"alpha={alpha} {tau}->{target_tau}: weight multisets differ")
            for i, t in enumerate(source):
                seen += 1
                if seen % direct_every:
                    continue
                if transport(t, target_tau) != targets[positions[i]]:
                    res.fail(f"alpha={alpha} {tau}->{target_tau}: direct transport disagrees")
    return res


def check_branching(max_n: int, max_part: int) -> CheckResult:
    res = CheckResult("two-sided branching identity")
    for alpha in compositions(max_n, max_part, min_n=2):
        n = len(alpha)
        K = key_polynomial(alpha)
        for m in range(1, n):
            for a in range(n - m + 1):
                for tau in row_types(n - m):
                    if tau.count("W") != a:
                        continue
                    res.cases += 1
                    table = branch_table(alpha, a, m, tau, max(alpha))
                    if table.expand(key_polynomial) != K:
                        res.fail(f"alpha={alpha} a={a} m={m} tau={tau}")
    return res


def run_all(max_n: int, max_part: int, direct_every: int = 1) -> list[CheckResult]:
    sweep = Sweep(max_n, max_part)
    results = [check_key_identity(sweep), check_dp(sweep), check_stability(sweep), check_round_trip(sweep)]
    moves, tables = check_moves(sweep)
    results.append(moves)
    results.append(check_transport(sweep, tables, direct_every))
    results.append(check_branching(max_n, min(max_part, 2)))
    return results
