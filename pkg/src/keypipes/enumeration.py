"""Enumerating tilings and summing their weights.

Both the enumerator and the transfer-matrix evaluator sweep sub-columns left
to right.  The state on a vertical wall is the tuple of horizontal colors
crossing it, one entry per row (``None`` for no pipe).  Inside a sub-column
cells are filled bottom to top, carrying whether the single allowed vertical
color is present.
"""

from __future__ import annotations

import sys
from collections.abc import Sequence

from .model import (
    EMPTY,
    BoundarySpec,
    H,
    LB,
    LT,
    RB,
    RT,
    SubTile,
    Tiling,
    V,
    X,
    build_boundary,
    build_skew_boundary,
    cell_violations,
    check_tau,
    row_labeling,
    subposition,
    weight_tile_level,
)
from .poly import Polynomial, check_composition
from .serialize import serialize

State = tuple  # tuple[int | None, ...], one entry per row


class StateSpaceOverflow(RuntimeError):
    def __init__(self, subcolumn: int, size: int, limit: int):
        self.subcolumn = subcolumn
        super().__init__(f"{size} wall states after sub-column {subcolumn} exceed the limit {limit}")


def cell_choices(row_type: str, p: int, left, below: bool):
    """Legal cells given the color entering on the left and the floor strand.

    Yields ``(tile, right_color, ceiling_strand)``.
    """
    if row_type == "W":
        if left is None:
            if below:
                return [(V(p), None, True), (RB(p), p, False)]
            return [(EMPTY, None, False)]
        if below:
            return [(X(left, p), left, True)] if left < p else []
        out = [(H(left), left, False)]
        if left == p:
            out.append((LT(p), None, True))
        return out
    if left is None:
        if below:
            return [(V(p), None, True)]
        return [(EMPTY, None, False), (RT(p), p, True)]
    if below:
        if left > p:
            return [(X(left, p), left, True)]
        if left == p:
            return [(LB(p), None, False)]
        return []
    return [(H(left), left, False)]


def _default_N(*compositions: Sequence[int]) -> int:
    return max((max(c) for c in compositions if len(c)), default=0)


class _Sweep:
    """Memoised column expansions plus dead-state detection for one grid."""

    def __init__(self, boundary: BoundarySpec, tau: str):
        boundary.check()
        self.bd = boundary
        self.tau = tau
        self.R = len(tau)
        self.W = boundary.width
        self.n = boundary.n
        self._columns: dict[tuple[int, State], list] = {}
        self._alive: dict[tuple[int, State], bool] = {}
        self.final = tuple(boundary.right)

    def columns(self, s: int, state: State):
        key = (s, state)
        hit = self._columns.get(key)
        if hit is not None:
            return hit
        p = subposition(s, self.n)
        want_top = s in self.bd.top
        out = []
        cells = [None] * self.R
        right = [None] * self.R

        def fill(r: int, below: bool):
            if r < 0:
                if below == want_top:
                    out.append((tuple(cells), tuple(right)))
                return
            for tile, rc, up in cell_choices(self.tau[r], p, state[r], below):
                cells[r] = tile
                right[r] = rc
                fill(r - 1, up)

        fill(self.R - 1, s in self.bd.bottom)
        self._columns[key] = out
        return out

    def alive(self, s: int, state: State) -> bool:
        key = (s, state)
        hit = self._alive.get(key)
        if hit is None:
            if s == self.W:
                hit = state == self.final
            else:
                hit = any(self.alive(s + 1, nxt) for _, nxt in self.columns(s, state))
            self._alive[key] = hit
        return hit

    def fillings(self):
        """Yield each valid filling as a list of columns (tuples top to bottom)."""
        start = tuple(self.bd.left)
        if self.R == 0:
            if self.bd.top == self.bd.bottom:
                yield []
            return
        if not self.alive(0, start):
            return
        chosen = []

        def walk(s: int, state: State):
            if s == self.W:
                yield list(chosen)
                return
            for col, nxt in self.columns(s, state):
                if self.alive(s + 1, nxt):
                    chosen.append(col)
                    yield from walk(s + 1, nxt)
                    chosen.pop()

        yield from walk(0, start)


def enumerate_fillings(boundary: BoundarySpec, tau: str) -> list[tuple[tuple[SubTile, ...], ...]]:
    """All valid cell matrices (row-major) for ``boundary`` and row types ``tau``."""
    tau = check_tau(tau)
    if len(tau) != boundary.rows:
        raise ValueError("tau and boundary disagree on the number of rows")
    limit = sys.getrecursionlimit()
    if boundary.width + 100 > limit:
        sys.setrecursionlimit(boundary.width + 1000)
    sweep = _Sweep(boundary, tau)
    out = []
    for cols in sweep.fillings():
        out.append(tuple(tuple(col[r] for col in cols) for r in range(len(tau))))
    return out


def _sorted(tilings: list[Tiling]) -> list[Tiling]:
    return sorted(tilings, key=serialize)


def enumerate_tilings(alpha: Sequence[int], tau: str, N: int | None = None) -> list[Tiling]:
    """Every tiling with top labels from ``alpha`` and row types ``tau``, in canonical order."""
    alpha = check_composition(alpha)
    tau = check_tau(tau)
    if N is None:
        N = _default_N(alpha)
    bd = build_boundary(alpha, tau, N)
    n = len(alpha)
    return _sorted([Tiling(n, N, tau, alpha, cells) for cells in enumerate_fillings(bd, tau)])


def enumerate_skew(alpha: Sequence[int], beta: Sequence[int], a: int, tau: str, N: int | None = None) -> list[Tiling]:
    """Tilings of the ``(n - m)``-row grid whose floor carries ``beta`` shifted by ``a``."""
    alpha = check_composition(alpha)
    beta = check_composition(beta)
    tau = check_tau(tau)
    if N is None:
        N = _default_N(alpha, beta)
    bd = build_skew_boundary(alpha, beta, a, tau, N)
    n = len(alpha)
    return _sorted([Tiling(n, N, tau, alpha, cells, beta=beta, a=a) for cells in enumerate_fillings(bd, tau)])


def hpd_polynomial(alpha: Sequence[int], tau: str, N: int | None = None) -> Polynomial:
    """Sum of tiling weights over the enumerated tilings."""
    alpha = check_composition(alpha)
    total = Polynomial.zero(len(alpha))
    for t in enumerate_tilings(alpha, tau, N):
        total = total + weight_tile_level(t)
    return total


# --------------------------------------------------------------------------
# Transfer-matrix evaluator
# --------------------------------------------------------------------------


def _inventory(p: int, n: int) -> list[SubTile]:
    tiles = [EMPTY, V(p), LT(p), RB(p), RT(p), LB(p)]
    for c in range(1, n + 1):
        tiles.append(H(c))
        if c != p:
            tiles.append(X(c, p))
    return tiles


def _transition_table(n: int, W: int):
    """(row_type, s mod n, left, below) -> [(right, up)] from the cell rules alone."""
    table: dict[tuple, list] = {}
    for q in range(n):
        p = q + 1
        for row_type in "WE":
            for tile in _inventory(p, n):
                if cell_violations(tile, row_type, q, n):
                    continue
                w = tile.walls
                key = (row_type, q, w.left, w.bottom is not None)
                table.setdefault(key, []).append((w.right, w.top is not None))
    return table


def boundary_polynomial_dp(boundary: BoundarySpec, tau: str, labels: Sequence[int], max_states: int = 1_000_000) -> Polynomial:
    """Weighted count of fillings of ``boundary`` without building any tiling."""
    tau = check_tau(tau)
    boundary.check()
    n, R, W = boundary.n, len(tau), boundary.width
    if R == 0:
        return Polynomial.one(n) if boundary.top == boundary.bottom else Polynomial.zero(n)
    table = _transition_table(n, W)
    zero_exps = (0,) * n
    states: dict[State, dict[tuple, int]] = {tuple(boundary.left): {zero_exps: 1}}
    step_cache: dict[tuple, list[State]] = {}

    for s in range(W):
        q = s % n
        bottom = s in boundary.bottom
        top = s in boundary.top
        last = q == n - 1
        nxt: dict[State, dict[tuple, int]] = {}
        for state, poly in states.items():
            key = (q, bottom, top, state)
            targets = step_cache.get(key)
            if targets is None:
                targets = []
                right = [None] * R

                def fill(r: int, below: bool):
                    if r < 0:
                        if below == top:
                            targets.append(tuple(right))
                        return
                    for rc, up in table.get((tau[r], q, state[r], below), ()):
                        right[r] = rc
                        fill(r - 1, up)

                fill(R - 1, bottom)
                step_cache[key] = targets
            for target in targets:
                if last:
                    bump = [0] * n
                    for r in range(R):
                        if (target[r] is not None) == (tau[r] == "W"):
                            bump[labels[r] - 1] += 1
                else:
                    bump = None
                bucket = nxt.setdefault(target, {})
                for exps, c in poly.items():
                    if bump is not None:
                        exps = tuple(e + b for e, b in zip(exps, bump))
                    bucket[exps] = bucket.get(exps, 0) + c
        if len(nxt) > max_states:
            raise StateSpaceOverflow(s, len(nxt), max_states)
        states = nxt

    final = states.get(tuple(boundary.right), {})
    return Polynomial(final, n)


def hpd_polynomial_dp(alpha: Sequence[int], tau: str, N: int | None = None, max_states: int = 1_000_000) -> Polynomial:
    alpha = check_composition(alpha)
    tau = check_tau(tau)
    if N is None:
        N = _default_N(alpha)
    bd = build_boundary(alpha, tau, N)
    return boundary_polynomial_dp(bd, tau, row_labeling(tau, len(alpha)).label_of_row, max_states)


def skew_polynomial_dp(alpha, beta, a: int, tau: str, N: int | None = None, max_states: int = 1_000_000) -> Polynomial:
    alpha = check_composition(alpha)
    beta = check_composition(beta)
    tau = check_tau(tau)
    if N is None:
        N = _default_N(alpha, beta)
    bd = build_skew_boundary(alpha, beta, a, tau, N)
    return boundary_polynomial_dp(bd, tau, row_labeling(tau, len(alpha)).label_of_row, max_states)
