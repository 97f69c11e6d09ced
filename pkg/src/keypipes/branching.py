"""Two-sided branching of key polynomials through skew grids.

A grid with ``n - m`` rows whose floor carries the labels of ``beta``
(shifted to colors ``a+1 .. a+m``) computes a coefficient ``c(alpha, beta)``
such that::

    key(alpha) = sum over beta of c(alpha, beta) * key(beta)(x_{a+1}, ..., x_{a+m})

Stacking a skew tiling on top of a tiling for ``beta`` (recolored and
re-embedded) gives a tiling for ``alpha``; :func:`unstack` undoes it.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass, field

from .enumeration import _default_N, enumerate_skew, skew_polynomial_dp
from .model import EMPTY, H, Kind, SubTile, Tiling, check_tau, ensure_valid, weight_tile_level
from .poly import Polynomial, check_composition


class SeamMismatch(ValueError):
    """The two halves of a stack disagree along their shared wall."""


def branch_coefficient(
    alpha: Sequence[int], beta: Sequence[int], a: int, tau: str, N: int | None = None, method: str = "enum"
) -> Polynomial:
    """Weighted count of skew tilings from ``alpha`` down to ``beta``."""
    alpha = check_composition(alpha)
    if method == "dp":
        return skew_polynomial_dp(alpha, beta, a, tau, N)
    if method != "enum":
        raise ValueError(f"unknown method {method!r}")
    total = Polynomial.zero(len(alpha))
    for t in enumerate_skew(alpha, beta, a, tau, N):
        total = total + weight_tile_level(t)
    return total


def allowed_variables(n: int, a: int, m: int) -> frozenset[int]:
    return frozenset(range(1, a + 1)) | frozenset(range(a + m + 1, n + 1))


@dataclass(frozen=True)
class BranchTable:
    alpha: tuple[int, ...]
    a: int
    m: int
    tau: str
    N: int
    entries: dict[tuple[int, ...], Polynomial] = field(default_factory=dict)

    def __post_init__(self):
        allowed = allowed_variables(len(self.alpha), self.a, self.m)
        for beta, coeff in self.entries.items():
            if len(beta) != self.m:
                raise ValueError(f"beta {beta} should have {self.m} parts")
            stray = coeff.variables_used() - allowed
            if stray:
                raise ValueError(f"coefficient of {beta} uses disallowed variables {sorted(stray)}")

    def __getitem__(self, beta) -> Polynomial:
        return self.entries.get(tuple(beta), Polynomial.zero(len(self.alpha)))

    def expand(self, key) -> Polynomial:
        """``sum c_beta * key(beta)`` with ``key(beta)`` shifted onto ``x_{a+1..a+m}``."""
        n = len(self.alpha)
        total = Polynomial.zero(n)
        for beta, coeff in sorted(self.entries.items()):
            total = total + coeff * key(beta).embed(n, self.a)
        return total


def branch_table(
    alpha: Sequence[int], a: int, m: int, tau: str, N: int | None = None, method: str = "enum"
) -> BranchTable:
    """Nonzero coefficients for every ``beta`` with ``m`` parts bounded by ``N``."""
    alpha = check_composition(alpha)
    tau = check_tau(tau)
    if N is None:
        N = _default_N(alpha)
    entries = {}
    for beta in itertools.product(range(N + 1), repeat=m):
        coeff = branch_coefficient(alpha, beta, a, tau, N, method)
        if not coeff.is_zero():
            entries[beta] = coeff
    return BranchTable(alpha, a, m, tau, N, entries)


# --------------------------------------------------------------------------
# Stacking
# --------------------------------------------------------------------------


def _recolor(tile: SubTile, shift: int) -> SubTile:
    if tile.kind is Kind.EMPTY:
        return tile
    if tile.kind is Kind.CROSSING:
        return SubTile(tile.kind, tile.color + shift, tile.vcolor + shift)
    return SubTile(tile.kind, tile.color + shift)


def _pad(color) -> SubTile:
    return EMPTY if color is None else H(color)


def stack(upper: Tiling, lower: Tiling) -> Tiling:
    """Glue a skew tiling on top of a tiling of its floor composition."""
    if not upper.is_skew:
        raise SeamMismatch("upper tiling must be skew")
    if upper.N != lower.N:
        raise SeamMismatch(f"upper uses N={upper.N}, lower uses N={lower.N}")
    if lower.is_skew:
        raise SeamMismatch("lower tiling must not be skew")
    if tuple(lower.alpha) != tuple(upper.beta):
        raise SeamMismatch(f"upper floor {upper.beta} differs from lower labels {lower.alpha}")
    n, m, a = upper.n, lower.n, upper.a
    rows = []
    for r, lrow in enumerate(lower.cells):
        # the lower tiling's own left boundary color enters the first tile
        wall = lower.boundary.left[r]
        wall = None if wall is None else wall + a
        out = []
        for j in range(lower.N + 1):
            out.extend(_pad(wall) for _ in range(a))
            for q in range(m):
                tile = _recolor(lrow[j * m + q], a)
                out.append(tile)
                wall = tile.walls.right
            out.extend(_pad(wall) for _ in range(n - a - m))
        rows.append(tuple(out))
    t = Tiling(n, upper.N, upper.tau + lower.tau, upper.alpha, upper.cells + tuple(rows))
    return ensure_valid(t)


def unstack(t: Tiling, m: int) -> tuple[Tiling, Tiling]:
    """Split the bottom ``m`` rows off ``t``; inverse of :func:`stack`."""
    if t.is_skew:
        raise ValueError("cannot unstack a skew tiling")
    n = t.n
    if not 0 <= m <= n:
        raise ValueError(f"m={m} outside 0..{n}")
    k = n - m
    upper_tau = t.tau[:k]
    a = upper_tau.count("W")
    seam = t.cells[k - 1] if k else None
    beta = [0] * m
    for s in range(t.width):
        c = seam[s].walls.bottom if seam is not None else t.boundary.top.get(s)
        if c is None:
            continue
        if not a < c <= a + m:
            raise SeamMismatch(f"color {c} crosses the seam outside colors {a + 1}..{a + m}")
        beta[c - a - 1] = s // n
    beta = tuple(beta)
    upper = ensure_valid(Tiling(n, t.N, upper_tau, t.alpha, t.cells[:k], beta=beta, a=a))
    rows = []
    for row in t.cells[k:]:
        out = []
        for j in range(t.N + 1):
            tile_cells = row[j * n : (j + 1) * n]
            for q, cell in enumerate(tile_cells):
                if a <= q < a + m:
                    out.append(_recolor(cell, -a))
                elif cell.kind not in (Kind.EMPTY, Kind.HORIZONTAL):
                    raise SeamMismatch(f"sub-position {q + 1} outside the lower block holds {cell.token}")
        rows.append(tuple(out))
    lower = ensure_valid(Tiling(m, t.N, t.tau[k:], beta, tuple(rows)))
    return upper, lower
