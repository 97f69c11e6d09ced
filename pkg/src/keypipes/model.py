"""Grids of sub-tiles, boundary labels, validation and weights.

A grid has one row per entry of the type word ``tau`` (``"W"`` or ``"E"``) and
``(N + 1) * n`` sub-columns.  Sub-column ``s`` lies in column ``s // n`` at
sub-position ``s % n + 1``; a vertical strand there can only carry that color.
Rows are 0-indexed from the top in code.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import NamedTuple, Optional

from .poly import Polynomial, check_composition

Color = Optional[int]


class Kind(str, Enum):
    EMPTY = "empty"
    VERTICAL = "vertical"
    HORIZONTAL = "horizontal"
    CROSSING = "crossing"
    ELBOW_LT = "elbow_lt"  # left wall to ceiling; west only
    ELBOW_RB = "elbow_rb"  # right wall to floor; west only
    ELBOW_RT = "elbow_rt"  # right wall to ceiling; east only
    ELBOW_LB = "elbow_lb"  # left wall to floor; east only


class Walls(NamedTuple):
    left: Color
    right: Color
    bottom: Color
    top: Color


class SubTile(NamedTuple):
    """One cell of the grid.

    ``color`` is the pipe of a single-strand cell or the horizontal pipe of a
    crossing; ``vcolor`` is the vertical pipe of a crossing.
    """

    kind: Kind
    color: int = 0
    vcolor: int = 0

    @property
    def walls(self) -> Walls:
        k, c = self.kind, self.color
        if k is Kind.EMPTY:
            return Walls(None, None, None, None)
        if k is Kind.VERTICAL:
            return Walls(None, None, c, c)
        if k is Kind.HORIZONTAL:
            return Walls(c, c, None, None)
        if k is Kind.CROSSING:
            return Walls(c, c, self.vcolor, self.vcolor)
        if k is Kind.ELBOW_LT:
            return Walls(c, None, None, c)
        if k is Kind.ELBOW_RB:
            return Walls(None, c, c, None)
        if k is Kind.ELBOW_RT:
            return Walls(None, c, None, c)
        return Walls(c, None, c, None)

    @property
    def strands(self) -> list[tuple[str, str, int]]:
        """Connected wall pairs as ``(side, side, color)`` with sides in LRBT."""
        k, c = self.kind, self.color
        if k is Kind.EMPTY:
            return []
        if k is Kind.VERTICAL:
            return [("B", "T", c)]
        if k is Kind.HORIZONTAL:
            return [("L", "R", c)]
        if k is Kind.CROSSING:
            return [("L", "R", c), ("B", "T", self.vcolor)]
        return [{
            Kind.ELBOW_LT: ("L", "T", c),
            Kind.ELBOW_RB: ("R", "B", c),
            Kind.ELBOW_RT: ("R", "T", c),
            Kind.ELBOW_LB: ("L", "B", c),
        }[k]]

    @property
    def is_elbow(self) -> bool:
        return self.kind in _ELBOWS

    @property
    def token(self) -> str:
        k = self.kind
        if k is Kind.EMPTY:
            return "."
        if k is Kind.CROSSING:
            return f"+{self.color}/{self.vcolor}"
        return f"{_TOKEN_PREFIX[k]}{self.color}"

    def __repr__(self) -> str:
        return f"SubTile({self.token})"


_ELBOWS = frozenset({Kind.ELBOW_LT, Kind.ELBOW_RB, Kind.ELBOW_RT, Kind.ELBOW_LB})
_TOKEN_PREFIX = {
    Kind.VERTICAL: "|",
    Kind.HORIZONTAL: "-",
    Kind.ELBOW_LT: "J",
    Kind.ELBOW_RB: "F",
    Kind.ELBOW_RT: "L",
    Kind.ELBOW_LB: "G",
}
WEST_ELBOWS = frozenset({Kind.ELBOW_LT, Kind.ELBOW_RB})
EAST_ELBOWS = frozenset({Kind.ELBOW_RT, Kind.ELBOW_LB})

EMPTY = SubTile(Kind.EMPTY)


def V(c: int) -> SubTile:
    return SubTile(Kind.VERTICAL, c)


def H(c: int) -> SubTile:
    return SubTile(Kind.HORIZONTAL, c)


def X(h: int, v: int) -> SubTile:
    return SubTile(Kind.CROSSING, h, v)


def LT(c: int) -> SubTile:
    return SubTile(Kind.ELBOW_LT, c)


def RB(c: int) -> SubTile:
    return SubTile(Kind.ELBOW_RB, c)


def RT(c: int) -> SubTile:
    return SubTile(Kind.ELBOW_RT, c)


def LB(c: int) -> SubTile:
    return SubTile(Kind.ELBOW_LB, c)


def subposition(s: int, n: int) -> int:
    """Color allowed on the floor and ceiling of sub-column ``s``."""
    return s % n + 1


def label_subcolumn(part: int, color: int, n: int) -> int:
    """Sub-column of the ``color``-th ceiling (or floor) of column ``part``."""
    return part * n + color - 1


def check_tau(tau: str) -> str:
    tau = str(tau).upper()
    bad = set(tau) - {"W", "E"}
    if bad:
        raise ValueError(f"row types must be W or E, got {tau!r}")
    return tau


# --------------------------------------------------------------------------
# Boundaries and labels
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class RowLabeling:
    k: int
    label_of_row: tuple[int, ...]
    row_of_label: dict[int, int]


def row_labeling(tau: str, n: int | None = None) -> RowLabeling:
    """Label west rows ``1, 2, ...`` and east rows ``n, n-1, ...`` top-down.

    Rows are returned 0-indexed.  ``n`` defaults to the number of rows.
    """
    tau = check_tau(tau)
    if n is None:
        n = len(tau)
    k = tau.count("W")
    labels = []
    west, east = 1, n
    for t in tau:
        if t == "W":
            labels.append(west)
            west += 1
        else:
            labels.append(east)
            east -= 1
    return RowLabeling(k, tuple(labels), {c: r for r, c in enumerate(labels)})


@dataclass(frozen=True)
class BoundarySpec:
    """Colors on the four sides of a grid.

    ``top`` and ``bottom`` map sub-columns to colors; ``left`` and ``right``
    hold one optional color per row.
    """

    n: int
    N: int
    top: dict[int, int]
    bottom: dict[int, int]
    left: tuple[Color, ...]
    right: tuple[Color, ...]

    def __hash__(self):
        return hash((self.n, self.N, frozenset(self.top.items()), frozenset(self.bottom.items()), self.left, self.right))

    @property
    def rows(self) -> int:
        return len(self.left)

    @property
    def width(self) -> int:
        return (self.N + 1) * self.n

    def check(self) -> None:
        for side in ("top", "bottom"):
            mapping = getattr(self, side)
            colors = list(mapping.values())
            if len(colors) != len(set(colors)):
                raise ValueError(f"{side} boundary repeats a color")
            for s, c in mapping.items():
                if not 0 <= s < self.width:
                    raise ValueError(f"{side} label at sub-column {s} outside the grid")
                if subposition(s, self.n) != c:
                    raise ValueError(f"{side} label {c} at sub-column {s} has sub-position {subposition(s, self.n)}")
        for side in ("left", "right"):
            colors = [c for c in getattr(self, side) if c is not None]
            if len(colors) != len(set(colors)):
                raise ValueError(f"{side} boundary repeats a color")
        if len(self.left) != len(self.right):
            raise ValueError("left and right boundaries disagree on the row count")


def build_boundary(alpha: Sequence[int], tau: str, N: int) -> BoundarySpec:
    alpha = check_composition(alpha)
    tau = check_tau(tau)
    n = len(alpha)
    if len(tau) != n:
        raise ValueError(f"tau has {len(tau)} rows but alpha has {n} parts")
    if n == 0:
        raise ValueError("need at least one color")
    if max(alpha) > N:
        raise ValueError(f"N={N} is smaller than max(alpha)={max(alpha)}")
    labels = row_labeling(tau, n).label_of_row
    left = tuple(c if t == "W" else None for t, c in zip(tau, labels))
    right = tuple(c if t == "E" else None for t, c in zip(tau, labels))
    top = {label_subcolumn(p, i, n): i for i, p in enumerate(alpha, start=1)}
    return BoundarySpec(n, N, top, {}, left, right)


def build_skew_boundary(alpha: Sequence[int], beta: Sequence[int], a: int, tau: str, N: int) -> BoundarySpec:
    alpha = check_composition(alpha)
    beta = check_composition(beta)
    tau = check_tau(tau)
    n, m = len(alpha), len(beta)
    if n == 0:
        raise ValueError("need at least one color")
    if a < 0 or a + m > n:
        raise ValueError(f"need 0 <= a and a + len(beta) <= n, got a={a}, m={m}, n={n}")
    if len(tau) != n - m:
        raise ValueError(f"tau must have n - m = {n - m} rows, got {len(tau)}")
    if tau.count("W") != a:
        raise ValueError(f"tau must contain exactly a={a} W rows")
    if max(alpha + beta) > N:
        raise ValueError(f"N={N} is smaller than the largest part")
    labels = row_labeling(tau, n).label_of_row
    left = tuple(c if t == "W" else None for t, c in zip(tau, labels))
    right = tuple(c if t == "E" else None for t, c in zip(tau, labels))
    top = {label_subcolumn(p, i, n): i for i, p in enumerate(alpha, start=1)}
    bottom = {label_subcolumn(p, a + i, n): a + i for i, p in enumerate(beta, start=1)}
    return BoundarySpec(n, N, top, bottom, left, right)


# --------------------------------------------------------------------------
# Tilings
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Tiling:
    """A filled grid together with the data that fixes its boundary."""

    n: int
    N: int
    tau: str
    alpha: tuple[int, ...]
    cells: tuple[tuple[SubTile, ...], ...]
    beta: tuple[int, ...] | None = None
    a: int = 0

    def __post_init__(self):
        object.__setattr__(self, "tau", check_tau(self.tau))
        object.__setattr__(self, "alpha", tuple(self.alpha))
        object.__setattr__(self, "cells", tuple(tuple(row) for row in self.cells))
        if self.beta is not None:
            object.__setattr__(self, "beta", tuple(self.beta))

    @property
    def rows(self) -> int:
        return len(self.tau)

    @property
    def width(self) -> int:
        return (self.N + 1) * self.n

    @property
    def is_skew(self) -> bool:
        return self.beta is not None

    @cached_property
    def boundary(self) -> BoundarySpec:
        if self.is_skew:
            return build_skew_boundary(self.alpha, self.beta, self.a, self.tau, self.N)
        return build_boundary(self.alpha, self.tau, self.N)

    @cached_property
    def labels(self) -> tuple[int, ...]:
        return row_labeling(self.tau, self.n).label_of_row

    def replace(self, **changes) -> Tiling:
        fields = dict(n=self.n, N=self.N, tau=self.tau, alpha=self.alpha, cells=self.cells, beta=self.beta, a=self.a)
        fields.update(changes)
        return Tiling(**fields)


class Violation(NamedTuple):
    rule: str
    row: int
    col: int
    message: str

    def __str__(self) -> str:
        return f"[{self.rule}] row {self.row}, sub-column {self.col}: {self.message}"


class InvalidTiling(ValueError):
    def __init__(self, violations: Sequence[Violation]):
        self.violations = list(violations)
        lines = "\n".join(str(v) for v in self.violations[:10])
        super().__init__(f"{len(self.violations)} violation(s):\n{lines}")


class DanglingStrand(ValueError):
    def __init__(self, color: int, row: int, col: int, detail: str):
        self.color, self.row, self.col = color, row, col
        super().__init__(f"pipe {color} dangles at row {row}, sub-column {col}: {detail}")


def cell_violations(tile: SubTile, row_type: str, s: int, n: int) -> list[str]:
    """Rules a single cell must satisfy on its own, as ``rule: message`` strings."""
    out = []
    w = tile.walls
    for c in (tile.color, tile.vcolor):
        if tile.kind is not Kind.EMPTY and c and not 1 <= c <= n:
            out.append(f"color-range: color {c} outside 1..{n}")
    p = subposition(s, n)
    for side in ("bottom", "top"):
        c = getattr(w, side)
        if c is not None and c != p:
            out.append(f"floor-ceiling: pipe {c} touches the {side} of sub-position {p}")
    if row_type == "W" and tile.kind in EAST_ELBOWS:
        out.append(f"row-type: east elbow {tile.token} in a west row")
    if row_type == "E" and tile.kind in WEST_ELBOWS:
        out.append(f"row-type: west elbow {tile.token} in an east row")
    if tile.kind is Kind.CROSSING:
        h, v = tile.color, tile.vcolor
        if row_type == "W" and not h < v:
            out.append(f"crossing-order: west crossing needs horizontal < vertical, got {h}/{v}")
        if row_type == "E" and not h > v:
            out.append(f"crossing-order: east crossing needs horizontal > vertical, got {h}/{v}")
    return out


def validate_tiling(t: Tiling) -> list[Violation]:
    """Every rule violation in ``t``; an empty list means the tiling is valid."""
    out: list[Violation] = []
    W, R, n = t.width, t.rows, t.n
    if len(t.cells) != R:
        return [Violation("dimensions", -1, -1, f"expected {R} rows, found {len(t.cells)}")]
    for r, row in enumerate(t.cells):
        if len(row) != W:
            out.append(Violation("dimensions", r, -1, f"expected {W} sub-tiles, found {len(row)}"))
    if out:
        return out
    try:
        bd = t.boundary
        bd.check()
    except ValueError as exc:
        return [Violation("boundary-spec", -1, -1, str(exc))]

    for r in range(R):
        for s in range(W):
            for msg in cell_violations(t.cells[r][s], t.tau[r], s, n):
                rule, _, text = msg.partition(": ")
                out.append(Violation(rule, r, s, text))

    for r in range(R):
        for s in range(W - 1):
            a, b = t.cells[r][s].walls.right, t.cells[r][s + 1].walls.left
            if a != b:
                out.append(Violation("wall-consistency", r, s, f"right wall carries {a}, neighbour's left carries {b}"))
    for r in range(R - 1):
        for s in range(W):
            a, b = t.cells[r][s].walls.bottom, t.cells[r + 1][s].walls.top
            if a != b:
                out.append(Violation("wall-consistency", r, s, f"floor carries {a}, cell below carries {b}"))

    if R == 0:
        if bd.top != bd.bottom:
            out.append(Violation("boundary-mismatch", -1, -1, "empty grid needs identical top and bottom labels"))
        return out
    for r in range(R):
        got = t.cells[r][0].walls.left
        if got != bd.left[r]:
            out.append(Violation("boundary-mismatch", r, 0, f"left wall carries {got}, expected {bd.left[r]}"))
        got = t.cells[r][W - 1].walls.right
        if got != bd.right[r]:
            out.append(Violation("boundary-mismatch", r, W - 1, f"right wall carries {got}, expected {bd.right[r]}"))
    for s in range(W):
        got = t.cells[0][s].walls.top
        if got != bd.top.get(s):
            out.append(Violation("boundary-mismatch", 0, s, f"top wall carries {got}, expected {bd.top.get(s)}"))
        got = t.cells[R - 1][s].walls.bottom
        if got != bd.bottom.get(s):
            out.append(Violation("boundary-mismatch", R - 1, s, f"bottom wall carries {got}, expected {bd.bottom.get(s)}"))

    if not out:
        try:
            trace_pipes(t)
        except DanglingStrand as exc:
            out.append(Violation("pipe-completeness", exc.row, exc.col, str(exc)))
    return out


def ensure_valid(t: Tiling) -> Tiling:
    violations = validate_tiling(t)
    if violations:
        raise InvalidTiling(violations)
    return t


# --------------------------------------------------------------------------
# Pipes
# --------------------------------------------------------------------------

# Walls are ("v", row, x) for the vertical wall left of sub-column x, and
# ("h", y, s) for the horizontal wall above row y (y == rows is the floor).
Wall = tuple[str, int, int]

_STEP = {"L": (0, -1, "R"), "R": (0, 1, "L"), "T": (-1, 0, "B"), "B": (1, 0, "T")}


def _wall_of(r: int, s: int, side: str) -> Wall:
    if side == "L":
        return ("v", r, s)
    if side == "R":
        return ("v", r, s + 1)
    if side == "T":
        return ("h", r, s)
    return ("h", r + 1, s)


def trace_pipes(t: Tiling) -> dict[int, list[Wall]]:
    """Follow every pipe from its source wall to the ceiling.

    Returns color -> ordered walls crossed.  Raises :class:`DanglingStrand`
    if a path stops inside the grid, leaves through the wrong wall, or if some
    strand is not on any path.
    """
    bd = t.boundary
    R, W = t.rows, t.width
    sources: list[tuple[int, int, int, str]] = []  # color, row, col, entry side
    for r in range(R):
        if bd.left[r] is not None:
            sources.append((bd.left[r], r, 0, "L"))
        if bd.right[r] is not None:
            sources.append((bd.right[r], r, W - 1, "R"))
    for s, c in sorted(bd.bottom.items()):
        sources.append((c, R - 1, s, "B"))

    paths: dict[int, list[Wall]] = {}
    used: set[tuple[int, int, int]] = set()
    if R == 0:
        for s, c in bd.bottom.items():
            if bd.top.get(s) != c:
                raise DanglingStrand(c, 0, s, "empty grid with mismatched labels")
            paths[c] = [("h", 0, s)]
        return paths

    for color, r, s, side in sorted(sources):
        path = [_wall_of(r, s, side)]
        while True:
            if not (0 <= r < R and 0 <= s < W):
                raise DanglingStrand(color, r, s, "left the grid through a side or floor")
            tile = t.cells[r][s]
            match = [(k, st) for k, st in enumerate(tile.strands) if side in st[:2]]
            if not match:
                raise DanglingStrand(color, r, s, f"no strand on the {side} side of {tile.token}")
            k, (s1, s2, c) = match[0]
            if c != color:
                raise DanglingStrand(color, r, s, f"strand has color {c}")
            if (r, s, k) in used:
                raise DanglingStrand(color, r, s, "strand visited twice")
            used.add((r, s, k))
            exit_side = s2 if side == s1 else s1
            path.append(_wall_of(r, s, exit_side))
            dr, ds, side = _STEP[exit_side]
            r, s = r + dr, s + ds
            if r < 0:
                if bd.top.get(s) != color:
                    raise DanglingStrand(color, 0, s, "reached the ceiling at the wrong sub-column")
                break
        paths[color] = path

    for r in range(R):
        for s in range(W):
            for k, (_, _, c) in enumerate(t.cells[r][s].strands):
                if (r, s, k) not in used:
                    raise DanglingStrand(c, r, s, "strand not connected to any source")
    missing = set(bd.top.values()) - set(paths)
    if missing:
        c = min(missing)
        s = next(s for s, col in bd.top.items() if col == c)
        raise DanglingStrand(c, 0, s, "ceiling label without a pipe")
    return paths


# --------------------------------------------------------------------------
# Weights
# --------------------------------------------------------------------------


def weight_tile_level(t: Tiling) -> Polynomial:
    """Weight from pipe paths: count tile right walls touched (W) or missed (E)."""
    crossed = {w for path in trace_pipes(t).values() for w in path}
    exps = [0] * t.n
    for r, (rtype, label) in enumerate(zip(t.tau, t.labels)):
        for col in range(t.N + 1):
            touched = ("v", r, (col + 1) * t.n) in crossed
            if touched == (rtype == "W"):
                exps[label - 1] += 1
    return Polynomial.monomial(exps)


_WEST_WEIGHTY = frozenset({Kind.ELBOW_RB, Kind.HORIZONTAL, Kind.CROSSING})
_EAST_WEIGHTY = frozenset({Kind.ELBOW_LB, Kind.VERTICAL, Kind.EMPTY})


def weight_subtile_level(t: Tiling) -> Polynomial:
    """Weight as a product over the last sub-tile of every column."""
    exps = [0] * t.n
    for r, (rtype, label) in enumerate(zip(t.tau, t.labels)):
        weighty = _WEST_WEIGHTY if rtype == "W" else _EAST_WEIGHTY
        for s in range(t.n - 1, t.width, t.n):
            if t.cells[r][s].kind in weighty:
                exps[label - 1] += 1
    return Polynomial.monomial(exps)


def row_weight_exponent(row: Sequence[SubTile], row_type: str, n: int) -> int:
    weighty = _WEST_WEIGHTY if row_type == "W" else _EAST_WEIGHTY
    return sum(1 for s in range(n - 1, len(row), n) if row[s].kind in weighty)
