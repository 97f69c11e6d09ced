"""Weight-preserving bijections between tilings with different row types.

Two moves generate everything: toggling the type of the bottom row, and
swapping two adjacent rows of different types.  The swap works on a two-row
*strip*.  Every pipe of a strip climbs from the lower row to the upper row at
exactly one sub-column (its *turn*), and once the boundary is fixed the
turns are the only freedom.  Sub-columns swept by some pipe between its floor
and ceiling positions are *frozen* and look the same up to a fixed table; the
remaining ones split into maximal intervals whose turns are recorded by a
tuple of overshoots ``(j_1, ..., j_k)`` measured in whole tiles.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Optional

from .model import (
    EMPTY,
    H,
    LB,
    LT,
    RB,
    RT,
    Kind,
    SubTile,
    Tiling,
    V,
    X,
    cell_violations,
)

NEG_INF = -math.inf
POS_INF = math.inf


class InvalidStrip(ValueError):
    pass


class StrandConflict(InvalidStrip):
    """Two strands could not be merged into a legal sub-tile."""


class BijectionError(RuntimeError):
    """Internal inconsistency between the frozen table and the interval codes."""


# --------------------------------------------------------------------------
# Strips
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class StripBoundary:
    """Boundary of a two-row strip.

    Positions are local (``0 .. width - 1``); the color allowed on the floor
    and ceiling at local position ``u`` is ``(start + u) % n + 1``.  ``left``
    enters the west row from the left, ``right`` enters the east row from the
    right; these do not depend on which row is on top.
    """

    n: int
    width: int
    top: dict[int, int]
    bottom: dict[int, int]
    left: Optional[int]
    right: Optional[int]
    start: int = 0

    def __hash__(self):
        return hash((self.n, self.width, frozenset(self.top.items()), frozenset(self.bottom.items()),
                     self.left, self.right, self.start))

    def color_at(self, u: int) -> int:
        return (self.start + u) % self.n + 1

    def is_last_subcolumn(self, u: int) -> bool:
        return (self.start + u) % self.n == self.n - 1

    def check(self) -> None:
        for name in ("top", "bottom"):
            mapping = getattr(self, name)
            if len(set(mapping.values())) != len(mapping):
                raise InvalidStrip(f"{name} boundary repeats a color")
            for u, c in mapping.items():
                if not 0 <= u < self.width:
                    raise InvalidStrip(f"{name} label {c} at {u} outside the strip")
                if self.color_at(u) != c:
                    raise InvalidStrip(f"{name} label {c} at {u} sits at sub-position {self.color_at(u)}")


@dataclass(frozen=True)
class Strip:
    boundary: StripBoundary
    order: str  # row types top then bottom: "WE" or "EW"
    upper: tuple[SubTile, ...]
    lower: tuple[SubTile, ...]

    def __post_init__(self):
        if self.order not in ("WE", "EW"):
            raise InvalidStrip(f"strip order must be WE or EW, got {self.order!r}")
        object.__setattr__(self, "upper", tuple(self.upper))
        object.__setattr__(self, "lower", tuple(self.lower))

    @property
    def west(self) -> tuple[SubTile, ...]:
        return self.upper if self.order == "WE" else self.lower

    @property
    def east(self) -> tuple[SubTile, ...]:
        return self.lower if self.order == "WE" else self.upper

    def weight(self) -> tuple[int, int]:
        """Exponents of the west-row and east-row variables."""
        bd = self.boundary
        west = sum(
            1 for u, cell in enumerate(self.west) if bd.is_last_subcolumn(u) and cell.walls.right is not None
        )
        east = sum(1 for u, cell in enumerate(self.east) if bd.is_last_subcolumn(u) and cell.walls.right is None)
        return west, east


def strip_violations(strip: Strip) -> list[str]:
    """Local rule violations of a strip (empty when the strip is legal)."""
    bd = strip.boundary
    out = []
    try:
        bd.check()
    except InvalidStrip as exc:
        return [str(exc)]
    rows = (strip.upper, strip.lower)
    for row in rows:
        if len(row) != bd.width:
            return [f"row has {len(row)} cells, expected {bd.width}"]
    for which, row, rtype in (("upper", strip.upper, strip.order[0]), ("lower", strip.lower, strip.order[1])):
        for u, cell in enumerate(row):
            for msg in cell_violations(cell, rtype, bd.start + u, bd.n):
                out.append(f"{which} {u}: {msg}")
        for u in range(bd.width - 1):
            if row[u].walls.right != row[u + 1].walls.left:
                out.append(f"{which} {u}: wall mismatch with the next cell")
        left_in = bd.left if rtype == "W" else None
        right_in = bd.right if rtype == "E" else None
        if row[0].walls.left != left_in:
            out.append(f"{which}: left wall carries {row[0].walls.left}, expected {left_in}")
        if row[-1].walls.right != right_in:
            out.append(f"{which}: right wall carries {row[-1].walls.right}, expected {right_in}")
    for u in range(bd.width):
        if strip.upper[u].walls.bottom != strip.lower[u].walls.top:
            out.append(f"{u}: rows disagree on the middle wall")
        if strip.upper[u].walls.top != bd.top.get(u):
            out.append(f"{u}: ceiling carries {strip.upper[u].walls.top}, expected {bd.top.get(u)}")
        if strip.lower[u].walls.bottom != bd.bottom.get(u):
            out.append(f"{u}: floor carries {strip.lower[u].walls.bottom}, expected {bd.bottom.get(u)}")
    return out


# --------------------------------------------------------------------------
# Frozen / critical analysis
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class MaximalInterval:
    criticals: tuple[int, ...]  # m_0 < ... < m_k
    bounds: tuple[int, ...]  # N_i = floor(|I_i| / n), i = 1..k
    w: int  # last sub-columns of a column inside [m_0, m_k)

    @property
    def k(self) -> int:
        return len(self.criticals) - 1

    @property
    def gaps(self) -> tuple[int, ...]:
        m = self.criticals
        return tuple(m[i] - m[i - 1] - 1 for i in range(1, len(m)))


@dataclass(frozen=True)
class StripAnalysis:
    source: dict[int, float]
    target: dict[int, int]
    frozen: frozenset[int]
    critical: tuple[tuple[int, str], ...]  # (position, "left-end" | "middle" | "right-end" | "isolated")
    intervals: tuple[MaximalInterval, ...]

    def frozen_by(self, u: int) -> list[int]:
        """Colors whose floor-to-ceiling span strictly contains ``u``."""
        return [
            c
            for c, t in self.target.items()
            if min(self.source[c], t) < u < max(self.source[c], t)
        ]


SwapCode = tuple[tuple[int, ...], ...]


def analyze_strip(strip: Strip | StripBoundary) -> StripAnalysis:
    bd = strip.boundary if isinstance(strip, Strip) else strip
    bd.check()
    source: dict[int, float] = {c: u for u, c in bd.bottom.items()}
    if bd.left is not None:
        if bd.left in source:
            raise InvalidStrip(f"color {bd.left} enters both from the left and the floor")
        source[bd.left] = NEG_INF
    if bd.right is not None:
        if bd.right in source:
            raise InvalidStrip(f"color {bd.right} enters both from the right and the floor")
        source[bd.right] = POS_INF
    target = {c: u for u, c in bd.top.items()}
    if set(source) != set(target):
        raise InvalidStrip(f"pipes entering {sorted(source)} and leaving {sorted(target)} differ")

    frozen = set()
    for c, t in target.items():
        lo, hi = sorted((source[c], t))
        first = 0 if lo == NEG_INF else int(lo) + 1
        last = bd.width - 1 if hi == POS_INF else int(hi) - 1
        frozen.update(range(first, last + 1))
    ends = {int(x) for x in source.values() if math.isfinite(x)} | set(target.values())

    critical = []
    intervals = []
    u = 0
    while u < bd.width:
        if u in frozen:
            u += 1
            continue
        run_start = u
        while u < bd.width and u not in frozen:
            u += 1
        run = range(run_start, u)
        ms = [x for x in run if x in ends]
        if not ms or ms[0] != run.start or ms[-1] != run.stop - 1:
            raise InvalidStrip(f"unfrozen run {run.start}..{run.stop - 1} does not end at critical sub-columns")
        for x in ms:
            if len(ms) == 1:
                kind = "isolated"
            elif x == ms[0]:
                kind = "left-end"
            elif x == ms[-1]:
                kind = "right-end"
            else:
                kind = "middle"
            critical.append((x, kind))
        bounds = tuple((ms[i] - ms[i - 1] - 1) // bd.n for i in range(1, len(ms)))
        w = sum(1 for x in range(ms[0], ms[-1]) if bd.is_last_subcolumn(x))
        intervals.append(MaximalInterval(tuple(ms), bounds, w))
    return StripAnalysis(source, target, frozenset(frozen), tuple(critical), tuple(intervals))


# --------------------------------------------------------------------------
# Decoding and encoding
# --------------------------------------------------------------------------


def _turns(strip: Strip) -> dict[int, list[int]]:
    """Color -> local positions where it climbs from the lower row to the upper row."""
    out: dict[int, list[int]] = {}
    for u, cell in enumerate(strip.lower):
        c = cell.walls.top
        if c is not None:
            out.setdefault(c, []).append(u)
    return out


def decode_strip(strip: Strip, analysis: StripAnalysis | None = None) -> SwapCode:
    """Read the overshoot tuple of every maximal unfrozen interval."""
    bd = strip.boundary
    if analysis is None:
        analysis = analyze_strip(strip)
    turns = _turns(strip)
    code = []
    for iv in analysis.intervals:
        m = iv.criticals
        js = []
        for i in range(1, len(m)):
            if strip.order == "WE":
                anchor, lo, hi = m[i], m[i - 1] + 1, m[i]
            else:
                anchor, lo, hi = m[i - 1], m[i - 1], m[i] - 1
            c = bd.color_at(anchor)
            found = [u for u in turns.get(c, []) if lo <= u <= hi]
            if len(found) != 1:
                raise InvalidStrip(f"expected one turn of pipe {c} in {lo}..{hi}, found {found}")
            j, rem = divmod(abs(found[0] - anchor), bd.n)
            if rem:
                raise InvalidStrip(f"turn of pipe {c} at {found[0]} is not a whole number of tiles from {anchor}")
            if j > iv.bounds[i - 1]:
                raise InvalidStrip(f"overshoot {j} exceeds {iv.bounds[i - 1]}")
            js.append(j)
        code.append(tuple(js))
    return tuple(code)


def _turn_positions(bd: StripBoundary, order: str, analysis: StripAnalysis, code: SwapCode) -> dict[int, int]:
    src, tgt = analysis.source, analysis.target
    if len(code) != len(analysis.intervals):
        raise InvalidStrip(f"code has {len(code)} entries for {len(analysis.intervals)} intervals")
    turns: dict[int, int] = {}
    for c, t in tgt.items():
        if order == "WE" and c != bd.left:
            turns[c] = int(min(src[c], t))
        if order == "EW" and c != bd.right:
            turns[c] = int(max(src[c], t))
    for iv, js in zip(analysis.intervals, code):
        m = iv.criticals
        if len(js) != iv.k:
            raise InvalidStrip(f"interval at {m[0]} needs {iv.k} entries, got {len(js)}")
        for i, j in enumerate(js, start=1):
            if not 0 <= j <= iv.bounds[i - 1]:
                raise InvalidStrip(f"entry {j} outside 0..{iv.bounds[i - 1]}")
            anchor = m[i] if order == "WE" else m[i - 1]
            c = bd.color_at(anchor)
            if turns.get(c) != anchor:
                raise InvalidStrip(f"pipe {c} does not have its turning end at {anchor}")
            turns[c] = anchor - bd.n * j if order == "WE" else anchor + bd.n * j
    return turns


def _run(pieces: dict[int, list], lo: int, hi: int, c: int, first: Kind | None, last: Kind | None) -> None:
    """Lay pipe ``c`` along one row from ``lo`` to ``hi`` (inclusive).

    ``first``/``last`` are the cell kinds at the ends; ``None`` means the run
    continues through the strip edge.
    """
    for u in range(lo, hi + 1):
        if u == lo and first is not None:
            pieces.setdefault(u, []).append((first, c))
        elif u == hi and last is not None:
            pieces.setdefault(u, []).append((last, c))
        else:
            pieces.setdefault(u, []).append((Kind.HORIZONTAL, c))


def _climb(pieces: dict[int, list], frm: int, to: int, c: int, row_type: str) -> None:
    """Pipe ``c`` enters a row through the floor at ``frm`` and leaves through the ceiling at ``to``."""
    if frm == to:
        pieces.setdefault(frm, []).append((Kind.VERTICAL, c))
    elif row_type == "W":
        if to < frm:
            raise StrandConflict(f"pipe {c} would move left in a west row")
        _run(pieces, frm, to, c, Kind.ELBOW_RB, Kind.ELBOW_LT)
    else:
        if to > frm:
            raise StrandConflict(f"pipe {c} would move right in an east row")
        _run(pieces, to, frm, c, Kind.ELBOW_RT, Kind.ELBOW_LB)


def _merge(pieces: list, row_type: str, u: int, bd: StripBoundary) -> SubTile:
    kinds = sorted(pieces, key=lambda kc: kc[0].value)
    if not kinds:
        return EMPTY
    if len(kinds) == 1:
        kind, c = kinds[0]
        tile = SubTile(kind, c)
    elif len(kinds) == 2 and {k for k, _ in kinds} == {Kind.HORIZONTAL, Kind.VERTICAL}:
        h = next(c for k, c in kinds if k is Kind.HORIZONTAL)
        v = next(c for k, c in kinds if k is Kind.VERTICAL)
        tile = X(h, v)
    else:
        raise StrandConflict(f"cannot merge {kinds} at {u}")
    problems = cell_violations(tile, row_type, bd.start + u, bd.n)
    if problems:
        raise StrandConflict(f"{tile.token} at {u}: {problems[0]}")
    return tile


def encode_strip(boundary: StripBoundary, order: str, code: SwapCode) -> Strip:
    """Build the unique strip of the given order whose intervals carry ``code``."""
    analysis = analyze_strip(boundary)
    bd = boundary
    turns = _turn_positions(bd, order, analysis, code)
    tgt, src = analysis.target, analysis.source
    west: dict[int, list] = {}
    east: dict[int, list] = {}
    # west row is on top for WE and at the bottom for EW
    for c, t in tgt.items():
        if order == "WE":
            if c == bd.left:
                _run(west, 0, t, c, None, Kind.ELBOW_LT)
                continue
            m = turns[c]
            if c == bd.right:
                _run(east, m, bd.width - 1, c, Kind.ELBOW_RT, None)
            else:
                _climb(east, int(src[c]), m, c, "E")
            _climb(west, m, t, c, "W")
        else:
            if c == bd.right:
                _run(east, t, bd.width - 1, c, Kind.ELBOW_RT, None)
                continue
            m = turns[c]
            if c == bd.left:
                _run(west, 0, m, c, None, Kind.ELBOW_LT)
            else:
                _climb(west, int(src[c]), m, c, "W")
            _climb(east, m, t, c, "E")
    for c, m in turns.items():
        if not 0 <= m < bd.width:
            raise StrandConflict(f"pipe {c} would turn outside the strip at {m}")
    west_row = tuple(_merge(west.get(u, []), "W", u, bd) for u in range(bd.width))
    east_row = tuple(_merge(east.get(u, []), "E", u, bd) for u in range(bd.width))
    if order == "WE":
        return Strip(bd, order, west_row, east_row)
    return Strip(bd, order, east_row, west_row)


# --------------------------------------------------------------------------
# Frozen sub-column table
# --------------------------------------------------------------------------


def frozen_pattern(order: str, upper: SubTile, lower: SubTile, west_frozen: bool = True) -> tuple[int, SubTile, SubTile]:
    """Classify a frozen cell pair and return ``(item, image_upper, image_lower)``.

    Items 1-10 follow the same numbering for both orders; the image is the
    pair of the same item in the opposite order.  ``west_frozen`` says
    whether the horizontal pipe in the west row is the one frozen here; it
    only distinguishes items 7 and 8.
    """
    if order == "EW":
        item, w_up, w_low = _classify_ew(upper, lower, west_frozen)
    else:
        item, w_up, w_low = _classify_we(upper, lower, west_frozen)
    return item, w_up, w_low


def _classify_we(up: SubTile, lo: SubTile, west_frozen: bool):
    K = Kind
    if up.kind is K.CROSSING and lo == RT(up.vcolor):
        return 1, RT(up.vcolor), H(up.color)
    if up.kind is K.CROSSING and lo == V(up.vcolor):
        return 2, V(up.vcolor), X(up.color, up.vcolor)
    if up.kind is K.HORIZONTAL and lo.kind is K.ELBOW_LB and lo.color > up.color:
        return 3, LB(lo.color), X(up.color, lo.color)
    if lo.kind is K.CROSSING and up == RB(lo.vcolor):
        return 4, H(lo.color), RB(lo.vcolor)
    if lo.kind is K.CROSSING and up == V(lo.vcolor):
        return 5, X(lo.color, lo.vcolor), V(lo.vcolor)
    if lo.kind is K.HORIZONTAL and up.kind is K.ELBOW_LT and lo.color > up.color:
        return 6, X(lo.color, up.color), LT(up.color)
    if up.kind is K.HORIZONTAL and lo.kind is K.HORIZONTAL:
        return (7 if west_frozen else 8), H(lo.color), H(up.color)
    if up.kind is K.HORIZONTAL and lo == EMPTY:
        return 9, EMPTY, H(up.color)
    if up == EMPTY and lo.kind is K.HORIZONTAL:
        return 10, H(lo.color), EMPTY
    if up.kind is K.CROSSING and lo.kind is K.CROSSING and up.vcolor == lo.vcolor:
        # two frozen horizontals over a straight-through vertical: same as 7/8
        return (7 if west_frozen else 8), X(lo.color, lo.vcolor), X(up.color, up.vcolor)
    raise BijectionError(f"frozen WE pair {up.token}/{lo.token} is not in the table")


def _classify_ew(up: SubTile, lo: SubTile, west_frozen: bool):
    K = Kind
    if up.kind is K.ELBOW_RT and lo.kind is K.HORIZONTAL and up.color > lo.color:
        return 1, X(lo.color, up.color), RT(up.color)
    if lo.kind is K.CROSSING and up == V(lo.vcolor):
        return 2, X(lo.color, lo.vcolor), V(lo.vcolor)
    if lo.kind is K.CROSSING and up == LB(lo.vcolor):
        return 3, H(lo.color), LB(lo.vcolor)
    if up.kind is K.HORIZONTAL and lo.kind is K.ELBOW_RB and lo.color < up.color:
        return 4, RB(lo.color), X(up.color, lo.color)
    if up.kind is K.CROSSING and lo == V(up.vcolor):
        return 5, V(up.vcolor), X(up.color, up.vcolor)
    if up.kind is K.CROSSING and lo == LT(up.vcolor):
        return 6, LT(up.vcolor), H(up.color)
    if up.kind is K.HORIZONTAL and lo.kind is K.HORIZONTAL:
        return (7 if west_frozen else 8), H(lo.color), H(up.color)
    if up == EMPTY and lo.kind is K.HORIZONTAL:
        return 9, H(lo.color), EMPTY
    if up.kind is K.HORIZONTAL and lo == EMPTY:
        return 10, EMPTY, H(up.color)
    if up.kind is K.CROSSING and lo.kind is K.CROSSING and up.vcolor == lo.vcolor:
        # two frozen horizontals over a straight-through vertical: same as 7/8
        return (7 if west_frozen else 8), X(lo.color, lo.vcolor), X(up.color, up.vcolor)
    raise BijectionError(f"frozen EW pair {up.token}/{lo.token} is not in the table")


def _west_frozen(strip: Strip, analysis: StripAnalysis, u: int) -> bool:
    cell = strip.west[u]
    if cell.kind not in (Kind.HORIZONTAL, Kind.CROSSING):
        return False
    return cell.color in analysis.frozen_by(u)


def frozen_items(strip: Strip, analysis: StripAnalysis | None = None) -> dict[int, int]:
    """Table item of every frozen sub-column."""
    if analysis is None:
        analysis = analyze_strip(strip)
    return {
        u: frozen_pattern(strip.order, strip.upper[u], strip.lower[u], _west_frozen(strip, analysis, u))[0]
        for u in sorted(analysis.frozen)
    }


def swap_strip(strip: Strip) -> Strip:
    """Image of ``strip`` under the row swap, checked against the frozen table."""
    analysis = analyze_strip(strip)
    code = decode_strip(strip, analysis)
    image = encode_strip(strip.boundary, strip.order[::-1], code)
    for u in sorted(analysis.frozen):
        item, up, lo = frozen_pattern(strip.order, strip.upper[u], strip.lower[u], _west_frozen(strip, analysis, u))
        if (image.upper[u], image.lower[u]) != (up, lo):
            raise BijectionError(
                f"frozen sub-column {u} (item {item}) maps to {image.upper[u].token}/{image.lower[u].token}, "
                f"table says {up.token}/{lo.token}"
            )
    return image


# --------------------------------------------------------------------------
# Moves on whole tilings
# --------------------------------------------------------------------------


def strip_of(t: Tiling, r: int) -> Strip:
    """The strip formed by rows ``r`` and ``r + 1`` of ``t``."""
    if not 0 <= r < t.rows - 1:
        raise IndexError(f"row {r} has no row below it")
    order = t.tau[r] + t.tau[r + 1]
    if order not in ("WE", "EW"):
        raise ValueError(f"rows {r} and {r + 1} have the same type {t.tau[r]}")
    bd = t.boundary
    west_row = r if order[0] == "W" else r + 1
    east_row = r + 1 if order[0] == "W" else r
    upper, lower = t.cells[r], t.cells[r + 1]
    top = {s: cell.walls.top for s, cell in enumerate(upper) if cell.walls.top is not None}
    bottom = {s: cell.walls.bottom for s, cell in enumerate(lower) if cell.walls.bottom is not None}
    sb = StripBoundary(t.n, t.width, top, bottom, bd.left[west_row], bd.right[east_row])
    return Strip(sb, order, upper, lower)


def swap_adjacent(t: Tiling, r: int) -> Tiling:
    """Swap the types of rows ``r`` and ``r + 1`` (0-indexed), which must differ."""
    strip = strip_of(t, r)
    image = swap_strip(strip)
    cells = list(t.cells)
    cells[r], cells[r + 1] = image.upper, image.lower
    tau = t.tau[:r] + image.order + t.tau[r + 2 :]
    return t.replace(tau=tau, cells=tuple(cells))


def flip_bottom_row(t: Tiling) -> Tiling:
    """Toggle the type of the bottom row by rerouting its only pipe."""
    if t.rows == 0:
        raise ValueError("grid has no rows")
    if t.boundary.bottom:
        raise ValueError("bottom row must have an empty floor")
    r = t.rows - 1
    row = t.cells[r]
    c = t.labels[r]
    elbow = LT(c) if t.tau[r] == "W" else RT(c)
    hits = [s for s, cell in enumerate(row) if cell == elbow]
    if len(hits) != 1:
        raise InvalidStrip(f"bottom row should hold exactly one {elbow.token}, found {len(hits)}")
    x = hits[0]
    if t.tau[r] == "W":
        expected = [H(c)] * x + [elbow] + [EMPTY] * (t.width - x - 1)
        new_row = [EMPTY] * x + [RT(c)] + [H(c)] * (t.width - x - 1)
    else:
        expected = [EMPTY] * x + [elbow] + [H(c)] * (t.width - x - 1)
        new_row = [H(c)] * x + [LT(c)] + [EMPTY] * (t.width - x - 1)
    if list(row) != expected:
        raise InvalidStrip("bottom row carries more than its own pipe")
    new_type = "E" if t.tau[r] == "W" else "W"
    return t.replace(tau=t.tau[:r] + new_type, cells=t.cells[:r] + (tuple(new_row),))


def transport_schedule(tau: str, target: str) -> list[tuple]:
    """Moves turning row types ``tau`` into ``target``.

    First the W count is matched by pushing the lowest surplus row to the
    bottom and flipping it; then rows are fixed from the bottom up, bubbling
    the nearest suitable row down.  Moves are ``("flip",)`` or ``("swap", r)``.
    """
    if len(tau) != len(target):
        raise ValueError("type words differ in length")
    cur = list(tau)
    moves: list[tuple] = []

    def swap(r):
        cur[r], cur[r + 1] = cur[r + 1], cur[r]
        moves.append(("swap", r))

    while cur.count("W") != target.count("W"):
        surplus = "W" if cur.count("W") > target.count("W") else "E"
        pos = max(i for i, x in enumerate(cur) if x == surplus)
        for r in range(pos, len(cur) - 1):
            swap(r)
        cur[-1] = "E" if surplus == "W" else "W"
        moves.append(("flip",))
    for i in range(len(cur) - 1, -1, -1):
        if cur[i] == target[i]:
            continue
        j = max(x for x in range(i) if cur[x] == target[i])
        for r in range(j, i):
            swap(r)
    return moves


def transport(t: Tiling, target: str) -> Tiling:
    """Carry ``t`` to the tiling with row types ``target`` along :func:`transport_schedule`."""
    target = target.upper()
    for move in transport_schedule(t.tau, target):
        t = flip_bottom_row(t) if move[0] == "flip" else swap_adjacent(t, move[1])
    return t
