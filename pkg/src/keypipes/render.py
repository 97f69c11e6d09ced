"""ASCII and SVG drawings of tilings.

Every sub-tile is drawn as a 3x3 block.  Tile boundaries get a separator
column whose middle character is ``*`` when that wall contributes to the
weight, ``-`` when a pipe merely crosses it and ``:`` otherwise.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

from .model import Kind, SubTile, Tiling

_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"

_UNICODE = str.maketrans({"-": "─", "|": "│", "+": "┼", ":": "┊", "*": "•"})


def _char(c: int | None) -> str:
    if c is None:
        return " "
    return _DIGITS[c] if c < len(_DIGITS) else "?"


def _block(tile: SubTile) -> tuple[str, str, str]:
    c = _char(tile.color) if tile.kind is not Kind.EMPTY else " "
    k = tile.kind
    if k is Kind.EMPTY:
        return "   ", "   ", "   "
    if k is Kind.VERTICAL:
        return " | ", f" {c} ", " | "
    if k is Kind.HORIZONTAL:
        return "   ", f"-{c}-", "   "
    if k is Kind.CROSSING:
        return f" {_char(tile.vcolor)} ", f"{c}+-", " | "
    if k is Kind.ELBOW_LT:
        return " | ", f"-{c} ", "   "
    if k is Kind.ELBOW_RB:
        return "   ", f" {c}-", " | "
    if k is Kind.ELBOW_RT:
        return " | ", f" {c}-", "   "
    return "   ", f"-{c} ", " | "  # ELBOW_LB


def weighted_walls(t: Tiling) -> list[list[bool]]:
    """Per row, per tile: does the tile's right wall contribute to the weight."""
    out = []
    n = t.n
    for row, rtype in zip(t.cells, t.tau):
        flags = []
        for j in range(t.N + 1):
            touched = row[j * n + n - 1].walls.right is not None
            flags.append(touched if rtype == "W" else not touched)
        out.append(flags)
    return out


def render_ascii(t: Tiling, unicode: bool = False) -> str:
    n = t.n
    bd = t.boundary
    dots = weighted_walls(t)

    def label_line(mapping) -> str:
        chars = [" ", ":"]
        for s in range(t.width):
            chars.append(f" {_char(mapping.get(s))} ")
            if s % n == n - 1:
                chars.append(":")
        return "".join(chars).rstrip()

    lines = [label_line(bd.top)]
    for r, row in enumerate(t.cells):
        blocks = [_block(cell) for cell in row]
        for k in range(3):
            left = bd.left[r]
            if k == 1:
                parts = [_char(left), "-" if left is not None else ":"]
            else:
                parts = [" ", ":"]
            for s, blk in enumerate(blocks):
                parts.append(blk[k])
                if s % n == n - 1:
                    if k != 1:
                        parts.append(":")
                    elif dots[r][s // n]:
                        parts.append("*")
                    elif row[s].walls.right is not None:
                        parts.append("-")
                    else:
                        parts.append(":")
            if k == 1:
                parts.append(f"{_char(bd.right[r])} {t.tau[r]}{t.labels[r]}")
            lines.append("".join(parts).rstrip())
    if bd.bottom:
        lines.append(label_line(bd.bottom))
    text = "\n".join(lines) + "\n"
    return text.translate(_UNICODE) if unicode else text


# --------------------------------------------------------------------------
# SVG
# --------------------------------------------------------------------------

CELL = 20
MARGIN = 30
_PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22",
)


def _color(c: int) -> str:
    return _PALETTE[(c - 1) % len(_PALETTE)]


def _segments(tile: SubTile, x: int, y: int) -> list[tuple[int, tuple[int, int], tuple[int, int]]]:
    """(color, start, end) line segments of one sub-tile, in pixel coordinates."""
    h = CELL // 2
    cx, cy = x + h, y + h
    west, east, north, south = (x, cy), (x + CELL, cy), (cx, y), (cx, y + CELL)
    center = (cx, cy)
    k, c = tile.kind, tile.color
    if k is Kind.EMPTY:
        return []
    if k is Kind.VERTICAL:
        return [(c, north, south)]
    if k is Kind.HORIZONTAL:
        return [(c, west, east)]
    if k is Kind.CROSSING:
        return [(c, west, east), (tile.vcolor, north, south)]
    ends = {
        Kind.ELBOW_LT: (west, north),
        Kind.ELBOW_RB: (east, south),
        Kind.ELBOW_RT: (east, north),
        Kind.ELBOW_LB: (west, south),
    }[k]
    return [(c, ends[0], center), (c, center, ends[1])]


def render_svg(t: Tiling) -> str:
    n = t.n
    width = t.width * CELL + 2 * MARGIN
    height = t.rows * CELL + 2 * MARGIN
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        '<g stroke="#dddddd" stroke-width="1">',
    ]
    for s in range(t.width + 1):
        x = MARGIN + s * CELL
        if s % n:
            out.append(f'<line x1="{x}" y1="{MARGIN}" x2="{x}" y2="{MARGIN + t.rows * CELL}"/>')
    out.append("</g>")
    out.append('<g stroke="black" stroke-width="2">')
    for s in range(0, t.width + 1, n):
        x = MARGIN + s * CELL
        out.append(f'<line x1="{x}" y1="{MARGIN}" x2="{x}" y2="{MARGIN + t.rows * CELL}"/>')
    for r in range(t.rows + 1):
        y = MARGIN + r * CELL
        out.append(f'<line x1="{MARGIN}" y1="{y}" x2="{MARGIN + t.width * CELL}" y2="{y}"/>')
    out.append("</g>")
    out.append('<g stroke-width="3" stroke-linecap="round" fill="none">')
    for r, row in enumerate(t.cells):
        for s, cell in enumerate(row):
            for c, (x1, y1), (x2, y2) in _segments(cell, MARGIN + s * CELL, MARGIN + r * CELL):
                out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{_color(c)}"/>')
    out.append("</g>")
    out.append('<g fill="black">')
    for r, flags in enumerate(weighted_walls(t)):
        for j, dot in enumerate(flags):
            if dot:
                cx = MARGIN + (j + 1) * n * CELL
                cy = MARGIN + r * CELL + CELL // 2
                out.append(f'<circle cx="{cx}" cy="{cy}" r="3"/>')
    out.append("</g>")
    out.append('<g font-family="monospace" font-size="12" text-anchor="middle">')
    bd = t.boundary
    for s, c in sorted(bd.top.items()):
        out.append(f'<text x="{MARGIN + s * CELL + CELL // 2}" y="{MARGIN - 8}">{c}</text>')
    for s, c in sorted(bd.bottom.items()):
        out.append(f'<text x="{MARGIN + s * CELL + CELL // 2}" y="{MARGIN + t.rows * CELL + 18}">{c}</text>')
    for r in range(t.rows):
        y = MARGIN + r * CELL + CELL // 2 + 4
        label = escape(f"{t.tau[r]}{t.labels[r]}")
        out.append(f'<text x="{MARGIN // 2}" y="{y}">{label}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
