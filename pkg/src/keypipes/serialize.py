"""Plain-text tiling documents.

Format::

    HPD v1
    n=4 N=3 tau=WEEW alpha=1,3,0,2
    -1 -1 +1/3 -1 J1 F2 ...
    ...

Skew tilings append ``beta=<ints> a=<int>`` to the header.  Tokens: ``.``
empty, ``|c`` vertical, ``-c`` horizontal, ``+h/v`` crossing, ``Jc`` left to
ceiling, ``Fc`` right to floor, ``Lc`` right to ceiling, ``Gc`` left to floor.
"""

from __future__ import annotations

import re

from .model import EMPTY, Kind, SubTile, Tiling, Violation, validate_tiling

MAGIC = "HPD v1"


class DocumentError(ValueError):
    """Base class for problems reading a tiling document."""


class LexicalError(DocumentError):
    def __init__(self, line: int, column: int, message: str):
        self.line, self.column = line, column
        super().__init__(f"line {line}, column {column}: {message}")


class DimensionError(DocumentError):
    pass


class ValidationFailure(DocumentError):
    def __init__(self, violations: list[Violation], tiling: Tiling):
        self.violations = violations
        self.tiling = tiling
        rules = sorted({v.rule for v in violations})
        detail = "\n".join(str(v) for v in violations[:10])
        super().__init__(f"tiling violates {', '.join(rules)}:\n{detail}")


def _ints(values) -> str:
    return ",".join(str(v) for v in values)


def serialize(t: Tiling) -> str:
    header = f"n={t.n} N={t.N} tau={t.tau} alpha={_ints(t.alpha)}"
    if t.beta is not None:
        header += f" beta={_ints(t.beta)} a={t.a}"
    lines = [MAGIC, header]
    lines.extend(" ".join(cell.token for cell in row) for row in t.cells)
    return "\n".join(lines) + "\n"


_PREFIX = {"|": Kind.VERTICAL, "-": Kind.HORIZONTAL, "J": Kind.ELBOW_LT, "F": Kind.ELBOW_RB, "L": Kind.ELBOW_RT, "G": Kind.ELBOW_LB}
_SINGLE = re.compile(r"([|\-JFLG])([1-9][0-9]*)")
_CROSS = re.compile(r"\+([1-9][0-9]*)/([1-9][0-9]*)")


def parse_token(token: str, line: int = 0, column: int = 0) -> SubTile:
    if token == ".":
        return EMPTY
    m = _SINGLE.fullmatch(token)
    if m:
        return SubTile(_PREFIX[m.group(1)], int(m.group(2)))
    m = _CROSS.fullmatch(token)
    if m:
        return SubTile(Kind.CROSSING, int(m.group(1)), int(m.group(2)))
    raise LexicalError(line, column, f"unknown token {token!r}")


_HEADER_KEYS = ("n", "N", "tau", "alpha", "beta", "a")


def _parse_header(line: str, lineno: int) -> dict:
    fields: dict[str, str] = {}
    col = 1
    for part in line.split(" "):
        key, eq, value = part.partition("=")
        if not eq or key not in _HEADER_KEYS or key in fields:
            raise LexicalError(lineno, col, f"bad header field {part!r}")
        fields[key] = value
        col += len(part) + 1
    for key in ("n", "N", "tau", "alpha"):
        if key not in fields:
            raise LexicalError(lineno, 1, f"header is missing {key}=")
    if ("beta" in fields) != ("a" in fields):
        raise LexicalError(lineno, 1, "skew header needs both beta= and a=")

    def ints(key):
        text = fields[key]
        if text == "":
            return ()
        if not re.fullmatch(r"\d+(,\d+)*", text):
            raise LexicalError(lineno, line.index(f"{key}=") + 1, f"{key} must be comma-separated integers")
        return tuple(int(x) for x in text.split(","))

    if not re.fullmatch(r"\d+", fields["n"]) or not re.fullmatch(r"\d+", fields["N"]):
        raise LexicalError(lineno, 1, "n and N must be integers")
    if not re.fullmatch(r"[WE]*", fields["tau"]):
        raise LexicalError(lineno, line.index("tau=") + 1, "tau must be a W/E word")
    out = dict(n=int(fields["n"]), N=int(fields["N"]), tau=fields["tau"], alpha=ints("alpha"))
    if "beta" in fields:
        if not re.fullmatch(r"\d+", fields["a"]):
            raise LexicalError(lineno, line.index("a=") + 1, "a must be an integer")
        out["beta"] = ints("beta")
        out["a"] = int(fields["a"])
    return out


def parse(text: str, validate: bool = True) -> Tiling:
    """Read a document produced by :func:`serialize`.

    Raises :class:`LexicalError`, :class:`DimensionError` or
    :class:`ValidationFailure` (the latter only when ``validate`` is true).
    """
    lines = text.splitlines()
    if not lines or lines[0].strip() != MAGIC:
        raise LexicalError(1, 1, f"expected {MAGIC!r}")
    if len(lines) < 2:
        raise LexicalError(2, 1, "missing header line")
    header = _parse_header(lines[1].strip(), 2)
    n, N, tau = header["n"], header["N"], header["tau"]
    body = lines[2:]
    while body and not body[-1].strip():
        body.pop()
    if len(header["alpha"]) != n:
        raise DimensionError(f"alpha has {len(header['alpha'])} parts but n={n}")
    if len(body) != len(tau):
        raise DimensionError(f"expected {len(tau)} rows, found {len(body)}")
    width = (N + 1) * n
    cells = []
    for r, line in enumerate(body):
        lineno = r + 3
        row = []
        col = 1
        for token in line.split(" "):
            if token == "":
                raise LexicalError(lineno, col, "empty token")
            row.append(parse_token(token, lineno, col))
            col += len(token) + 1
        if len(row) != width:
            raise DimensionError(f"row {r + 1} has {len(row)} tokens, expected {width}")
        cells.append(tuple(row))
    t = Tiling(n, N, tau, header["alpha"], tuple(cells), beta=header.get("beta"), a=header.get("a", 0))
    if validate:
        violations = validate_tiling(t)
        if violations:
            raise ValidationFailure(violations, t)
    return t
