"""Text grids and ASCII PBM (P1) images for 0/1 and +-1 matrices.

grid01  one line per row, characters ``0``/``1``
gridpm  one line per row, characters ``+``/``-``
pbm     plain PBM ``P1``; black (1) is entry 1, white (0) is 0 or -1
"""

from __future__ import annotations

from pathlib import Path

from .errors import BadSymbol, NonSquare, ParseError
from .exact import Matrix01, MatrixPM1

KINDS = ("grid01", "gridpm", "pbm")
MODES = ("01", "pm1")

_GRID_SYMBOLS = {
    "grid01": {"0": 0, "1": 1},
    "gridpm": {"+": 1, "-": -1},
}


def _text(data) -> str:
    if isinstance(data, (bytes, bytearray)):
        try:
            return data.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError(f"non-ASCII byte at offset {exc.start}") from None
    return data


def _check_kind(kind, mode):
    if kind not in KINDS:
        raise ValueError(f"unknown matrix format {kind!r}; expected one of {KINDS}")
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")


def _parse_grid(text: str, kind: str):
    symbols = _GRID_SYMBOLS[kind]
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError("empty input", line=1)
    rows = []
    width = None
    for ln, line in enumerate(lines, start=1):
        line = line.rstrip()
        if not line:
            raise ParseError("blank line inside matrix", line=ln)
        row = []
        for col, ch in enumerate(line, start=1):
            if ch not in symbols:
                raise BadSymbol(f"unexpected symbol {ch!r} for {kind}", line=ln, column=col)
            row.append(symbols[ch])
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise NonSquare(f"row has {len(row)} entries, expected {width}", line=ln)
        rows.append(row)
    if len(rows) != width:
        raise NonSquare(f"{len(rows)} rows of length {width}: matrix is not square")
    return Matrix01(rows) if kind == "grid01" else MatrixPM1(rows)


def _pbm_tokens(text: str):
    """Yield (token, line, column), skipping comments and whitespace."""
    for ln, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        col = 0
        while col < len(line):
            if line[col].isspace():
                col += 1
                continue
            start = col
            while col < len(line) and not line[col].isspace():
                col += 1
            yield line[start:col], ln, start + 1


def _parse_pbm(text: str, mode: str):
    tokens = list(_pbm_tokens(text))
    if not tokens or tokens[0][0] != "P1":
        raise ParseError("missing P1 magic number (only ASCII PBM is supported)", line=1, column=1)
    header = []
    pos = 1
    while len(header) < 2:
        if pos >= len(tokens):
            raise ParseError("truncated PBM header")
        tok, ln, col = tokens[pos]
        if not tok.isdigit():
            raise ParseError(f"bad PBM dimension {tok!r}", line=ln, column=col)
        header.append(int(tok))
        pos += 1
    width, height = header
    if width != height:
        raise NonSquare(f"PBM is {width}x{height}; matrix must be square")
    if width < 1:
        raise ParseError("PBM has zero size")
    bits = []
    for tok, ln, col in tokens[pos:]:
        # P1 pixels need not be whitespace-separated
        for off, ch in enumerate(tok):
            if ch not in "01":
                raise BadSymbol(f"unexpected PBM pixel {ch!r}", line=ln, column=col + off)
            bits.append((int(ch), ln, col + off))
    if len(bits) != width * height:
        if len(bits) > width * height:
            _, ln, col = bits[width * height]
            raise ParseError(f"more than {width * height} pixels", line=ln, column=col)
        raise ParseError(f"expected {width * height} pixels, found {len(bits)}")
    values = [b for b, _, _ in bits]
    rows = [values[r * width:(r + 1) * width] for r in range(height)]
    if mode == "01":
        return Matrix01(rows)
    return MatrixPM1([[1 if b else -1 for b in r] for r in rows])


def parse_matrix(data, kind: str, mode: str = "01"):
    """Parse bytes or text.  ``mode`` only matters for ``pbm``."""
    _check_kind(kind, mode)
    text = _text(data)
    if kind == "pbm":
        return _parse_pbm(text, mode)
    return _parse_grid(text, kind)


def _mode_of(m) -> str:
    return "pm1" if isinstance(m, MatrixPM1) else "01"


def export_pbm(m, mode: str | None = None) -> bytes:
    mode = mode or _mode_of(m)
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if not m.is_square:
        raise NonSquare("PBM export needs a square matrix")
    n = m.nrows
    lines = ["P1", f"{n} {n}"]
    for r in m.rows:
        lines.append(" ".join("1" if x == 1 else "0" for x in r))
    return ("\n".join(lines) + "\n").encode("ascii")


def serialize_matrix(m, kind: str, mode: str | None = None) -> bytes:
    if kind == "pbm":
        return export_pbm(m, mode)
    _check_kind(kind, "01")
    if kind == "grid01":
        m = m if isinstance(m, Matrix01) else Matrix01(m.rows)
        lines = ["".join(str(x) for x in r) for r in m.rows]
    else:
        m = m if isinstance(m, MatrixPM1) else MatrixPM1(m.rows)
        lines = ["".join("+" if x == 1 else "-" for x in r) for r in m.rows]
    return ("\n".join(lines) + "\n").encode("ascii")


def read_matrix(path, kind: str, mode: str = "01"):
    return parse_matrix(Path(path).read_bytes(), kind, mode)


def write_matrix(m, path, kind: str, mode: str | None = None) -> None:
    Path(path).write_bytes(serialize_matrix(m, kind, mode))
