"""Plain-text file formats for codes and generator matrices.

A code file is comment lines ('#') plus one codeword per line as a string
over {0,1}, all the same length. A generator file looks the same but each
line is a generator-matrix row and the file denotes the row space. Output
is canonical: a generated header, then lexicographically sorted lines.
"""

from __future__ import annotations

import warnings

from .core import Code, Word
from .gf2 import Gf2Basis, rref, span_enumerate


class ParseError(ValueError):
    """Malformed code/generator file; the message names the line."""

    def __init__(self, message: str, *, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _parse_rows(text: str) -> list[tuple[int, Word]]:
    rows: list[tuple[int, Word]] = []
    length: int | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if set(line) - {"0", "1"}:
            raise ParseError(f"illegal characters in {line!r}", line=lineno)
        if length is None:
            length = len(line)
        elif len(line) != length:
            raise ParseError(
                f"row of length {len(line)} in a file of length-{length} rows",
                line=lineno,
            )
        rows.append((lineno, Word.from_string(line)))
    if not rows:
        raise ParseError("no codeword lines found")
    return rows


def parse_code_file(text: str) -> Code:
    """Parse a code file; duplicates are dropped with a warning."""
    rows = _parse_rows(text)
    seen: set[Word] = set()
    for lineno, w in rows:
        if w in seen:
            warnings.warn(f"duplicate codeword {w} at line {lineno}", stacklevel=2)
        seen.add(w)
    return Code(w for _, w in rows)


def parse_gen_file(text: str) -> Code:
    """Parse a generator file and materialize its row space."""
    rows = _parse_rows(text)
    return span_enumerate(rref([w for _, w in rows]))


def format_code_file(code: Code) -> str:
    """Canonical text form of a code: header plus sorted codeword lines."""
    lines = [f"# code n={code.n} M={len(code)}"]
    lines.extend(str(w) for w in code.words)
    return "\n".join(lines) + "\n"


def format_basis_file(basis: Gf2Basis) -> str:
    """Canonical text form of a basis: header plus its RREF rows.

    Parsing the result as a generator file recovers the spanned subspace.
    Dimension-zero bases have no rows, so a zero row is emitted to keep
    the file well-formed; its row space is still the zero subspace.
    """
    lines = [f"# generator n={basis.n} dim={basis.dim}"]
    if basis.rows:
        lines.extend(str(w) for w in basis.rows)
    else:
        lines.append("0" * basis.n)
    return "\n".join(lines) + "\n"
