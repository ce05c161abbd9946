"""GF(2) linear algebra on bit-packed words: RREF, span membership, enumeration."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable

from .core import Code, Word

# Ceiling on materialized span sizes (number of words). Override with the
# PLOTKIN_MAX_ENUM environment variable.
DEFAULT_MAX_ENUM = 1 << 20
ENUM_CAP_ENV = "PLOTKIN_MAX_ENUM"


def enumeration_cap() -> int:
    """Current span-enumeration cap in words."""
    raw = os.environ.get(ENUM_CAP_ENV)
    if raw is None:
        return DEFAULT_MAX_ENUM
    cap = int(raw)
    if cap < 1:
        raise ValueError(f"{ENUM_CAP_ENV} must be positive, got {raw!r}")
    return cap


@dataclass(frozen=True)
class Gf2Basis:
    """Canonical RREF basis of a subspace of GF(2)^n.

    Rows are stored with pivot columns strictly increasing (equivalently,
    decreasing as integers since column 0 is the most significant bit).
    Two bases are equal iff they span the same subspace.
    """

    n: int
    rows: tuple[Word, ...]

    def __post_init__(self) -> None:
        pivots = []
        for w in self.rows:
            if w.length != self.n:
                raise ValueError(f"row length {w.length} != basis length {self.n}")
            if w.bits == 0:
                raise ValueError("zero row in basis")
            pivots.append(self.n - w.bits.bit_length())
        if pivots != sorted(set(pivots)):
            raise ValueError("pivot columns must be strictly increasing")
        for i, w in enumerate(self.rows):
            for j, p in enumerate(pivots):
                if i != j and (w.bits >> (self.n - 1 - p)) & 1:
                    raise ValueError("basis not reduced: pivot column reused")

    @property
    def dim(self) -> int:
        return len(self.rows)


def _reduce_bits(patterns: Iterable[int]) -> list[int]:
    """RREF of packed rows; returns rows sorted by decreasing value."""
    rows: list[int] = []
    for v in patterns:
        for r in rows:
            if (v >> (r.bit_length() - 1)) & 1:
                v ^= r
        if v:
            top = v.bit_length() - 1
            rows = [r ^ v if (r >> top) & 1 else r for r in rows]
            rows.append(v)
    rows.sort(reverse=True)
    return rows


def rref(words: Iterable[Word], n: int | None = None) -> Gf2Basis:
    """Canonical RREF basis of the span of the given words.

    `n` is inferred from the words when omitted; it is required for an
    empty input.
    """
    words = list(words)
    if n is None:
        if not words:
            raise ValueError("cannot infer word length from an empty list")
        n = words[0].length
    for w in words:
        if w.length != n:
            raise ValueError(f"mixed word lengths: {n} and {w.length}")
    rows = _reduce_bits(w.bits for w in words)
    return Gf2Basis(n, tuple(Word(n, r) for r in rows))


def in_span(basis: Gf2Basis, w: Word) -> bool:
    """True iff w is a GF(2) combination of the basis rows."""
    if w.length != basis.n:
        raise ValueError(f"length mismatch: {w.length} != {basis.n}")
    v = w.bits
    for row in basis.rows:
        if (v >> (row.bits.bit_length() - 1)) & 1:
            v ^= row.bits
    return v == 0


def span_enumerate(basis: Gf2Basis) -> Code:
    """Materialize the subspace spanned by the basis as a Code.

    The result has exactly 2^dim words, always including zero. Refuses
    spans larger than enumeration_cap().
    """
    cap = enumeration_cap()
    if (1 << basis.dim) > cap:
        raise ValueError(
            f"span of dimension {basis.dim} has {1 << basis.dim} words, "
            f"over the enumeration cap of {cap} (set {ENUM_CAP_ENV} to raise it)"
        )
    acc = [0]
    for row in basis.rows:
        r = row.bits
        acc += [v ^ r for v in acc]
    return Code._from_bits(basis.n, acc)
