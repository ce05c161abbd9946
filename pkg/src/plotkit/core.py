"""Bit-packed binary words and finite block codes over GF(2)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

# Guard against accidental huge allocations; rebind if you really need more.
MAX_LENGTH = 4096


@dataclass(frozen=True, order=True, repr=False)
class Word:
    """Fixed-length bit vector over GF(2).

    Coordinate 0 is the leftmost printed bit, so the packed integer reads
    like the bit string in MSB-first order and sorting words of equal
    length is lexicographic. Bits above `length` are zero by construction,
    which keeps equality and hashing canonical.
    """

    length: int
    bits: int

    def __post_init__(self) -> None:
        if not 1 <= self.length <= MAX_LENGTH:
            raise ValueError(
                f"word length must be in 1..{MAX_LENGTH}, got {self.length}"
            )
        if not 0 <= self.bits < (1 << self.length):
            raise ValueError(
                f"bit pattern {self.bits:#x} does not fit in {self.length} bits"
            )

    @classmethod
    def from_string(cls, text: str) -> Word:
        """Build a word from a string over {0,1}, e.g. '0101'."""
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a bit string: {text!r}")
        return cls(len(text), int(text, 2))

    @classmethod
    def zero(cls, length: int) -> Word:
        return cls(length, 0)

    @classmethod
    def ones(cls, length: int) -> Word:
        return cls(length, (1 << length) - 1)

    def weight(self) -> int:
        """Hamming weight (number of 1 coordinates)."""
        return self.bits.bit_count()

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(f"coordinate {i} out of range for length {self.length}")
        return (self.bits >> (self.length - 1 - i)) & 1

    def __xor__(self, other: Word) -> Word:
        return word_xor(self, other)

    def __str__(self) -> str:
        return format(self.bits, f"0{self.length}b")

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


def _check_same_length(a: Word, b: Word) -> None:
    if a.length != b.length:
        raise ValueError(f"length mismatch: {a.length} != {b.length}")


def word_xor(a: Word, b: Word) -> Word:
    """Coordinatewise GF(2) sum of two equal-length words."""
    _check_same_length(a, b)
    return Word(a.length, a.bits ^ b.bits)


def hamming_distance(a: Word, b: Word) -> int:
    """Number of coordinates in which a and b differ."""
    _check_same_length(a, b)
    return (a.bits ^ b.bits).bit_count()


def concat(a: Word, b: Word) -> Word:
    """Concatenation (a|b); the left half comes first."""
    return Word(a.length + b.length, (a.bits << b.length) | b.bits)


class Code:
    """Immutable set of distinct equal-length words.

    Membership tests run on the packed bit patterns. Iteration and the
    `words` snapshot are deterministic: ascending bit patterns, i.e.
    lexicographic in the printed form.
    """

    __slots__ = ("n", "_bits", "_patterns", "_words")

    def __init__(self, words: Iterable[Word]):
        words = list(words)
        if not words:
            raise ValueError("a code needs at least one word")
        n = words[0].length
        for w in words[1:]:
            if w.length != n:
                raise ValueError(f"mixed word lengths: {n} and {w.length}")
        self.n = n
        self._bits = frozenset(w.bits for w in words)
        self._patterns = tuple(sorted(self._bits))
        self._words: tuple[Word, ...] | None = None

    @classmethod
    def _from_bits(cls, n: int, bits: Iterable[int]) -> Code:
        # Internal fast path: patterns assumed already in 0..2^n-1.
        self = object.__new__(cls)
        self.n = n
        self._bits = frozenset(bits)
        if not self._bits:
            raise ValueError("a code needs at least one word")
        self._patterns = tuple(sorted(self._bits))
        self._words = None
        return self

    @property
    def words(self) -> tuple[Word, ...]:
        if self._words is None:
            self._words = tuple(Word(self.n, b) for b in self._patterns)
        return self._words

    @property
    def bit_patterns(self) -> tuple[int, ...]:
        """Sorted packed bit patterns of the member words."""
        return self._patterns

    def contains_zero(self) -> bool:
        return 0 in self._bits

    def __len__(self) -> int:
        return len(self._bits)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)

    def __contains__(self, w: Word) -> bool:
        return w.length == self.n and w.bits in self._bits

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Code):
            return NotImplemented
        return self.n == other.n and self._bits == other._bits

    def __hash__(self) -> int:
        return hash((self.n, self._bits))

    def __repr__(self) -> str:
        return f"Code(n={self.n}, M={len(self)})"


def code_from_words(words: Iterable[Word]) -> Code:
    """Deduplicate a non-empty list of equal-length words into a Code."""
    return Code(words)


def translate(code: Code, x: Word) -> Code:
    """The set code + x = { c + x : c in code }; same cardinality as code."""
    if x.length != code.n:
        raise ValueError(f"length mismatch: {x.length} != {code.n}")
    return Code._from_bits(code.n, (b ^ x.bits for b in code._bits))
