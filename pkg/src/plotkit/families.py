"""Deterministic code generators: classical families and seeded random codes."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .core import Code, Word
from .gf2 import ENUM_CAP_ENV, enumeration_cap, rref, span_enumerate
from .plotkin import plotkin_construct

KINDS = ("repetition", "universe", "parity", "reed_muller", "from_generator", "random")

_MASK64 = (1 << 64) - 1


def _splitmix64(seed: int) -> Iterator[int]:
    """SplitMix64 stream: add the golden-gamma constant, then mix.

    state += 0x9E3779B97F4A7C15
    z = state; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9
    z = (z ^ z>>27) * 0x94D049BB133111EB; output z ^ z>>31

    Small, stateless apart from the counter, and identical on every run
    for the same seed, which is all the corpus machinery needs.
    """
    state = seed & _MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        yield z ^ (z >> 31)


def _draw_bits(stream: Iterator[int], n: int) -> int:
    v = 0
    for _ in range((n + 63) // 64):
        v = (v << 64) | next(stream)
    return v & ((1 << n) - 1)


def repetition(n: int) -> Code:
    """{0^n, 1^n}: the [n, 1, n] repetition code."""
    if n < 1:
        raise ValueError(f"length must be positive, got {n}")
    return Code._from_bits(n, (0, (1 << n) - 1))


def universe(n: int) -> Code:
    """All 2^n words: the [n, n, 1] full space."""
    if n < 1:
        raise ValueError(f"length must be positive, got {n}")
    cap = enumeration_cap()
    if (1 << n) > cap:
        raise ValueError(
            f"universe({n}) has {1 << n} words, over the enumeration cap "
            f"of {cap} (set {ENUM_CAP_ENV} to raise it)"
        )
    return Code._from_bits(n, range(1 << n))


def parity(n: int) -> Code:
    """Even-weight words: the [n, n-1, 2] code; {0} for n = 1."""
    if n < 1:
        raise ValueError(f"length must be positive, got {n}")
    if n == 1:
        return Code._from_bits(1, (0,))
    cap = enumeration_cap()
    if (1 << (n - 1)) > cap:
        raise ValueError(
            f"parity({n}) has {1 << (n - 1)} words, over the enumeration cap "
            f"of {cap} (set {ENUM_CAP_ENV} to raise it)"
        )
    return Code._from_bits(
        n, ((p << 1) | (p.bit_count() & 1) for p in range(1 << (n - 1)))
    )


@lru_cache(maxsize=None)
def reed_muller(r: int, m: int) -> Code:
    """RM(r, m) by iterating the (u|u+v) construction.

    RM(r, m) = plotkin(RM(r, m-1), RM(r-1, m-1)), bottoming out at the
    repetition code for r = 0 and the full space for r = m. Length 2^m,
    dimension sum(C(m, i) for i <= r), distance 2^(m-r).
    """
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    if not 0 <= r <= m:
        raise ValueError(f"order r must satisfy 0 <= r <= m, got r={r}, m={m}")
    if r == 0:
        return repetition(1 << m)
    if r == m:
        return universe(1 << m)
    return plotkin_construct(reed_muller(r, m - 1), reed_muller(r - 1, m - 1))


def from_generator(rows: list[Word]) -> Code:
    """Row space of a generator matrix, materialized."""
    return span_enumerate(rref(rows))


def random_code(n: int, M: int, seed: int, include_zero: bool = False) -> Code:
    """M distinct seeded-random words of length n, without replacement.

    The zero word is a member iff include_zero is set, so M can reach 2^n
    only with it and 2^n - 1 without. Same (n, M, seed, include_zero),
    same code.
    """
    if n < 1:
        raise ValueError(f"length must be positive, got {n}")
    space = 1 << n
    limit = space if include_zero else space - 1
    if not 1 <= M <= limit:
        raise ValueError(
            f"cardinality must be in 1..{limit} for n={n}"
            f"{'' if include_zero else ' without the zero word'}, got {M}"
        )
    stream = _splitmix64(seed)
    chosen: set[int] = {0} if include_zero else set()
    want = M if include_zero else M + 1  # count the excluded zero once
    if 2 * want > space:
        # Dense request: seeded partial Fisher-Yates instead of rejection.
        pool = list(range(space))
        i = space - 1
        while len(chosen) < M:
            j = next(stream) % (i + 1)
            pool[i], pool[j] = pool[j], pool[i]
            v = pool[i]
            i -= 1
            if v == 0 and not include_zero:
                continue
            chosen.add(v)
    else:
        while len(chosen) < M:
            v = _draw_bits(stream, n)
            if v == 0 and not include_zero:
                continue
            chosen.add(v)
    return Code._from_bits(n, chosen)


@dataclass(frozen=True)
class FamilySpec:
    """A family kind plus its raw arguments, as they arrive from the CLI.

    Numeric kinds take integers: repetition/universe/parity (n),
    reed_muller (r, m), random (n, M, seed[, include_zero as 0/1]).
    from_generator takes bit-row strings.
    """

    kind: str
    args: tuple[str, ...]


def build_family(spec: FamilySpec) -> Code:
    """Materialize a FamilySpec; argument errors raise ValueError."""
    kind, args = spec.kind, spec.args
    if kind not in KINDS:
        raise ValueError(f"unknown family kind {kind!r}; expected one of {KINDS}")
    if kind == "from_generator":
        if not args:
            raise ValueError("from_generator needs at least one generator row")
        return from_generator([Word.from_string(row) for row in args])
    try:
        nums = [int(a) for a in args]
    except ValueError:
        raise ValueError(f"{kind} takes integer arguments, got {args!r}") from None
    if kind in ("repetition", "universe", "parity"):
        if len(nums) != 1:
            raise ValueError(f"{kind} takes one argument (n), got {len(nums)}")
        return {"repetition": repetition, "universe": universe, "parity": parity}[
            kind
        ](nums[0])
    if kind == "reed_muller":
        if len(nums) != 2:
            raise ValueError(f"reed_muller takes two arguments (r, m), got {len(nums)}")
        return reed_muller(nums[0], nums[1])
    # random
    if len(nums) == 3:
        n, M, seed = nums
        include_zero = False
    elif len(nums) == 4:
        n, M, seed, zero_flag = nums
        include_zero = bool(zero_flag)
    else:
        raise ValueError(
            f"random takes (n, M, seed[, include_zero]), got {len(nums)} arguments"
        )
    return random_code(n, M, seed, include_zero=include_zero)
