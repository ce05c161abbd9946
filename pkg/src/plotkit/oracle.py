"""Deliberately naive reference implementations used as ground truth.

These scan the whole space (kernel) or run the closure to a fixpoint
(span) straight from the definitions, with no candidate restriction, no
elimination, and no shortcuts. They ship in the library so CLI users can
reproduce any cross-check themselves.
"""

from __future__ import annotations

from .core import Code
from .gf2 import ENUM_CAP_ENV, enumeration_cap

BRUTE_KERNEL_MAX_N = 16


def kernel_bruteforce(code: Code) -> Code:
    """Keep every x in GF(2)^n with code + x = code, by trying all 2^n."""
    if code.n > BRUTE_KERNEL_MAX_N:
        raise ValueError(
            f"brute-force kernel scans 2^n translations; n={code.n} is over "
            f"the cap of {BRUTE_KERNEL_MAX_N}"
        )
    members = code._bits
    patterns = code.bit_patterns
    kept = []
    for x in range(1 << code.n):
        if all((c ^ x) in members for c in patterns):
            kept.append(x)
    return Code._from_bits(code.n, kept)


def span_bruteforce(code: Code) -> Code:
    """Close the code under pairwise sums until nothing new appears.

    Each round only pairs the previous round's new elements against the
    accumulated set; every unordered pair is still covered by the round
    in which its later member appeared.
    """
    cap = enumeration_cap()
    closed = set(code._bits)
    frontier = set(code._bits)
    while frontier:
        if len(closed) > cap:
            raise ValueError(
                f"span closure exceeded the enumeration cap of {cap} words "
                f"(set {ENUM_CAP_ENV} to raise it)"
            )
        new = {a ^ b for a in frontier for b in closed} - closed
        closed |= new
        frontier = new
    return Code._from_bits(code.n, closed)
