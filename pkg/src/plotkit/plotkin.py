"""The (u|u+v) construction and mechanical verification of its structure.

The length-2n code built from two length-n codes is
C = {(u|u+v) : u in C1, v in C2}. Its kernel and span factor through the
inputs by the same map, which makes kernel dimension and rank exactly
additive; verify_plotkin measures both sides of each of those equalities
independently and reports the comparison.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Code, Word, concat
from .gf2 import Gf2Basis, rref
from .invariants import CodeSummary, kernel, min_distance, summarize


@dataclass(frozen=True)
class CodeParams:
    """Parameter vector (length, size, distance, rank, kernel dimension)."""

    length: int
    size: int
    distance: int | None
    rank: int
    kernel_dim: int


@dataclass(frozen=True)
class PlotkinReport:
    """Predicted vs. observed parameters plus the structural check flags.

    hypothesis_ok records whether both inputs contain the zero word; the
    factorization results are guaranteed only under that hypothesis, so a
    false flag with hypothesis_ok set is a genuine violation while a false
    flag without it is merely exploratory.
    """

    n_in: int
    predicted: CodeParams
    observed: CodeParams
    theorem_i_holds: bool
    theorem_ii_holds: bool
    corollary_i_holds: bool
    corollary_ii_holds: bool
    params_hold: bool
    hypothesis_ok: bool

    @property
    def all_checks_hold(self) -> bool:
        return (
            self.theorem_i_holds
            and self.theorem_ii_holds
            and self.corollary_i_holds
            and self.corollary_ii_holds
            and self.params_hold
        )

    @property
    def ok(self) -> bool:
        """False only when the hypothesis held and a check still failed."""
        return self.all_checks_hold or not self.hypothesis_ok


def plotkin_construct(c1: Code, c2: Code) -> Code:
    """Build {(u|u+v) : u in c1, v in c2}; length doubles, sizes multiply.

    The map (u, v) -> (u|u+v) is injective (the left half recovers u, the
    right half then recovers v), so the result has exactly |c1|*|c2| words.
    """
    if c1.n != c2.n:
        raise ValueError(f"length mismatch: {c1.n} != {c2.n}")
    n = c1.n
    out = []
    for u in c1.bit_patterns:
        left = u << n
        for v in c2.bit_patterns:
            out.append(left | (u ^ v))
    return Code._from_bits(2 * n, out)


def kernel_direct(k1: Code, k2: Code) -> Code:
    """Kernel of the constructed code assembled from the input kernels.

    Applies the construction map to the kernel sets themselves:
    {(x|x+y) : x in k1, y in k2}.
    """
    return plotkin_construct(k1, k2)


def span_direct(b1: Gf2Basis, b2: Gf2Basis) -> Gf2Basis:
    """Span of the constructed code assembled from the input span bases.

    {(x|x+y)} is generated by {(b|b) : b in b1} together with
    {(0|b) : b in b2}; the canonical basis of that span has dimension
    b1.dim + b2.dim.
    """
    if b1.n != b2.n:
        raise ValueError(f"length mismatch: {b1.n} != {b2.n}")
    zero = Word.zero(b1.n)
    gens = [concat(b, b) for b in b1.rows] + [concat(zero, b) for b in b2.rows]
    return rref(gens, n=2 * b1.n)


def predict_params(s1: CodeSummary, s2: CodeSummary) -> CodeParams:
    """Parameters the construction should produce, from input summaries.

    (2n, M1*M2, min{2*d1, d2}, rank1+rank2, ker1+ker2); the distance slot
    is None when either input distance is undefined.
    """
    if s1.n != s2.n:
        raise ValueError(f"length mismatch: {s1.n} != {s2.n}")
    if s1.d is None or s2.d is None:
        d = None
    else:
        d = min(2 * s1.d, s2.d)
    return CodeParams(
        length=2 * s1.n,
        size=s1.M * s2.M,
        distance=d,
        rank=s1.rank + s2.rank,
        kernel_dim=s1.ker_dim + s2.ker_dim,
    )


def verify_plotkin(c1: Code, c2: Code) -> PlotkinReport:
    """Construct the code and compare direct vs. measured kernel and span.

    The left side of every comparison is computed on the constructed code
    alone (definitional kernel scan, row reduction, pairwise distance);
    the right side is assembled from the inputs. Nothing is assumed.
    """
    code = plotkin_construct(c1, c2)

    k1, k2 = kernel(c1), kernel(c2)
    k_measured = kernel(code)
    theorem_i = k_measured == kernel_direct(k1, k2)

    b1, b2 = rref(c1.words), rref(c2.words)
    b_measured = rref(code.words)
    theorem_ii = b_measured == span_direct(b1, b2)

    ker_dims = (len(k1).bit_length() - 1, len(k2).bit_length() - 1)
    corollary_i = len(k_measured).bit_length() - 1 == sum(ker_dims)
    corollary_ii = b_measured.dim == b1.dim + b2.dim

    s1, s2 = summarize(c1), summarize(c2)
    predicted = predict_params(s1, s2)
    observed = CodeParams(
        length=code.n,
        size=len(code),
        distance=min_distance(code) if len(code) >= 2 else None,
        rank=b_measured.dim,
        kernel_dim=len(k_measured).bit_length() - 1,
    )
    params_hold = (
        observed.length == predicted.length
        and observed.size == predicted.size
        and observed.rank == predicted.rank
        and observed.kernel_dim == predicted.kernel_dim
        and (predicted.distance is None or observed.distance == predicted.distance)
    )

    return PlotkinReport(
        n_in=c1.n,
        predicted=predicted,
        observed=observed,
        theorem_i_holds=theorem_i,
        theorem_ii_holds=theorem_ii,
        corollary_i_holds=corollary_i,
        corollary_ii_holds=corollary_ii,
        params_hold=params_hold,
        hypothesis_ok=c1.contains_zero() and c2.contains_zero(),
    )
