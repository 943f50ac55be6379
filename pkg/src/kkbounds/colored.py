"""Cascades and shadow bounds over Turán coefficients, for r-colorable complexes."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .binomials import turan_coefficient
from .cascade import FaceVector, ValidationResult


def _max_turan_index(m: int, j: int, c: int) -> int:
    """Largest n with T(n, j, c) <= m, for m >= 1 and 1 <= j <= c (so n >= j)."""
    lo, step = j, 1
    while turan_coefficient(lo + step, j, c) <= m:
        lo += step
        step *= 2
    hi = lo + step
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if turan_coefficient(mid, j, c) <= m:
            lo = mid
        else:
            hi = mid
    return lo


@dataclass(frozen=True)
class ColoredCascadeRep:
    """m = T(n_k, k)_r + T(n_{k-1}, k-1)_{r-1} + ... with descending color budgets.

    terms holds (n, j, c) triples; consecutive terms satisfy the gap condition
    n - floor(n / c) > n' and the last term has n >= j > 0.
    """

    k: int
    r: int
    terms: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "terms", tuple((int(n), int(j), int(c)) for n, j, c in self.terms)
        )
        if self.k < 1 or self.r < self.k:
            raise ValueError(f"need r >= k >= 1, got k={self.k}, r={self.r}")
        if not self.terms:
            raise ValueError("cascade needs at least one term")
        for pos, (n, j, c) in enumerate(self.terms):
            if j != self.k - pos or c != self.r - pos:
                raise ValueError("indices and color budgets must step down by one")
            if n < j:
                raise ValueError(f"term T({n},{j})_{c} has n < j")
        if self.terms[-1][1] < 1:
            raise ValueError("lower indices must stay positive")
        for (n, _, c), (n_next, _, _) in zip(self.terms, self.terms[1:]):
            if n - n // c <= n_next:
                raise ValueError(
                    f"gap condition fails: {n} - {n // c} <= {n_next}"
                )

    def __str__(self) -> str:
        return "+".join(f"C({n},{j})_{c}" for n, j, c in self.terms)


@lru_cache(maxsize=None)
def colored_cascade_decompose(m: int, k: int, r: int) -> ColoredCascadeRep:
    """Greedy cascade of m over Turán coefficients, decrementing k and r together."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if k < 1 or r < k:
        raise ValueError(f"need r >= k >= 1, got k={k}, r={r}")
    terms = []
    rem, j, c = m, k, r
    while rem > 0:
        n = _max_turan_index(rem, j, c)
        terms.append((n, j, c))
        rem -= turan_coefficient(n, j, c)
        j -= 1
        c -= 1
    return ColoredCascadeRep(k, r, tuple(terms))


def colored_cascade_evaluate(rep: ColoredCascadeRep) -> int:
    """The integer a ColoredCascadeRep stands for."""
    return sum(turan_coefficient(n, j, c) for n, j, c in rep.terms)


def colored_shadow_bound(m: int, k: int, p: int, r: int) -> int:
    """Lower bound on p-vertex face counts of an r-colorable complex.

    Chained form of the colored shadow inequality: each term T(n, j)_c of the
    cascade contributes T(n, j - (k - p))_c, with the usual zero/one
    conventions at and below lower index zero.
    """
    if not 1 <= p < k:
        raise ValueError(f"need 1 <= p < k, got p={p}, k={k}")
    if k > r:
        raise ValueError(f"need k <= r, got k={k}, r={r}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    drop = k - p
    return sum(
        turan_coefficient(n, j - drop, c)
        for n, j, c in colored_cascade_decompose(m, k, r).terms
    )


def validate_colored_face_vector(f: FaceVector, r: int) -> ValidationResult:
    """Decide whether f is the face vector of some r-colorable complex.

    A face on k vertices needs k colors, so any entry beyond level r fails
    immediately; otherwise every consecutive pair must satisfy the colored
    shadow inequality.
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if len(f.entries) - 1 > r:
        return ValidationResult(False, r + 1)
    for k in range(2, len(f.entries)):
        if f.entries[k - 1] < colored_shadow_bound(f.entries[k], k, k - 1, r):
            return ValidationResult(False, k)
    return ValidationResult(True, None)
