"""Binomial cascade representations and the exact shadow bounds they induce."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .binomials import binomial


def _max_index(m: int, k: int) -> int:
    """Largest n with C(n, k) <= m, for m >= 1 (hence n >= k).

    A float solve of (n - 0.5k + 0.5)^k / k! = m seeds the search; galloping
    plus binary search on exact integer comparisons makes the answer
    independent of the seed's accuracy.
    """
    guess = int(math.exp((math.lgamma(k + 1) + math.log(m)) / k) + 0.5 * (k - 1))
    n = max(k, guess)
    if binomial(n, k) <= m:
        lo, step = n, 1
        while binomial(lo + step, k) <= m:
            lo += step
            step *= 2
        hi = lo + step
    else:
        hi, step = n, 1
        while n - step > k and binomial(n - step, k) > m:
            hi = n - step
            step *= 2
        lo = max(k, n - step)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if binomial(mid, k) <= m:
            lo = mid
        else:
            hi = mid
    return lo


@dataclass(frozen=True)
class CascadeRep:
    """The unique representation m = C(n_k, k) + C(n_{k-1}, k-1) + ...

    terms holds (n_j, j) pairs with j descending one at a time from k and the
    n_j strictly decreasing, ending at some n_{k-s} >= k-s > 0.
    """

    k: int
    terms: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "terms", tuple((int(n), int(j)) for n, j in self.terms)
        )
        if self.k < 1:
            raise ValueError(f"level k must be >= 1, got {self.k}")
        if not self.terms:
            raise ValueError("cascade needs at least one term")
        for pos, (n, j) in enumerate(self.terms):
            if j != self.k - pos:
                raise ValueError("lower indices must step down from k by one")
            if n < j:
                raise ValueError(f"term C({n},{j}) has n < j")
        if self.terms[-1][1] < 1:
            raise ValueError("lower indices must stay positive")
        uppers = [n for n, _ in self.terms]
        if any(a <= b for a, b in zip(uppers, uppers[1:])):
            raise ValueError("upper indices must strictly decrease")

    def __str__(self) -> str:
        return "+".join(f"C({n},{j})" for n, j in self.terms)


@lru_cache(maxsize=None)
def cascade_decompose(m: int, k: int) -> CascadeRep:
    """Greedy cascade of m at level k: peel off the largest C(n_j, j) each step."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    terms = []
    rem, j = m, k
    while rem > 0:
        n = _max_index(rem, j)
        terms.append((n, j))
        rem -= binomial(n, j)
        j -= 1
    return CascadeRep(k, tuple(terms))


def cascade_evaluate(rep: CascadeRep) -> int:
    """The integer a CascadeRep stands for (inverse of cascade_decompose)."""
    return sum(binomial(n, j) for n, j in rep.terms)


def shadow_bound(m: int, k: int, p: int) -> int:
    """Sharp lower bound on the count of p-vertex faces forced by m k-vertex faces.

    Evaluates the chained closed form: each cascade term C(n_j, j) contributes
    C(n_j, j - (k - p)), where terms whose lower index drops below zero vanish.
    """
    if not 1 <= p < k:
        raise ValueError(f"need 1 <= p < k, got p={p}, k={k}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    drop = k - p
    return sum(binomial(n, j - drop) for n, j in cascade_decompose(m, k).terms)


@dataclass(frozen=True)
class FaceVector:
    """Face counts (f_{-1}, f_0, ..., f_{d-1}) with f_{-1} = 1 for the empty face.

    Trailing zeros are trimmed at construction; a zero anywhere else is
    rejected so that "positive integer vector" is unambiguous.
    """

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(int(e) for e in self.entries)
        while len(entries) > 1 and entries[-1] == 0:
            entries = entries[:-1]
        object.__setattr__(self, "entries", entries)
        if not entries or entries[0] != 1:
            raise ValueError("face vector must start with f_{-1} = 1")
        if any(e <= 0 for e in entries):
            raise ValueError("face counts must be positive")

    @property
    def dimension(self) -> int:
        return len(self.entries) - 2


class ValidationResult(NamedTuple):
    ok: bool
    failing_k: int | None


def validate_face_vector(f: FaceVector) -> ValidationResult:
    """Decide whether f is the face vector of some simplicial complex.

    Checks f_{k-2} >= shadow_bound(f_{k-1}, k, k-1) for every consecutive pair
    and reports the smallest failing k.
    """
    for k in range(2, len(f.entries)):
        if f.entries[k - 1] < shadow_bound(f.entries[k], k, k - 1):
            return ValidationResult(False, k)
    return ValidationResult(True, None)
