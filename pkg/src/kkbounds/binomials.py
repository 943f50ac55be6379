"""Exact binomial coefficients, their real extension, and Turán clique counts."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

# Explicit clique enumeration is exponential; 14 vertices keeps it fast.
DEFAULT_ORACLE_LIMIT = 14


def binomial(n: int, k: int) -> int:
    """C(n, k) as an exact integer, with value 0 when k < 0, k > n, or n < 0.

    Total on all integer pairs; the zero conventions are what make chained
    shadow bounds come out right without special-casing term indices.
    """
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def binom_real(x: float, k: int) -> float:
    """The degree-k polynomial x(x-1)...(x-k+1)/k! extending C(x, k) to real x.

    Strictly increasing for x > k-1, zero at x = 0, 1, ..., k-1, and equal to
    binomial(x, k) at nonnegative integer x (exactly so whenever the numerator
    product stays below 2**53).
    """
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"x must be finite, got {x!r}")
    num = 1.0
    for i in range(k):
        num *= x - i
    value = num / math.factorial(k)
    if not math.isfinite(value):
        raise OverflowError(f"binom_real({x}, {k}) does not fit in a float")
    return value


@dataclass(frozen=True)
class TuranGraph:
    """Complete multipartite graph on {1..n} with r parts as even as possible."""

    n: int
    r: int
    parts: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.r < 1 or self.n < 0:
            raise ValueError(f"need n >= 0 and r >= 1, got n={self.n}, r={self.r}")
        if len(self.parts) != self.r:
            raise ValueError("number of parts must equal r")
        sizes = sorted(len(part) for part in self.parts)
        if sum(sizes) != self.n:
            raise ValueError("part sizes must sum to n")
        if sizes and sizes[-1] - sizes[0] > 1:
            raise ValueError("part sizes may differ by at most one")
        if set().union(*self.parts) != set(range(1, self.n + 1)):
            raise ValueError("parts must partition {1..n}")

    def part_of(self, v: int) -> int:
        for i, part in enumerate(self.parts):
            if v in part:
                return i
        raise ValueError(f"vertex {v} not in graph")

    def adjacent(self, u: int, v: int) -> bool:
        return u != v and self.part_of(u) != self.part_of(v)


def turan_graph(n: int, r: int) -> TuranGraph:
    """Partition {1..n} into r parts of size floor(n/r) or ceil(n/r)."""
    if n < 0 or r < 1:
        raise ValueError(f"need n >= 0 and r >= 1, got n={n}, r={r}")
    base, extra = divmod(n, r)
    parts = []
    start = 1
    for i in range(r):
        size = base + (1 if i < extra else 0)
        parts.append(frozenset(range(start, start + size)))
        start += size
    return TuranGraph(n, r, tuple(parts))


@lru_cache(maxsize=None)
def turan_coefficient(n: int, k: int, r: int) -> int:
    """Number of k-vertex cliques in the Turán graph on n vertices with r parts.

    Closed form with p = n // r and q = n - p*r:

        sum over i of C(q, i) * C(r - i, k - i) * p**(k - i)

    Conventions match binomial(): 1 for k = 0 (the empty clique), 0 for k < 0
    or k > r.
    """
    if n < 0 or r < 1:
        raise ValueError(f"need n >= 0 and r >= 1, got n={n}, r={r}")
    if k < 0:
        return 0
    p, q = divmod(n, r)
    total = 0
    for i in range(min(q, k) + 1):
        total += binomial(q, i) * binomial(r - i, k - i) * p ** (k - i)
    return total


def turan_clique_count_oracle(
    n: int, k: int, r: int, limit: int = DEFAULT_ORACLE_LIMIT
) -> int:
    """Count k-cliques in the Turán graph by enumerating all k-subsets.

    Reference implementation of the definition behind turan_coefficient;
    intentionally independent of the closed form.
    """
    if n > limit:
        raise ValueError(f"oracle limited to n <= {limit}, got n={n}")
    if k < 0:
        return 0
    graph = turan_graph(n, r)
    part_id = {v: i for i, part in enumerate(graph.parts) for v in part}
    count = 0
    for combo in combinations(range(1, n + 1), k):
        if len({part_id[v] for v in combo}) == len(combo):
            count += 1
    return count
