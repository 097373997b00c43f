"""Exact lattice-point counting for weight multiplicities of coefficient
monomials.

``omega_binary`` counts monomials of the binary form's coefficient ring
by weight; ``c_ternary`` and ``weight_table`` do the same for ternary
forms, where a degree-n monomial in the variables a_{r,s} (r+s <= d)
has weight sums w1 = sum r*alpha_{r,s} and w2 = sum s*alpha_{r,s}.

Everything is a bounded-knapsack dynamic program over Python ints, so
results are exact at any size.  Memo tables live behind lru_cache and
are safe for concurrent readers (worst case, two threads compute the
same table once each).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Dict, List, Tuple

Weight = Tuple[int, int]


@dataclass(frozen=True)
class CountTable:
    """Weight -> multiplicity map for the degree-n monomials at fixed d."""

    d: int
    n: int
    entries: Dict[Weight, int] = field(default_factory=dict)

    def total(self) -> int:
        return sum(self.entries.values())

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)


def variables(d: int) -> List[Weight]:
    """Index pairs (r, s) with r+s <= d of the coefficient variables."""
    return [(r, s) for r in range(d + 1) for s in range(d - r + 1)]


def num_variables(d: int) -> int:
    return (d + 1) * (d + 2) // 2


@lru_cache(maxsize=None)
def _omega_row(d: int, n: int) -> Tuple[int, ...]:
    """ways[w] = #{alpha_0..alpha_d >= 0 : sum alpha = n, sum k*alpha_k = w}.

    alpha_0 absorbs the unused count, so this is the number of ways to
    pick alpha_1..alpha_d with total count <= n and weighted sum w:
    partitions of w into at most n parts, each part <= d.
    """
    wmax = d * n
    # dp[c][w], c = parts used so far
    dp = [[0] * (wmax + 1) for _ in range(n + 1)]
    dp[0][0] = 1
    for part in range(1, d + 1):
        for c in range(1, n + 1):
            row = dp[c]
            prev = dp[c - 1]
            for w in range(part, wmax + 1):
                row[w] += prev[w - part]
    return tuple(sum(dp[c][w] for c in range(n + 1)) for w in range(wmax + 1))


def omega_binary(d: int, n: int, w: int) -> int:
    """Number of nonnegative (alpha_0..alpha_d) with sum n and weight sum w."""
    if d < 0 or n < 0:
        raise ValueError("d and n must be nonnegative")
    if w < 0 or w > d * n:
        return 0
    return _omega_row(d, n)[w]


def _count_grid(d: int, n: int, w1cap: int, w2cap: int) -> List[List[List[int]]]:
    """grid[c][x][y] = #vectors alpha over the (r,s) variables with
    sum alpha = c, sum r*alpha = x, sum s*alpha = y (x <= w1cap, y <= w2cap).
    """
    dp = [
        [[0] * (w2cap + 1) for _ in range(w1cap + 1)] for _ in range(n + 1)
    ]
    dp[0][0][0] = 1
    for (r, s) in variables(d):
        # unbounded use of this variable: dp[c] += shifted dp[c-1] (post-update)
        for c in range(1, n + 1):
            cur = dp[c]
            prev = dp[c - 1]
            for x in range(r, w1cap + 1):
                row = cur[x]
                prow = prev[x - r]
                if s == 0:
                    for y in range(w2cap + 1):
                        row[y] += prow[y]
                else:
                    tail = [a + b for a, b in zip(row[s:], prow[: w2cap + 1 - s])]
                    row[s:] = tail
    return dp


@lru_cache(maxsize=8)
def solution_count_grid(d: int, n_max: int) -> Tuple:
    """Shared grid serving every c-count with d*n/3-sized targets, n <= n_max.

    Capped at w = d*n_max//3 + 1, which covers all five weight targets
    of the invariant-count formula for every n <= n_max.
    """
    cap = d * n_max // 3 + 1
    grid = _count_grid(d, n_max, cap, cap)
    return tuple(tuple(tuple(row) for row in layer) for layer in grid)


def c_ternary(d: int, n: int, i: int, j: int) -> int:
    """Multiplicity of the weight (i, j) among degree-n monomials.

    This is the number of nonnegative solutions of
        sum r*alpha_{r,s} = (d*n - (i-j)) / 3,
        sum s*alpha_{r,s} = (d*n - (i+2j)) / 3,
        sum   alpha_{r,s} = n.
    Returns 0 whenever a right-hand side is non-integral, negative, or
    larger than d*n.
    """
    if d < 0 or n < 0:
        raise ValueError("d and n must be nonnegative")
    num1 = d * n - (i - j)
    num2 = d * n - (i + 2 * j)
    if num1 % 3 or num2 % 3:
        return 0
    w1, w2 = num1 // 3, num2 // 3
    if w1 < 0 or w2 < 0 or w1 > d * n or w2 > d * n:
        return 0
    dp = _count_grid(d, n, w1, w2)
    return dp[n][w1][w2]


def weight_table(d: int, n: int) -> CountTable:
    """Full weight multiplicity table of the degree-n monomials.

    A monomial with weight sums (w1, w2) sits at weight
    (i, j) = (n*d - 2*w1 - w2, w1 - w2); the map is injective, so each
    grid cell lands on its own weight.
    """
    if d < 0 or n < 0:
        raise ValueError("d and n must be nonnegative")
    wmax = d * n
    dp = _count_grid(d, n, wmax, wmax)
    entries: Dict[Weight, int] = {}
    layer = dp[n]
    for w1 in range(wmax + 1):
        row = layer[w1]
        for w2 in range(wmax + 1):
            c = row[w2]
            if c:
                entries[(n * d - 2 * w1 - w2, w1 - w2)] = c
    return CountTable(d=d, n=n, entries=entries)


def monomial_count(d: int, n: int) -> int:
    """Number of degree-n monomials in the (d+1)(d+2)/2 variables."""
    return comb(n + num_variables(d) - 1, n)


def clear_caches() -> None:
    _omega_row.cache_clear()
    solution_count_grid.cache_clear()
