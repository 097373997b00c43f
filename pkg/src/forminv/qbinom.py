"""Gaussian (q-) and two-variable (pq-) binomial coefficients.

Both are computed from their defining products by exact polynomial
division, dividing as we multiply so intermediates stay small.  Each
division is asserted exact; a remainder aborts the computation.
"""

from __future__ import annotations

from .poly import LaurentPoly, TruncatedSeries, expand_inverse_product


def gaussian_binomial(d: int, n: int) -> LaurentPoly:
    """(1-q^{d+1})...(1-q^{d+n}) / ((1-q)...(1-q^n)), a polynomial in q.

    Counts partitions fitting in a d x n box; degree d*n, nonnegative
    coefficients.
    """
    if d < 0 or n < 0:
        raise ValueError("arguments must be nonnegative")
    result = LaurentPoly.one()
    for i in range(1, n + 1):
        result = result * _one_minus_q(d + i)
        result = result.divexact(_one_minus_q(i))
    return result


def pq_binomial(d: int, k: int) -> LaurentPoly:
    """prod_{i=1..k} (p^{d+i}-q^{d+i}) / (p^i-q^i).

    Homogeneous of total degree d*k; symmetric in p and q.
    """
    if d < 0 or k < 0:
        raise ValueError("arguments must be nonnegative")
    result = LaurentPoly.one()
    for i in range(1, k + 1):
        result = result * _p_minus_q(d + i)
        result = result.divexact(_p_minus_q(i))
    return result


def pq_binomial_series(m: int, order: int) -> TruncatedSeries:
    """Generating series of the pq-binomials with upper entry m.

    Equals the inverse product over {(k, l): k+l = m} of (1 - t p^k q^l);
    its t^j coefficient is pq_binomial(m, j).
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    return expand_inverse_product([(k, m - k) for k in range(m + 1)], order)


def _one_minus_q(i: int) -> LaurentPoly:
    return LaurentPoly({(0, 0): 1, (0, i): -1})


def _p_minus_q(i: int) -> LaurentPoly:
    return LaurentPoly({(i, 0): 1, (0, i): -1})
