from math import comb

import pytest

from forminv.poly import LaurentPoly
from forminv.qbinom import gaussian_binomial, pq_binomial, pq_binomial_series


def qpoly(coeffs):
    """Build a polynomial in q from {exponent: coefficient}."""
    return LaurentPoly({(0, e): c for e, c in coeffs.items()})


class TestGaussianBinomial:
    @pytest.mark.parametrize("d", [0, 1, 3, 7])
    def test_empty_product(self, d):
        assert gaussian_binomial(d, 0) == LaurentPoly.one()

    def test_1_2(self):
        assert gaussian_binomial(1, 2) == qpoly({0: 1, 1: 1, 2: 1})

    def test_2_2(self):
        assert gaussian_binomial(2, 2) == qpoly({0: 1, 1: 1, 2: 2, 3: 1, 4: 1})

    def test_counts_partitions_in_box(self):
        # coefficient of q^w = partitions of w inside a d x n box
        from itertools import product

        for d, n in [(2, 3), (3, 2), (3, 3)]:
            poly = gaussian_binomial(d, n)
            counts = {}
            for parts in product(range(d + 1), repeat=n):
                if list(parts) == sorted(parts, reverse=True):
                    w = sum(parts)
                    counts[w] = counts.get(w, 0) + 1
            for w, c in counts.items():
                assert poly.coeff(0, w) == c

    def test_negative_arguments(self):
        with pytest.raises(ValueError):
            gaussian_binomial(-1, 2)


class TestPqBinomial:
    @pytest.mark.parametrize("d", [0, 1, 4])
    def test_empty_product(self, d):
        assert pq_binomial(d, 0) == LaurentPoly.one()

    def test_1_2(self):
        assert pq_binomial(1, 2) == LaurentPoly({(2, 0): 1, (1, 1): 1, (0, 2): 1})

    def test_2_1(self):
        assert pq_binomial(2, 1) == LaurentPoly({(2, 0): 1, (1, 1): 1, (0, 2): 1})

    @pytest.mark.parametrize("d", range(9))
    @pytest.mark.parametrize("k", range(9))
    def test_specializes_to_gaussian(self, d, k):
        assert pq_binomial(d, k).substitute(p=1) == gaussian_binomial(d, k)

    def test_specializes_to_binomial(self):
        for d in range(11):
            for k in range(11):
                val = pq_binomial(d, k).substitute(p=1, q=1).constant()
                assert val == comb(d + k, k)

    @pytest.mark.parametrize("d", range(9))
    @pytest.mark.parametrize("k", range(9))
    def test_symmetric_in_p_q(self, d, k):
        poly = pq_binomial(d, k)
        assert poly.swap_vars() == poly

    def test_homogeneous(self):
        for d in range(7):
            for k in range(7):
                for (a, b) in pq_binomial(d, k).terms:
                    assert a >= 0 and b >= 0
                    assert a + b == d * k


class TestPqBinomialSeries:
    def test_m0(self):
        s = pq_binomial_series(0, 3)
        assert s.coeffs == [LaurentPoly.one()] * 4

    def test_m1_order2(self):
        assert pq_binomial_series(1, 2).coeff(2) == pq_binomial(1, 2)

    def test_m2_order1(self):
        assert pq_binomial_series(2, 1).coeff(1) == pq_binomial(2, 1)

    @pytest.mark.parametrize("m", range(7))
    def test_generates_pq_binomials(self, m):
        s = pq_binomial_series(m, 8)
        for j in range(9):
            assert s.coeff(j) == pq_binomial(m, j)
