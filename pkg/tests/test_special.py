import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from landau_ac.special import (
    MAX_DEGREE,
    binomial,
    hermite,
    hermite_coefficients,
    kummer_eval,
    kummer_terminating,
    laguerre_general,
)


def kummer_brute(n, b, tau):
    """Independent oracle: exact rational sum of (-n)_j / (b)_j tau^j / j!."""
    b, tau = Fraction(b), Fraction(tau)
    total = Fraction(0)
    for j in range(n + 1):
        num = math.prod(-n + i for i in range(j))
        den = math.prod(b + i for i in range(j)) * math.factorial(j)
        total += Fraction(num) / den * tau**j
    return float(total)


def laguerre_explicit(n, alpha, x):
    """Independent oracle: explicit sum with exact binomials."""
    x = Fraction(x)
    total = Fraction(0)
    for j in range(n + 1):
        total += Fraction(math.comb(n + alpha, n - j)) * (-x) ** j / math.factorial(j)
    return float(total)


HERMITE_CLOSED = {
    0: lambda x: 1.0,
    1: lambda x: 2 * x,
    2: lambda x: 4 * x**2 - 2,
    3: lambda x: 8 * x**3 - 12 * x,
    4: lambda x: 16 * x**4 - 48 * x**2 + 12,
}


class TestKummer:
    def test_degree_zero_is_one(self):
        assert kummer_terminating(0, 2.5, 7.0) == 1.0

    def test_linear_case(self):
        # 1 - tau/b vanishes at tau = b
        assert kummer_terminating(1, 2, 2.0) == 0.0

    def test_quadratic_matches_brute_force(self):
        assert kummer_terminating(2, 1, 1.0) == pytest.approx(kummer_brute(2, 1, 1.0), rel=1e-15)
        assert kummer_terminating(2, 1, 1.0) == pytest.approx(-0.5, rel=1e-15)
        assert kummer_terminating(2, 1, 1.0) == pytest.approx(laguerre_general(2, 0, 1.0) / math.comb(2, 2))

    @pytest.mark.parametrize("n,b,tau", [(5, 1, 3.3), (10, 3, 12.0), (20, 7, 50.0), (20, 1, 40.0), (60, 2, 90.0)])
    def test_matches_brute_force(self, n, b, tau):
        ref = kummer_brute(n, b, tau)
        assert kummer_terminating(n, b, tau) == pytest.approx(ref, rel=1e-13, abs=1e-13)

    def test_array_argument(self):
        tau = np.array([[0.0, 1.0], [10.0, 45.0]])
        out = kummer_terminating(8, 3, tau)
        assert out.shape == tau.shape
        for idx in np.ndindex(tau.shape):
            assert out[idx] == pytest.approx(kummer_brute(8, 3, tau[idx]), rel=1e-13, abs=1e-13)

    def test_terms_summed(self):
        ev = kummer_eval(4, 2, 1.5)
        assert ev.terms_summed == ev.degree + 1 == 5

    def test_high_degree_no_overflow(self):
        assert math.isfinite(kummer_terminating(MAX_DEGREE, 1, 1.0))

    @pytest.mark.parametrize("n,b,tau", [(-1, 1, 1.0), (1.5, 1, 1.0), (2, 0, 1.0), (2, -1, 1.0), (MAX_DEGREE + 1, 1, 1.0), (2, 1, -0.1)])
    def test_rejects_bad_input(self, n, b, tau):
        with pytest.raises(ValueError):
            kummer_terminating(n, b, tau)

    @given(st.integers(0, MAX_DEGREE), st.floats(0.1, 50))
    def test_zero_argument_is_one(self, n, b):
        assert kummer_terminating(n, b, 0.0) == 1.0


class TestHermite:
    def test_bases(self):
        assert hermite(0, 123.4) == 1.0
        assert hermite(1, 3.0) == 6.0
        assert hermite(2, 1.0) == 2.0

    @pytest.mark.parametrize("n", range(5))
    @pytest.mark.parametrize("x", [-2.3, -0.5, 0.0, 0.7, 1.9, 4.0])
    def test_closed_forms(self, n, x):
        assert hermite(n, x) == pytest.approx(HERMITE_CLOSED[n](x), rel=1e-12, abs=1e-12)

    @given(st.integers(0, 20), st.floats(-6, 6))
    def test_parity(self, n, x):
        assert hermite(n, -x) == pytest.approx((-1) ** n * hermite(n, x), rel=1e-12, abs=1e-300)

    @pytest.mark.parametrize("n", [0, 1, 5, 12])
    def test_coefficients_reproduce_values(self, n):
        coeffs = hermite_coefficients(n)
        x = 0.83
        assert sum(c * x**i for i, c in enumerate(coeffs)) == pytest.approx(hermite(n, x), rel=1e-12)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            hermite(-1, 0.0)


class TestLaguerre:
    def test_bases(self):
        assert laguerre_general(0, 0.5, 3.0) == 1.0
        assert laguerre_general(1, 0, 2.0) == -1.0

    @pytest.mark.parametrize("n,alpha,x", [(3, 2, 0.7), (7, 0, 3.1), (12, 5, 20.0)])
    def test_against_explicit_sum(self, n, alpha, x):
        assert laguerre_general(n, alpha, x) == pytest.approx(laguerre_explicit(n, alpha, x), rel=1e-12)

    def test_kummer_identity_point(self):
        lhs = math.comb(5, 3) * kummer_terminating(3, 3, 0.7)
        assert lhs == pytest.approx(laguerre_general(3, 2, 0.7), rel=1e-14)
        assert lhs == pytest.approx(4.1678333333333333, rel=1e-14)

    @pytest.mark.parametrize("alpha", [-1, -2.5])
    def test_rejects_bad_alpha(self, alpha):
        with pytest.raises(ValueError):
            laguerre_general(2, alpha, 1.0)

    @settings(max_examples=200)
    @given(st.integers(0, 20), st.integers(0, 6), st.floats(0, 50))
    def test_kummer_laguerre_identity(self, n, alpha, x):
        lag = laguerre_general(n, alpha, x)
        rhs = binomial(n + alpha, n) * kummer_terminating(n, alpha + 1, x)
        assert abs(rhs - lag) <= 1e-10 * max(1.0, abs(lag))
