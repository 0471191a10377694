"""Tests for the Bessel-row kernel and the certified direct summation."""
import math
import os
import subprocess
import sys

import mpmath
import numpy as np
import pytest

from bnsum.direct import (
    DERIVATIVE_KINDS,
    SeriesSpec,
    sum_derivative_series,
    sum_series,
)
from bnsum.errors import DomainError
from bnsum.kernels import bessel_rows, bessel_rows_numpy

mpmath.mp.dps = 25


class TestBesselRows:
    def test_against_mpmath(self):
        rs = np.array([0.3, 2.0, 17.5, 80.0])
        rows = bessel_rows(12, rs)
        for j, r in enumerate(rs):
            for n in (0, 1, 5, 12):
                want = float(mpmath.besselj(n, float(r)))
                assert rows[n, j] == pytest.approx(want, abs=2e-15)

    def test_numpy_fallback_matches(self):
        rs = np.array([0.5, 4.2, 33.0])
        np.testing.assert_allclose(
            bessel_rows(20, rs), bessel_rows_numpy(20, rs), rtol=0, atol=1e-15
        )

    def test_zero_argument(self):
        row = bessel_rows(4, np.array([0.0]))[:, 0]
        assert row[0] == 1.0
        assert np.all(row[1:] == 0.0)

    def test_no_numba_env_flag(self):
        # the fallback path is selected by BNSUM_NO_NUMBA and agrees with mpmath
        code = (
            "import numpy as np\n"
            "from bnsum.kernels import bessel_rows\n"
            "from bnsum.backend import USE_NUMBA\n"
            "assert not USE_NUMBA\n"
            "print('%.17g' % bessel_rows(3, np.array([7.7]))[3, 0])\n"
        )
        env = dict(os.environ, BNSUM_NO_NUMBA="1")
        out = subprocess.run([sys.executable, "-c", code], env=env,
                             capture_output=True, text=True)
        assert out.returncode == 0, out.stderr
        want = float(mpmath.besselj(3, 7.7))
        assert float(out.stdout) == pytest.approx(want, abs=1e-15)


class TestSeriesSpec:
    def test_mu_nu(self):
        sp = SeriesSpec(-1.0, 0.5, 3, 1)
        assert sp.mu == 4 and sp.nu == 2

    def test_canonical_swaps(self):
        sp = SeriesSpec(-1.0, 0.0, 0, 2).canonical()
        assert (sp.m, sp.m_prime) == (2, 0)

    def test_domain(self):
        with pytest.raises(DomainError):
            SeriesSpec(0.0, -1.0, 0, 0)
        with pytest.raises(DomainError):
            SeriesSpec(0.0, 0.0, -1, 0)


class TestSumSeries:
    def test_neumann_value(self):
        # a=0, m=m'=0: S = (1 - J_0(r)^2)/2
        for r in (0.5, 2.0, 11.0, 40.0):
            want = (1.0 - float(mpmath.besselj(0, r)) ** 2) / 2.0
            got = sum_series(SeriesSpec(0.0, 0.0, 0, 0), r)
            assert got.value == pytest.approx(want, abs=1e-13)
            assert abs(got.value - want) <= got.err_est

    def test_frozen_value_at_two(self):
        # (1 - J_0(2)^2)/2 with J_0(2) = 0.22389077914123567
        got = sum_series(SeriesSpec(0.0, 0.0, 0, 0), 2.0).value
        assert got == pytest.approx(0.47493645950776536, abs=1e-14)

    def test_zero_r(self):
        res = sum_series(SeriesSpec(-1.0, 0.0, 1, 0), 0.0)
        assert res.value == 0.0 and res.err_est == 0.0

    def test_symmetry_in_orders(self):
        a = sum_series(SeriesSpec(-1.5, 0.5, 2, 0), 7.0).value
        b = sum_series(SeriesSpec(-1.5, 0.5, 0, 2), 7.0).value
        assert a == pytest.approx(b, rel=1e-14)

    def test_mpmath_oracle(self):
        sp = SeriesSpec(-0.7, 0.3, 1, 0)
        r = 6.0
        want = float(mpmath.nsum(
            lambda l: mpmath.besselj(int(l), r) * mpmath.besselj(int(l) + 1, r)
            / (l + 0.3) ** 0.7,
            [1, mpmath.inf],
        ))
        got = sum_series(sp, r).value
        assert got == pytest.approx(want, abs=1e-11)

    def test_certified_tolerance(self):
        sp = SeriesSpec(2.0, 0.0, 0, 0)
        loose = sum_series(sp, 25.0, tol=1e-6)
        tight = sum_series(sp, 25.0, tol=1e-13)
        assert abs(loose.value - tight.value) <= loose.err_est

    def test_large_r_runs(self):
        res = sum_series(SeriesSpec(-1.0, 0.0, 0, 0), 800.0)
        assert math.isfinite(res.value)
        assert res.work < 3000


class TestDerivativeSeries:
    @pytest.mark.parametrize("kind", DERIVATIVE_KINDS)
    def test_against_mpmath(self, kind):
        a, beta, r = -1.2, 0.4, 5.0

        def dj(n, order):
            return float(mpmath.besselj(n, r, derivative=order))

        orders = {"JJ": (0, 0), "JdJ": (0, 1), "dJdJ": (1, 1),
                  "JddJ": (0, 2), "dJddJ": (1, 2), "ddJddJ": (2, 2)}[kind]
        want = sum(
            dj(l, orders[0]) * dj(l, orders[1]) * (l + beta) ** a for l in range(1, 40)
        )
        got = sum_derivative_series(kind, a, beta, r).value
        assert got == pytest.approx(want, abs=1e-11)

    def test_unknown_kind(self):
        with pytest.raises(DomainError):
            sum_derivative_series("JdddJ", 0.0, 0.0, 1.0)

    def test_jj_matches_sum_series(self):
        a, beta, r = -1.5, 0.5, 9.0
        assert sum_derivative_series("JJ", a, beta, r).value == pytest.approx(
            sum_series(SeriesSpec(a, beta, 0, 0), r).value, rel=1e-12
        )
