"""Tests for the amplitude function F and its singular local behavior."""
import math

import numpy as np
import pytest

from bnsum.errors import DomainError, SingularityError
from bnsum.fseries import (
    FParams,
    f_alpha_zero_closed_form,
    f_eval,
    f_eval_many,
    f_eval_near_half_many,
    f_singular_model,
)

HALF_PI = math.pi / 2.0


def brute_force_f(alpha, beta, mu, phi, terms=2_000_000):
    l = np.arange(1, terms + 1, dtype=float)
    return float(np.sum((-1.0) ** l * np.cos(phi * (mu + 2 * l)) / (l + beta) ** alpha))


class TestFEval:
    def test_brute_force_series(self):
        # convergent comparison only for alpha > 1
        for alpha, beta, mu, phi in [(1.5, 0.0, 0, 0.7), (2.0, 0.5, 3, 2.1),
                                     (1.2, 1.0, 2, 1.5)]:
            p = FParams(alpha, beta, mu)
            want = brute_force_f(alpha, beta, mu, phi)
            assert f_eval(p, phi) == pytest.approx(want, abs=5e-7)

    def test_parity(self):
        # F(pi - phi) = (-1)^mu F(phi)
        for mu in (0, 1, 2, 3):
            p = FParams(0.7, 0.3, mu)
            for phi in (0.3, 1.1, 1.5):
                assert f_eval(p, math.pi - phi) == pytest.approx(
                    (-1.0) ** mu * f_eval(p, phi), rel=1e-9, abs=1e-11
                )

    def test_imag_residual_small(self):
        p = FParams(1.5, 0.5, 2)
        _, resid = f_eval(p, 0.8, return_imag_residual=True)
        assert resid < 1e-9

    def test_domain(self):
        with pytest.raises(DomainError):
            FParams(0.0, 0.0, 0)
        with pytest.raises(DomainError):
            FParams(1.0, -1.0, 0)
        with pytest.raises(DomainError):
            FParams(1.0, 0.0, -1)
        with pytest.raises(DomainError):
            f_eval(FParams(1.0, 0.0, 0), -0.2)

    def test_singular_point_raises(self):
        with pytest.raises(SingularityError):
            f_eval_many(FParams(0.5, 0.0, 0), np.array([HALF_PI]))

    def test_half_pi_value_alpha_gt_one(self):
        # F(pi/2) = cos(pi mu / 2) * zeta(alpha, beta+1) ... sign from -e^{i phi(mu+2)}
        from bnsum.specfun import hurwitz_zeta
        for mu in (0, 1, 2, 4):
            p = FParams(2.3, 0.4, mu)
            want = math.cos(HALF_PI * mu) * hurwitz_zeta(2.3, 1.4)
            assert f_eval(p, HALF_PI) == pytest.approx(want, rel=1e-9, abs=1e-12)


class TestNearHalf:
    def test_matches_direct_eval(self):
        p = FParams(0.6, 0.2, 1)
        eps = np.array([1e-2, 1e-4, 1e-6])
        near = f_eval_near_half_many(p, eps)
        direct = f_eval_many(p, HALF_PI - eps)
        np.testing.assert_allclose(near, direct, rtol=1e-9)

    def test_subulp_nodes_finite(self):
        # distances below one ulp of pi/2 must still evaluate, not collapse
        p = FParams(0.5, 0.0, 0)
        eps = np.array([1e-20, 1e-30])
        vals = f_eval_near_half_many(p, eps)
        assert np.all(np.isfinite(vals))
        # leading behavior ~ eps^{alpha-1} grows as eps -> 0
        assert abs(vals[1]) > abs(vals[0])

    def test_above_side(self):
        p = FParams(0.6, 0.2, 1)
        eps = np.array([1e-3])
        above = f_eval_near_half_many(p, eps, side=-1)
        direct = f_eval_many(p, HALF_PI + eps)
        np.testing.assert_allclose(above, direct, rtol=1e-9)


class TestSingularModel:
    def test_ratio_tends_to_one(self):
        p = FParams(0.4, 0.0, 1)
        prev = None
        for eps in (1e-3, 1e-5, 1e-7):
            val = float(f_eval_near_half_many(p, np.array([eps]))[0])
            model = f_singular_model(p, HALF_PI - eps, "below")
            ratio = val / model
            if prev is not None:
                assert abs(ratio - 1.0) < abs(prev - 1.0) + 1e-12
            prev = ratio
        assert abs(prev - 1.0) < 1e-4

    def test_domain(self):
        with pytest.raises(DomainError):
            f_singular_model(FParams(1.5, 0.0, 0), 1.0, "below")
        with pytest.raises(DomainError):
            f_singular_model(FParams(0.5, 0.0, 0), 1.0, "above")


class TestAlphaZeroClosedForm:
    def test_matches_cesaro_series(self):
        # F_{0,mu}(phi) = -cos((mu+1) phi)/(2 cos phi); compare against the
        # Abel-regularized series sum (-1)^l cos(phi(mu+2l)) x^l as x -> 1
        mu, phi = 2, 0.9
        want = f_alpha_zero_closed_form(mu, phi)
        x = 0.999999
        # Abel sum via closed form of the geometric series instead of brute force:
        # sum (-1)^l x^l e^{i phi(mu+2l)} = -e^{i phi(mu+2)} x / (1 + x e^{2 i phi})
        got = (-np.exp(1j * phi * (mu + 2)) * x / (1.0 + x * np.exp(2j * phi))).real
        assert got == pytest.approx(want, abs=1e-5)

    def test_singularity(self):
        import pytest as _pt
        with _pt.raises(SingularityError):
            f_alpha_zero_closed_form(0, HALF_PI)
