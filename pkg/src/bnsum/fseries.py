"""Amplitude function F_{alpha,beta,mu}(phi) of the integral representations.

F is the boundary value of a Lerch transcendent on the unit circle,

    F(phi) = Re(-e^{i phi (mu+2)} Phi(-e^{2 i phi}, alpha, beta+1))
           = sum_{l>=1} (-1)^l cos(phi (mu + 2l)) / (l + beta)^alpha,

smooth on [0, pi] except possibly at phi = pi/2, where it carries an
algebraic singularity of order alpha-1 when alpha < 1 (logarithmic at
alpha = 1 for even mu).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, SingularityError
from .specfun import gamma, lerch_local_many, lerch_unit_many

HALF_PI = math.pi / 2.0


@dataclass(frozen=True)
class FParams:
    alpha: float
    beta: float
    mu: int

    def __post_init__(self):
        if self.alpha <= 0.0:
            raise DomainError("FParams requires alpha > 0")
        if self.beta <= -1.0:
            raise DomainError("FParams requires beta > -1")
        if self.mu < 0:
            raise DomainError("FParams requires mu >= 0")


def f_eval_many(p: FParams, phis: np.ndarray) -> np.ndarray:
    """Vectorized F over an array of angles in [0, pi]."""
    phis = np.asarray(phis, dtype=np.float64)
    if p.alpha <= 1.0 and np.any(phis == HALF_PI):
        raise SingularityError("F singular at phi=pi/2 for alpha <= 1")
    lam = lerch_unit_many(phis, p.alpha, p.beta + 1.0)
    return np.real(-np.exp(1j * phis * (p.mu + 2)) * lam)


def f_eval_near_half_many(p: FParams, eps: np.ndarray, side: int = 1) -> np.ndarray:
    """F at phi = pi/2 - side*eps for small eps > 0, parametrized by eps.

    The distance to pi/2 enters the singular factor directly instead of
    through phi, so nodes closer to pi/2 than one ulp stay distinguishable.
    Requires |eps| below the convergence range of the local expansion (< pi).
    """
    eps = np.asarray(eps, dtype=np.float64)
    if side not in (1, -1):
        raise DomainError("side must be +1 (below pi/2) or -1 (above)")
    if p.alpha <= 1.0 and np.any(eps == 0.0):
        raise SingularityError("F singular at phi=pi/2 for alpha <= 1")
    lam = lerch_local_many(-2.0 * side * eps, p.alpha, p.beta + 1.0)
    phase = np.exp(1j * (HALF_PI - side * eps) * (p.mu + 2))
    return np.real(-phase * lam)


def f_eval(p: FParams, phi: float, return_imag_residual: bool = False):
    """F_{alpha,beta,mu}(phi); optionally also the symmetrized-form imaginary residue.

    The symmetrized definition averages the phi and -phi Lerch branches; its
    imaginary part is an algebraic zero and serves as a numerical diagnostic.
    """
    if not (0.0 <= phi <= math.pi):
        raise DomainError("phi must lie in [0, pi]")
    value = float(f_eval_many(p, np.array([phi]))[0])
    if not return_imag_residual:
        return value
    lam_pos = lerch_unit_many(np.array([phi]), p.alpha, p.beta + 1.0)[0]
    lam_neg = lerch_unit_many(np.array([math.pi - phi]), p.alpha, p.beta + 1.0)[0]
    # Phi(-e^{-2 i phi}) = Phi(-e^{2 i (pi - phi)}): both branches evaluated
    # independently, so conjugate symmetry is genuinely tested.
    sym = -0.5 * np.exp(-1j * phi * (p.mu + 2)) * (
        np.exp(2j * phi * (p.mu + 2)) * lam_pos + lam_neg
    )
    return value, abs(sym.imag)


def f_singular_model(p: FParams, phi: float, side: str) -> float:
    """Leading local model of F near phi = pi/2 for 0 < alpha < 1."""
    if not (0.0 < p.alpha < 1.0):
        raise DomainError("singular model holds for 0 < alpha < 1")
    if side not in ("below", "above"):
        raise DomainError("side must be 'below' or 'above'")
    g = gamma(1.0 - p.alpha)
    if side == "below":
        if not phi < HALF_PI:
            raise DomainError("side='below' requires phi < pi/2")
        return 0.5 * g * (-((math.pi - 2.0 * phi) ** (p.alpha - 1.0))) * (
            -2.0 * math.sin(0.5 * math.pi * (p.mu + p.alpha))
        )
    if not phi > HALF_PI:
        raise DomainError("side='above' requires phi > pi/2")
    return 0.5 * g * (2.0 * phi - math.pi) ** (p.alpha - 1.0) * (
        -2.0 * math.sin(0.5 * math.pi * (p.mu - p.alpha))
    )


def f_alpha_zero_closed_form(mu: int, phi: float) -> float:
    """F_{0,mu}(phi) = -cos((mu+1) phi) / (2 cos phi).

    Closed form of the alpha=0 boundary case; the integral representation
    does not hold there (negative test fixture only).
    """
    if mu < 0:
        raise DomainError("mu must be >= 0")
    if phi == HALF_PI:
        raise SingularityError("closed form singular at phi=pi/2")
    return -math.cos((mu + 1) * phi) / (2.0 * math.cos(phi))
