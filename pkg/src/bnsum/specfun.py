"""Self-contained real/complex special-function kernel.

Gamma, digamma, Hurwitz zeta (Euler-Maclaurin continuation), the Lerch
transcendent on the unit circle, its value at -1, integer-order Bessel J rows
and extended harmonic numbers.  Everything here is pure and reentrant; the
Bernoulli/Gauss tables are built at import time and never mutated.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .errors import DomainError, PoleError, SingularityError
from .kernels import bessel_rows

EULER_GAMMA = 0.5772156649015328606


class ComplexValue(NamedTuple):
    re: float
    im: float

    def as_complex(self) -> complex:
        return complex(self.re, self.im)


@dataclass(frozen=True)
class BesselRow:
    order_max: int
    argument: float
    values: np.ndarray  # J_0 .. J_order_max


def _bernoulli_even(count: int) -> tuple[float, ...]:
    # B_0..B_{2*count} via the defining recurrence, exactly in Fraction.
    n_top = 2 * count
    b = [Fraction(0)] * (n_top + 1)
    b[0] = Fraction(1)
    for n in range(1, n_top + 1):
        s = Fraction(0)
        for k in range(n):
            s += math.comb(n + 1, k) * b[k]
        b[n] = -s / (n + 1)
    return tuple(float(b[2 * k]) for k in range(1, count + 1))


_K_MAX = 32
_B_EVEN = _bernoulli_even(_K_MAX)  # B_2, B_4, ..., B_64
_B2K_OVER_FACT = tuple(_B_EVEN[k - 1] / math.factorial(2 * k) for k in range(1, _K_MAX + 1))


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0.0 and x == math.floor(x)


def gamma(x: float) -> float:
    """Gamma function for real non-pole arguments."""
    if _is_nonpositive_integer(x):
        raise PoleError(f"gamma pole at x={x}")
    return math.gamma(x)


def reciprocal_gamma(x: float) -> float:
    """1/Gamma(x), continued by 0 at the poles of Gamma (entire function)."""
    if _is_nonpositive_integer(x):
        return 0.0
    if abs(x) < 170.0:
        return 1.0 / math.gamma(x)
    if x > 0:
        return math.exp(-math.lgamma(x))
    sign = -1.0 if (math.floor(x) % 2) else 1.0
    try:
        return sign * math.exp(-math.lgamma(x))
    except OverflowError:
        # |Gamma(x)| underflows below ~1e-309 for x < -171; 1/Gamma exceeds
        # the double range
        return sign * math.inf


def digamma(x: float) -> float:
    """Psi function; recurrence up to x >= 12 then the Bernoulli series."""
    if _is_nonpositive_integer(x):
        raise PoleError(f"digamma pole at x={x}")
    if x < 0.0:
        return digamma(1.0 - x) - math.pi / math.tan(math.pi * x)
    acc = 0.0
    while x < 12.0:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    s = math.log(x) - 0.5 / x
    t = inv2
    for k in range(1, 9):
        s -= _B_EVEN[k - 1] / (2 * k) * t
        t *= inv2
    return acc + s


def harmonic_extended(beta: float) -> float:
    """H_beta = psi(beta+1) + gamma for beta > -1."""
    if beta <= -1.0:
        raise DomainError("harmonic_extended requires beta > -1")
    return digamma(beta + 1.0) + EULER_GAMMA


def hurwitz_zeta(s: float, a: float) -> float:
    """Hurwitz zeta zeta(s, a), Euler-Maclaurin analytic continuation in s."""
    if s == 1.0:
        raise PoleError("hurwitz_zeta pole at s=1")
    if a <= 0.0:
        raise DomainError("hurwitz_zeta requires a > 0")
    # A larger shift worsens cancellation for s << 0 (partial-sum terms grow
    # like x^{|s|}); keep x as small as the Bernoulli tail's convergence allows.
    shift = max(15.0, 0.26 * abs(s))
    n_head = max(0, int(math.ceil(shift - a)))
    acc = 0.0
    for n in range(n_head):
        acc += (n + a) ** (-s)
    x = n_head + a
    acc += x ** (1.0 - s) / (s - 1.0) + 0.5 * x ** (-s)
    poch = s  # rising factorial s(s+1)...(s+2k-2)
    xpow = x ** (-s - 1.0)
    inv2 = 1.0 / (x * x)
    prev = math.inf
    for k in range(1, _K_MAX + 1):
        term = _B2K_OVER_FACT[k - 1] * poch * xpow
        acc += term
        mag = abs(term)
        if mag < 1e-18 * abs(acc) or mag < 5e-324:
            break
        if mag > prev and k > 4:
            break  # asymptotic tail started diverging; best already taken
        prev = mag
        poch *= (s + 2.0 * k - 1.0) * (s + 2.0 * k)
        xpow *= inv2
    return acc


def _alternating_sum(term, n: int = 48) -> float:
    # Chebyshev-polynomial acceleration of sum_{k>=0} (-1)^k term(k); needs
    # term(k) to be totally monotone, which (k+a)^(-s) with s > 0 is.
    d = (3.0 + 2.0 * math.sqrt(2.0)) ** n
    d = (d + 1.0 / d) / 2.0
    b = -1.0
    c = -d
    s = 0.0
    for k in range(n):
        c = b - c
        s += c * term(k)
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0))
    return s / d


def phi_minus_one(s: float, a: float) -> float:
    """Phi(-1, s, a); finite at s=1 via the accelerated alternating series."""
    if a <= 0.0:
        raise DomainError("phi_minus_one requires a > 0")
    if s == 1.0:
        return _alternating_sum(lambda k: 1.0 / (k + a))
    return (hurwitz_zeta(s, a / 2.0) - hurwitz_zeta(s, (a + 1.0) / 2.0)) / 2.0 ** s


def phi_minus_one_series(s: float, a: float, n: int = 48) -> float:
    """Secondary route for Phi(-1, s, a): accelerated alternating series."""
    if a <= 0.0 or s <= 0.0:
        raise DomainError("series route requires a > 0, s > 0")
    return _alternating_sum(lambda k: (k + a) ** (-s), n)


# ---------------------------------------------------------------------------
# Lerch transcendent on the unit circle: Phi(-e^{2 i phi}, alpha, v)
# ---------------------------------------------------------------------------

_NEAR_HALF_PI = 0.35  # |2*phi - pi| below this switches to the local expansion

_GAUSS_NODES, _GAUSS_WEIGHTS = np.polynomial.legendre.leggauss(16)


def gauss_panel_nodes(edges: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes/weights for the panels delimited by ``edges``."""
    lo = edges[:-1]
    hi = edges[1:]
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    nodes = (mid[:, None] + half[:, None] * _GAUSS_NODES[None, :]).ravel()
    weights = (half[:, None] * _GAUSS_WEIGHTS[None, :]).ravel()
    return nodes, weights


def _lerch_t_grid(alpha: float, v: float) -> tuple[np.ndarray, np.ndarray]:
    # [t0, 1]: geometric grading so t^{alpha-1} is smooth per panel; the tail
    # below t0 contributes < t0^alpha / alpha ~ 1e-18.
    exp10 = min(250.0, max(2.0, 19.0 / alpha))
    n_lo = int(math.ceil(exp10 * math.log(10.0) / math.log(3.0))) + 1
    lo_edges = np.concatenate(([0.0], 3.0 ** np.arange(-n_lo + 1, 1, dtype=float)))
    # [1, T]: exponential decay e^{-t v}; T from (alpha-1) ln T - v T = -45.
    t_hi = (45.0 + max(alpha - 1.0, 0.0)) / v + 1.0
    for _ in range(4):
        t_hi = (45.0 + max(alpha - 1.0, 0.0) * math.log(t_hi)) / v + 1.0
    hi_edges = np.geomspace(1.0, max(t_hi, 1.0 + 1e-6), 24)
    edges = np.concatenate((lo_edges, hi_edges[1:]))
    return gauss_panel_nodes(edges)


def _lerch_integral_many(phis: np.ndarray, alpha: float, v: float) -> np.ndarray:
    """Quadrature of t^{alpha-1} e^{-t v} / (1 + e^{-t + 2 i phi}) / Gamma(alpha)."""
    t, w = _lerch_t_grid(alpha, v)
    log_amp = (alpha - 1.0) * np.log(t) - t * v - math.lgamma(alpha)
    amp = w * np.exp(log_amp)
    denom = 1.0 + np.exp(-t)[:, None] * np.exp(2j * phis)[None, :]
    return amp @ (1.0 / denom)


_LOCAL_TERMS = 48


@lru_cache(maxsize=512)
def _local_tables(alpha: float, v: float) -> tuple[np.ndarray, bool]:
    """zeta(alpha-k, v)/k! for the z->1 Lerch expansion, cached per (alpha, v)."""
    alpha_int = alpha == math.floor(alpha)
    coeffs = np.empty(_LOCAL_TERMS)
    for k in range(_LOCAL_TERMS):
        if alpha_int and k == int(alpha) - 1:
            coeffs[k] = 0.0  # replaced by the digamma/log head term
        else:
            coeffs[k] = hurwitz_zeta(alpha - k, v) / math.factorial(k)
    return coeffs, alpha_int


def lerch_local_many(ells: np.ndarray, alpha: float, v: float) -> np.ndarray:
    """Phi(e^{i ell}, alpha, v) for small |ell| (< 2 pi), vectorized.

    Expansion of Phi(z, alpha, v) in log z = i*ell around z = 1; with
    z = -e^{2 i phi} this is ell = 2*phi - pi, the phi = pi/2 neighborhood.
    The caller guarantees ell != 0 when alpha <= 1.
    """
    ells = np.asarray(ells, dtype=np.float64)
    coeffs, alpha_int = _local_tables(alpha, v)
    logz = 1j * ells
    acc = np.zeros(ells.shape, dtype=np.complex128)
    lp = np.ones(ells.shape, dtype=np.complex128)
    for k in range(_LOCAL_TERMS):
        acc += lp * coeffs[k]
        lp *= logz
    zero = ells == 0.0
    if zero.any() and alpha <= 1.0:
        raise SingularityError("Phi singular at z=1 for alpha <= 1")
    with np.errstate(divide="ignore", invalid="ignore"):
        if alpha_int:
            n = int(alpha)
            head = -(logz ** (n - 1)) * (
                digamma(v) - digamma(float(n)) + np.log(-logz)
            ) / math.factorial(n - 1)
        else:
            head = gamma(1.0 - alpha) * (-logz) ** (alpha - 1.0)
    if zero.any():
        head = np.where(zero, 0.0, head)  # limit for alpha > 1
    return np.exp(-1j * v * ells) * (acc + head)


def _lerch_local(phi: float, alpha: float, v: float) -> complex:
    return complex(lerch_local_many(np.array([2.0 * phi - math.pi]), alpha, v)[0])


def lerch_unit_many(phis: np.ndarray, alpha: float, v: float) -> np.ndarray:
    """Vectorized Phi(-e^{2 i phi}, alpha, v) over an array of angles."""
    phis = np.asarray(phis, dtype=np.float64)
    out = np.empty(phis.shape, dtype=np.complex128)
    near = np.abs(2.0 * phis - math.pi) < _NEAR_HALF_PI
    if (~near).any():
        out[~near] = _lerch_integral_many(phis[~near], alpha, v)
    if near.any():
        out[near] = lerch_local_many(2.0 * phis[near] - math.pi, alpha, v)
    return out


def lerch_unit(phi: float, alpha: float, v: float) -> ComplexValue:
    """Phi(-e^{2 i phi}, alpha, v) for phi in [0, pi], alpha > 0, v > 0."""
    if not (0.0 <= phi <= math.pi):
        raise DomainError("phi must lie in [0, pi]")
    if alpha <= 0.0 or v <= 0.0:
        raise DomainError("lerch_unit requires alpha > 0 and v > 0")
    if alpha <= 1.0 and phi == math.pi / 2.0:
        raise SingularityError("Phi(-e^{2i phi}, alpha, v) singular at phi=pi/2 for alpha <= 1")
    val = lerch_unit_many(np.array([phi]), alpha, v)[0]
    return ComplexValue(float(val.real), float(val.imag))


def lerch_unit_series(phi: float, alpha: float, v: float, terms: int = 6000) -> ComplexValue:
    """Cross-check route: epsilon-accelerated partial sums of the defining series."""
    if alpha <= 0.0 or v <= 0.0:
        raise DomainError("lerch_unit_series requires alpha > 0 and v > 0")
    z = -np.exp(2j * phi)
    n = np.arange(terms)
    a_n = z ** n / (v + n) ** alpha
    partial = np.cumsum(a_n)
    val = _wynn_epsilon(partial[-48:])
    return ComplexValue(float(val.real), float(val.imag))


def _wynn_epsilon(seq: np.ndarray) -> complex:
    """Wynn's epsilon algorithm; returns the deepest even-column estimate."""
    e0 = np.zeros(len(seq) + 1, dtype=np.complex128)
    e1 = np.array(seq, dtype=np.complex128)
    best = e1[-1]
    cur = e1
    prev = e0[: len(seq) + 1]
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        for _ in range((len(seq) - 1) // 2):
            nxt = prev[1 : len(cur)] + 1.0 / np.diff(cur)
            cur, prev = nxt, cur
            if len(cur) == 0 or not np.isfinite(cur[-1]):
                break
            nxt2 = prev[1 : len(cur)] + 1.0 / np.diff(cur)
            cur, prev = nxt2, cur
            if len(cur) == 0 or not np.isfinite(cur[-1]):
                break
            best = cur[-1]
    return complex(best)


def bessel_j_row(order_max: int, r: float) -> BesselRow:
    """J_0(r)..J_{order_max}(r) by normalized backward recurrence."""
    if order_max < 0:
        raise DomainError("order_max must be >= 0")
    if r < 0.0:
        raise DomainError("r must be >= 0")
    vals = bessel_rows(order_max, np.array([r]))[:, 0]
    return BesselRow(order_max=order_max, argument=r, values=vals)


def bessel_j_col(order: int, args: np.ndarray) -> np.ndarray:
    """J_order at every (non-negative) argument of ``args``."""
    if order < 0:
        raise DomainError("order must be >= 0")
    args = np.asarray(args, dtype=np.float64)
    return bessel_rows(order, args)[order]
