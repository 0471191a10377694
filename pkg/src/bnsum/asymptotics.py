"""Large-r asymptotic forms of the weighted series and its derivative variants.

An :class:`AsymptoticForm` is a sum of terms ``coeff * r^{-power} * osc(r)``
with ``osc`` one of a constant, ``log r``, ``sin(2r + phase)`` or
``cos(2r + phase)``, plus the claimed error exponent.  Constructors cover the
negative-exponent regime (``alpha = -a > 0``, non-integer and integer), the
non-negative regime (growth ``r^a``) and the derivative-series tables.

Two source displays disagree on the phase of the oscillatory 1/r term (one
writes ``-pi*mu/2``, the other ``-pi*nu/2``, with ``mu = m+m'``,
``nu = m-m'``); since ``sin(2r - pi*mu/2) = (-1)^{m'} sin(2r - pi*nu/2)``
only one can be right.  The validation harness fits both candidates against
the direct-sum oracle and records the winner in a generated constants file;
constructors read that file when no explicit ``phase_convention`` is given.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

from .errors import DomainError
from .specfun import (
    EULER_GAMMA,
    digamma,
    gamma,
    harmonic_extended,
    hurwitz_zeta,
    phi_minus_one,
    reciprocal_gamma,
)

_OSC_TAGS = ("const", "logr", "sin2r", "cos2r")

_CONSTANTS_PATH = Path(__file__).with_name("_constants.json")
_DEFAULT_CONSTANTS = {
    "cor42_phase": "mu",
    "cor62_osc_term": "present",
    "provenance": "library defaults (no validation run recorded yet)",
}
_constants_cache: dict | None = None


def load_phase_constants() -> dict:
    """Oracle-resolved conventions; defaults until a validation run stores them."""
    global _constants_cache
    if _constants_cache is None:
        if _CONSTANTS_PATH.exists():
            _constants_cache = {**_DEFAULT_CONSTANTS, **json.loads(_CONSTANTS_PATH.read_text())}
        else:
            _constants_cache = dict(_DEFAULT_CONSTANTS)
    return _constants_cache


def save_phase_constants(cor42_phase: str, cor62_osc_term: str, provenance: str) -> None:
    global _constants_cache
    if cor42_phase not in ("mu", "nu"):
        raise DomainError("cor42_phase must be 'mu' or 'nu'")
    if cor62_osc_term not in ("present", "absent"):
        raise DomainError("cor62_osc_term must be 'present' or 'absent'")
    data = {
        "cor42_phase": cor42_phase,
        "cor62_osc_term": cor62_osc_term,
        "provenance": provenance,
    }
    _CONSTANTS_PATH.write_text(json.dumps(data, indent=2) + "\n")
    _constants_cache = data


@dataclass(frozen=True)
class AsymptoticTerm:
    coeff: float
    power: float  # exponent p in r^{-p}; negative p means growth
    osc: str = "const"
    phase: float = 0.0  # phi0 in sin/cos(2r + phi0)

    def __post_init__(self):
        if not math.isfinite(self.coeff):
            raise DomainError("term coefficient must be finite")
        if self.osc not in _OSC_TAGS:
            raise DomainError(f"osc must be one of {_OSC_TAGS}")


@dataclass(frozen=True)
class AsymptoticForm:
    terms: tuple[AsymptoticTerm, ...] = ()
    # error O(r^{-gamma_err}); strict means the little-o claim o(r^{-gamma_err})
    gamma_err: float = math.inf
    strict: bool = False
    notes: str = field(default="", compare=False)


def eval_form(form: AsymptoticForm, r: float) -> float:
    """Sum of coeff * r^{-power} * osc(r) over the form's terms."""
    if r <= 0.0:
        raise DomainError("eval_form requires r > 0")
    total = 0.0
    for t in form.terms:
        osc = 1.0
        if t.osc == "logr":
            osc = math.log(r)
        elif t.osc == "sin2r":
            osc = math.sin(2.0 * r + t.phase)
        elif t.osc == "cos2r":
            osc = math.cos(2.0 * r + t.phase)
        total += t.coeff * r ** (-t.power) * osc
    return total


def _canonical_orders(m: int, m_prime: int) -> tuple[int, int]:
    if m < 0 or m_prime < 0:
        raise DomainError("m, m_prime must be >= 0")
    mu = m + m_prime
    nu = abs(m - m_prime)
    return mu, nu


def _cos_half_pi(nu: int) -> float:
    """cos(pi*nu/2) exactly (float cos leaves ~1e-16 residue at the zeros)."""
    return (1.0, 0.0, -1.0, 0.0)[nu % 4]


def _sin_half_pi(nu: int) -> float:
    return (0.0, 1.0, 0.0, -1.0)[nu % 4]


def _osc_phase(mu: int, nu: int, phase_convention: str | None) -> float:
    conv = phase_convention or load_phase_constants()["cor42_phase"]
    if conv == "mu":
        return -0.5 * math.pi * mu
    if conv == "nu":
        return -0.5 * math.pi * nu
    raise DomainError("phase_convention must be 'mu' or 'nu'")


def leading_noninteger(
    alpha: float,
    beta: float,
    m: int,
    m_prime: int,
    phase_convention: str | None = None,
) -> AsymptoticForm:
    """Two-term expansion of sum (l+beta)^{-alpha} J_{l+m'} J_{l+m}, alpha > 0
    non-integer:

        2^{alpha-1} Gamma(1-alpha) / (Gamma((nu-alpha+2)/2) Gamma((-nu-alpha+2)/2))
            * r^{-alpha}
        + (1/(pi r)) [cos(pi nu/2) zeta(alpha, beta+1)
                      + 2^{-alpha} (zeta(alpha,(beta+2)/2) - zeta(alpha,(beta+1)/2))
                        * sin(2r + phase)]

    with error O(r^{-min(alpha+1, 2)}).  The gamma reflection goes through
    ``reciprocal_gamma`` so the leading coefficient vanishes continuously at
    denominator poles.
    """
    if alpha <= 0.0 or alpha == math.floor(alpha):
        raise DomainError("leading_noninteger requires non-integer alpha > 0")
    if beta <= -1.0:
        raise DomainError("beta must be > -1")
    mu, nu = _canonical_orders(m, m_prime)
    lead = (
        2.0 ** (alpha - 1.0)
        * gamma(1.0 - alpha)
        * reciprocal_gamma((nu - alpha + 2.0) / 2.0)
        * reciprocal_gamma((-nu - alpha + 2.0) / 2.0)
    )
    cos_half = _cos_half_pi(nu)
    const_1r = cos_half * hurwitz_zeta(alpha, beta + 1.0) / math.pi
    osc_1r = (
        2.0 ** (-alpha)
        * (hurwitz_zeta(alpha, (beta + 2.0) / 2.0) - hurwitz_zeta(alpha, (beta + 1.0) / 2.0))
        / math.pi
    )
    terms = []
    if lead != 0.0:
        terms.append(AsymptoticTerm(lead, alpha))
    if const_1r != 0.0:
        terms.append(AsymptoticTerm(const_1r, 1.0))
    if osc_1r != 0.0:
        terms.append(
            AsymptoticTerm(osc_1r, 1.0, "sin2r", _osc_phase(mu, nu, phase_convention))
        )
    return AsymptoticForm(tuple(terms), min(alpha + 1.0, 2.0))


def leading_integer(
    alpha: int,
    beta: float,
    m: int,
    m_prime: int,
    phase_convention: str | None = None,
    osc_term: str | None = None,
) -> AsymptoticForm:
    """1/r expansion at integer alpha >= 1.

    alpha = 1 carries a log r term:

        (1/(pi r)) [cos(pi nu/2) log r
                    - cos(pi nu/2) (H_beta + psi((nu+1)/2) + log 2)
                    + (pi/2) sin(pi nu/2)
                    - Phi(-1, 1, beta+1) sin(2r + phase)] + o(1/r)

    and alpha > 1:

        (1/(pi r)) [cos(pi nu/2) zeta(alpha, beta+1)
                    + 2^{-alpha} (zeta(alpha,(beta+2)/2) - zeta(alpha,(beta+1)/2))
                      sin(2r + phase)] + O(r^{-2+eps}).

    ``osc_term='absent'`` drops the oscillatory term (the alternative reading
    of the conflicting source displays; the harness decides which is right).
    """
    if not (isinstance(alpha, int) or alpha == math.floor(alpha)) or alpha < 1:
        raise DomainError("leading_integer requires integer alpha >= 1")
    alpha = int(alpha)
    if beta <= -1.0:
        raise DomainError("beta must be > -1")
    mu, nu = _canonical_orders(m, m_prime)
    osc = osc_term or load_phase_constants()["cor62_osc_term"]
    if osc not in ("present", "absent"):
        raise DomainError("osc_term must be 'present' or 'absent'")
    phase = _osc_phase(mu, nu, phase_convention)
    cos_half = _cos_half_pi(nu)
    terms = []
    if alpha == 1:
        if cos_half != 0.0:
            terms.append(AsymptoticTerm(cos_half / math.pi, 1.0, "logr"))
            const = -cos_half * (
                harmonic_extended(beta) + digamma((nu + 1.0) / 2.0) + math.log(2.0)
            ) / math.pi
            terms.append(AsymptoticTerm(const, 1.0))
        sin_half = _sin_half_pi(nu)
        if sin_half != 0.0:
            terms.append(AsymptoticTerm(0.5 * sin_half, 1.0))
        if osc == "present":
            terms.append(
                AsymptoticTerm(-phi_minus_one(1.0, beta + 1.0) / math.pi, 1.0, "sin2r", phase)
            )
        return AsymptoticForm(tuple(terms), 1.0, strict=True)
    if cos_half != 0.0:
        terms.append(
            AsymptoticTerm(cos_half * hurwitz_zeta(float(alpha), beta + 1.0) / math.pi, 1.0)
        )
    if osc == "present":
        coeff = (
            2.0 ** (-alpha)
            * (
                hurwitz_zeta(float(alpha), (beta + 2.0) / 2.0)
                - hurwitz_zeta(float(alpha), (beta + 1.0) / 2.0)
            )
            / math.pi
        )
        terms.append(AsymptoticTerm(coeff, 1.0, "sin2r", phase))
    # error O(r^{-2+eps}) with eps arbitrarily small
    return AsymptoticForm(tuple(terms), 2.0, strict=True)


def leading_nonneg(a: float, m: int, m_prime: int) -> AsymptoticForm:
    """Leading growth for weight exponent a >= 0:

        S ~ 2^{-a-1} Gamma(a+1) r^a / (Gamma((-nu+a+2)/2) Gamma((nu+a+2)/2)),

    understood as the continuous extension: the coefficient is exactly 0 when
    (-nu+a+2)/2 is a nonpositive integer.
    """
    if a < 0.0:
        raise DomainError("leading_nonneg requires a >= 0")
    _, nu = _canonical_orders(m, m_prime)
    coeff = (
        2.0 ** (-a - 1.0)
        * gamma(a + 1.0)
        * reciprocal_gamma((-nu + a + 2.0) / 2.0)
        * reciprocal_gamma((nu + a + 2.0) / 2.0)
    )
    terms = (AsymptoticTerm(coeff, -a),) if coeff != 0.0 else ()
    return AsymptoticForm(terms, -a, strict=True)


_REGIMES = ("a>-1", "a=-1", "a<-1")


def derivative_series_form(kind: str, regime: str, a: float, beta: float) -> AsymptoticForm:
    """Leading form of sum (l+beta)^a X_l Y_l with X, Y in {J, J', J''}.

    ``kind`` is one of JJ, JdJ, dJdJ, JddJ, dJddJ, ddJddJ as in
    :mod:`bnsum.direct`; ``regime`` selects the a > -1 (growth r^a),
    a = -1 (log r / r) or a < -1 (1/r) table.
    """
    if regime not in _REGIMES:
        raise DomainError(f"regime must be one of {_REGIMES}")
    if beta <= -1.0:
        raise DomainError("beta must be > -1")
    if regime == "a>-1" and not a > -1.0:
        raise DomainError("regime 'a>-1' requires a > -1")
    if regime == "a=-1" and a != -1.0:
        raise DomainError("regime 'a=-1' requires a == -1")
    if regime == "a<-1" and not a < -1.0:
        raise DomainError("regime 'a<-1' requires a < -1")

    if regime == "a>-1":
        if kind == "JJ":
            c = 2.0 ** (-a - 1.0) * gamma(a + 1.0) * reciprocal_gamma(a / 2.0 + 1.0) ** 2
        elif kind == "dJdJ":
            c = gamma((a + 1.0) / 2.0) / (4.0 * math.sqrt(math.pi)) * reciprocal_gamma(a / 2.0 + 2.0)
        elif kind == "JddJ":
            c = -gamma((a + 1.0) / 2.0) / (4.0 * math.sqrt(math.pi)) * reciprocal_gamma(a / 2.0 + 2.0)
        elif kind == "ddJddJ":
            c = (
                3.0 * 2.0 ** (-a - 5.0) * (a + 2.0) * (a + 4.0)
                * gamma(a + 1.0) * reciprocal_gamma(a / 2.0 + 3.0) ** 2
            )
        elif kind in ("JdJ", "dJddJ"):
            return AsymptoticForm((), -a, strict=True)
        else:
            raise DomainError(f"unknown kind {kind!r}")
        return AsymptoticForm((AsymptoticTerm(c, -a),), -a, strict=True)

    pi = math.pi
    if regime == "a=-1":
        h = harmonic_extended(beta)
        psi_b = digamma(beta + 1.0)
        phi1 = phi_minus_one(1.0, beta + 1.0)
        table = {
            "JJ": ((1.0 / pi, "logr", 0.0), ((-h + math.log(2.0) + EULER_GAMMA) / pi, "const", 0.0)),
            "JdJ": ((-phi1 / pi, "cos2r", 0.0),),
            "dJdJ": (
                (1.0 / pi, "logr", 0.0),
                ((-h + EULER_GAMMA - 1.0 + math.log(2.0)) / pi, "const", 0.0),
            ),
            "JddJ": ((-1.0 / pi, "logr", 0.0), ((psi_b - math.log(2.0) + 1.0) / pi, "const", 0.0)),
            "dJddJ": ((phi1 / pi, "cos2r", 0.0),),
            "ddJddJ": (
                (1.0 / pi, "logr", 0.0),
                ((-3.0 * psi_b - 4.0 + math.log(8.0)) / (3.0 * pi), "const", 0.0),
            ),
        }
        if kind not in table:
            raise DomainError(f"unknown kind {kind!r}")
        terms = tuple(AsymptoticTerm(c, 1.0, osc, ph) for c, osc, ph in table[kind])
        return AsymptoticForm(terms, 1.0, strict=True)

    # a < -1
    z = hurwitz_zeta(-a, beta + 1.0)
    d = hurwitz_zeta(-a, (beta + 1.0) / 2.0) - hurwitz_zeta(-a, (beta + 2.0) / 2.0)
    w = 2.0 ** a * d
    table = {
        "JJ": ((z / pi, "const"), (-w / pi, "sin2r")),
        "JdJ": ((-w / pi, "cos2r"),),
        "dJdJ": ((z / pi, "const"), (w / pi, "sin2r")),
        "JddJ": ((z / pi, "const"), (-w / pi, "sin2r")),
        "dJddJ": ((w / pi, "cos2r"),),
        "ddJddJ": ((z / pi, "const"), (-w / pi, "sin2r")),
    }
    if kind not in table:
        raise DomainError(f"unknown kind {kind!r}")
    terms = tuple(AsymptoticTerm(c, 1.0, osc) for c, osc in table[kind])
    # error O(r^{-2+eps}) with eps arbitrarily small
    return AsymptoticForm(terms, 2.0, strict=True)
