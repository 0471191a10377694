"""Hot numeric kernels: integer-order Bessel J rows by backward recurrence.

``bessel_rows(nmax, rs)`` returns a ``(nmax+1, len(rs))`` array with
``J_0(r)..J_nmax(r)`` per column.  The recurrence runs downward from a start
order safely above the turning point ``l ~ r`` (upward recurrence is unstable
for order > argument) and is normalized with ``J_0 + 2*sum_k J_{2k} = 1``.

Two implementations are provided: a numba-compiled per-argument loop and a
numpy fallback vectorized across arguments.  ``BNSUM_NO_NUMBA=1`` selects the
fallback; see :mod:`bnsum.backend`.
"""
from __future__ import annotations

import math

import numpy as np

from .backend import USE_NUMBA, njit

_RESCALE = 1e250
_INV_RESCALE = 1e-250


def _start_order(nmax: int, r: float) -> int:
    # Must clear the turning point: for r >> nmax the minimal solution only
    # starts decaying past l ~ r, so the start order is anchored at
    # max(nmax, r), not nmax alone.
    big = max(nmax, r, 1.0)
    return int(max(nmax, math.ceil(r))) + 10 + int(math.ceil(10.0 * math.sqrt(big)))


@njit(cache=True)
def _rows_kernel(nmax, rs, starts, out):  # pragma: no cover - exercised via wrapper
    for j in range(rs.shape[0]):
        r = rs[j]
        if r == 0.0:
            out[0, j] = 1.0
            for l in range(1, nmax + 1):
                out[l, j] = 0.0
            continue
        m = starts[j]
        jp = 0.0
        jc = 1e-300
        norm = 0.0
        top = nmax  # highest order stored so far (exclusive bookkeeping)
        if m % 2 == 0:
            norm = 2.0 * jc if m > 0 else jc
        if m <= nmax:
            out[m, j] = jc
            top = m
        for l in range(m, 0, -1):
            jm = (2.0 * l / r) * jc - jp
            jp = jc
            jc = jm
            order = l - 1
            if order <= nmax:
                out[order, j] = jc
                top = order
            if order % 2 == 0:
                if order > 0:
                    norm += 2.0 * jc
                else:
                    norm += jc
            if abs(jc) > _RESCALE:
                jc *= _INV_RESCALE
                jp *= _INV_RESCALE
                norm *= _INV_RESCALE
                for k in range(top, nmax + 1):
                    out[k, j] *= _INV_RESCALE
        for l in range(0, nmax + 1):
            out[l, j] /= norm


def _rows_numpy(nmax: int, rs: np.ndarray) -> np.ndarray:
    n = rs.shape[0]
    out = np.zeros((nmax + 1, n))
    zero = rs == 0.0
    safe_r = np.where(zero, 1.0, rs)
    m = max(_start_order(nmax, float(rs.max())) if n else 0, nmax + 1)
    jp = np.zeros(n)
    jc = np.full(n, 1e-300)
    norm = np.zeros(n)
    if m % 2 == 0:
        norm += 2.0 * jc
    if m <= nmax:
        out[m] = jc
    for l in range(m, 0, -1):
        jm = (2.0 * l / safe_r) * jc - jp
        jp = jc
        jc = jm
        order = l - 1
        if order <= nmax:
            out[order] = jc
        if order % 2 == 0:
            norm += jc if order == 0 else 2.0 * jc
        big = np.abs(jc) > _RESCALE
        if big.any():
            scale = np.where(big, _INV_RESCALE, 1.0)
            jc = jc * scale
            jp = jp * scale
            norm = norm * scale
            out[order:] *= scale
    out /= norm
    if zero.any():
        out[:, zero] = 0.0
        out[0, zero] = 1.0
    return out


def bessel_rows(nmax: int, rs: np.ndarray) -> np.ndarray:
    """J_0..J_nmax at every argument in ``rs`` (non-negative reals)."""
    rs = np.asarray(rs, dtype=np.float64)
    if rs.ndim != 1:
        raise ValueError("rs must be one-dimensional")
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    if rs.size == 0:
        return np.zeros((nmax + 1, 0))
    if USE_NUMBA:
        big = np.maximum(np.maximum(float(nmax), rs), 1.0)
        starts = (
            np.maximum(nmax, np.ceil(rs)).astype(np.int64)
            + 10
            + np.ceil(10.0 * np.sqrt(big)).astype(np.int64)
        )
        out = np.zeros((nmax + 1, rs.shape[0]))
        _rows_kernel(nmax, rs, starts, out)
        return out
    return _rows_numpy(nmax, rs)


# Exposed for the benchmark: both routes regardless of the env flag.
def bessel_rows_numpy(nmax: int, rs: np.ndarray) -> np.ndarray:
    return _rows_numpy(nmax, np.asarray(rs, dtype=np.float64))
