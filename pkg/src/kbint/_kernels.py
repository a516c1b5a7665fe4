"""Hot series kernels with a numba path and a pure-numpy fallback.

Both kernels share one stopping rule: summation stops at the first
``n >= 2`` with ``|t_n| <= rel_tol * |S_n|`` and ``|t_n| <= |t_{n-1}|``.
The second condition keeps series whose terms grow before decaying
(positive arguments) from stopping on an early small term.

Status codes returned by the kernels: ``OK``, ``NO_CONVERGENCE`` (hit
``max_terms``), ``POLE`` (an upper gamma argument is a pole).
"""
import math

import numpy as np
from scipy import special as _sp

from ._accel import USE_NUMBA, jit

OK = 0
NO_CONVERGENCE = 1
POLE = 2


# --------------------------------------------------------------------------
# Reduced k-Bessel series  S(nu, q) = sum_n q**n / (Gamma(nu + 1 + n) n!)
# --------------------------------------------------------------------------

def w_series_numpy(nu, q, rel_tol, max_terms):
    """Vectorised sum of the reduced series over a 1-d array of arguments.

    Returns ``(values, nterms, last_abs_term, status)``.
    """
    q = np.asarray(q, dtype=np.float64)
    t0 = math.exp(-math.lgamma(nu + 1.0))
    t = np.full(q.shape, t0)
    s = t.copy()
    prev = np.abs(t)
    nterms = np.ones(q.shape, dtype=np.int64)
    last = np.zeros(q.shape)
    active = q != 0.0
    n = 1
    while n < max_terms and active.any():
        idx = np.nonzero(active)[0]
        t[idx] *= q[idx] / (n * (nu + n))
        s[idx] += t[idx]
        nterms[idx] = n + 1
        at = np.abs(t[idx])
        last[idx] = at
        if n >= 2:
            done = (at <= rel_tol * np.abs(s[idx])) & (at <= prev[idx])
            active[idx] = ~done
        prev[idx] = at
        n += 1
    status = NO_CONVERGENCE if active.any() else OK
    return s, nterms, last, status


def _w_series_loop(nu, q, rel_tol, max_terms):
    m = q.shape[0]
    out = np.empty(m)
    nterms = np.ones(m, dtype=np.int64)
    last = np.zeros(m)
    status = 0
    t0 = math.exp(-math.lgamma(nu + 1.0))
    for i in range(m):
        qi = q[i]
        t = t0
        s = t0
        if qi != 0.0:
            prev = abs(t)
            converged = False
            for n in range(1, max_terms):
                t *= qi / (n * (nu + n))
                s += t
                at = abs(t)
                if n >= 2 and at <= rel_tol * abs(s) and at <= prev:
                    converged = True
                    nterms[i] = n + 1
                    last[i] = at
                    break
                prev = at
            if not converged:
                nterms[i] = max_terms
                last[i] = abs(t)
                status = 1
        out[i] = s
    return out, nterms, last, status


w_series_numba = jit(_w_series_loop)


def w_series(nu, q, rel_tol, max_terms):
    """Dispatch the reduced k-Bessel series to the active backend."""
    q = np.ascontiguousarray(q, dtype=np.float64)
    flat = q.reshape(-1)
    kernel = w_series_numba if USE_NUMBA else w_series_numpy
    s, nt, last, status = kernel(float(nu), flat, float(rel_tol), int(max_terms))
    return s.reshape(q.shape), nt.reshape(q.shape), last.reshape(q.shape), status


# --------------------------------------------------------------------------
# Wright series  sum_n prod Gamma(a_i + A_i n) / prod Gamma(b_j + B_j n) z**n / n!
# --------------------------------------------------------------------------

def _log_term_numpy(alpha, A, beta, B, logabs_z, z_neg, n):
    """Log-magnitude and sign of Wright terms for an array of indices ``n``."""
    logmag = -_sp.gammaln(n + 1.0)
    sign = np.ones(n.shape)
    pole = np.zeros(n.shape, dtype=bool)
    for a, w in zip(alpha, A):
        x = a + w * n
        pole |= (x <= 0) & (x == np.floor(x))
        logmag = logmag + _sp.gammaln(x)
        sign = sign * _sp.gammasgn(x)
    for b, w in zip(beta, B):
        x = b + w * n
        recip_zero = (x <= 0) & (x == np.floor(x))
        logmag = np.where(recip_zero, -np.inf, logmag - _sp.gammaln(x))
        sign = sign * np.where(recip_zero, 1.0, _sp.gammasgn(x))
    with np.errstate(divide="ignore", invalid="ignore"):
        zpow = np.where(n == 0, 0.0, n * logabs_z)
    logmag = logmag + zpow
    if z_neg:
        sign = sign * np.where(n % 2 == 1, -1.0, 1.0)
    return logmag, sign, pole


def wright_series_numpy(alpha, A, beta, B, z, rel_tol, max_terms, block=64):
    """Blocked, vectorised Wright series. Returns ``(value, nterms, last, status)``."""
    alpha, A, beta, B = (np.asarray(v, dtype=np.float64) for v in (alpha, A, beta, B))
    logabs_z = math.log(abs(z)) if z != 0.0 else -math.inf
    s = 0.0
    prev = math.inf
    start = 0
    while start < max_terms:
        stop = min(start + block, max_terms)
        n = np.arange(start, stop, dtype=np.float64)
        logmag, sign, pole = _log_term_numpy(alpha, A, beta, B, logabs_z, z < 0, n)
        with np.errstate(over="ignore"):
            terms = sign * np.exp(logmag)
        for j, t in enumerate(terms):
            idx = start + j
            if pole[j]:
                return math.nan, idx + 1, math.inf, POLE
            s += t
            at = abs(t)
            if idx == 0 and z == 0.0:
                return s, 1, 0.0, OK
            if idx >= 2 and at <= rel_tol * abs(s) and at <= prev:
                return s, idx + 1, at, OK
            prev = at
        start = stop
    return s, max_terms, prev, NO_CONVERGENCE


def _lgamma_sign(x):
    if x > 0.0:
        return 1.0
    if math.floor(x) % 2 == 1:
        return -1.0
    return 1.0


def _wright_series_loop(alpha, A, beta, B, z, rel_tol, max_terms):
    logabs_z = math.log(abs(z)) if z != 0.0 else -math.inf
    s = 0.0
    prev = math.inf
    for n in range(max_terms):
        logmag = -math.lgamma(n + 1.0)
        sign = 1.0
        for i in range(alpha.shape[0]):
            x = alpha[i] + A[i] * n
            if x <= 0.0 and x == math.floor(x):
                return math.nan, n + 1, math.inf, 2
            logmag += math.lgamma(x)
            sign *= _lgamma_sign_jit(x)
        zero = False
        for j in range(beta.shape[0]):
            x = beta[j] + B[j] * n
            if x <= 0.0 and x == math.floor(x):
                zero = True
            else:
                logmag -= math.lgamma(x)
                sign *= _lgamma_sign_jit(x)
        if n > 0:
            logmag += n * logabs_z
            if z < 0.0 and n % 2 == 1:
                sign = -sign
        t = 0.0 if zero else sign * math.exp(logmag)
        s += t
        at = abs(t)
        if n == 0 and z == 0.0:
            return s, 1, 0.0, 0
        if n >= 2 and at <= rel_tol * abs(s) and at <= prev:
            return s, n + 1, at, 0
        prev = at
    return s, max_terms, prev, 1


_lgamma_sign_jit = jit(_lgamma_sign) or _lgamma_sign
wright_series_numba = jit(_wright_series_loop)


def wright_series(alpha, A, beta, B, z, rel_tol, max_terms):
    """Dispatch the Wright series to the active backend."""
    args = [np.ascontiguousarray(v, dtype=np.float64) for v in (alpha, A, beta, B)]
    if USE_NUMBA:
        return wright_series_numba(*args, float(z), float(rel_tol), int(max_terms))
    return wright_series_numpy(*args, float(z), float(rel_tol), int(max_terms))
