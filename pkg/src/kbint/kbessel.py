"""Generalized k-Bessel function and its classical/modified specialisations.

The series

    W(z) = sum_n (-c)**n (z/2)**(2n + v/k) / (Gamma_k(nk + v + k) n!)

factorises, via Gamma_k(nk + v + k) = k**(n + v/k) Gamma(n + v/k + 1), as

    W(z) = (z/2)**nu * k**(-nu) * S(nu, -c z**2 / (4k)),   nu = v/k,

with S(nu, q) = sum_n q**n / (Gamma(nu + 1 + n) n!).  Terms of S follow the
recurrence t_{n+1} = t_n * q / ((n + 1)(nu + n + 1)), so no gamma function
is evaluated past the first term.
"""
import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import ConvergenceError, DomainError
from .special_core import gamma_k, log_gamma, log_gamma_k

__all__ = [
    "KBesselParams",
    "SeriesControl",
    "SeriesResult",
    "DEFAULT_CONTROL",
    "reduced_series",
    "w_kbessel",
    "w_kbessel_series",
    "w_kbessel_terms",
    "j_kbessel",
    "i_kbessel",
]


@dataclass(frozen=True)
class SeriesControl:
    """Stopping controls shared by every series in the package."""

    rel_tol: float = 1e-15
    max_terms: int = 10_000

    def __post_init__(self):
        if not 0 < self.rel_tol < 1:
            raise DomainError(f"rel_tol must lie in (0, 1), got {self.rel_tol!r}")
        if int(self.max_terms) < 1:
            raise DomainError(f"max_terms must be >= 1, got {self.max_terms!r}")


DEFAULT_CONTROL = SeriesControl()


@dataclass(frozen=True)
class SeriesResult:
    """A summed series with its bookkeeping.

    ``abs_error_estimate`` is the magnitude of the last term added, a proxy
    for the first omitted term.
    """

    value: float
    terms: int
    abs_error_estimate: float


@dataclass(frozen=True)
class KBesselParams:
    """Parameters ``(k, v, c)`` of W_{v,c}^k, with k > 0 and v/k > -1."""

    k: float
    v: float
    c: float

    def __post_init__(self):
        for name in ("k", "v", "c"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")
        if not self.k > 0:
            raise DomainError(f"k must be positive, got {self.k!r}")
        if not self.v / self.k > -1:
            raise DomainError(f"v/k must exceed -1, got {self.v / self.k!r}")

    @property
    def nu(self):
        """The order ratio v/k."""
        return self.v / self.k


def reduced_series(nu, q, ctl=DEFAULT_CONTROL):
    """Sum S(nu, q) = sum_n q**n / (Gamma(nu + 1 + n) n!) elementwise.

    Parameters
    ----------
    nu : float
        Order ratio v/k, must exceed -1.
    q : array_like
        Series argument(s), ``-c z**2 / (4k)`` for the k-Bessel function.
    ctl : SeriesControl

    Returns
    -------
    values : ndarray
    nterms : ndarray of int
        Terms summed per element.
    last : ndarray
        Magnitude of the last term added per element.

    Raises
    ------
    ConvergenceError
        If any element exhausts ``ctl.max_terms``.
    """
    if not nu > -1:
        raise DomainError(f"nu must exceed -1, got {nu!r}")
    values, nterms, last, status = _kernels.w_series(nu, q, ctl.rel_tol, ctl.max_terms)
    if status != _kernels.OK:
        raise ConvergenceError(
            f"k-Bessel series did not converge within {ctl.max_terms} terms",
            partial_sum=float(np.max(np.abs(values))), terms=ctl.max_terms,
        )
    return values, nterms, last


def _leading_factor(params, z):
    """(z/2)**nu * k**(-nu), with z = 0 handled for nu >= 0."""
    nu = params.nu
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.exp(nu * (np.log(z / 2.0) - math.log(params.k)))
    if nu == 0:
        out = np.where(z == 0, 1.0, out)
    return out


def w_kbessel_series(params, z, ctl=DEFAULT_CONTROL):
    """Evaluate W_{v,c}^k at a scalar ``z >= 0``, returning a :class:`SeriesResult`."""
    z = float(z)
    if not z >= 0:
        raise DomainError(f"w_kbessel requires z >= 0, got {z!r}")
    if z == 0.0:
        if params.nu > 0:
            return SeriesResult(0.0, 1, 0.0)
        if params.nu == 0:
            return SeriesResult(1.0 / gamma_k(params.v + params.k, params.k), 1, 0.0)
        raise DomainError("W diverges at z = 0 when v/k < 0")
    q = np.array([-params.c * z * z / (4.0 * params.k)])
    s, nterms, last = reduced_series(params.nu, q, ctl)
    lead = float(_leading_factor(params, np.array([z]))[0])
    return SeriesResult(lead * float(s[0]), int(nterms[0]), lead * float(last[0]))


def w_kbessel(params, z, ctl=DEFAULT_CONTROL):
    """Generalized k-Bessel function W_{v,c}^k(z).

    Scalars return a float; arrays are evaluated elementwise in one kernel
    call. Requires ``z >= 0``; at ``z = 0`` the value is 0 for v > 0 and
    1/Gamma_k(v + k) for v = 0.
    """
    if np.ndim(z) == 0:
        return w_kbessel_series(params, z, ctl).value
    z = np.asarray(z, dtype=np.float64)
    if np.any(~(z >= 0)):
        raise DomainError("w_kbessel requires z >= 0")
    if params.nu < 0 and np.any(z == 0):
        raise DomainError("W diverges at z = 0 when v/k < 0")
    q = -params.c * z * z / (4.0 * params.k)
    s, _, _ = reduced_series(params.nu, q, ctl)
    return _leading_factor(params, z) * s


def w_kbessel_terms(params, z, n_terms, method="recurrence"):
    """First ``n_terms`` terms of the W series at ``z > 0``.

    ``method="recurrence"`` uses the ratio recurrence of the kernels;
    ``method="log"`` evaluates each term independently from
    ``log_gamma_k``. The two must agree; tests compare them.
    """
    z = float(z)
    if not z > 0:
        raise DomainError("w_kbessel_terms requires z > 0")
    k, v, c, nu = params.k, params.v, params.c, params.nu
    lead = float(_leading_factor(params, np.array([z]))[0])
    out = np.empty(n_terms)
    if method == "recurrence":
        q = -c * z * z / (4.0 * k)
        t = math.exp(-log_gamma(nu + 1.0))
        for n in range(n_terms):
            out[n] = lead * t
            t *= q / ((n + 1) * (nu + n + 1))
    elif method == "log":
        for n in range(n_terms):
            if c == 0 and n > 0:
                out[n] = 0.0
                continue
            logmag = (2 * n + nu) * math.log(z / 2) - log_gamma_k(n * k + v + k, k) - math.lgamma(n + 1)
            if c != 0:
                logmag += n * math.log(abs(c))
            sign = -1.0 if (c > 0 and n % 2) else 1.0
            out[n] = sign * math.exp(logmag)
    else:
        raise ValueError(f"unknown method {method!r}")
    return out


def j_kbessel(k, v, z, ctl=DEFAULT_CONTROL):
    """Classical k-Bessel function J_v^k(z) = W_{v,1}^k(z)."""
    return w_kbessel(KBesselParams(k, v, 1.0), z, ctl)


def i_kbessel(k, v, z, ctl=DEFAULT_CONTROL):
    """Modified k-Bessel function I_v^k(z) = W_{v,-1}^k(z)."""
    return w_kbessel(KBesselParams(k, v, -1.0), z, ctl)
