"""Double-exponential quadrature on (0, 1) and the Lavoie-Trottier base integral.

The substitution

    z(t) = 1 / (1 + exp(-pi sinh t)),   1 - z(t) = 1 / (1 + exp(pi sinh t))

maps the real line onto (0, 1), with Jacobian ``pi cosh t * z * (1 - z)``.
Both ``z`` and ``1 - z`` are formed directly from the exponential, so an
integrand that accepts the complement sees full relative precision near
z = 1 as well as near z = 0.  Algebraic endpoint singularities z**a or
(1 - z)**a with a > -1 then decay double-exponentially in t and the
trapezoidal rule converges without any interval subdivision.

The step is halved level by level, reusing earlier nodes, until two
successive levels agree within tolerance.  Abscissae stop about 1e-304
from a singular endpoint, so exponents much closer to -1 than about -0.95
lose measurable mass below that point.
"""
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, NonFiniteError, ToleranceNotMetError

__all__ = [
    "Integrand",
    "QuadResult",
    "integrate_01",
    "lavoie_trottier_lhs",
    "lavoie_trottier_rhs",
    "lavoie_trottier_integrand",
]

# Largest |pi sinh t| kept: exp(-700) ~ 1e-304 is the closest approach to a
# singular endpoint, 46 (~1e-20) to a regular one.
_U_SINGULAR = 700.0
_U_REGULAR = 46.0
_MIN_LEVEL = 3


@dataclass(frozen=True)
class Integrand:
    """A function on (0, 1) with endpoint-singularity hints.

    ``f`` is called with an ndarray of abscissae. When ``takes_complement``
    is set it is called as ``f(z, 1 - z)`` with the complement computed
    exactly, which is what integrands with a (1 - z)**a factor should use.
    """

    f: Callable
    singular_at_0: bool = False
    singular_at_1: bool = False
    takes_complement: bool = False


@dataclass(frozen=True)
class QuadResult:
    """Quadrature value, error estimate and number of integrand evaluations."""

    value: float
    abs_error_estimate: float
    evaluations: int


def _t_max(u_max):
    return math.asinh(u_max / math.pi)


def _nodes(t):
    u = math.pi * np.sinh(t)
    e = np.exp(-np.abs(u))
    z_small = e / (1.0 + e)
    z_large = 1.0 / (1.0 + e)
    z = np.where(u >= 0, z_large, z_small)
    zc = np.where(u >= 0, z_small, z_large)
    w = math.pi * np.cosh(t) * z_small * z_large
    return z, zc, w


def _level_sum(integrand, t):
    z, zc, w = _nodes(t)
    if integrand.takes_complement:
        fx = integrand.f(z, zc)
    else:
        fx = integrand.f(z)
    fx = np.asarray(fx, dtype=np.float64)
    bad = ~np.isfinite(fx)
    if bad.any():
        i = int(np.argmax(bad))
        raise NonFiniteError(f"integrand is {fx[i]!r} at z={z[i]!r}")
    return float(np.sum(w * fx)), t.size


def integrate_01(f, rel_tol=1e-10, abs_tol=0.0, max_level=12):
    """Integrate over (0, 1) by tanh-sinh quadrature.

    Parameters
    ----------
    f : Integrand or callable
        Plain callables are wrapped as an :class:`Integrand` without hints.
    rel_tol, abs_tol : float
        Stop once successive levels differ by at most
        ``max(rel_tol * |value|, abs_tol)``.
    max_level : int
        Level ``m`` uses step ``2**-m`` in t.

    Returns
    -------
    QuadResult
        ``abs_error_estimate`` is the last inter-level difference.

    Raises
    ------
    ToleranceNotMetError
        When ``max_level`` is reached first; carries the best value.
    NonFiniteError
        When the integrand returns NaN or infinity at an abscissa.
    """
    if not 0 < rel_tol < 1:
        raise DomainError(f"rel_tol must lie in (0, 1), got {rel_tol!r}")
    if not abs_tol >= 0:
        raise DomainError(f"abs_tol must be non-negative, got {abs_tol!r}")
    if not isinstance(f, Integrand):
        f = Integrand(f)
    t_lo = -_t_max(_U_SINGULAR if f.singular_at_0 else _U_REGULAR)
    t_hi = _t_max(_U_SINGULAR if f.singular_at_1 else _U_REGULAR)

    h = 1.0
    t = np.arange(math.ceil(t_lo), math.floor(t_hi) + 1, dtype=np.float64)
    total, evals = _level_sum(f, t)
    estimate = h * total
    err = math.inf
    for level in range(1, max_level + 1):
        h /= 2.0
        j0 = math.ceil((t_lo / h - 1) / 2)
        j1 = math.floor((t_hi / h - 1) / 2)
        t = (2.0 * np.arange(j0, j1 + 1, dtype=np.float64) + 1.0) * h
        new, n = _level_sum(f, t)
        evals += n
        total += new
        previous, estimate = estimate, h * total
        err = abs(estimate - previous)
        if level >= _MIN_LEVEL and err <= max(rel_tol * abs(estimate), abs_tol):
            return QuadResult(estimate, err, evals)
    raise ToleranceNotMetError(
        f"tolerance not met after {max_level} levels (error estimate {err:.3g})",
        value=estimate, abs_error_estimate=err, evaluations=evals,
    )


def lavoie_trottier_integrand(alpha, beta):
    """Integrand z**(a-1) (1-z)**(2b-1) (1-z/3)**(2a-1) (1-z/4)**(b-1) with hints."""
    def f(z, zc):
        return np.exp(
            (alpha - 1.0) * np.log(z)
            + (2.0 * beta - 1.0) * np.log(zc)
            + (2.0 * alpha - 1.0) * np.log1p(-z / 3.0)
            + (beta - 1.0) * np.log1p(-z / 4.0)
        )
    return Integrand(f, singular_at_0=alpha < 1, singular_at_1=beta < 0.5, takes_complement=True)


def _check_lt(alpha, beta):
    if not (alpha > 0 and beta > 0):
        raise DomainError(f"Lavoie-Trottier integral needs alpha > 0 and beta > 0, got ({alpha!r}, {beta!r})")


def lavoie_trottier_lhs(alpha, beta, rel_tol=1e-12):
    """Quadrature of the Lavoie-Trottier integrand over (0, 1)."""
    _check_lt(alpha, beta)
    return integrate_01(lavoie_trottier_integrand(alpha, beta), rel_tol=rel_tol)


def lavoie_trottier_rhs(alpha, beta):
    """Closed form (2/3)**(2 alpha) Gamma(alpha) Gamma(beta) / Gamma(alpha + beta)."""
    _check_lt(alpha, beta)
    return math.exp(
        2.0 * alpha * math.log(2.0 / 3.0)
        + math.lgamma(alpha) + math.lgamma(beta) - math.lgamma(alpha + beta)
    )
