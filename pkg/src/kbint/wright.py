"""Generalized Wright function pPsi_q and generalized hypergeometric pF_q.

The Wright series

    pPsi_q(z) = sum_n prod_i Gamma(a_i + A_i n) / prod_j Gamma(b_j + B_j n) * z**n / n!

is summed term by term in log space with explicit sign tracking, so large
gamma arguments never overflow and negative arguments go through the
reflection branch.  With every weight equal to one it reduces to pF_q:

    pF_q(z) / prod Gamma(b_j) = pPsi_q(z) / prod Gamma(a_i).
"""
import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import ConvergenceError, DivergenceError, DomainError, PoleError
from .kbessel import DEFAULT_CONTROL, SeriesResult
from .special_core import is_pole, log_abs_gamma, gamma_sign

__all__ = [
    "WrightSpec",
    "HypergeometricSpec",
    "wright_psi",
    "wright_psi_series",
    "p_f_q",
    "p_f_q_series",
    "pfq_terms",
]


def _pairs(seq):
    return tuple((float(a), float(w)) for a, w in seq)


@dataclass(frozen=True)
class WrightSpec:
    """Upper pairs ``(alpha_i, A_i)`` and lower pairs ``(beta_j, B_j)``.

    All weights must be positive and the convergence margin
    ``1 + sum(B) - sum(A)`` non-negative. A positive margin gives an entire
    function; a zero margin gives a finite radius (see :attr:`radius`).
    """

    upper: tuple
    lower: tuple

    def __post_init__(self):
        object.__setattr__(self, "upper", _pairs(self.upper))
        object.__setattr__(self, "lower", _pairs(self.lower))
        for a, w in self.upper + self.lower:
            if not (math.isfinite(a) and math.isfinite(w)):
                raise DomainError("Wright parameters must be finite")
            if not w > 0:
                raise DomainError(f"Wright weights must be positive, got {w!r}")
        if self.margin < 0:
            raise DomainError(f"convergence margin 1 + sum(B) - sum(A) = {self.margin!r} < 0")
        for b, w in self.lower:
            if b <= 0:
                for n in range(int(math.floor(-b / w)) + 1):
                    if is_pole(b + w * n):
                        raise PoleError(f"lower parameter ({b}, {w}) hits a pole at n={n}")

    @property
    def p(self):
        return len(self.upper)

    @property
    def q(self):
        return len(self.lower)

    @property
    def margin(self):
        return 1.0 + sum(w for _, w in self.lower) - sum(w for _, w in self.upper)

    @property
    def radius(self):
        """Radius of convergence: infinite for a positive margin."""
        if self.margin > 1e-14:
            return math.inf
        log_r = sum(w * math.log(w) for _, w in self.lower) - sum(w * math.log(w) for _, w in self.upper)
        return math.exp(log_r)

    def arrays(self):
        alpha = np.array([a for a, _ in self.upper])
        A = np.array([w for _, w in self.upper])
        beta = np.array([b for b, _ in self.lower])
        B = np.array([w for _, w in self.lower])
        return alpha, A, beta, B


@dataclass(frozen=True)
class HypergeometricSpec:
    """Upper and lower parameter lists of pF_q; no lower parameter may be a pole."""

    upper: tuple
    lower: tuple

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(float(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(float(b) for b in self.lower))
        for b in self.lower:
            if is_pole(b):
                raise PoleError(f"lower parameter {b!r} is zero or a negative integer")

    @property
    def p(self):
        return len(self.upper)

    @property
    def q(self):
        return len(self.lower)

    def terminates(self):
        """Number of non-zero terms if some upper parameter is a non-positive integer."""
        counts = [int(-a) + 1 for a in self.upper if is_pole(a)]
        return min(counts) if counts else None


def wright_psi_series(spec, z, ctl=DEFAULT_CONTROL):
    """Sum the Wright series at real ``z``; returns a :class:`SeriesResult`."""
    z = float(z)
    if not math.isfinite(z):
        raise DomainError("wright_psi requires finite z")
    if abs(z) >= spec.radius:
        raise DivergenceError(f"|z| = {abs(z)!r} outside radius of convergence {spec.radius!r}")
    value, nterms, last, status = _kernels.wright_series(*spec.arrays(), z, ctl.rel_tol, ctl.max_terms)
    if status == _kernels.POLE:
        raise PoleError(f"upper gamma argument hits a pole at term {nterms - 1}")
    if status != _kernels.OK:
        raise ConvergenceError(
            f"Wright series did not converge within {ctl.max_terms} terms",
            partial_sum=value, terms=nterms,
        )
    return SeriesResult(float(value), int(nterms), float(last))


def wright_psi(spec, z, ctl=DEFAULT_CONTROL):
    """Generalized Wright function pPsi_q(z)."""
    return wright_psi_series(spec, z, ctl).value


def pfq_terms(spec, z, n_terms, method="recurrence"):
    """First ``n_terms`` terms of pF_q at ``z``.

    ``"recurrence"`` multiplies consecutive Pochhammer ratios;
    ``"log"`` builds each term from log-gamma differences independently.
    The log form needs non-pole gamma arguments throughout.
    """
    z = float(z)
    out = np.empty(n_terms)
    if method == "recurrence":
        t = 1.0
        for n in range(n_terms):
            out[n] = t
            num = math.prod(a + n for a in spec.upper)
            den = math.prod(b + n for b in spec.lower)
            t *= num / den * z / (n + 1)
    elif method == "log":
        for n in range(n_terms):
            logmag, sign = -math.lgamma(n + 1), 1.0
            for a in spec.upper:
                logmag += log_abs_gamma(a + n) - log_abs_gamma(a)
                sign *= gamma_sign(a + n) * gamma_sign(a)
            for b in spec.lower:
                logmag -= log_abs_gamma(b + n) - log_abs_gamma(b)
                sign *= gamma_sign(b + n) * gamma_sign(b)
            if n:
                if z == 0.0:
                    out[n] = 0.0
                    continue
                logmag += n * math.log(abs(z))
                if z < 0 and n % 2:
                    sign = -sign
            out[n] = sign * math.exp(logmag)
    else:
        raise ValueError(f"unknown method {method!r}")
    return out


def p_f_q_series(spec, z, ctl=DEFAULT_CONTROL):
    """Sum pF_q at real ``z`` by the Pochhammer-ratio recurrence."""
    z = float(z)
    n_stop = spec.terminates()
    if n_stop is None and z != 0.0:
        if spec.p > spec.q + 1:
            raise DivergenceError(f"{spec.p}F{spec.q} diverges for z != 0")
        if spec.p == spec.q + 1 and abs(z) >= 1:
            raise DivergenceError(f"{spec.p}F{spec.q} requires |z| < 1, got {z!r}")
    t = 1.0
    s = 1.0
    prev = 1.0
    limit = ctl.max_terms if n_stop is None else min(ctl.max_terms, n_stop)
    for n in range(1, limit + 1):
        if z == 0.0 or n == n_stop:
            return SeriesResult(s, n, 0.0)
        num = math.prod(a + n - 1 for a in spec.upper)
        den = math.prod(b + n - 1 for b in spec.lower)
        t *= num / den * z / n
        s += t
        at = abs(t)
        if n >= 2 and at <= ctl.rel_tol * abs(s) and at <= prev:
            return SeriesResult(s, n + 1, at)
        prev = at
    raise ConvergenceError(
        f"{spec.p}F{spec.q} did not converge within {ctl.max_terms} terms",
        partial_sum=s, terms=ctl.max_terms,
    )


def p_f_q(spec, z, ctl=DEFAULT_CONTROL):
    """Generalized hypergeometric function pF_q(z)."""
    return p_f_q_series(spec, z, ctl).value
