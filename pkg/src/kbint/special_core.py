"""Real-argument gamma, log-gamma, k-gamma and the Pochhammer k-symbol.

The k-gamma function is evaluated through its reduction to the ordinary
gamma function,

    Gamma_k(z) = k**(z/k - 1) * Gamma(z/k),

which satisfies Gamma_k(z + k) = z * Gamma_k(z) and collapses to Gamma at
k = 1.  Ordinary gamma and log-gamma come from the C library via ``math``.
"""
import math

from .errors import DomainError, GammaOverflowError, PoleError

__all__ = [
    "gamma",
    "log_gamma",
    "log_abs_gamma",
    "gamma_sign",
    "gamma_k",
    "log_gamma_k",
    "pochhammer_k",
    "is_pole",
]


def is_pole(x):
    """True when ``x`` is zero or a negative integer."""
    return x <= 0 and x == math.floor(x)


def gamma(x):
    """Gamma function of a real argument.

    Raises
    ------
    PoleError
        If ``x`` is a non-positive integer.
    GammaOverflowError
        If ``|Gamma(x)|`` exceeds the float range; use :func:`log_gamma`.
    """
    x = float(x)
    if math.isnan(x):
        raise DomainError("gamma of NaN")
    if is_pole(x):
        raise PoleError(f"gamma has a pole at x={x!r}")
    try:
        return math.gamma(x)
    except OverflowError:
        raise GammaOverflowError(f"gamma({x!r}) overflows; use log_gamma") from None


def log_gamma(x):
    """Natural logarithm of Gamma(x) for x > 0."""
    x = float(x)
    if not x > 0:
        raise DomainError(f"log_gamma requires x > 0, got {x!r}")
    return math.lgamma(x)


def log_abs_gamma(x):
    """``ln|Gamma(x)|`` for any non-pole real ``x``; pair with :func:`gamma_sign`."""
    x = float(x)
    if is_pole(x):
        raise PoleError(f"gamma has a pole at x={x!r}")
    return math.lgamma(x)


def gamma_sign(x):
    """Sign of Gamma(x): +1 for x > 0, alternating between poles for x < 0."""
    if x > 0:
        return 1.0
    if is_pole(x):
        raise PoleError(f"gamma has a pole at x={x!r}")
    return -1.0 if math.floor(x) % 2 else 1.0


def _check_k(k):
    if not k > 0:
        raise DomainError(f"k must be positive, got {k!r}")


def gamma_k(z, k):
    """k-gamma function ``k**(z/k - 1) * Gamma(z/k)``.

    Falls back to log space when either factor alone would overflow.
    Negative ``z`` with non-integer ``z/k`` goes through the reflection
    branch of the ordinary gamma function.

    Raises
    ------
    PoleError
        If ``z/k`` is a non-positive integer.
    GammaOverflowError
        If the result itself is not representable.
    """
    z, k = float(z), float(k)
    _check_k(k)
    s = z / k
    if k == 1.0:
        return gamma(z)
    if is_pole(s):
        raise PoleError(f"gamma_k has a pole at z={z!r}, k={k!r}")
    try:
        g = math.gamma(s)
        scale = k ** (s - 1.0)
        out = scale * g
        if math.isfinite(out) and (out != 0.0 or g == 0.0):
            return out
    except OverflowError:
        pass
    log_mag = (s - 1.0) * math.log(k) + math.lgamma(s)
    if log_mag > 709.78:
        raise GammaOverflowError(f"gamma_k({z!r}, {k!r}) overflows; use log_gamma_k")
    return gamma_sign(s) * math.exp(log_mag)


def log_gamma_k(z, k):
    """``(z/k - 1) ln k + ln Gamma(z/k)`` for z > 0, k > 0."""
    z, k = float(z), float(k)
    _check_k(k)
    if not z > 0:
        raise DomainError(f"log_gamma_k requires z > 0, got {z!r}")
    s = z / k
    return (s - 1.0) * math.log(k) + math.lgamma(s)


def pochhammer_k(x, n, k):
    """Pochhammer k-symbol ``x (x + k) ... (x + (n - 1) k)``; 1 for n = 0."""
    k = float(k)
    _check_k(k)
    n = int(n)
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    out = 1.0
    for j in range(n):
        out *= x + j * k
    return out
