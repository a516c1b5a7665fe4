"""Both sides of the two k-Bessel integral identities, and a verifier.

Theorem 1 integrand (shape "1"):

    z**(lam+rho-1) (1-z)**(2 lam-1) (1-z/3)**(2(lam+rho)-1) (1-z/4)**(lam-1)
        * W_{v,c}^k(y (1-z/4) (1-z)**2)

Theorem 2 integrand (shape "2"):

    z**(lam-1) (1-z)**(2(lam+rho)-1) (1-z/3)**(2 lam-1) (1-z/4)**(lam+rho-1)
        * W_{v,c}^k(y z (1-z/3)**2)

so that the halved series argument of W is ``y(1-z/4)(1-z)**2 / 2`` and
``y z (1-z/3)**2 / 2`` respectively.  Both right-hand sides are a prefactor
times the 1Psi2 series with upper pair (lam + nu, 2) and lower pairs
(nu + 1, 1), (2 lam + nu + rho, 2), nu = v/k, evaluated at -c y**2/(4k)
and -4 c y**2/(81 k).

Every integrand is assembled in log space from the factorised form
W(x) = (x/2)**nu k**(-nu) S(nu, -c x**2/(4k)), which keeps the product
finite where W alone would blow up (nu < 0 near the vanishing endpoint).

The "proof form" of each right-hand side is the term-wise integrated sum
before it is recognised as a Wright series. It is summed directly from
k-gamma values and serves as an independent check on the Wright route.
"""
import enum
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from itertools import product

import numpy as np

from .errors import ConvergenceError, HypothesisError, KBintError
from .kbessel import DEFAULT_CONTROL, reduced_series
from .quadrature import Integrand, integrate_01, lavoie_trottier_lhs, lavoie_trottier_rhs
from .special_core import log_gamma, log_gamma_k
from .wright import WrightSpec, wright_psi_series

log = logging.getLogger(__name__)

__all__ = [
    "IdentityCase",
    "IdentityKind",
    "VerificationReport",
    "BaseIdentityReport",
    "VerificationGrid",
    "DEFAULT_GRID",
    "REL_FLOOR",
    "ABS_FLOOR",
    "SMALL_RHS",
    "wright_spec_for",
    "theorem1_lhs",
    "theorem1_rhs",
    "theorem1_rhs_proof_form",
    "theorem2_lhs",
    "theorem2_rhs",
    "theorem2_rhs_proof_form",
    "corollary_eval",
    "verify",
    "verify_grid",
    "verify_lavoie_trottier",
]

REL_FLOOR = 1e-300
ABS_FLOOR = 1e-10
SMALL_RHS = 1e-6
_LOG_2_3 = math.log(2.0 / 3.0)


class IdentityKind(enum.Enum):
    """Which identity to evaluate.

    ``COROLLARY2`` is the modified-Bessel (c = -1) reading of the second
    corollary; ``COROLLARY2_LITERAL`` is its printed form, which repeats
    the first corollary word for word.
    """

    THEOREM1 = "theorem1"
    THEOREM2 = "theorem2"
    COROLLARY1 = "corollary1"
    COROLLARY2 = "corollary2"
    COROLLARY2_LITERAL = "corollary2-literal"
    COROLLARY3 = "corollary3"
    COROLLARY4 = "corollary4"

    @property
    def shape(self):
        """1 for the first theorem's integrand, 2 for the second's."""
        if self in (IdentityKind.THEOREM2, IdentityKind.COROLLARY3, IdentityKind.COROLLARY4):
            return 2
        return 1

    @property
    def pinned_c(self):
        return _PINNED_C.get(self)


_PINNED_C = {
    IdentityKind.COROLLARY1: 1.0,
    IdentityKind.COROLLARY2_LITERAL: 1.0,
    IdentityKind.COROLLARY3: 1.0,
    IdentityKind.COROLLARY2: -1.0,
    IdentityKind.COROLLARY4: -1.0,
}


@dataclass(frozen=True)
class IdentityCase:
    """One parameter tuple ``(lam, rho, v, c, k, y)``.

    Construction does not validate; call :meth:`violations` or
    :meth:`check` so that invalid tuples can still be reported.
    """

    lam: float
    rho: float
    v: float
    c: float
    k: float
    y: float

    @property
    def nu(self):
        return self.v / self.k

    def violations(self):
        """Names of the hypotheses this case violates, in a fixed order."""
        out = []
        if not all(math.isfinite(x) for x in (self.lam, self.rho, self.v, self.c, self.k, self.y)):
            return ["parameters finite"]
        if not self.k > 0:
            return ["k > 0"]
        if not self.nu > -1:
            out.append("v/k > -1")
        if not self.lam + self.rho > 0:
            out.append("lambda + rho > 0")
        if not self.lam + self.nu > 0:
            out.append("lambda + v/k > 0")
        if not self.y > 0:
            out.append("y > 0")
        return out

    def check(self):
        bad = self.violations()
        if bad:
            raise HypothesisError(bad[0])

    def as_dict(self):
        return {"lambda": self.lam, "rho": self.rho, "v": self.v, "c": self.c, "k": self.k, "y": self.y}


def wright_spec_for(case):
    """The 1Psi2 parameter set shared by both theorems."""
    nu = case.nu
    return WrightSpec(
        upper=[(case.lam + nu, 2.0)],
        lower=[(nu + 1.0, 1.0), (2.0 * case.lam + nu + case.rho, 2.0)],
    )


# -- left-hand sides ---------------------------------------------------------

def _integrand(case, shape, ctl):
    lam, rho, nu, k, c = case.lam, case.rho, case.nu, case.k, case.c
    log_y_half = math.log(case.y / 2.0)
    log_k = math.log(k)

    def f(z, zc):
        ln_z, ln_zc = np.log(z), np.log(zc)
        ln_3 = np.log1p(-z / 3.0)
        ln_4 = np.log1p(-z / 4.0)
        if shape == 1:
            # ln(x/2) for x = y (1-z/4) (1-z)^2
            ln_half_x = log_y_half + ln_4 + 2.0 * ln_zc
            log_mag = ((lam + rho - 1.0) * ln_z + (2.0 * lam - 1.0) * ln_zc
                       + (2.0 * (lam + rho) - 1.0) * ln_3 + (lam - 1.0) * ln_4)
        else:
            # ln(x/2) for x = y z (1-z/3)^2
            ln_half_x = log_y_half + ln_z + 2.0 * ln_3
            log_mag = ((lam - 1.0) * ln_z + (2.0 * (lam + rho) - 1.0) * ln_zc
                       + (2.0 * lam - 1.0) * ln_3 + (lam + rho - 1.0) * ln_4)
        log_mag = log_mag + nu * (ln_half_x - log_k)
        half_x = np.exp(ln_half_x)
        s, _, _ = reduced_series(nu, -c * half_x * half_x / k, ctl)
        return np.exp(log_mag) * s

    if shape == 1:
        hints = dict(singular_at_0=lam + rho < 1, singular_at_1=2.0 * (lam + nu) < 1)
    else:
        hints = dict(singular_at_0=lam + nu < 1, singular_at_1=2.0 * (lam + rho) < 1)
    return Integrand(f, takes_complement=True, **hints)


def theorem1_lhs(case, rel_tol=1e-10, ctl=DEFAULT_CONTROL):
    """Quadrature of the first theorem's integrand; returns a QuadResult."""
    case.check()
    return integrate_01(_integrand(case, 1, ctl), rel_tol=rel_tol)


def theorem2_lhs(case, rel_tol=1e-10, ctl=DEFAULT_CONTROL):
    """Quadrature of the second theorem's integrand; returns a QuadResult."""
    case.check()
    return integrate_01(_integrand(case, 2, ctl), rel_tol=rel_tol)


# -- right-hand sides --------------------------------------------------------

def _rhs(case, shape, ctl):
    case.check()
    nu = case.nu
    if shape == 1:
        power = 2.0 * (case.lam + case.rho)
        arg = -case.c * case.y ** 2 / (4.0 * case.k)
    else:
        power = 2.0 * (case.lam + nu)
        arg = -4.0 * case.c * case.y ** 2 / (81.0 * case.k)
    log_pref = (nu * (math.log(case.y / 2.0) - math.log(case.k))
                + log_gamma(case.lam + case.rho) + power * _LOG_2_3)
    series = wright_psi_series(wright_spec_for(case), arg, ctl)
    return math.exp(log_pref) * series.value, series.terms


def theorem1_rhs(case, ctl=DEFAULT_CONTROL):
    """Prefactor times 1Psi2 at -c y**2 / (4k)."""
    return _rhs(case, 1, ctl)[0]


def theorem2_rhs(case, ctl=DEFAULT_CONTROL):
    """Prefactor times 1Psi2 at -4 c y**2 / (81 k)."""
    return _rhs(case, 2, ctl)[0]


def _proof_form(case, shape, ctl):
    """Direct sum of term-wise Lavoie-Trottier evaluations.

    Term n is (-c)**n / (Gamma_k(nk+v+k) n!) (y/2)**(2n+nu) times the
    closed form with alpha, beta read off the integrand's exponents.
    """
    case.check()
    lam, rho, v, c, k, nu = case.lam, case.rho, case.v, case.c, case.k, case.nu
    log_y_half = math.log(case.y / 2.0)
    log_abs_c = math.log(abs(c)) if c else -math.inf
    s, prev = 0.0, math.inf
    for n in range(ctl.max_terms):
        if n and c == 0:
            return s, n
        log_t = (n * log_abs_c if n else 0.0) - log_gamma_k(n * k + v + k, k) - math.lgamma(n + 1)
        log_t += (2 * n + nu) * log_y_half
        b = lam + nu + 2 * n
        if shape == 1:
            log_t += 2.0 * (lam + rho) * _LOG_2_3
        else:
            log_t += 2.0 * b * _LOG_2_3
        log_t += log_gamma(lam + rho) + log_gamma(b) - log_gamma(lam + rho + b)
        t = math.exp(log_t)
        if c > 0 and n % 2:
            t = -t
        s += t
        if n >= 2 and abs(t) <= ctl.rel_tol * abs(s) and abs(t) <= prev:
            return s, n + 1
        prev = abs(t)
    raise ConvergenceError("proof-form series did not converge", partial_sum=s, terms=ctl.max_terms)


def theorem1_rhs_proof_form(case, ctl=DEFAULT_CONTROL):
    """Direct sum of the first theorem's term-wise integrated series."""
    return _proof_form(case, 1, ctl)[0]


def theorem2_rhs_proof_form(case, ctl=DEFAULT_CONTROL):
    """Direct sum of the second theorem's series, (2/3) power kept inside."""
    return _proof_form(case, 2, ctl)[0]


def _pin(kind, case):
    c = kind.pinned_c
    return case if c is None else replace(case, c=c)


def corollary_eval(kind, case, rel_tol=1e-10, ctl=DEFAULT_CONTROL):
    """Evaluate a corollary as its parent theorem with ``c`` pinned.

    Returns ``(lhs QuadResult, rhs float)``. The first and third corollaries
    use c = 1 (J), the second and fourth c = -1 (I), which flips the Wright
    argument to +y**2/(4k) and +4y**2/(81k).
    """
    if kind.pinned_c is None:
        raise ValueError(f"{kind.value} is not a corollary")
    case = _pin(kind, case)
    if kind.shape == 1:
        return theorem1_lhs(case, rel_tol, ctl), theorem1_rhs(case, ctl)
    return theorem2_lhs(case, rel_tol, ctl), theorem2_rhs(case, ctl)


# -- verification ------------------------------------------------------------

@dataclass
class VerificationReport:
    """Outcome of checking one identity at one case.

    ``status`` is ``pass``, ``fail``, ``precondition`` or ``error:<cause>``.
    """

    kind: IdentityKind
    case: IdentityCase
    lhs: float = math.nan
    rhs: float = math.nan
    rhs_proof_form: float = math.nan
    abs_err: float = math.nan
    rel_err: float = math.nan
    quad_evals: int = 0
    series_terms: int = 0
    status: str = "precondition"
    detail: str = field(default="", compare=False)

    @property
    def passed(self):
        return self.status == "pass"

    FIELDS = ("kind", "lambda", "rho", "v", "c", "k", "y", "lhs", "rhs", "rhs_proof_form",
              "abs_err", "rel_err", "quad_evals", "series_terms", "status")

    def to_record(self):
        rec = {"kind": self.kind.value}
        rec.update(self.case.as_dict())
        rec.update(lhs=self.lhs, rhs=self.rhs, rhs_proof_form=self.rhs_proof_form,
                   abs_err=self.abs_err, rel_err=self.rel_err, quad_evals=self.quad_evals,
                   series_terms=self.series_terms, status=self.status)
        return rec


def _agrees(a, ref, tol):
    err = abs(a - ref)
    rel = err / max(abs(ref), REL_FLOOR)
    return rel <= tol or (abs(ref) < SMALL_RHS and err <= ABS_FLOOR)


def verify(kind, case, tol=1e-7, quad_rel_tol=None, ctl=DEFAULT_CONTROL):
    """Check one identity at one case.

    Passing needs LHS vs RHS and RHS vs proof form both within ``tol``.
    Hypothesis violations produce a ``precondition`` report; evaluation
    breakdowns propagate as exceptions.
    """
    kind = IdentityKind(kind)
    case = _pin(kind, case)
    bad = case.violations()
    if bad:
        return VerificationReport(kind, case, status="precondition", detail=bad[0])
    if quad_rel_tol is None:
        quad_rel_tol = min(1e-10, tol * 1e-3)
    shape = kind.shape
    quad = integrate_01(_integrand(case, shape, ctl), rel_tol=quad_rel_tol)
    rhs, terms = _rhs(case, shape, ctl)
    if kind is IdentityKind.COROLLARY2_LITERAL:
        # printed right-hand side: argument -y^2/(4k), i.e. the c = 1 series
        rhs, terms = _rhs(replace(case, c=1.0), 1, ctl)
    proof, _ = _proof_form(case, shape, ctl)
    abs_err = abs(quad.value - rhs)
    rel_err = abs_err / max(abs(rhs), REL_FLOOR)
    ok = _agrees(quad.value, rhs, tol) and _agrees(proof, rhs, tol)
    return VerificationReport(
        kind, case, lhs=quad.value, rhs=rhs, rhs_proof_form=proof, abs_err=abs_err,
        rel_err=rel_err, quad_evals=quad.evaluations, series_terms=terms,
        status="pass" if ok else "fail",
    )


@dataclass(frozen=True)
class VerificationGrid:
    """Cartesian parameter grid; ``v`` is realised as ``nu * k`` per tuple."""

    lam: tuple = (0.6, 1.0, 2.0)
    rho: tuple = (0.5, 1.0)
    nu: tuple = (-0.5, 0.0, 0.5, 1.5)
    k: tuple = (0.5, 1.0, 2.0)
    c: tuple = (-1.0, 0.5, 1.0)
    y: tuple = (0.5, 1.0, 2.0)

    def cases(self, kind=None):
        cs = self.c
        if kind is not None and IdentityKind(kind).pinned_c is not None:
            cs = (IdentityKind(kind).pinned_c,)
        for lam, rho, nu, k, c, y in product(self.lam, self.rho, self.nu, self.k, cs, self.y):
            yield IdentityCase(lam, rho, nu * k, c, k, y)


DEFAULT_GRID = VerificationGrid()


def _safe_verify(kind, case, tol, quad_rel_tol, ctl):
    try:
        return verify(kind, case, tol, quad_rel_tol, ctl)
    except KBintError as exc:
        log.warning("evaluation failed for %s at %s: %s", kind, case, exc)
        return VerificationReport(IdentityKind(kind), _pin(IdentityKind(kind), case),
                                  status=f"error:{type(exc).__name__}", detail=str(exc))


def verify_grid(kind, grid=DEFAULT_GRID, tol=1e-7, quad_rel_tol=None, ctl=DEFAULT_CONTROL, workers=1):
    """Verify every tuple of ``grid``; reports come back in grid order.

    ``grid`` is a :class:`VerificationGrid` or any iterable of cases.
    Evaluation failures are captured per case; the sweep never stops early.
    """
    kind = IdentityKind(kind)
    cases = list(grid.cases(kind) if isinstance(grid, VerificationGrid) else grid)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda cs: _safe_verify(kind, cs, tol, quad_rel_tol, ctl), cases))
    return [_safe_verify(kind, cs, tol, quad_rel_tol, ctl) for cs in cases]


# -- base identity -----------------------------------------------------------

@dataclass
class BaseIdentityReport:
    """Verification record for the Lavoie-Trottier integral itself."""

    alpha: float
    beta: float
    lhs: float = math.nan
    rhs: float = math.nan
    abs_err: float = math.nan
    rel_err: float = math.nan
    quad_evals: int = 0
    status: str = "precondition"
    detail: str = field(default="", compare=False)

    FIELDS = ("kind", "alpha", "beta", "lhs", "rhs", "abs_err", "rel_err", "quad_evals", "status")

    @property
    def passed(self):
        return self.status == "pass"

    def to_record(self):
        return {"kind": "lavoie-trottier", "alpha": self.alpha, "beta": self.beta, "lhs": self.lhs,
                "rhs": self.rhs, "abs_err": self.abs_err, "rel_err": self.rel_err,
                "quad_evals": self.quad_evals, "status": self.status}


def verify_lavoie_trottier(alpha, beta, tol=1e-10, abs_floor=1e-12):
    """Compare quadrature of the base integral with its closed form."""
    if not (alpha > 0 and beta > 0):
        bad = "alpha > 0" if not alpha > 0 else "beta > 0"
        return BaseIdentityReport(alpha, beta, detail=bad)
    quad = lavoie_trottier_lhs(alpha, beta, rel_tol=min(1e-12, tol * 1e-2))
    rhs = lavoie_trottier_rhs(alpha, beta)
    abs_err = abs(quad.value - rhs)
    rel_err = abs_err / max(abs(rhs), REL_FLOOR)
    ok = abs_err <= max(tol * abs(rhs), abs_floor)
    return BaseIdentityReport(alpha, beta, quad.value, rhs, abs_err, rel_err, quad.evaluations,
                              "pass" if ok else "fail")
