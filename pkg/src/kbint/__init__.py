"""Generalized k-Bessel, k-gamma and Wright functions, and numerical checks
of the integral identities that connect them."""
from ._accel import BACKEND
from .errors import (ConvergenceError, DivergenceError, DomainError, GammaOverflowError,
                     HypothesisError, KBintError, NonFiniteError, PoleError, ToleranceNotMetError)
from .identities import (DEFAULT_GRID, IdentityCase, IdentityKind, VerificationGrid,
                         VerificationReport, corollary_eval, theorem1_lhs, theorem1_rhs,
                         theorem1_rhs_proof_form, theorem2_lhs, theorem2_rhs,
                         theorem2_rhs_proof_form, verify, verify_grid, verify_lavoie_trottier)
from .kbessel import (DEFAULT_CONTROL, KBesselParams, SeriesControl, i_kbessel, j_kbessel,
                      w_kbessel)
from .quadrature import (Integrand, QuadResult, integrate_01, lavoie_trottier_lhs,
                         lavoie_trottier_rhs)
from .special_core import gamma, gamma_k, log_gamma, log_gamma_k, pochhammer_k
from .wright import HypergeometricSpec, WrightSpec, p_f_q, wright_psi

__version__ = "0.1.0"
