"""Command-line interface: ``kbint eval|verify|grid``.

Exit codes: 0 success/pass, 1 identity failure, 2 usage error, 3 domain or
hypothesis error, 4 convergence/evaluation breakdown, 5 I/O error.
"""
import argparse
import math
import sys

import numpy as np

from . import reports
from .errors import (ConvergenceError, DivergenceError, DomainError, GammaOverflowError,
                     HypothesisError, KBintError)
from .identities import (BaseIdentityReport, DEFAULT_GRID, IdentityCase, IdentityKind,
                         VerificationGrid, VerificationReport, verify, verify_grid,
                         verify_lavoie_trottier)
from .kbessel import KBesselParams, SeriesControl, w_kbessel_series
from .special_core import gamma_k
from .wright import HypergeometricSpec, WrightSpec, p_f_q_series, wright_psi_series

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN, EXIT_CONVERGENCE, EXIT_IO = 0, 1, 2, 3, 4, 5

KINDS = [k.value for k in IdentityKind] + ["lavoie-trottier"]


def _positive(text):
    x = float(text)
    if not (x > 0 and math.isfinite(x)):
        raise argparse.ArgumentTypeError(f"must be a positive finite number, got {text!r}")
    return x


def _finite(text):
    x = float(text)
    if not math.isfinite(x):
        raise argparse.ArgumentTypeError(f"must be finite, got {text!r}")
    return x


def _pair(text):
    try:
        a, w = (float(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'value,weight', got {text!r}") from None
    return a, w


def _grid_values(tokens):
    """Expand grid tokens: plain numbers or ``start:stop:num`` ranges."""
    out = []
    for tok in tokens:
        if ":" in tok:
            parts = tok.split(":")
            if len(parts) != 3:
                raise argparse.ArgumentTypeError(f"range must be start:stop:num, got {tok!r}")
            lo, hi, num = float(parts[0]), float(parts[1]), int(parts[2])
            if not (math.isfinite(lo) and math.isfinite(hi)) or lo > hi or num < 1:
                raise argparse.ArgumentTypeError(f"range bounds must be finite and ordered, got {tok!r}")
            out.extend(float(x) for x in np.linspace(lo, hi, num))
        else:
            out.append(_finite(tok))
    return tuple(out)


def _add_series_flags(p):
    p.add_argument("--rel-tol", type=_positive, default=1e-15, help="series stopping tolerance")
    p.add_argument("--max-terms", type=int, default=10_000)


def build_parser():
    parser = argparse.ArgumentParser(prog="kbint", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate a special function")
    ev_sub = ev.add_subparsers(dest="target", required=True)
    p = ev_sub.add_parser("kgamma", help="k-gamma function")
    p.add_argument("--z", type=_finite, required=True)
    p.add_argument("--k", type=_finite, required=True)
    p = ev_sub.add_parser("kbessel", help="generalized k-Bessel W_{v,c}^k(z)")
    for name in ("k", "v", "c", "z"):
        p.add_argument(f"--{name}", type=_finite, required=True)
    _add_series_flags(p)
    for target, helptext in (("jk", "classical k-Bessel J_v^k"), ("ik", "modified k-Bessel I_v^k")):
        p = ev_sub.add_parser(target, help=helptext)
        for name in ("k", "v", "z"):
            p.add_argument(f"--{name}", type=_finite, required=True)
        _add_series_flags(p)
    p = ev_sub.add_parser("wright", help="Wright function pPsi_q")
    p.add_argument("--upper", type=_pair, nargs="*", default=[], metavar="A,W")
    p.add_argument("--lower", type=_pair, nargs="*", default=[], metavar="B,W")
    p.add_argument("--z", type=_finite, required=True)
    _add_series_flags(p)
    p = ev_sub.add_parser("pfq", help="generalized hypergeometric pF_q")
    p.add_argument("--upper", type=_finite, nargs="*", default=[])
    p.add_argument("--lower", type=_finite, nargs="*", default=[])
    p.add_argument("--z", type=_finite, required=True)
    _add_series_flags(p)

    ve = sub.add_parser("verify", help="verify one identity at one parameter tuple")
    ve.add_argument("kind", choices=KINDS)
    ve.add_argument("--lambda", dest="lam", type=_finite)
    for name in ("rho", "v", "c", "k", "y", "alpha", "beta"):
        ve.add_argument(f"--{name}", type=_finite)
    ve.add_argument("--tol", type=_positive, default=1e-7)
    ve.add_argument("--format", choices=("json", "csv"), default="json")

    gr = sub.add_parser("grid", help="verify an identity over a parameter grid")
    gr.add_argument("kind", choices=KINDS)
    for name, attr in (("lambda", "lam"), ("rho", "rho"), ("nu", "nu"), ("k", "k"), ("c", "c"), ("y", "y")):
        gr.add_argument(f"--{name}", nargs="+", dest=attr, metavar="X",
                        help=f"values or start:stop:num (default {getattr(DEFAULT_GRID, attr)})")
    gr.add_argument("--alpha", nargs="+", metavar="X", default=["0.5", "1", "1.5", "2.5"])
    gr.add_argument("--beta", nargs="+", metavar="X", default=["0.5", "1", "2", "3"])
    gr.add_argument("--tol", type=_positive, default=1e-7)
    gr.add_argument("--format", choices=("json", "csv"), default="json")
    gr.add_argument("--out", help="write records here instead of standard output")
    gr.add_argument("--workers", type=int, default=1)
    return parser


def _ctl(args):
    return SeriesControl(args.rel_tol, args.max_terms)


def _print_eval(value, err=None, terms=None, **extra):
    print(f"value: {value!r}")
    if err is not None:
        print(f"abs_error_estimate: {err!r}")
    if terms is not None:
        print(f"terms: {terms}")
    for key, val in extra.items():
        print(f"{key}: {val}")


def cmd_eval(args):
    t = args.target
    if t == "kgamma":
        _print_eval(gamma_k(args.z, args.k), method="reduction k**(z/k-1) Gamma(z/k)")
        return EXIT_OK
    if t in ("kbessel", "jk", "ik"):
        c = {"jk": 1.0, "ik": -1.0}.get(t, getattr(args, "c", None))
        res = w_kbessel_series(KBesselParams(args.k, args.v, c), args.z, _ctl(args))
    elif t == "wright":
        res = wright_psi_series(WrightSpec(args.upper, args.lower), args.z, _ctl(args))
    else:
        res = p_f_q_series(HypergeometricSpec(args.upper, args.lower), args.z, _ctl(args))
    _print_eval(res.value, res.abs_error_estimate, res.terms)
    return EXIT_OK


def _emit(records, fields, fmt, stream):
    stream.write(reports.dumps(records, fields, fmt))


def cmd_verify(args):
    if args.kind == "lavoie-trottier":
        if args.alpha is None or args.beta is None:
            raise _UsageError("lavoie-trottier needs --alpha and --beta")
        rep = verify_lavoie_trottier(args.alpha, args.beta, tol=args.tol)
        fields = BaseIdentityReport.FIELDS
    else:
        kind = IdentityKind(args.kind)
        need = ["lam", "rho", "v", "k", "y"] + ([] if kind.pinned_c is not None else ["c"])
        missing = [n for n in need if getattr(args, n) is None]
        if missing:
            flags = ", ".join("--lambda" if n == "lam" else f"--{n}" for n in missing)
            raise _UsageError(f"{args.kind} needs {flags}")
        c = args.c if args.c is not None else kind.pinned_c
        case = IdentityCase(args.lam, args.rho, args.v, c, args.k, args.y)
        rep = verify(kind, case, tol=args.tol)
        fields = VerificationReport.FIELDS
    _emit([rep.to_record()], fields, args.format, sys.stdout)
    if rep.status == "precondition":
        print(f"kbint: precondition failed: {rep.detail}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_grid(args):
    if args.kind == "lavoie-trottier":
        reps = [verify_lavoie_trottier(a, b, tol=1e-10)
                for a in _grid_values(args.alpha) for b in _grid_values(args.beta)]
        fields = BaseIdentityReport.FIELDS
    else:
        overrides = {attr: _grid_values(getattr(args, attr))
                     for attr in ("lam", "rho", "nu", "k", "c", "y") if getattr(args, attr)}
        grid = VerificationGrid(**overrides)
        reps = verify_grid(args.kind, grid, tol=args.tol, workers=max(1, args.workers))
        fields = VerificationReport.FIELDS
    records = [r.to_record() for r in reps]
    text = reports.dumps(records, fields, args.format)
    if args.out:
        try:
            with open(args.out, "w", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"kbint: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_IO
        summary_stream = sys.stdout
    else:
        sys.stdout.write(text)
        summary_stream = sys.stderr
    counts = {s: sum(r.status == s for r in reps) for s in ("pass", "fail", "precondition")}
    errors = sum(r.status.startswith("error") for r in reps)
    rel = [r.rel_err for r in reps if r.status in ("pass", "fail")]
    max_rel = max(rel) if rel else math.nan
    print(f"cases={len(reps)} pass={counts['pass']} fail={counts['fail']} "
          f"precondition={counts['precondition']} error={errors} max_rel_err={max_rel!r}",
          file=summary_stream)
    return EXIT_OK if counts["fail"] == 0 and errors == 0 else EXIT_FAIL


class _UsageError(Exception):
    pass


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {"eval": cmd_eval, "verify": cmd_verify, "grid": cmd_grid}[args.command]
    try:
        return handler(args)
    except _UsageError as exc:
        parser.error(str(exc))
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    except (HypothesisError, DomainError, DivergenceError, GammaOverflowError) as exc:
        print(f"kbint: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ConvergenceError, KBintError) as exc:
        print(f"kbint: evaluation failed: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE


if __name__ == "__main__":
    sys.exit(main())
