"""Command-line interface: ``stokes-spectra <subcommand> [options]``.

Tables are written as CSV (``%.15e``, LF line endings) and reports as JSON
(sorted keys, 15 significant digits) unless ``--format`` says otherwise.
Exit codes: 2 domain error, 3 boundary-indeterminate, 4 convergence failure;
the error is also written to stderr as a JSON object.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import os
import sys

import numpy as np

from . import dispersion, modes, spectra, zeros
from .errors import BoundaryIndeterminate, ConvergenceError, StokesSpectraError, UnwrapError
from .numerics import DEFAULT_TOL, gauss_legendre_grid

TOL_ENV = "STOKES_SPECTRA_TOL"


def parse_grid(text):
    """``start:stop:step`` -> inclusive, evenly spaced float array."""
    try:
        start, stop, step = (float(p) for p in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must be start:stop:step, got {text!r}")
    if not (math.isfinite(start) and math.isfinite(stop) and step > 0 and stop >= start):
        raise argparse.ArgumentTypeError(f"grid needs start <= stop and step > 0, got {text!r}")
    n = int(math.floor((stop - start) / step + 1e-9)) + 1
    if n > 10_000_000:
        raise argparse.ArgumentTypeError("grid has too many points")
    return start + step * np.arange(n)


def parse_omegas(text):
    try:
        values = [float(p) for p in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"omega1 must be a number or comma list, got {text!r}")
    if any(not math.isfinite(v) or v < 0 for v in values):
        raise argparse.ArgumentTypeError("omega1 must be finite and >= 0")
    return values


def parse_complex(text):
    try:
        re, im = (float(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected re,im, got {text!r}")
    return complex(re, im)


def default_tol():
    raw = os.environ.get(TOL_ENV)
    if raw is None:
        return DEFAULT_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise SystemExit(f"{TOL_ENV} must be a number, got {raw!r}")
    return tol


def _round(value):
    if isinstance(value, float):
        return float(f"{value:.15g}")
    if isinstance(value, dict):
        return {k: _round(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_round(v) for v in value]
    return value


def render_json(payload) -> str:
    return json.dumps(_round(payload), sort_keys=True) + "\n"


def render_csv(columns, rows) -> str:
    buf = io.StringIO()
    buf.write(",".join(columns) + "\n")
    for row in rows:
        buf.write(",".join(_cell(v) for v in row) + "\n")
    return buf.getvalue()


def _cell(v):
    if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
        return str(int(v))
    if v is None:
        return ""
    return "%.15e" % float(v)


def render(kind, payload, fmt):
    """``kind`` is ``"table"`` (payload = (columns, rows)) or ``"report"`` (payload = dict)."""
    fmt = fmt or ("csv" if kind == "table" else "json")
    if kind == "table":
        columns, rows = payload
        if fmt == "csv":
            return render_csv(columns, rows)
        return render_json([dict(zip(columns, row)) for row in rows])
    if fmt == "json":
        return render_json(payload)
    keys = sorted(payload)
    flat = [json.dumps(_round(payload[k])) if isinstance(payload[k], (list, dict)) else payload[k] for k in keys]
    buf = io.StringIO()
    buf.write(",".join(keys) + "\n")
    buf.write(",".join(v if isinstance(v, str) else _cell(v) for v in flat) + "\n")
    return buf.getvalue()


def cmd_dispersion(args):
    mu = args.grid if args.grid is not None else parse_grid("0:4:0.01")
    rows = []
    l0 = dispersion.lambda0_real(mu)
    jump = dispersion.s(np.abs(mu)) * np.sign(mu)
    for w in args.omega1:
        for m, lr, sj in zip(mu, l0, jump):
            rows.append((w, m, lr, sj - w))
    return "table", (["omega1", "mu", "lambda0_real", "im_lambda_plus"], rows)


def cmd_gamma(args):
    mu = args.grid if args.grid is not None else parse_grid("0:8:0.01")
    if mu[0] != 0.0 or mu.size < 2:
        raise dispersion.DomainError("gamma grid must start at 0 (theta is anchored there)")
    curve = spectra.trace_gamma(_single(args.omega1), mu_max=float(mu[-1]), step=float(mu[1] - mu[0]))
    rows = [(m, g.real, g.imag, th) for m, g, th in zip(curve.mu, curve.g, curve.theta)]
    return "table", (["mu", "re_g", "im_g", "theta"], rows)


def cmd_index(args):
    w = _single(args.omega1)
    spectra.check_not_boundary(w)
    curve = spectra.trace_gamma(w)
    kappa = curve.winding
    return "report", {"omega1": w, "kappa": kappa, "N": 2 * kappa, "total_turns": curve.total_turns}


def cmd_critical(args):
    w_star, mu_star = spectra.critical_point()
    return "report", {
        "omega1_star": w_star,
        "argmax_mu": mu_star,
        "omega1_through_origin": spectra.through_origin_frequency(),
    }


def cmd_roots(args):
    pair = spectra.y1_roots(_single(args.omega1))
    return "report", {"omega1": pair.omega1.value, "mu1": pair.mu1, "mu2": pair.mu2}


def cmd_mu0(args):
    m = spectra.mu0()
    return "report", {"mu0": m, "s_mu0": dispersion.s(m)}


def cmd_zero(args):
    return "report", zeros.spectrum_report(_single(args.omega1)).as_dict()


def cmd_modes(args):
    w = _single(args.omega1)
    eta = args.grid if args.grid is not None else parse_grid("0.1:4:0.1")
    eta = eta[eta > 0]
    rows = []
    for e in eta:
        cm = modes.continuous_mode(e, w)
        rows.append((e, cm.pv_coefficient, cm.delta_lambda.real, cm.delta_lambda.imag, cm.decay.real, cm.decay.imag))
    if args.emit_expansion:
        grid = gauss_legendre_grid(0.0, modes.ETA_MAX, args.nodes)
        if args.profile == "gauss":
            a = np.exp(-((grid.nodes - 1.0) ** 2))
        else:
            a = np.zeros(len(grid))
        exp = modes.ModeExpansion(w, args.a0, grid, a)
        if exp.a0 != 0:
            exp.eta0  # fail early when there is no discrete mode
        with open(args.emit_expansion, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(exp.to_json() + "\n")
    return "table", (["eta", "pv_coefficient", "re_lambda", "im_lambda", "re_decay", "im_decay"], rows)


def cmd_solve(args):
    with open(args.expansion, encoding="utf-8") as fh:
        exp = modes.ModeExpansion.from_json(fh.read())
    x1s = args.x1 if args.x1 is not None else parse_grid("0:2:0.5")
    mus = args.mu if args.mu is not None else parse_grid("-2:2:0.5")
    rows = []
    for x in x1s:
        h = modes.assemble_solution(exp, float(x), mus)
        u_y = modes.velocity_moment(exp, float(x), args.t1, args.tol)
        for m, hv in zip(mus, h):
            rows.append((x, m, hv.real, hv.imag, u_y))
    return "table", (["x1", "mu", "re_h", "im_h", "u_y"], rows)


def _single(omegas):
    if len(omegas) != 1:
        raise dispersion.DomainError("this subcommand takes a single --omega1 value")
    return omegas[0]


COMMANDS = {
    "dispersion": (cmd_dispersion, "lambda0 and Im lambda^+ on the real axis"),
    "gamma": (cmd_gamma, "curve Gamma(omega1) and theta(mu)"),
    "index": (cmd_index, "index kappa(G) and zero count N"),
    "critical": (cmd_critical, "critical and through-origin frequencies"),
    "roots": (cmd_roots, "roots mu1, mu2 of y1"),
    "mu0": (cmd_mu0, "real zero mu0 of lambda0"),
    "zero": (cmd_zero, "discrete zero eta0 and regime"),
    "modes": (cmd_modes, "continuous-mode table; optionally write an expansion file"),
    "solve": (cmd_solve, "evaluate an expansion file: h(x1, mu) and U_y"),
}


def build_parser():
    parser = argparse.ArgumentParser(prog="stokes-spectra", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--omega1", type=parse_omegas, default=[0.5] if name != "dispersion" else [0.0])
        p.add_argument("--grid", type=parse_grid, default=None, help="start:stop:step")
        p.add_argument("--tol", type=float, default=None, help=f"quadrature tolerance (env {TOL_ENV})")
        p.add_argument("--format", choices=("csv", "json"), default=None)
        p.add_argument("--out", default=None, help="output path (default stdout)")
        if name == "modes":
            p.add_argument("--emit-expansion", default=None, metavar="PATH")
            p.add_argument("--a0", type=parse_complex, default=0j, help="discrete coefficient re,im")
            p.add_argument("--profile", choices=("zero", "gauss"), default="zero")
            p.add_argument("--nodes", type=int, default=modes.ETA_NODES)
        if name == "solve":
            p.add_argument("--expansion", required=True, metavar="PATH")
            p.add_argument("--x1", type=parse_grid, default=None, help="start:stop:step")
            p.add_argument("--mu", type=parse_grid, default=None, help="start:stop:step")
            p.add_argument("--t1", type=float, default=0.0)
    return parser


def exit_code(exc):
    if isinstance(exc, BoundaryIndeterminate):
        return 3
    if isinstance(exc, (ConvergenceError, UnwrapError)):
        return 4
    return 2


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.tol is None:
        args.tol = default_tol()
    handler = COMMANDS[args.command][0]
    try:
        kind, payload = handler(args)
    except (StokesSpectraError, OSError) as exc:
        err = {"error": type(exc).__name__, "message": str(exc), "context": getattr(exc, "context", {})}
        sys.stderr.write(json.dumps(err, sort_keys=True, default=str) + "\n")
        return exit_code(exc)
    text = render(kind, payload, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
