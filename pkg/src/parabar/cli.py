"""Command-line front end.

Scalar results are printed as JSON, sampled data as CSV with a one-line
header and 17 significant digits. Exit status is 0 on success, 1 when a
verification check fails, 2 for usage or precondition errors and 3 for
numerical failures.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from dataclasses import dataclass, field

import numpy as np

from parabar import dynamics, eigen, spectra, verify
from parabar.eigen import BarrierParams
from parabar.errors import DivergentIntegralError, NumericalInstabilityError
from parabar.polys import Branch, coefficient_table

COMMANDS = ("eigen", "polys", "field", "spectrum", "lifetimes", "smatrix", "verify")
FIELDS = ("psi", "density", "current", "u", "u-momentum")
FLOAT_FMT = "%.16e"

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    params: BarrierParams = field(default_factory=BarrierParams)
    options: dict = field(default_factory=dict)
    out: str | None = None


def _nonneg_int(text: str) -> int:
    val = int(text)
    if val < 0:
        raise argparse.ArgumentTypeError(f"expected an integer >= 0, got {text}")
    return val


def _pos_int(text: str) -> int:
    val = int(text)
    if val < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return val


def _pos_float(text: str) -> float:
    val = float(text)
    if not val > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return val


def _branch(text: str) -> Branch:
    try:
        return Branch.parse(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected plus or minus, got {text!r}") from None


def _tolerance(text: str) -> tuple[str, float]:
    name, sep, value = text.partition("=")
    if not sep or not name:
        raise argparse.ArgumentTypeError(f"expected NAME=VALUE, got {text!r}")
    return name, _pos_float(value)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    units = common.add_argument_group("barrier constants")
    units.add_argument("--m", type=_pos_float, default=1.0, help="mass (default 1)")
    units.add_argument("--gamma", type=_pos_float, default=1.0, help="curvature rate γ (default 1)")
    units.add_argument("--v0", type=float, default=0.0, help="barrier top V0 (default 0)")
    units.add_argument("--hbar", type=_pos_float, default=1.0, help="reduced Planck constant (default 1)")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")

    branch = argparse.ArgumentParser(add_help=False)
    branch.add_argument(
        "--branch", type=_branch, default=Branch.PLUS, metavar="{plus,minus}", help="decaying (plus, default) or growing"
    )

    figure = argparse.ArgumentParser(add_help=False)
    figure.add_argument("--figure", metavar="PATH", help="also render a figure (format from the extension)")

    parser = argparse.ArgumentParser(
        prog="parabar",
        description="Resonance states of the inverted oscillator V0 - m*gamma^2*x^2/2.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("eigen", parents=[common, branch], help="eigenvalue and normalization (JSON)")
    p.add_argument("--n", type=_nonneg_int, required=True)

    p = sub.add_parser("polys", parents=[common, branch], help="polynomial coefficient table (CSV)")
    p.add_argument("--n-max", type=_nonneg_int, required=True)

    p = sub.add_parser("field", parents=[common, branch, figure], help="sampled state or density (CSV)")
    p.add_argument("--what", choices=FIELDS, required=True)
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--t", type=float, default=0.0, help="time for psi/density/current")
    p.add_argument("--x-min", type=float, help="grid start (default −4/β, or −4/β̃ for u-momentum)")
    p.add_argument("--x-max", type=float, help="grid end (default +4/β, or +4/β̃ for u-momentum)")
    p.add_argument("--points", type=_pos_int, default=801)
    p.add_argument("--mode", choices=dynamics.MODES, default="separate")

    p = sub.add_parser("spectrum", parents=[common, branch, figure], help="energy line shape (CSV)")
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--mode", choices=dynamics.MODES, default="separate")
    p.add_argument("--window", type=_pos_float, default=20.0, help="half-window in units of Γ_n")
    p.add_argument("--points", type=_pos_int, default=4097)

    p = sub.add_parser("lifetimes", parents=[common, figure], help="lifetime ladder (CSV)")
    p.add_argument("--n-max", type=_nonneg_int, required=True)

    p = sub.add_parser("smatrix", parents=[common], help="transition matrix block (CSV)")
    p.add_argument("--size", type=_pos_int, required=True)

    p = sub.add_parser("verify", parents=[common], help="run the verification suite (JSON)")
    p.add_argument("--suite", choices=verify.SUITES + ("all",), default="all")
    p.add_argument("--json", metavar="PATH", help="write the JSON report here and a text summary to the output")
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p.add_argument(
        "--tol", type=_tolerance, action="append", default=[], metavar="NAME=VALUE", help="override one tolerance"
    )
    return parser


def parse_config(argv=None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    params = BarrierParams(m=ns.m, gamma=ns.gamma, V0=ns.v0, hbar=ns.hbar)
    options = {k: v for k, v in vars(ns).items() if k not in ("command", "m", "gamma", "v0", "hbar", "out")}
    return RunConfig(ns.command, params, options, ns.out)


def _fmt(v: float) -> str:
    # adding 0.0 folds −0.0 into 0.0
    return FLOAT_FMT % (v + 0.0)


def _write_csv(stream, header, columns):
    stream.write(",".join(header) + "\n")
    for row in zip(*columns):
        stream.write(",".join(str(v) if isinstance(v, (int, np.integer)) else _fmt(v) for v in row) + "\n")


def _complex_columns(values):
    values = np.asarray(values)
    if np.iscomplexobj(values):
        return ["re", "im"], [values.real, values.imag]
    return ["value"], [values]


def _run_eigen(cfg, stream):
    b, n = cfg.options["branch"], cfg.options["n"]
    E = eigen.eigenvalue(b, n, cfg.params)
    B = eigen.normalization_B(b, n, cfg.params)
    doc = {"branch": str(b), "n": n, "E_re": E.real, "E_im": E.imag, "B_re": B.real, "B_im": B.imag}
    stream.write(json.dumps(doc) + "\n")


def _run_polys(cfg, stream):
    rows = list(coefficient_table(cfg.options["branch"], cfg.options["n_max"]))
    _write_csv(stream, ["n", "k", "re", "im"], list(zip(*rows)))


def _sample_field(cfg):
    o, params = cfg.options, cfg.params
    b, n, what = o["branch"], o["n"], o["what"]
    scale = params.beta_tilde if what == "u-momentum" else params.beta
    lo = -4.0 / scale if o["x_min"] is None else o["x_min"]
    hi = 4.0 / scale if o["x_max"] is None else o["x_max"]
    if not hi > lo or o["points"] < 2:
        raise ValueError("need x-max > x-min and at least two points")
    x = np.linspace(lo, hi, o["points"])
    if what == "u":
        vals = eigen.eigenfunction_x(b, n, params, x)
    elif what == "u-momentum":
        vals = eigen.eigenfunction_p(b, n, params, x)
    elif what == "psi":
        vals = dynamics.wavefunction(b, n, params, o["t"], x, o["mode"])
    elif what == "density":
        vals = dynamics.density(b, n, params, o["t"], x, o["mode"])
    else:
        vals = dynamics.current(b, n, params, o["t"], x, o["mode"])
    return x, np.asarray(vals)


def _run_field(cfg, stream):
    x, vals = _sample_field(cfg)
    axis = "p" if cfg.options["what"] == "u-momentum" else "x"
    names, cols = _complex_columns(vals)
    _write_csv(stream, [axis] + names, [x] + cols)
    if cfg.options.get("figure"):
        from parabar import plotting

        o = cfg.options
        plotting.plot_field(x, vals, o["figure"], xlabel=axis, title=f"{o['what']} ({o['branch']}, n={o['n']})")


def _run_spectrum(cfg, stream):
    o = cfg.options
    ls = spectra.line_shape(o["n"], cfg.params, o["mode"], o["window"], o["points"], o["branch"])
    _write_csv(stream, ["E", "density"], [ls.E, ls.values])
    if o.get("figure"):
        from parabar import plotting

        ref = spectra.breit_wigner(o["branch"], o["n"], cfg.params, ls.E) if o["mode"] == "combined" else None
        plotting.plot_spectrum(ls.E, ls.values, o["figure"], reference=ref, title=f"{o['mode']}, n={o['n']}")


def _run_lifetimes(cfg, stream):
    ns = np.arange(cfg.options["n_max"] + 1)
    pairs = [dynamics.mean_lifetime(Branch.PLUS, int(n), cfg.params) for n in ns]
    mean, spread = (np.array(c) for c in zip(*pairs))
    _write_csv(stream, ["n", "t_mean_plus", "t_spread"], [ns, mean, spread])
    if cfg.options.get("figure"):
        from parabar import plotting

        plotting.plot_lifetimes(ns, spread, cfg.options["figure"])


def _run_smatrix(cfg, stream):
    S = dynamics.smatrix(cfg.options["size"], cfg.params)
    m, n = np.indices(S.shape)
    _write_csv(stream, ["m", "n", "re", "im"], [m.ravel(), n.ravel(), S.real.ravel(), S.imag.ravel()])


def _run_verify(cfg, stream):
    o = cfg.options
    report = verify.emit_verification(cfg.params, dict(o["tol"]) or None, o["suite"], o["seed"])
    if o.get("json"):
        with open(o["json"], "w", encoding="utf-8") as fh:
            fh.write(report.to_json())
        stream.write(report.to_text())
    else:
        stream.write(report.to_json())
    if not report.ok:
        for entry in report.failures():
            print(f"FAILED {entry.name}: {entry.residual:.3e} > {entry.tolerance:.3e}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


_RUNNERS = {
    "eigen": _run_eigen,
    "polys": _run_polys,
    "field": _run_field,
    "spectrum": _run_spectrum,
    "lifetimes": _run_lifetimes,
    "smatrix": _run_smatrix,
    "verify": _run_verify,
}


@contextlib.contextmanager
def _output(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def run(cfg: RunConfig) -> int:
    """Execute one command; returns the exit status."""
    try:
        with _output(cfg.out) as stream:
            status = _RUNNERS[cfg.command](cfg, stream)
    except (NumericalInstabilityError, DivergentIntegralError) as exc:
        print(f"parabar: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        print(f"parabar: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK if status is None else status


def main(argv=None) -> int:
    try:
        cfg = parse_config(argv)
    except ValueError as exc:
        print(f"parabar: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
