"""Physical energy distributions of the growth and decay time factors.

The energy amplitude uses the time → energy transform with kernel
``exp(+iEt/ħ)`` (the opposite sign to the x → p transform in
:mod:`parabar.eigen`)::

    T̃±_n(E) = (±i/√π) √Γ_n / (E − V0 ± iΓ_n),   Γ_n = (n + 1/2)ħγ

whose modulus squared is the Breit-Wigner density. Joining growth and
decay continuously at t = 0 gives the sharper combined line shape
``(2/π) Γ³ / ((E − V0)² + Γ²)²``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from parabar.dynamics import MODES, amplitude, mean_lifetime, time_factor
from parabar.eigen import BarrierParams
from parabar.errors import PreconditionError
from parabar.polys import Branch


def _params(params):
    return BarrierParams() if params is None else params


@dataclass(frozen=True)
class LineShape:
    """Density sampled on ``E0 + k·dE``."""

    E0: float
    dE: float
    values: np.ndarray = field(repr=False)
    meta: dict = field(default_factory=dict)

    @property
    def E(self) -> np.ndarray:
        return self.E0 + self.dE * np.arange(len(self.values))

    def trapezoid(self) -> float:
        return float(np.trapezoid(self.values, dx=self.dE))


def half_width(n: int, params: BarrierParams | None = None) -> float:
    """Γ_n = (n + 1/2)ħγ."""
    params = _params(params)
    return (n + 0.5) * params.hbar * params.gamma


def energy_amplitude(branch, n: int, params: BarrierParams | None = None, E=0.0, mode: str = "separate"):
    """T̃±_n(E); scaled by 1/√2 in combined mode."""
    params = _params(params)
    s = Branch.parse(branch).sign
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    G = half_width(n, params)
    E = np.asarray(E, dtype=float)
    out = (1j * s / math.sqrt(math.pi)) * math.sqrt(G) / (E - params.V0 + 1j * s * G)
    if mode == "combined":
        out = out / math.sqrt(2.0)
    return out[()] if out.ndim == 0 else out


def amplitude_pole(branch, n: int, params: BarrierParams | None = None) -> complex:
    """Location of the simple pole of T̃±_n continued to complex E."""
    params = _params(params)
    s = Branch.parse(branch).sign
    return complex(params.V0, -s * half_width(n, params))


def breit_wigner(branch, n: int, params: BarrierParams | None = None, E=0.0):
    """(1/π) Γ_n / ((E − V0)² + Γ_n²); the same for both branches."""
    params = _params(params)
    Branch.parse(branch)
    G = half_width(n, params)
    d = np.asarray(E, dtype=float) - params.V0
    out = G / (math.pi * (d * d + G * G))
    return out[()] if np.ndim(out) == 0 else out


def uncertainty_product(n: int, params: BarrierParams | None = None, branch=Branch.PLUS) -> float:
    """Lifetime spread × half-width (equals ħ/2)."""
    params = _params(params)
    return mean_lifetime(branch, n, params)[1] * half_width(n, params)


def combined_amplitude_sum(n: int, params: BarrierParams | None = None, E=0.0):
    """T̃⁻_n(E) + T̃⁺_n(E) in combined mode (complex dtype, real valued)."""
    return energy_amplitude(Branch.MINUS, n, params, E, "combined") + energy_amplitude(
        Branch.PLUS, n, params, E, "combined"
    )


def combined_line_shape(n: int, params: BarrierParams | None = None, E=0.0):
    """(2/π) Γ³ / ((E − V0)² + Γ²)²."""
    params = _params(params)
    G = half_width(n, params)
    d = np.asarray(E, dtype=float) - params.V0
    q = d * d + G * G
    out = 2.0 * G**3 / (math.pi * q * q)
    return out[()] if np.ndim(out) == 0 else out


def line_shape(
    n: int,
    params: BarrierParams | None = None,
    mode: str = "separate",
    window: float = 20.0,
    points: int = 4097,
    branch=Branch.PLUS,
) -> LineShape:
    """Sample the energy density over ``V0 ± window·Γ_n``."""
    params = _params(params)
    if points < 2 or not window > 0:
        raise ValueError("need window > 0 and at least two points")
    G = half_width(n, params)
    E = np.linspace(params.V0 - window * G, params.V0 + window * G, points)
    if mode == "separate":
        vals = breit_wigner(branch, n, params, E)
    elif mode == "combined":
        vals = combined_line_shape(n, params, E)
    else:
        raise ValueError(f"mode must be one of {MODES}")
    return LineShape(float(E[0]), float(E[1] - E[0]), np.asarray(vals), {"n": n, "mode": mode, "Gamma": G})


def _tail_mass(mode: str, w: float) -> float:
    """Analytic mass of the density outside ``|E − V0| > w·Γ``."""
    if mode == "separate":
        return 1.0 - 2.0 / math.pi * math.atan(w)
    # ∫ 2/(π(1+u²)²) du over |u| < w = (2/π)(atan w + w/(1+w²))
    return 1.0 - 2.0 / math.pi * (math.atan(w) + w / (1.0 + w * w))


def normalization(
    n: int,
    params: BarrierParams | None = None,
    mode: str = "separate",
    tol: float = 1e-3,
    window: float = 50.0,
    points_per_width: int = 40,
    max_window: float = 1e7,
):
    """Trapezoidal integral of the line shape on an adaptively widened window.

    The window ``V0 ± w·Γ`` doubles until the analytic tail remainder is
    below ``tol``. Returns ``(integral, window_used)``; the integral does not
    include the tail.
    """
    params = _params(params)
    w = window
    while _tail_mass(mode, w) > tol:
        w *= 2.0
        if w > max_window:
            raise PreconditionError("line shape tail did not fall below tolerance")
    points = int(2 * w * points_per_width) + 1
    ls = line_shape(n, params, mode, w, points)
    return ls.trapezoid(), w


def measured_fwhm(ls: LineShape) -> float:
    """Full width at half maximum of a sampled single peak.

    Half-maximum crossings are located by linear interpolation between the
    bracketing samples.
    """
    v = ls.values
    half = v.max() / 2.0
    above = np.nonzero(v >= half)[0]
    lo, hi = above[0], above[-1]
    if lo == 0 or hi == v.size - 1:
        raise PreconditionError("half maximum not bracketed by the sampled window")
    left = lo - (v[lo] - half) / (v[lo] - v[lo - 1])
    right = hi + (v[hi] - half) / (v[hi] - v[hi + 1])
    return float((right - left) * ls.dE)


def dft_cross_check(
    branch,
    n: int,
    params: BarrierParams | None = None,
    window_T: float | None = None,
    samples: int = 2**16,
) -> float:
    """Compare a discrete transform of sampled T±_n with the closed form.

    T±_n is sampled on its half-line at ``t_k = ±k·dt``, ``dt = window_T /
    samples``, with the t = 0 sample taken at full value, and summed as
    ``(2πħ)^{−1/2} Σ T(t_k) exp(iEt_k/ħ) dt`` on the FFT energy grid. The
    return value is ``max |DFT − T̃| / max |T̃|`` over ``|E − V0| ≤ 10Γ_n``.

    The error has two parts: the jump of the step function at t = 0 (order
    dt) and truncation of the exponential tail at ``window_T``.

    Raises
    ------
    PreconditionError
        If ``window_T < 20/((2n+1)γ)``, ``samples`` is not a power of two
        ``>= 2**14``, or the Nyquist energy does not cover ``10Γ_n``.
    """
    params = _params(params)
    branch = Branch.parse(branch)
    rate = (2 * n + 1) * params.gamma
    if window_T is None:
        window_T = 40.0 / rate
    if window_T < 20.0 / rate:
        raise PreconditionError("window too short for the exponential tail")
    if samples < 2**14 or samples & (samples - 1):
        raise PreconditionError("samples must be a power of two >= 2**14")
    dt = window_T / samples
    G = half_width(n, params)
    if 10.0 * G / params.hbar >= math.pi / dt:
        raise PreconditionError("sampling too coarse for the energy window")
    E, dft = _dft_amplitude(branch, n, params, window_T, samples)
    keep = np.abs(E - params.V0) <= 10.0 * G
    want = energy_amplitude(branch, n, params, E[keep])
    return float(np.abs(dft[keep] - want).max() / np.abs(want).max())


def _dft_amplitude(branch, n, params, window_T, samples):
    s = branch.sign
    dt = window_T / samples
    t = s * dt * np.arange(samples)
    f = time_factor(branch, n, params, t) * np.exp(1j * params.V0 * t / params.hbar)
    # Σ f_k exp(i ω_j s k dt) with ω_j = 2πj/window_T
    if s > 0:
        spectrum = np.fft.ifft(f) * samples
    else:
        spectrum = np.fft.fft(f)
    omega = 2.0 * math.pi * np.fft.fftfreq(samples, d=dt)
    E = params.V0 + params.hbar * omega
    dft = spectrum * dt / math.sqrt(2.0 * math.pi * params.hbar)
    order = np.argsort(E)
    return E[order], dft[order]


def dft_tail_error(branch, n: int, params: BarrierParams | None = None, window_T: float = 10.0, samples: int = 2**14):
    """Truncation part of the DFT error, isolated with the geometric series.

    The infinite rectangle-rule sum of a sampled exponential is
    ``dt·A/(1 − r)``; the finite one differs by the factor ``1 − r^N``. The
    return value is ``max |finite − infinite| / max |infinite|`` on the
    ``|E − V0| <= 10Γ_n`` part of the FFT grid.
    """
    params = _params(params)
    branch = Branch.parse(branch)
    E, dft = _dft_amplitude(branch, n, params, window_T, samples)
    G = half_width(n, params)
    keep = np.abs(E - params.V0) <= 10.0 * G
    dt = window_T / samples
    # ratio of successive samples of T(t_k) exp(iE t_k/ħ) along t_k = ±k·dt
    z = (-(n + 0.5) * params.gamma + 1j * branch.sign * (E[keep] - params.V0) / params.hbar) * dt
    infinite = amplitude(n, params) * dt / math.sqrt(2.0 * math.pi * params.hbar) / (1.0 - np.exp(z))
    return float(np.abs(dft[keep] - infinite).max() / np.abs(infinite).max())


def energy_norm(branch, n: int, params: BarrierParams | None = None, mode: str = "separate") -> float:
    """∫|T̃±_n(E)|² dE by numerical quadrature."""
    from scipy import integrate

    params = _params(params)
    G = half_width(n, params)

    def f(u):
        return float(abs(energy_amplitude(branch, n, params, params.V0 + G * u, mode)) ** 2) * G

    opts = dict(epsabs=0.0, epsrel=1e-12, limit=200)
    return integrate.quad(f, -np.inf, 0.0, **opts)[0] + integrate.quad(f, 0.0, np.inf, **opts)[0]
