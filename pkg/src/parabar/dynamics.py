"""Time factors, time-dependent states, densities, currents and lifetimes.

Decaying (``PLUS``) states live on t ≥ 0 and growing (``MINUS``) states on
t ≤ 0::

    T±_n(t) = A exp(−iV0t/ħ) exp(∓(n+1/2)γt) θ(±t)

``A = √((2n+1)γ)`` normalizes each factor on its own half-line
(``mode="separate"``). In ``mode="combined"`` the growth and decay factors
are joined continuously at t = 0 and normalized together, which takes
``A/√2``. θ(0) = 1 on both branches so T⁻_n(0) = T⁺_n(0).
"""

from __future__ import annotations

import math

import numpy as np
from scipy import integrate

from parabar.errors import PreconditionError
from parabar.eigen import (
    BarrierParams,
    eigenfunction_p,
    eigenfunction_x,
    normalization_B,
)
from parabar.polys import Branch, hermite_like_coeffs, hermite_like_pair
from parabar import quad

MODES = ("separate", "combined")


def _params(params):
    return BarrierParams() if params is None else params


def amplitude(n: int, params: BarrierParams | None = None, mode: str = "separate") -> float:
    params = _params(params)
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    A = math.sqrt((2 * n + 1) * params.gamma)
    return A if mode == "separate" else A / math.sqrt(2.0)


def _support(sign: int, t):
    return sign * np.asarray(t, dtype=float) >= 0


def time_factor(branch, n: int, params: BarrierParams | None = None, t=0.0, mode: str = "separate"):
    """T±_n(t); exactly zero off the branch's half-line."""
    params = _params(params)
    s = Branch.parse(branch).sign
    t = np.asarray(t, dtype=float)
    on = _support(s, t)
    # mask the exponent so the off-support side never overflows
    tt = np.where(on, t, 0.0)
    val = amplitude(n, params, mode) * np.exp(
        -1j * params.V0 * tt / params.hbar - s * (n + 0.5) * params.gamma * tt
    )
    out = np.where(on, val, 0j)
    return out[()] if out.ndim == 0 else out


def wavefunction(branch, n: int, params: BarrierParams | None = None, t=0.0, x=0.0, mode="separate"):
    """ψ±_n(t, x) = T±_n(t) u±_n(x), broadcast over t and x."""
    return time_factor(branch, n, params, t, mode) * eigenfunction_x(branch, n, params, x)


def wavefunction_p(branch, n: int, params: BarrierParams | None = None, t=0.0, p=0.0, mode="separate"):
    """Momentum-space ψ̃±_n(t, p) = T±_n(t) ũ±_n(p)."""
    return time_factor(branch, n, params, t, mode) * eigenfunction_p(branch, n, params, p)


def _decay(sign, n, params, t, mode):
    # |A|² exp(∓(2n+1)γt) θ(±t)
    t = np.asarray(t, dtype=float)
    on = _support(sign, t)
    tt = np.where(on, t, 0.0)
    val = amplitude(n, params, mode) ** 2 * np.exp(-sign * (2 * n + 1) * params.gamma * tt)
    return np.where(on, val, 0.0)


def density(branch, n: int, params: BarrierParams | None = None, t=0.0, x=0.0, mode="separate"):
    """ρ±_n(t, x) = |A|²|B|² exp(∓(2n+1)γt) |H±_n(βx)|²."""
    params = _params(params)
    branch = Branch.parse(branch)
    xi = params.beta * np.asarray(x, dtype=float)
    h = hermite_like_pair(branch, n, xi)[0]
    B2 = abs(normalization_B(branch, n, params)) ** 2
    out = _decay(branch.sign, n, params, t, mode) * B2 * (h.real**2 + h.imag**2)
    return out[()] if np.ndim(out) == 0 else out


def current(branch, n: int, params: BarrierParams | None = None, t=0.0, x=0.0, mode="separate"):
    """Probability current ``Re[ψ* (−iħ ∂ψ/∂x)]/m`` in closed form.

    ``±|A|²|B|² e^{∓(2n+1)γt} γ {x |H±_n|² ± 2n β⁻¹ Im[H∓_n H±_{n−1}]}``.
    """
    params = _params(params)
    branch = Branch.parse(branch)
    s = branch.sign
    x = np.asarray(x, dtype=float)
    xi = params.beta * x
    h, h_prev = hermite_like_pair(branch, n, xi)
    B2 = abs(normalization_B(branch, n, params)) ** 2
    bracket = x * (h.real**2 + h.imag**2) + s * 2 * n / params.beta * np.imag(np.conj(h) * h_prev)
    out = s * _decay(s, n, params, t, mode) * B2 * params.gamma * bracket
    return out[()] if np.ndim(out) == 0 else out


def continuity_residual(branch, n: int, params: BarrierParams | None = None, grid=None, t=None, dt=None) -> float:
    """Central-difference check of ∂ρ/∂t + ∂j/∂x = 0.

    Returns ``max |∂ₜρ + ∂ₓj| / (γ max ρ)`` over interior grid points at time
    ``t``. Defaults: grid ``[−4/β, 4/β]`` with 4001 points, ``t = ±0.5/γ``,
    ``dt = 1e-4/γ``.

    Raises
    ------
    PreconditionError
        If ``t − dt`` and ``t + dt`` are not both strictly inside the branch
        support.
    """
    params = _params(params)
    branch = Branch.parse(branch)
    s = branch.sign
    if grid is None:
        L = 4.0 / params.beta
        grid = np.linspace(-L, L, 4001)
    grid = np.asarray(grid, dtype=float)
    if grid.size < 5:
        raise PreconditionError("grid needs at least 5 points")
    h = grid[1] - grid[0]
    if t is None:
        t = s * 0.5 / params.gamma
    if dt is None:
        dt = 1e-4 / params.gamma
    if not (s * (t - dt) > 0 and s * (t + dt) > 0):
        raise PreconditionError("t ± dt must lie inside the branch's time support")
    rho = density(branch, n, params, t, grid)
    drho = (density(branch, n, params, t + dt, grid) - density(branch, n, params, t - dt, grid)) / (2 * dt)
    j = current(branch, n, params, t, grid)
    dj = (j[2:] - j[:-2]) / (2 * h)
    res = np.abs(drho[1:-1] + dj).max()
    return float(res / (params.gamma * rho.max()))


def transition_matrix(m: int, n: int, params: BarrierParams | None = None) -> complex:
    """S_mn = ⟨u⁺_m | u⁻_n⟩ as a Fresnel pairing in ξ = βx.

    ``β⁻¹ conj(B⁺_m) B⁻_n ∫ conj(H⁺_m) H⁻_n exp(−iξ²) dξ``.
    """
    params = _params(params)
    if m > 10 or n > 10:
        raise PreconditionError("transition_matrix supports m, n <= 10")
    hm = np.conj(hermite_like_coeffs(Branch.PLUS, m).coef)
    hn = hermite_like_coeffs(Branch.MINUS, n).coef
    pairing = quad.moment_integral(np.convolve(hm, hn), -2j)
    Bm = normalization_B(Branch.PLUS, m, params)
    Bn = normalization_B(Branch.MINUS, n, params)
    return complex(np.conj(Bm) * Bn * pairing / params.beta)


def smatrix(size: int, params: BarrierParams | None = None) -> np.ndarray:
    return np.array([[transition_matrix(m, n, params) for n in range(size)] for m in range(size)])


def mean_lifetime(branch, n: int, params: BarrierParams | None = None, method: str = "analytic"):
    """Return ``(⟨t⟩, Δt)`` of the distribution |T±_n(t)|² (separate mode).

    ``method="analytic"`` gives ``(±1/((2n+1)γ), 1/((2n+1)γ))``;
    ``method="quadrature"`` integrates the time moments numerically.
    """
    params = _params(params)
    s = Branch.parse(branch).sign
    rate = (2 * n + 1) * params.gamma
    if method == "analytic":
        return s / rate, 1.0 / rate
    if method != "quadrature":
        raise ValueError("method must be 'analytic' or 'quadrature'")

    def weight(t):
        return float(_decay(s, n, params, t, "separate"))

    lo, hi = (0.0, np.inf) if s > 0 else (-np.inf, 0.0)
    opts = dict(epsabs=0.0, epsrel=1e-13, limit=200)
    m0 = integrate.quad(weight, lo, hi, **opts)[0]
    m1 = integrate.quad(lambda t: t * weight(t), lo, hi, **opts)[0]
    m2 = integrate.quad(lambda t: t * t * weight(t), lo, hi, **opts)[0]
    mean = m1 / m0
    return mean, math.sqrt(m2 / m0 - mean * mean)


def time_norm(branch, n: int, params: BarrierParams | None = None, mode: str = "separate") -> float:
    """∫|T±_n|² dt by numerical quadrature."""
    params = _params(params)
    s = Branch.parse(branch).sign
    lo, hi = (0.0, np.inf) if s > 0 else (-np.inf, 0.0)
    return integrate.quad(lambda t: float(_decay(s, n, params, t, mode)), lo, hi, epsabs=0.0, epsrel=1e-13)[0]


def combined_time_norm(n: int, params: BarrierParams | None = None) -> float:
    """∫|T⁻_n + T⁺_n|² dt in combined mode (numerical)."""
    params = _params(params)

    def f(t):
        v = time_factor(Branch.MINUS, n, params, t, "combined") + time_factor(Branch.PLUS, n, params, t, "combined")
        return float(abs(v) ** 2)

    opts = dict(epsabs=0.0, epsrel=1e-13)
    return integrate.quad(f, -np.inf, 0.0, **opts)[0] + integrate.quad(f, 0.0, np.inf, **opts)[0]


def integrated_density(branch, n: int, params: BarrierParams | None = None, x=0.0):
    """Closed-form ∫ρ±_n(t, x) dt over the branch's half-line."""
    params = _params(params)
    branch = Branch.parse(branch)
    rate = (2 * n + 1) * params.gamma
    xi = params.beta * np.asarray(x, dtype=float)
    h = hermite_like_pair(branch, n, xi)[0]
    B2 = abs(normalization_B(branch, n, params)) ** 2
    return amplitude(n, params) ** 2 / rate * B2 * (h.real**2 + h.imag**2)


def growth_decay_balance(n: int, params: BarrierParams | None = None, grid=None) -> float:
    """Max relative gap between total growing and total decaying density.

    Compares ``∫_{−∞}^0 ρ⁻_n dt`` with ``∫_0^∞ ρ⁺_n dt`` pointwise in x.
    """
    params = _params(params)
    if grid is None:
        L = 4.0 / params.beta
        grid = np.linspace(-L, L, 801)
    grid = np.asarray(grid, dtype=float)
    grow = integrated_density(Branch.MINUS, n, params, grid)
    decay = integrated_density(Branch.PLUS, n, params, grid)
    mask = decay > 0
    return float(np.max(np.abs(grow[mask] - decay[mask]) / decay[mask]))
