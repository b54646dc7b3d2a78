"""Complex eigenvalues and generalized eigenfunctions of the barrier.

The Hamiltonian is ``−(ħ²/2m) d²/dx² + V0 − mγ²x²/2``. Its generalized
eigenpairs are::

    E±_n = V0 ∓ i(n + 1/2)ħγ
    u±_n(x) = B±_n exp(±iβ²x²/2) H±_n(βx),   β = √(mγ/ħ)
    B±_n = (β / ((±2i)ⁿ n! √(±iπ)))^{1/2}

and in the momentum representation::

    ũ±_n(p) = B̃±_n exp(∓iβ̃²p²/2) H∓_n(β̃p),   β̃ = 1/√(mγħ)
    B̃±_n = (−i)ⁿ (β̃ / ((∓2i)ⁿ n! √(∓iπ)))^{1/2}

Every fractional power uses the principal branch.

The harmonic oscillator (``V0 + mω²x²/2``) is included as the baseline
these formulas continue from via ω → ∓iγ.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from parabar.errors import PreconditionError
from parabar.polys import (
    Branch,
    _check_degree,
    hermite_coeffs,
    hermite_eval,
    hermite_like_coeffs,
    hermite_like_eval,
)
from parabar import quad


@dataclass(frozen=True)
class BarrierParams:
    """Physical constants of the barrier. Defaults are natural units."""

    m: float = 1.0
    gamma: float = 1.0
    V0: float = 0.0
    hbar: float = 1.0

    def __post_init__(self):
        for name in ("m", "gamma", "V0", "hbar"):
            object.__setattr__(self, name, float(getattr(self, name)))
        for name in ("m", "gamma", "hbar"):
            val = getattr(self, name)
            if not (np.isfinite(val) and val > 0):
                raise ValueError(f"{name} must be positive and finite, got {val}")
        if not math.isfinite(self.V0):
            raise ValueError("V0 must be finite")

    @property
    def beta(self) -> float:
        return math.sqrt(self.m * self.gamma / self.hbar)

    @property
    def beta_tilde(self) -> float:
        return 1.0 / math.sqrt(self.m * self.gamma * self.hbar)


@dataclass(frozen=True)
class OscillatorParams:
    m: float = 1.0
    omega: float = 1.0
    V0: float = 0.0
    hbar: float = 1.0

    def __post_init__(self):
        for name in ("m", "omega", "V0", "hbar"):
            object.__setattr__(self, name, float(getattr(self, name)))
        for name in ("m", "omega", "hbar"):
            val = getattr(self, name)
            if not (np.isfinite(val) and val > 0):
                raise ValueError(f"{name} must be positive and finite, got {val}")

    @property
    def alpha(self) -> float:
        return math.sqrt(self.m * self.omega / self.hbar)


@dataclass(frozen=True)
class SampledField:
    """Values on the uniform grid ``x0 + k·dx``."""

    x0: float
    dx: float
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        if not self.dx > 0:
            raise ValueError("grid spacing must be positive")

    @property
    def x(self) -> np.ndarray:
        return self.x0 + self.dx * np.arange(len(self.values))

    @classmethod
    def sample(cls, func, x_min: float, x_max: float, points: int) -> "SampledField":
        if points < 2 or not x_max > x_min:
            raise ValueError("need x_max > x_min and at least two points")
        x = np.linspace(x_min, x_max, points)
        return cls(float(x_min), float(x[1] - x[0]), np.asarray(func(x)))


@dataclass(frozen=True)
class EigenState:
    branch: Branch
    n: int
    params: BarrierParams
    E: complex
    B: complex

    @classmethod
    def build(cls, branch, n: int, params: BarrierParams | None = None) -> "EigenState":
        params = params or BarrierParams()
        branch = Branch.parse(branch)
        return cls(branch, n, params, eigenvalue(branch, n, params), normalization_B(branch, n, params))

    def __call__(self, x):
        return eigenfunction_x(self.branch, self.n, self.params, x)


def _params(params):
    return BarrierParams() if params is None else params


def eigenvalue(branch, n: int, params: BarrierParams | None = None) -> complex:
    """E±_n = V0 ∓ i(n + 1/2)ħγ."""
    params = _params(params)
    s = Branch.parse(branch).sign
    if n < 0:
        raise ValueError("n must be non-negative")
    return complex(params.V0, -s * (n + 0.5) * params.hbar * params.gamma)


def normalization_B(branch, n: int, params: BarrierParams | None = None) -> complex:
    params = _params(params)
    s = Branch.parse(branch).sign
    _check_degree(n)
    inner = params.beta / ((2j * s) ** n * math.factorial(n) * np.sqrt(1j * s * np.pi))
    return complex(np.sqrt(inner))


def normalization_B_tilde(branch, n: int, params: BarrierParams | None = None) -> complex:
    params = _params(params)
    s = Branch.parse(branch).sign
    _check_degree(n)
    inner = params.beta_tilde / ((-2j * s) ** n * math.factorial(n) * np.sqrt(-1j * s * np.pi))
    return complex((-1j) ** n * np.sqrt(inner))


def eigenfunction_x(branch, n: int, params: BarrierParams | None, x):
    """u±_n(x) = B±_n exp(±iβ²x²/2) H±_n(βx)."""
    params = _params(params)
    branch = Branch.parse(branch)
    x = np.asarray(x, dtype=float)
    beta = params.beta
    phase = np.exp(0.5j * branch.sign * (beta * x) ** 2)
    out = normalization_B(branch, n, params) * phase * hermite_like_eval(branch, n, beta * x)
    return out[()] if np.ndim(out) == 0 else out


def eigenfunction_p(branch, n: int, params: BarrierParams | None, p):
    """ũ±_n(p) = B̃±_n exp(∓iβ̃²p²/2) H∓_n(β̃p)."""
    params = _params(params)
    branch = Branch.parse(branch)
    p = np.asarray(p, dtype=float)
    bt = params.beta_tilde
    phase = np.exp(-0.5j * branch.sign * (bt * p) ** 2)
    out = normalization_B_tilde(branch, n, params) * phase * hermite_like_eval(branch.flipped, n, bt * p)
    return out[()] if np.ndim(out) == 0 else out


def default_grid(params: BarrierParams | None = None, points: int = 8001, half_width: float = 4.0):
    """Symmetric grid ``[−half_width/β, half_width/β]``."""
    params = _params(params)
    L = half_width / params.beta
    return np.linspace(-L, L, points)


def _second_difference(values: np.ndarray, h: float) -> np.ndarray:
    return (values[2:] - 2.0 * values[1:-1] + values[:-2]) / (h * h)


def _check_grid(grid) -> tuple[np.ndarray, float]:
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size < 5:
        raise PreconditionError("grid needs at least 5 points")
    h = grid[1] - grid[0]
    if not h > 0 or not np.allclose(np.diff(grid), h, rtol=1e-9, atol=0):
        raise PreconditionError("grid must be uniform and increasing")
    return grid, h


def hamiltonian_residual_x(branch, n: int, params: BarrierParams | None = None, grid=None) -> float:
    """Finite-difference check of ``Ĥu±_n = E±_n u±_n`` in coordinate space.

    Returns ``max |Ĥu − Eu| / (ħγ max|u|)`` over interior points, using the
    three-point second difference. The residual is O(dx²).

    Raises
    ------
    PreconditionError
        If ``dx·β²·max|x| > 0.1`` (the oscillating phase is under-resolved).
    """
    params = _params(params)
    grid, h = _check_grid(default_grid(params) if grid is None else grid)
    if h * params.beta**2 * np.abs(grid).max() > 0.1:
        raise PreconditionError("grid too coarse to resolve the exp(±iβ²x²/2) phase")
    u = eigenfunction_x(branch, n, params, grid)
    x = grid[1:-1]
    kinetic = -(params.hbar**2 / (2.0 * params.m)) * _second_difference(u, h)
    potential = (params.V0 - 0.5 * params.m * params.gamma**2 * x**2) * u[1:-1]
    E = eigenvalue(branch, n, params)
    res = np.abs(kinetic + potential - E * u[1:-1]).max()
    return float(res / (params.hbar * params.gamma * np.abs(u).max()))


def hamiltonian_residual_p(branch, n: int, params: BarrierParams | None = None, grid=None) -> float:
    """Momentum-space counterpart with ``p²/2m + V0 + (mγ²ħ²/2) d²/dp²``.

    The default grid is ``[−4/β̃, 4/β̃]`` with 8001 points.
    """
    params = _params(params)
    if grid is None:
        L = 4.0 / params.beta_tilde
        grid = np.linspace(-L, L, 8001)
    grid, h = _check_grid(grid)
    if h * params.beta_tilde**2 * np.abs(grid).max() > 0.1:
        raise PreconditionError("grid too coarse to resolve the exp(∓iβ̃²p²/2) phase")
    u = eigenfunction_p(branch, n, params, grid)
    p = grid[1:-1]
    curvature = 0.5 * params.m * params.gamma**2 * params.hbar**2 * _second_difference(u, h)
    potential = (p**2 / (2.0 * params.m) + params.V0) * u[1:-1]
    E = eigenvalue(branch, n, params)
    res = np.abs(curvature + potential - E * u[1:-1]).max()
    return float(res / (params.hbar * params.gamma * np.abs(u).max()))


DEFAULT_FOURIER_EPS = (4e-3, 2e-3, 1e-3, 5e-4)


def regularized_fourier(branch, n: int, params: BarrierParams | None, p, eps_schedule=DEFAULT_FOURIER_EPS):
    """Fourier transform of u±_n at momenta ``p`` via damping and extrapolation.

    Computes ``(2πħ)^{−1/2} ∫ u(x) exp(−ipx/ħ) exp(−εβ²x²/2) dx`` in closed
    form for each ε, then extrapolates to ε → 0.

    Returns
    -------
    (values, error_estimates) as arrays over ``p``.
    """
    params = _params(params)
    branch = Branch.parse(branch)
    s = branch.sign
    beta, hbar = params.beta, params.hbar
    # H(βx) in powers of x
    h = hermite_like_coeffs(branch, n).coef * beta ** np.arange(n + 1)
    B = normalization_B(branch, n, params)
    pref = B / math.sqrt(2.0 * math.pi * hbar)
    p = np.atleast_1d(np.asarray(p, dtype=float))
    vals = np.empty(p.size, dtype=complex)
    errs = np.empty(p.size)
    eps = np.asarray(eps_schedule, dtype=float)
    for i, pk in enumerate(p):
        samples = [
            pref * quad.moment_integral(h, beta**2 * (1j * s - e), -1j * pk / hbar) for e in eps
        ]
        vals[i], errs[i] = quad.richardson_extrapolate(eps, samples)
    return vals, errs


def fourier_map_residual(
    branch, n: int, params: BarrierParams | None = None, eps_schedule=DEFAULT_FOURIER_EPS, p=None
) -> float:
    """Max deviation of the regularized transform of u±_n from ũ±_n.

    Normalized by ``max|ũ|`` on the momentum sample (default 41 points on
    ``[−3/β̃, 3/β̃]``).
    """
    params = _params(params)
    if n > 10:
        raise PreconditionError("fourier_map_residual supports n <= 10")
    if p is None:
        p = np.linspace(-3.0, 3.0, 41) / params.beta_tilde
    got, _ = regularized_fourier(branch, n, params, p, eps_schedule)
    want = eigenfunction_p(branch, n, params, p)
    return float(np.abs(got - want).max() / np.abs(want).max())


# --- harmonic-oscillator baseline -------------------------------------------


def ho_energy(n: int, params: OscillatorParams | None = None) -> float:
    params = params or OscillatorParams()
    return params.V0 + (n + 0.5) * params.hbar * params.omega


def ho_norm(n: int, params: OscillatorParams | None = None) -> float:
    params = params or OscillatorParams()
    _check_degree(n)
    return math.sqrt(params.alpha / (2**n * math.factorial(n) * math.sqrt(math.pi)))


def ho_eigenpair(n: int, params: OscillatorParams | None = None):
    """Return ``(E_n, u_n)`` with ``u_n`` a callable of x."""
    params = params or OscillatorParams()
    N = ho_norm(n, params)
    alpha = params.alpha

    def u(x):
        x = np.asarray(x, dtype=float)
        return N * np.exp(-0.5 * (alpha * x) ** 2) * hermite_eval(n, alpha * x)

    return ho_energy(n, params), u


def ho_overlap(m: int, n: int, params: OscillatorParams | None = None) -> float:
    """∫ u_m u_n dx through the Gaussian moment engine."""
    params = params or OscillatorParams()
    prod = np.convolve(hermite_coeffs(m).coef, hermite_coeffs(n).coef)
    val = quad.moment_integral(prod, -2.0)
    return float((ho_norm(m, params) * ho_norm(n, params) / params.alpha * val).real)


def ho_gram(size: int, params: OscillatorParams | None = None) -> np.ndarray:
    return np.array([[ho_overlap(m, n, params) for n in range(size)] for m in range(size)])


def continued_from_oscillator(branch, n: int, params: BarrierParams | None = None):
    """Oscillator (E_n, N_n·(±i)^{−n/2}, α) continued with ω → ∓iγ.

    The factor (±i)^{−n/2} converts H_n(αx) into H±_n(βx). Returns the
    continued ``(energy, normalization, alpha)`` with principal branches.
    """
    params = _params(params)
    s = Branch.parse(branch).sign
    omega = -1j * s * params.gamma
    alpha = np.sqrt(params.m * omega / params.hbar)
    energy = params.V0 + (n + 0.5) * params.hbar * omega
    norm = np.sqrt(alpha / (2**n * math.factorial(n) * math.sqrt(math.pi)))
    norm = norm * np.exp(-0.5 * n * np.log(1j * s))
    return complex(energy), complex(norm), complex(alpha)
