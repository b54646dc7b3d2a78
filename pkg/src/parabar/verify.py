"""Aggregated residual checks over every module.

Each check produces one :class:`CheckResult`; failures are recorded, never
raised. ``emit_verification`` runs the suites in a fixed order so the report
is reproducible for a fixed configuration.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable

import numpy as np

from parabar import dynamics, eigen, polys, quad, spectra
from parabar.eigen import BarrierParams, OscillatorParams
from parabar.polys import Branch

SUITES = ("polys", "quad", "eigen", "dynamics", "spectra")
DEFAULT_SEED = 20240917
BRANCHES = (Branch.PLUS, Branch.MINUS)

# The polynomial table the series construction must reproduce exactly.
TABLE = {
    (Branch.PLUS, 0): [1],
    (Branch.PLUS, 1): [0, 2],
    (Branch.PLUS, 2): [-2j, 0, 4],
    (Branch.PLUS, 3): [0, -12j, 0, 8],
    (Branch.PLUS, 4): [-12, 0, -48j, 0, 16],
    (Branch.MINUS, 0): [1],
    (Branch.MINUS, 1): [0, 2],
    (Branch.MINUS, 2): [2j, 0, 4],
    (Branch.MINUS, 3): [0, 12j, 0, 8],
    (Branch.MINUS, 4): [-12, 0, 48j, 0, 16],
}


@dataclass
class CheckResult:
    name: str
    residual: float
    tolerance: float
    passed: bool
    anchor: str


@dataclass
class VerificationReport:
    entries: list = field(default_factory=list)
    params: dict = field(default_factory=dict)
    suite: str = "all"

    @property
    def n_passed(self) -> int:
        return sum(e.passed for e in self.entries)

    @property
    def n_failed(self) -> int:
        return len(self.entries) - self.n_passed

    @property
    def ok(self) -> bool:
        return self.n_failed == 0

    def failures(self) -> list:
        return [e for e in self.entries if not e.passed]

    def __getitem__(self, name: str) -> CheckResult:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "summary": {"total": len(self.entries), "passed": self.n_passed, "failed": self.n_failed},
            "entries": [
                {
                    "name": e.name,
                    "residual": e.residual,
                    "tolerance": e.tolerance,
                    "pass": e.passed,
                    "anchor": e.anchor,
                }
                for e in self.entries
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        lines = [
            f"{'PASS' if e.passed else 'FAIL'}  {e.name:<40s} residual={e.residual:.3e}  tol={e.tolerance:.1e}"
            for e in self.entries
        ]
        lines.append(f"{self.n_passed}/{len(self.entries)} checks passed")
        return "\n".join(lines) + "\n"


class _Collector:
    def __init__(self, tolerances: dict | None):
        self.tolerances = dict(tolerances or {})
        self.entries: list[CheckResult] = []

    def add(self, name: str, residual: float, tolerance: float, anchor: str):
        tol = float(self.tolerances.get(name, tolerance))
        residual = float(residual)
        passed = bool(np.isfinite(residual) and residual <= tol)
        self.entries.append(CheckResult(name, residual, tol, passed, anchor))


def _rel(a, b) -> float:
    a, b = np.asarray(a), np.asarray(b)
    scale = np.maximum(np.abs(b), 1e-300)
    return float(np.max(np.abs(a - b) / scale))


def _convergence_order(coarse: float, fine: float) -> float:
    return math.log2(coarse / fine)


# --- polys ------------------------------------------------------------------


def _check_polys(c: _Collector, params: BarrierParams, rng: np.random.Generator):
    worst = 0.0
    for (br, n), want in TABLE.items():
        got = polys.hermite_like_coeffs(br, n).coef
        worst = max(worst, float(np.abs(got - np.asarray(want, dtype=complex)).max()))
    c.add("polys.table", worst, 1e-14, "H±_0..H±_4 = 1, 2ξ, 4ξ²∓2i, 8ξ³∓12iξ, 16ξ⁴∓48iξ²−12")

    for br in BRANCHES:
        res = max(float(np.abs(polys.ode_residual(br, n).coef).max()) / 2**n for n in range(21))
        c.add(f"polys.ode.{br}", res, 1e-10, "H'' ± 2iξH' ∓ 2inH = 0, n ≤ 20")

    z = rng.uniform(-3, 3, 16) + 1j * rng.uniform(-3, 3, 16)
    parity = 0.0
    for br in BRANCHES:
        for n in range(21):
            a = polys.hermite_like_eval(br, n, -z)
            b = (-1) ** n * polys.hermite_like_eval(br, n, z)
            parity = max(parity, float(np.abs(a - b).max() / np.abs(b).max()))
    c.add("polys.parity", parity, 1e-12, "H±_n(−ξ) = (−1)ⁿ H±_n(ξ)")

    conj = max(
        float(np.abs(np.conj(polys.hermite_like_coeffs(Branch.PLUS, n).coef) - polys.hermite_like_coeffs(Branch.MINUS, n).coef).max())
        for n in range(21)
    )
    c.add("polys.conjugation", conj, 1e-14, "conj(H±_n(ξ)) = H∓_n(ξ) for real ξ")

    rod = 0.0
    for br in BRANCHES:
        for n in range(9):
            rod = max(rod, float(np.abs(polys.hermite_like_rodrigues(br, n).coef - polys.hermite_like_coeffs(br, n).coef).max()))
    c.add("polys.rodrigues", rod, 1e-12, "H±_n = (∓i)ⁿ e^{∓iξ²} dⁿ/dξⁿ e^{±iξ²}, n ≤ 8")

    zz = rng.uniform(-1, 1, 16) + 1j * rng.uniform(-1, 1, 16)
    zz = 10 * zz / np.maximum(np.abs(zz), 1.0)
    horner = 0.0
    for br in BRANCHES:
        for n in range(21):
            a = polys.hermite_like_eval(br, n, zz)
            b = polys.hermite_like_coeffs(br, n)(zz)
            horner = max(horner, float(np.abs(a - b).max() / np.abs(b).max()))
    c.add("polys.recurrence_vs_coeffs", horner, 1e-12, "three-term recurrence = coefficient evaluation, |z| ≤ 10")

    deriv = 0.0
    for br in BRANCHES:
        for n in range(1, 21):
            a = polys.hermite_like_derivative(br, n, z)
            b = polys.hermite_like_coeffs(br, n).deriv()(z)
            deriv = max(deriv, float(np.abs(a - b).max() / np.abs(b).max()))
    c.add("polys.derivative", deriv, 1e-12, "dH±_n/dξ = 2n H±_{n−1}")

    rot = 0.0
    for br in BRANCHES:
        for n in range(21):
            a = polys.rotated_hermite(br, n, z)
            b = polys.hermite_like_eval(br, n, z)
            rot = max(rot, float(np.abs(a - b).max() / np.abs(b).max()))
    c.add("polys.rotation", rot, 1e-10, "H±_n(ξ) = (±i)^{n/2} H_n(e^{∓iπ/4} ξ)")

    gen = max(
        polys.generating_function_residual(br, zv, sv, 30)
        for br in BRANCHES
        for zv, sv in ((1.0, 0.5), (2.0, 1.0), (1 + 1j, 0.5j), (-2.0, -1.0))
    )
    c.add("polys.generating_function", gen, 1e-8, "e^{∓i(2sξ−s²)} = Σ H±_n (∓is)ⁿ/n!, N = 30, |s| ≤ 1, |ξ| ≤ 2")


# --- quad -------------------------------------------------------------------


def _check_quad(c: _Collector, params: BarrierParams, rng: np.random.Generator):
    for br in BRANCHES:
        block = np.array([[quad.fresnel_orthogonality(m, n, br) for n in range(8)] for m in range(8)])
        diag = np.array([quad.fresnel_norm(n, br) for n in range(8)])
        off = np.abs(block - np.diag(np.diag(block))).max()
        c.add(f"quad.orthogonality_offdiag.{br}", off, 1e-10, "∫ conj(H∓_m) H±_n e^{±iξ²} dξ = 0, m ≠ n")
        c.add(f"quad.orthogonality_diag.{br}", _rel(np.diag(block), diag), 1e-9, "diagonal = (±2i)ⁿ n! √(±iπ)")

    reg = 0.0
    for br in BRANCHES:
        h2 = polys.hermite_like_coeffs(br, 2).coef
        for p in (np.array([1.0 + 0j]), np.convolve(h2, h2)):
            val, est = quad.regularized_pairing(p, br)
            exact = quad.moment_integral(p, 2j * br.sign)
            reg = max(reg, abs(val - exact) / est)
    c.add("quad.regularized_limit", reg, 1.0, "damped pairing → closed-form Fresnel limit, within its error estimate")

    herm = 0.0
    for _ in range(8):
        coeffs = rng.normal(size=7) + 1j * rng.normal(size=7)
        a = complex(-rng.uniform(0.1, 2.0), rng.uniform(-2, 2))
        lhs = quad.moment_integral(np.conj(coeffs), np.conj(a))
        rhs = np.conj(quad.moment_integral(coeffs, a))
        herm = max(herm, abs(lhs - rhs) / abs(rhs))
    c.add("quad.hermiticity", herm, 1e-14, "pairing commutes with complex conjugation")

    scal = 0.0
    coeffs = np.array([1.0, 0.3j, -2.0, 0.0, 0.5 + 0.5j])
    for a in (-1 + 1j, 2j, -0.5 - 3j):
        base = quad.moment_integral(coeffs, a)
        for lam in (0.5, 2.0):
            scaled = coeffs * lam ** np.arange(coeffs.size)
            other = lam * quad.moment_integral(scaled, a * lam**2)
            scal = max(scal, abs(other - base) / abs(base))
    c.add("quad.scaling", scal, 1e-12, "x → λx covariance of the moment integral")


# --- eigen ------------------------------------------------------------------


def _check_eigen(c: _Collector, params: BarrierParams, rng: np.random.Generator):
    conj = max(abs(eigen.eigenvalue(Branch.MINUS, n, params) - np.conj(eigen.eigenvalue(Branch.PLUS, n, params))) for n in range(31))
    c.add("eigen.conjugate_spectrum", conj, 0.0, "E⁻_n = conj(E⁺_n)")

    ladder = max(
        abs(eigen.eigenvalue(br, n, params) - complex(params.V0, -br.sign * (n + 0.5) * params.hbar * params.gamma))
        for br in BRANCHES
        for n in range(31)
    )
    c.add("eigen.ladder", ladder, 0.0, "E±_n = V0 ∓ i(n+1/2)ħγ")

    orders = []
    grid = eigen.default_grid(params)
    fine = eigen.default_grid(params, points=16001)
    for rep, fn in (("x", eigen.hamiltonian_residual_x), ("p", eigen.hamiltonian_residual_p)):
        for br in BRANCHES:
            for n in range(7):
                if rep == "x":
                    r1 = fn(br, n, params, grid)
                    r2 = fn(br, n, params, fine)
                else:
                    L = 4.0 / params.beta_tilde
                    r1 = fn(br, n, params, np.linspace(-L, L, 8001))
                    r2 = fn(br, n, params, np.linspace(-L, L, 16001))
                c.add(f"eigen.hamiltonian_{rep}.{br}.n{n}", r1, 1e-4, "Ĥu = Eu by central differences, dx = 1e-3/β")
                orders.append(_convergence_order(r1, r2))
    c.add("eigen.hamiltonian_order", max(abs(o - 2.0) for o in orders), 0.2, "residual ratio under dx halving ≈ 4")

    for br in BRANCHES:
        for n in range(7):
            c.add(
                f"eigen.fourier_map.{br}.n{n}",
                eigen.fourier_map_residual(br, n, params),
                1e-6,
                "regularized Fourier transform of u±_n = ũ±_n including (−i)ⁿ",
            )

    x = rng.uniform(-4, 4, 64) / params.beta
    par = 0.0
    for br in BRANCHES:
        for n in range(7):
            a = eigen.eigenfunction_x(br, n, params, -x)
            b = (-1) ** n * eigen.eigenfunction_x(br, n, params, x)
            par = max(par, float(np.abs(a - b).max() / np.abs(b).max()))
    c.add("eigen.parity", par, 1e-12, "u±_n(−x) = (−1)ⁿ u±_n(x)")

    cont = 0.0
    for br in BRANCHES:
        for n in range(5):
            E, N, alpha = eigen.continued_from_oscillator(br, n, params)
            B = eigen.normalization_B(br, n, params)
            cont = max(
                cont,
                abs(E - eigen.eigenvalue(br, n, params)) / (params.hbar * params.gamma),
                abs(alpha - params.beta * np.exp(-1j * br.sign * np.pi / 4)) / params.beta,
                abs(N * N - B * B) / abs(B * B),
            )
    c.add("eigen.continuation", cont, 1e-12, "oscillator (E, N², α) continued by ω → ∓iγ")

    osc = OscillatorParams(m=params.m, omega=params.gamma, V0=params.V0, hbar=params.hbar)
    c.add("eigen.ho_gram", float(np.abs(eigen.ho_gram(7, osc) - np.eye(7)).max()), 1e-10, "oscillator eigenfunctions orthonormal")
    ladder = max(abs(eigen.ho_energy(n, osc) - (osc.V0 + (n + 0.5) * osc.hbar * osc.omega)) for n in range(31))
    c.add("eigen.ho_ladder", ladder, 0.0, "E_n = V0 + (n+1/2)ħω")


# --- dynamics ---------------------------------------------------------------


def _check_dynamics(c: _Collector, params: BarrierParams, rng: np.random.Generator):
    orders = []
    L = 4.0 / params.beta
    g1 = np.linspace(-L, L, 4001)
    g2 = np.linspace(-L, L, 8001)
    dt = 1e-4 / params.gamma
    for br in BRANCHES:
        t = br.sign * 0.5 / params.gamma
        for n in range(7):
            r1 = dynamics.continuity_residual(br, n, params, g1, t, dt)
            c.add(f"dynamics.continuity.{br}.n{n}", r1, 1e-4, "∂ρ/∂t + ∂j/∂x = 0")
            if n >= 1:
                r2 = dynamics.continuity_residual(br, n, params, g2, t, dt / 2)
                orders.append(_convergence_order(r1, r2))
    c.add("dynamics.continuity_order", max(abs(o - 2.0) for o in orders), 0.2, "residual ratio under (dx, dt) halving ≈ 4")

    S = dynamics.smatrix(8, params)
    c.add("dynamics.smatrix", float(np.abs(S - np.eye(8)).max()), 1e-9, "S_mn = ⟨u⁺_m|u⁻_n⟩ = δ_mn")

    life = 0.0
    for br in BRANCHES:
        for n in range(7):
            a = dynamics.mean_lifetime(br, n, params, "analytic")
            q = dynamics.mean_lifetime(br, n, params, "quadrature")
            life = max(life, abs(a[0] - q[0]) / abs(a[0]), abs(a[1] - q[1]) / a[1])
    c.add("dynamics.lifetime_quadrature", life, 1e-8, "⟨t⟩ = ±1/((2n+1)γ), Δt = 1/((2n+1)γ)")

    quant = [dynamics.mean_lifetime(Branch.PLUS, n, params)[1] * (2 * n + 1) for n in range(21)]
    c.add("dynamics.lifetime_quantization", (max(quant) - min(quant)) / quant[0], 1e-12, "Δt_n (2n+1) independent of n")

    c.add(
        "dynamics.growth_decay_balance",
        max(dynamics.growth_decay_balance(n, params) for n in range(7)),
        1e-10,
        "∫ρ⁻ dt over t<0 = ∫ρ⁺ dt over t>0",
    )

    norm = max(abs(dynamics.time_norm(br, n, params) - 1.0) for br in BRANCHES for n in range(4))
    c.add("dynamics.time_normalization", norm, 1e-10, "∫|T±_n|² dt = 1 on each half-line")
    c.add(
        "dynamics.combined_normalization",
        max(abs(dynamics.combined_time_norm(n, params) - 1.0) for n in range(4)),
        1e-10,
        "∫|T⁻_n + T⁺_n|² dt = 1",
    )

    t = rng.uniform(-2, 2, 100) / params.gamma
    x = rng.uniform(-4, 4, 100) / params.beta
    T, X = np.meshgrid(t, x, indexing="ij")
    P = X * params.beta / params.beta_tilde
    rec_x = rec_p = 0.0
    for br in BRANCHES:
        for n in range(7):
            a = np.conj(dynamics.wavefunction(br, n, params, -T, X))
            b = dynamics.wavefunction(br.flipped, n, params, T, X)
            rec_x = max(rec_x, float(np.abs(a - b).max() / max(np.abs(b).max(), 1e-300)))
            a = np.conj(dynamics.wavefunction_p(br, n, params, -T, -P))
            b = dynamics.wavefunction_p(br.flipped, n, params, T, P)
            rec_p = max(rec_p, float(np.abs(a - b).max() / max(np.abs(b).max(), 1e-300)))
    c.add("dynamics.reciprocity_x", rec_x, 1e-12, "conj(ψ±_n(−t, x)) = ψ∓_n(t, x)")
    c.add("dynamics.reciprocity_p", rec_p, 1e-12, "conj(ψ̃±_n(−t, −p)) = ψ̃∓_n(t, p)")

    sup = 0.0
    for n in range(7):
        sup = max(
            sup,
            float(np.abs(dynamics.wavefunction(Branch.PLUS, n, params, -np.abs(t), X[0])).max()),
            float(np.abs(dynamics.wavefunction(Branch.MINUS, n, params, np.abs(t) + 1e-9, X[0])).max()),
        )
    c.add("dynamics.support", sup, 0.0, "ψ⁺ = 0 for t < 0, ψ⁻ = 0 for t > 0")

    jump = max(
        abs(dynamics.time_factor(Branch.MINUS, n, params, 0.0, "combined") - dynamics.time_factor(Branch.PLUS, n, params, 0.0, "combined"))
        for n in range(7)
    )
    c.add("dynamics.continuity_at_zero", jump, 0.0, "T⁻_n(0) = T⁺_n(0)")

    rho_min = min(float(dynamics.density(br, n, params, T, X).min()) for br in BRANCHES for n in range(7))
    c.add("dynamics.density_nonnegative", max(0.0, -rho_min), 0.0, "ρ ≥ 0")

    xs = np.linspace(5, 40, 8) / params.beta
    out = 0.0
    for n in range(7):
        jp = dynamics.current(Branch.PLUS, n, params, 0.5 / params.gamma, np.concatenate([xs, -xs]))
        jm = dynamics.current(Branch.MINUS, n, params, -0.5 / params.gamma, np.concatenate([xs, -xs]))
        want = np.sign(np.concatenate([xs, -xs]))
        out += np.count_nonzero(np.sign(jp) != want) + np.count_nonzero(np.sign(jm) != -want)
    c.add("dynamics.flux_direction", float(out), 0.0, "j⁺ points outward, j⁻ inward at large |x|")


# --- spectra ----------------------------------------------------------------


def _check_spectra(c: _Collector, params: BarrierParams, rng: np.random.Generator):
    norm = max(abs(spectra.normalization(n, params)[0] - 1.0) for n in range(7))
    c.add("spectra.bw_normalization", norm, 1e-3, "∫ Breit-Wigner dE = 1 (adaptive window)")

    fw = 0.0
    for n in range(7):
        ls = spectra.line_shape(n, params)
        fw = max(fw, abs(spectra.measured_fwhm(ls) - 2 * spectra.half_width(n, params)) / ls.dE)
    c.add("spectra.bw_fwhm", fw, 1.0, "FWHM = 2Γ_n, in grid steps")

    dft = max(spectra.dft_cross_check(br, n, params) for br in BRANCHES for n in range(7))
    c.add("spectra.dft_cross_check", dft, 1e-3, "DFT of sampled T±_n = closed-form T̃±_n")

    unc = max(
        abs(spectra.uncertainty_product(n, params, br) - params.hbar / 2) / (params.hbar / 2)
        for br in BRANCHES
        for n in range(21)
    )
    c.add("spectra.uncertainty", unc, 1e-12, "Δt_n Γ_n = ħ/2")

    peak = ratio = quarter = real = 0.0
    for n in range(7):
        G = spectra.half_width(n, params)
        V0 = params.V0
        peak = max(peak, abs(spectra.combined_line_shape(n, params, V0) / spectra.breit_wigner(Branch.PLUS, n, params, V0) - 2.0) / 2.0)
        p0 = spectra.combined_line_shape(n, params, V0)
        quarter = max(
            quarter,
            abs(spectra.combined_line_shape(n, params, V0 + G) - p0 / 4) / (p0 / 4),
            abs(spectra.combined_line_shape(n, params, V0 - G) - p0 / 4) / (p0 / 4),
        )
        E = V0 + G * np.linspace(-20, 20, 401)
        s = spectra.combined_amplitude_sum(n, params, E)
        real = max(real, float(np.abs(s.imag).max() / np.abs(s).max()))
        ratio = max(ratio, float(np.abs(np.abs(s) ** 2 - spectra.combined_line_shape(n, params, E)).max() / p0))
    c.add("spectra.combined_peak", peak, 1e-12, "combined peak = 2 × Breit-Wigner peak")
    c.add("spectra.combined_quarter_width", quarter, 1e-12, "combined value at |E−V0| = Γ is peak/4")
    c.add("spectra.combined_real", real, 1e-12, "T̃⁻ + T̃⁺ is real")
    c.add("spectra.combined_square", ratio, 1e-12, "|T̃⁻ + T̃⁺|² = (2/π)Γ³/((E−V0)²+Γ²)²")
    cnorm = max(abs(spectra.normalization(n, params, "combined")[0] - 1.0) for n in range(7))
    c.add("spectra.combined_normalization", cnorm, 1e-3, "∫ combined line shape dE = 1")

    planch = 0.0
    for br in BRANCHES:
        for n in range(4):
            planch = max(planch, abs(dynamics.time_norm(br, n, params) - spectra.energy_norm(br, n, params)))
    c.add("spectra.plancherel", planch, 1e-6, "∫|T|² dt = ∫|T̃|² dE")

    side = 0.0
    for n in range(7):
        side += float(spectra.amplitude_pole(Branch.PLUS, n, params).imag >= 0)
        side += float(spectra.amplitude_pole(Branch.MINUS, n, params).imag <= 0)
    c.add("spectra.pole_side", side, 0.0, "T̃⁺ pole in lower, T̃⁻ pole in upper half-plane")

    E = params.V0 + spectra.half_width(0, params) * rng.uniform(-30, 30, 200)
    branch_gap = max(
        float(np.abs(spectra.breit_wigner(Branch.PLUS, n, params, E) - spectra.breit_wigner(Branch.MINUS, n, params, E)).max())
        for n in range(7)
    )
    c.add("spectra.branch_independence", branch_gap, 0.0, "|T̃⁺|² = |T̃⁻|²")
    modsq = max(
        float(
            np.abs(np.abs(spectra.energy_amplitude(br, n, params, E)) ** 2 - spectra.breit_wigner(br, n, params, E)).max()
            / spectra.breit_wigner(br, n, params, params.V0)
        )
        for br in BRANCHES
        for n in range(7)
    )
    c.add("spectra.breit_wigner_modulus", modsq, 1e-14, "|T̃±_n|² = Breit-Wigner")


_SUITE_FUNCS: dict[str, Callable] = {
    "polys": _check_polys,
    "quad": _check_quad,
    "eigen": _check_eigen,
    "dynamics": _check_dynamics,
    "spectra": _check_spectra,
}


def emit_verification(
    params: BarrierParams | None = None,
    tolerances: dict | None = None,
    suite: str | Iterable[str] = "all",
    seed: int = DEFAULT_SEED,
) -> VerificationReport:
    """Run the named suites and collect one entry per check.

    Parameters
    ----------
    params : barrier constants (natural units by default)
    tolerances : optional ``{check-name: tolerance}`` overrides
    suite : ``"all"``, one suite name, or an iterable of names
    seed : seed for the random sample points used by property checks

    Raises
    ------
    ValueError
        For an unknown suite, or an override naming no check that ran.
    """
    params = params or BarrierParams()
    if isinstance(suite, str):
        names = SUITES if suite == "all" else (suite,)
    else:
        names = tuple(suite)
    for name in names:
        if name not in _SUITE_FUNCS:
            raise ValueError(f"unknown suite {name!r}; choose from {SUITES + ('all',)}")
    c = _Collector(tolerances)
    for name in SUITES:
        if name in names:
            _SUITE_FUNCS[name](c, params, np.random.default_rng([seed, SUITES.index(name)]))
    unused = sorted(set(c.tolerances) - {e.name for e in c.entries})
    if unused:
        raise ValueError(f"tolerance override matches no check: {', '.join(unused)}")
    label = suite if isinstance(suite, str) else ",".join(n for n in SUITES if n in names)
    return VerificationReport(c.entries, asdict(params), label)
