"""Acceptance gate: one test per criterion, at the stated tolerances."""

import math
import subprocess
import sys

import numpy as np
import pytest

from parabar import dynamics, eigen, polys, quad, spectra
from parabar.eigen import BarrierParams
from parabar.polys import Branch

BRANCHES = (Branch.PLUS, Branch.MINUS)
criterion = pytest.mark.criterion

TABLE = {
    0: [1],
    1: [0, 2],
    2: [-2j, 0, 4],
    3: [0, -12j, 0, 8],
    4: [-12, 0, -48j, 0, 16],
}


@criterion(1, "polynomial table for n <= 4 reproduced exactly")
def test_polynomial_table():
    for b in BRANCHES:
        for n, coefs in TABLE.items():
            want = np.array(coefs, dtype=complex)
            if b is Branch.MINUS:
                want = np.conj(want)
            got = polys.hermite_like_coeffs(b, n).coef
            assert got.shape == want.shape
            assert np.abs(got - want).max() <= 1e-14


@criterion(2, "ODE residual coefficients < 1e-10 * 2^n for n <= 20")
def test_ode_identity():
    for b in BRANCHES:
        for n in range(21):
            assert np.abs(polys.ode_residual(b, n).coef).max() < 1e-10 * 2.0**n


@criterion(3, "8x8 Fresnel pairing block is diagonal with the closed-form norms")
def test_orthogonality():
    for b in BRANCHES:
        block = np.array([[quad.fresnel_orthogonality(m, n, b) for n in range(8)] for m in range(8)])
        diag = np.array([(2j * b.sign) ** n * math.factorial(n) * np.sqrt(1j * b.sign * np.pi) for n in range(8)])
        off = block - np.diag(np.diag(block))
        assert np.abs(off).max() < 1e-10
        assert np.max(np.abs(np.diag(block) - diag) / np.abs(diag)) < 1e-9


@criterion(4, "eigenvalue ladder exact and conjugate pairs bit-exact")
def test_eigenvalue_ladder():
    for params in (BarrierParams(), BarrierParams(gamma=2.0, hbar=0.5, V0=-1.25), BarrierParams(gamma=0.3, hbar=3.0)):
        for n in range(31):
            plus = eigen.eigenvalue(Branch.PLUS, n, params)
            minus = eigen.eigenvalue(Branch.MINUS, n, params)
            assert plus == complex(params.V0, -(n + 0.5) * params.hbar * params.gamma)
            assert minus == plus.conjugate()


@criterion(5, "Hamiltonian residual < 1e-4 at dx = 1e-3 on [-4, 4], order 2.0 +- 0.2")
def test_hamiltonian_residual():
    fine = np.linspace(-4, 4, 8001)
    coarse = np.linspace(-4, 4, 4001)
    for b in BRANCHES:
        for n in range(7):
            r_fine = eigen.hamiltonian_residual_x(b, n, grid=fine)
            assert r_fine < 1e-4
            assert eigen.hamiltonian_residual_p(b, n, grid=fine) < 1e-4
            order = math.log2(eigen.hamiltonian_residual_x(b, n, grid=coarse) / r_fine)
            assert abs(order - 2.0) <= 0.2


@criterion(6, "regularized Fourier transform reproduces the momentum eigenfunction to 1e-6")
def test_fourier_duality():
    for b in BRANCHES:
        for n in range(7):
            assert eigen.fourier_map_residual(b, n) < 1e-6


@criterion(7, "continuity residual < 1e-4 for n <= 6, second order")
def test_continuity():
    for b in BRANCHES:
        for n in range(7):
            assert dynamics.continuity_residual(b, n) < 1e-4
        coarse = dynamics.continuity_residual(b, 6, grid=np.linspace(-4, 4, 2001), dt=2e-4)
        fine = dynamics.continuity_residual(b, 6, grid=np.linspace(-4, 4, 4001), dt=1e-4)
        assert abs(math.log2(coarse / fine) - 2.0) <= 0.2


@criterion(8, "transition matrix 8x8 block equals the identity to 1e-9")
def test_transition_matrix():
    assert np.abs(dynamics.smatrix(8) - np.eye(8)).max() < 1e-9


@criterion(9, "lifetimes: analytic vs quadrature < 1e-8, spread * (2n+1) constant to 1e-12")
def test_lifetimes():
    base = dynamics.mean_lifetime(Branch.PLUS, 0)[1]
    for b in BRANCHES:
        for n in range(11):
            a = dynamics.mean_lifetime(b, n)
            q = dynamics.mean_lifetime(b, n, method="quadrature")
            assert abs(a[0] - q[0]) < 1e-8 and abs(a[1] - q[1]) < 1e-8
            assert abs(a[1] * (2 * n + 1) - base) <= 1e-12 * base


@criterion(10, "Breit-Wigner width, normalization and DFT cross-check")
def test_breit_wigner():
    for n in range(5):
        ls = spectra.line_shape(n, mode="separate")
        assert abs(spectra.measured_fwhm(ls) - 2 * (n + 0.5)) <= ls.dE
        total, _ = spectra.normalization(n)
        assert abs(total - 1.0) < 1e-3
    for b in BRANCHES:
        for n in range(3):
            assert spectra.dft_cross_check(b, n, window_T=40.0 / (2 * n + 1), samples=2**16) < 1e-3


@criterion(11, "lifetime spread times half-width equals hbar/2 to 1e-12")
def test_uncertainty_product():
    for gamma, hbar in ((1.0, 1.0), (2.0, 0.5), (0.25, 4.0)):
        p = BarrierParams(gamma=gamma, hbar=hbar)
        for n in range(21):
            assert abs(spectra.uncertainty_product(n, p) - hbar / 2) <= 1e-12 * hbar


@criterion(12, "combined line shape: peak, quarter-maximum at one half-width, real sum, unit mass")
def test_combined_line_shape():
    for n in range(4):
        G = spectra.half_width(n)
        peak = spectra.combined_line_shape(n, E=0.0)
        assert abs(peak - 2 * spectra.breit_wigner(Branch.PLUS, n, E=0.0)) <= 1e-12 * peak
        for E in (-G, G):
            assert abs(spectra.combined_line_shape(n, E=E) - peak / 4) <= 1e-12 * peak
        E = np.linspace(-30 * G, 30 * G, 1001)
        total = spectra.combined_amplitude_sum(n, E=E)
        assert np.abs(total.imag).max() <= 1e-12 * np.abs(total).max()
        mass, _ = spectra.normalization(n, mode="combined")
        assert abs(mass - 1.0) < 1e-3


@criterion(13, "reciprocity under time reversal in both representations")
def test_reciprocity():
    t = np.linspace(-3, 3, 100)[:, None]
    x = np.linspace(-4, 4, 100)[None, :]
    for b in BRANCHES:
        for n in range(7):
            lhs = np.conj(dynamics.wavefunction(b, n, None, -t, x))
            assert np.abs(lhs - dynamics.wavefunction(b.flipped, n, None, t, x)).max() < 1e-12
            lhs = np.conj(dynamics.wavefunction_p(b, n, None, -t, -x))
            assert np.abs(lhs - dynamics.wavefunction_p(b.flipped, n, None, t, x)).max() < 1e-12


@criterion(14, "oscillator baseline: Gram matrix identity to 1e-10, exact ladder")
def test_oscillator_baseline():
    assert np.abs(eigen.ho_gram(7) - np.eye(7)).max() < 1e-10
    for n in range(7):
        assert eigen.ho_energy(n) == n + 0.5


@criterion(15, "verify --suite all exits 0 with a byte-stable JSON report")
def test_end_to_end(tmp_path):
    outputs = []
    for name in ("first.json", "second.json"):
        path = tmp_path / name
        res = subprocess.run(
            [sys.executable, "-m", "parabar", "verify", "--suite", "all", "--json", str(path)],
            capture_output=True,
            text=True,
        )
        assert res.returncode == 0, res.stdout + res.stderr
        outputs.append(path.read_bytes())
    assert outputs[0] == outputs[1]
