import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate

from parabar import eigen, quad
from parabar.eigen import BarrierParams, EigenState, OscillatorParams, SampledField
from parabar.errors import PreconditionError
from parabar.polys import Branch, hermite_like_coeffs

BRANCHES = [Branch.PLUS, Branch.MINUS]
UNITS = [BarrierParams(), BarrierParams(m=2.0, gamma=0.5, V0=1.0, hbar=0.7), BarrierParams(m=0.3, gamma=3.0, hbar=2.0)]
unit_values = st.floats(min_value=0.1, max_value=10.0)


def _exact_hamiltonian_defect(branch, n, params, x):
    """Ĥu − Eu with u'' from exact polynomial derivatives (no finite differences)."""
    s = branch.sign
    beta = params.beta
    H = hermite_like_coeffs(branch, n)
    xi = beta * x
    h, dh, d2h = H(xi), H.deriv()(xi), H.deriv(2)(xi)
    # u = B exp(isξ²/2) H(ξ); d/dx = β d/dξ
    g = np.exp(0.5j * s * xi**2)
    d2u = beta**2 * g * (d2h + 2j * s * xi * dh + (1j * s + (1j * s * xi) ** 2) * h)
    B = eigen.normalization_B(branch, n, params)
    u = B * g * h
    V = params.V0 - 0.5 * params.m * params.gamma**2 * x**2
    E = eigen.eigenvalue(branch, n, params)
    return -(params.hbar**2 / (2 * params.m)) * B * d2u + V * u - E * u, u


class TestParams:
    def test_defaults_are_natural_units(self):
        p = BarrierParams()
        assert (p.m, p.gamma, p.V0, p.hbar) == (1.0, 1.0, 0.0, 1.0)
        assert p.beta == 1.0 and p.beta_tilde == 1.0

    @pytest.mark.parametrize("field", ["m", "gamma", "hbar"])
    @pytest.mark.parametrize("bad", [0.0, -1.0, float("nan"), float("inf")])
    def test_rejects_nonpositive(self, field, bad):
        with pytest.raises(ValueError):
            BarrierParams(**{field: bad})

    def test_rejects_infinite_top(self):
        with pytest.raises(ValueError):
            BarrierParams(V0=float("inf"))

    def test_fields_are_plain_floats(self):
        p = BarrierParams(m=np.float64(2), gamma=3)
        assert type(p.m) is float and type(p.gamma) is float

    @settings(max_examples=30, deadline=None)
    @given(unit_values, unit_values, unit_values)
    def test_length_scales_are_reciprocal(self, m, gamma, hbar):
        p = BarrierParams(m=m, gamma=gamma, hbar=hbar)
        assert p.beta * p.beta_tilde * hbar == pytest.approx(1.0, rel=1e-14)

    def test_oscillator_params(self):
        assert OscillatorParams(m=4.0, omega=1.0, hbar=1.0).alpha == 2.0
        with pytest.raises(ValueError):
            OscillatorParams(omega=0.0)


class TestEigenvalues:
    @pytest.mark.parametrize("params", UNITS)
    def test_ladder(self, params):
        for n in range(10):
            E = eigen.eigenvalue(Branch.PLUS, n, params)
            assert E.real == params.V0
            assert E.imag == -(n + 0.5) * params.hbar * params.gamma

    @settings(max_examples=50, deadline=None)
    @given(st.integers(0, 30), unit_values, unit_values, st.floats(-5, 5))
    def test_conjugate_pair_bit_exact(self, n, gamma, hbar, V0):
        p = BarrierParams(gamma=gamma, hbar=hbar, V0=V0)
        assert eigen.eigenvalue(Branch.MINUS, n, p) == eigen.eigenvalue(Branch.PLUS, n, p).conjugate()

    def test_natural_units_ground_state(self):
        assert eigen.eigenvalue(Branch.PLUS, 0, BarrierParams(V0=1.0)) == complex(1.0, -0.5)

    def test_negative_degree(self):
        with pytest.raises(ValueError):
            eigen.eigenvalue(Branch.PLUS, -1)


class TestNormalization:
    @pytest.mark.parametrize("branch", BRANCHES)
    @pytest.mark.parametrize("n", range(8))
    def test_pairing_is_unity(self, branch, n):
        # conj(u∓_n) u±_n integrates to one
        p = BarrierParams(m=1.3, gamma=0.8, hbar=1.1)
        B = eigen.normalization_B(branch, n, p)
        Bd = eigen.normalization_B(branch.flipped, n, p)
        val = np.conj(Bd) * B * quad.fresnel_norm(n, branch) / p.beta
        assert val == pytest.approx(1.0, abs=1e-13)

    def test_ground_state_value(self):
        # (1/√(iπ))^{1/2} = π^{-1/4} e^{-iπ/8}
        want = math.pi**-0.25 * np.exp(-1j * math.pi / 8)
        assert eigen.normalization_B(Branch.PLUS, 0) == pytest.approx(want, abs=1e-15)

    @pytest.mark.parametrize("branch", BRANCHES)
    def test_momentum_ground_state_oracle(self, branch):
        # transform of exp(±ix²/2) is √(±i) exp(∓ip²/2) in natural units
        want = eigen.normalization_B(branch, 0) * np.sqrt(1j * branch.sign)
        assert eigen.normalization_B_tilde(branch, 0) == pytest.approx(want, abs=1e-15)


class TestEigenfunctions:
    @pytest.mark.parametrize("params", UNITS)
    @pytest.mark.parametrize("branch", BRANCHES)
    @pytest.mark.parametrize("n", range(7))
    def test_exact_derivative_oracle(self, params, branch, n):
        x = np.linspace(-4, 4, 201) / params.beta
        defect, u = _exact_hamiltonian_defect(branch, n, params, x)
        scale = params.hbar * params.gamma * np.abs(u).max() * max(1.0, abs(params.V0))
        assert np.abs(defect).max() < 1e-11 * scale * 2**n

    @settings(max_examples=40, deadline=None)
    @given(st.sampled_from(BRANCHES), st.integers(0, 12), st.floats(-3, 3))
    def test_conjugation_swaps_branch(self, branch, n, x):
        a = np.conj(eigen.eigenfunction_x(branch, n, None, x))
        b = eigen.eigenfunction_x(branch.flipped, n, None, x)
        # principal roots may differ in sign, the modulus cannot
        assert abs(a) == pytest.approx(abs(b), rel=1e-12, abs=1e-300)

    def test_eigenstate_build(self):
        s = EigenState.build("minus", 3)
        assert s.E == eigen.eigenvalue(Branch.MINUS, 3)
        assert s(0.4) == eigen.eigenfunction_x(Branch.MINUS, 3, None, 0.4)

    def test_sampled_field(self):
        f = SampledField.sample(np.sin, -1.0, 1.0, 5)
        np.testing.assert_allclose(f.x, np.linspace(-1, 1, 5))
        np.testing.assert_allclose(f.values, np.sin(f.x))
        with pytest.raises(ValueError):
            SampledField.sample(np.sin, 1.0, 1.0, 5)


class TestHamiltonianResidual:
    @pytest.mark.parametrize("branch", BRANCHES)
    @pytest.mark.parametrize("n", range(7))
    def test_default_grid_below_threshold(self, branch, n):
        assert eigen.hamiltonian_residual_x(branch, n) < 1e-4
        assert eigen.hamiltonian_residual_p(branch, n) < 1e-4

    def test_ground_state_leading_error_term(self):
        # three-point stencil error on exp(ix²/2) is dx²·x⁴/24 at leading order
        r = eigen.hamiltonian_residual_x(Branch.PLUS, 0)
        assert r == pytest.approx(1e-6 * 4**4 / 24, rel=0.1)

    @pytest.mark.parametrize("n", [0, 3, 6])
    def test_second_order_convergence(self, n):
        coarse = eigen.hamiltonian_residual_x(Branch.PLUS, n, grid=eigen.default_grid(points=4001))
        fine = eigen.hamiltonian_residual_x(Branch.PLUS, n, grid=eigen.default_grid(points=8001))
        assert math.log2(coarse / fine) == pytest.approx(2.0, abs=0.2)

    @pytest.mark.parametrize("params", UNITS)
    def test_unit_independent(self, params):
        assert eigen.hamiltonian_residual_x(Branch.MINUS, 2, params) < 1e-4
        assert eigen.hamiltonian_residual_p(Branch.MINUS, 2, params) < 1e-4

    def test_coarse_grid_rejected(self):
        with pytest.raises(PreconditionError):
            eigen.hamiltonian_residual_x(Branch.PLUS, 0, grid=np.linspace(-4, 4, 101))

    def test_nonuniform_grid_rejected(self):
        with pytest.raises(PreconditionError):
            eigen.hamiltonian_residual_x(Branch.PLUS, 0, grid=np.linspace(-1, 1, 2001) ** 3)


class TestFourierMap:
    @pytest.mark.parametrize("branch", BRANCHES)
    @pytest.mark.parametrize("n", range(7))
    def test_residual(self, branch, n):
        assert eigen.fourier_map_residual(branch, n) < 1e-6

    @pytest.mark.parametrize("params", UNITS)
    def test_residual_in_other_units(self, params):
        assert eigen.fourier_map_residual(Branch.PLUS, 3, params) < 1e-6

    def test_damped_transform_against_quadrature(self):
        # independent oracle for one damping step
        p, eps = 0.7, 0.3
        u = lambda x: eigen.eigenfunction_x(Branch.PLUS, 2, None, x) * np.exp(-0.5 * eps * x * x - 1j * p * x)
        re = integrate.quad(lambda x: u(x).real, -np.inf, np.inf, epsabs=1e-13, limit=400)[0]
        im = integrate.quad(lambda x: u(x).imag, -np.inf, np.inf, epsabs=1e-13, limit=400)[0]
        want = complex(re, im) / math.sqrt(2 * math.pi)
        h = hermite_like_coeffs(Branch.PLUS, 2).coef
        one_step = eigen.normalization_B(Branch.PLUS, 2) / math.sqrt(2 * math.pi) * quad.moment_integral(
            h, 1j - eps, -1j * p
        )
        assert one_step == pytest.approx(want, abs=1e-10)

    def test_phase_factor_matters(self):
        # dropping the (−i)ⁿ phase would break the map for odd n
        p = np.linspace(-2, 2, 9)
        got, _ = eigen.regularized_fourier(Branch.MINUS, 1, None, p)
        want = eigen.eigenfunction_p(Branch.MINUS, 1, None, p)
        np.testing.assert_allclose(got, want, atol=1e-8)
        assert np.abs(got + want).max() > 0.1

    def test_degree_limit(self):
        with pytest.raises(PreconditionError):
            eigen.fourier_map_residual(Branch.PLUS, 11)


class TestOscillatorBaseline:
    def test_gram_is_identity(self):
        np.testing.assert_allclose(eigen.ho_gram(7), np.eye(7), atol=1e-10)

    def test_overlap_against_quadrature(self):
        _, u2 = eigen.ho_eigenpair(2)
        _, u4 = eigen.ho_eigenpair(4)
        val = integrate.quad(lambda x: u2(x) * u2(x), -np.inf, np.inf)[0]
        assert val == pytest.approx(1.0, abs=1e-10)
        cross = integrate.quad(lambda x: u2(x) * u4(x), -np.inf, np.inf)[0]
        assert abs(cross) < 1e-10

    def test_energy_ladder(self):
        p = OscillatorParams(omega=2.0, hbar=0.5, V0=1.0)
        assert [eigen.ho_energy(n, p) for n in range(4)] == [1.5, 2.5, 3.5, 4.5]

    @pytest.mark.parametrize("branch", BRANCHES)
    @pytest.mark.parametrize("n", range(8))
    def test_continuation_reproduces_barrier(self, branch, n):
        p = BarrierParams(m=1.5, gamma=0.7, V0=0.2, hbar=1.2)
        E, N, alpha = eigen.continued_from_oscillator(branch, n, p)
        assert E == pytest.approx(eigen.eigenvalue(branch, n, p), abs=1e-14)
        # α² = ∓iβ², and the normalization agrees up to the root's sign
        assert alpha**2 == pytest.approx(-1j * branch.sign * p.beta**2, abs=1e-14)
        assert N**2 == pytest.approx(eigen.normalization_B(branch, n, p) ** 2, rel=1e-12)
