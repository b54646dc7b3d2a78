"""Closed-form integrals of polynomial × complex Gaussian over the real line.

The integrand convention throughout is ``p(x) exp(a x²/2 + b x)``. For
``Re(a) < 0`` the integral converges absolutely; for purely imaginary ``a``
(the Fresnel case) the closed form is the limit from ``Re(a) < 0``, which is
what the distributional pairing of the barrier eigenfunctions means.

Even moments::

    ∫ x^{2j} exp(a x²/2) dx = (2j−1)!! √(2π) (−a)^{−(2j+1)/2}

with principal powers and ``(−1)!! = 1``. Odd moments are never formed.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np
from numpy.polynomial import Polynomial

from parabar.errors import DivergentIntegralError, NumericalInstabilityError
from parabar.polys import Branch, hermite_like_coeffs, _check_degree

SQRT_2PI = math.sqrt(2.0 * math.pi)
DEFAULT_EPS_SCHEDULE = (1e-1, 5e-2, 2.5e-2, 1.25e-2)


def _coefs(p) -> np.ndarray:
    if isinstance(p, Polynomial):
        return np.asarray(p.coef, dtype=complex)
    return np.atleast_1d(np.asarray(p, dtype=complex))


def _check_exponent(a: complex) -> complex:
    a = complex(a)
    if a == 0:
        raise DivergentIntegralError("Gaussian exponent a = 0: integral diverges")
    if a.real > 0:
        raise DivergentIntegralError(f"Re(a) = {a.real} > 0: integral diverges")
    return a


def double_factorial(k: int) -> int:
    """k!! with the convention (−1)!! = 0!! = 1."""
    if k <= 0:
        return 1
    return math.prod(range(k, 0, -2))


def _csum(values) -> complex:
    values = list(values)
    return complex(math.fsum(v.real for v in values), math.fsum(v.imag for v in values))


def moment_integral(p, a: complex, b: complex = 0.0) -> complex:
    """∫ p(x) exp(a x²/2 + b x) dx over the real line.

    Parameters
    ----------
    p : Polynomial or sequence of complex
        Power-basis coefficients, index k multiplies xᵏ.
    a : complex
        Quadratic exponent. ``Re(a) <= 0`` and ``a != 0``.
    b : complex
        Linear exponent, handled by completing the square.

    Notes
    -----
    With ``b = 0`` the odd coefficients are skipped, so odd polynomials give
    exactly zero. Terms are summed with :func:`math.fsum`, which keeps
    products of Gaussian-integer coefficients with powers of ``1/(−a)``
    exact whenever they are representable.
    """
    a = _check_exponent(a)
    c = _coefs(p)
    if b != 0:
        # a x²/2 + b x = a (x − μ)²/2 − b²/(2a),  μ = −b/a
        mu = -complex(b) / a
        shifted = Polynomial(c)(Polynomial([mu, 1.0]))
        c = _coefs(shifted)
        prefactor = np.exp(-complex(b) ** 2 / (2.0 * a))
    else:
        prefactor = 1.0
    q = 1.0 / (-a)
    terms = []
    for k in range(0, c.size, 2):
        if c[k] == 0:
            continue
        terms.append(complex(c[k]) * double_factorial(k - 1) * (q ** (k // 2)))
    if not terms:
        return 0j
    base = SQRT_2PI * (-a) ** -0.5
    return complex(prefactor * base * _csum(terms))


def gaussian_moment(k: int, a: complex) -> complex:
    """Single moment ∫ x^k exp(a x²/2) dx."""
    c = np.zeros(k + 1, dtype=complex)
    c[k] = 1.0
    return moment_integral(c, a)


def richardson_extrapolate(eps: Sequence[float], values: Sequence[complex], degree: int | None = None):
    """Extrapolate ``values(eps)`` to ``eps → 0`` with Neville's scheme.

    Parameters
    ----------
    eps : strictly decreasing positive step values
    values : function values at those steps
    degree : polynomial degree in ``eps`` (default: all points, ``len(eps) − 1``)

    Returns
    -------
    (value, error_estimate)
        The estimate is the difference between the last two diagonal entries
        of the tableau.
    """
    eps = np.asarray(eps, dtype=float)
    values = np.asarray(values, dtype=complex)
    if eps.ndim != 1 or eps.size < 2 or eps.size != values.size:
        raise ValueError("need matching 1-D eps and values with at least two points")
    if np.any(eps <= 0) or np.any(np.diff(eps) >= 0):
        raise ValueError("eps schedule must be positive and strictly decreasing")
    if degree is None:
        degree = eps.size - 1
    if not 1 <= degree <= eps.size - 1:
        raise ValueError(f"degree must be in [1, {eps.size - 1}]")
    # use the smallest degree+1 steps
    h = eps[-(degree + 1):]
    t = list(values[-(degree + 1):])
    diagonal = [t[-1]]
    for m in range(1, degree + 1):
        t = [
            (h[i + m] * t[i] - h[i] * t[i + 1]) / (h[i + m] - h[i])
            for i in range(len(t) - 1)
        ]
        diagonal.append(t[-1])
    value = complex(diagonal[-1])
    err = float(abs(diagonal[-1] - diagonal[-2]))
    if not np.isfinite(value) or not np.isfinite(err):
        raise NumericalInstabilityError("extrapolation produced a non-finite value")
    return value, err


def regularized_pairing(
    p,
    sign: int | Branch = 1,
    eps_schedule: Sequence[float] = DEFAULT_EPS_SCHEDULE,
    beta: float = 1.0,
    degree: int | None = None,
):
    """Fresnel pairing ``∫ p(x) exp(±iβ²x²) dx`` by damping and extrapolation.

    Evaluates the absolutely convergent integral with weight
    ``exp((±iβ² − ε) x²)`` for each ε in ``eps_schedule`` and extrapolates
    to ε → 0⁺.

    Returns
    -------
    (value, error_estimate)

    Raises
    ------
    ValueError
        If the schedule is not strictly decreasing or has fewer than 3 steps.
    NumericalInstabilityError
        If successive extrapolants disagree by more than the value itself.
    """
    s = sign.sign if isinstance(sign, Branch) else (1 if sign > 0 else -1)
    eps = np.asarray(eps_schedule, dtype=float)
    if eps.size < 3:
        raise ValueError("eps schedule needs at least 3 entries")
    if np.any(eps <= 0) or np.any(np.diff(eps) >= 0):
        raise ValueError("eps schedule must be positive and strictly decreasing")
    vals = [moment_integral(p, 2.0 * (1j * s * beta**2 - e)) for e in eps]
    value, err = richardson_extrapolate(eps, vals, degree)
    if err > max(abs(value), 1e-300) and abs(value) > 0:
        raise NumericalInstabilityError(
            f"extrapolation did not settle: estimate {value}, spread {err}"
        )
    return value, err


def fresnel_orthogonality(m: int, n: int, branch: Branch) -> complex:
    """∫ conj(H∓_m) H±_n exp(±iξ²) dξ.

    For real ξ, conj(H∓_m) = H±_m, so the integrand is the product
    polynomial H±_m H±_n against the Fresnel weight.
    """
    branch = Branch.parse(branch)
    _check_degree(m)
    _check_degree(n)
    hm = np.conj(hermite_like_coeffs(branch.flipped, m).coef)
    hn = hermite_like_coeffs(branch, n).coef
    return moment_integral(np.convolve(hm, hn), 2j * branch.sign)


def fresnel_norm(n: int, branch: Branch) -> complex:
    """Closed-form diagonal ``(±2i)ⁿ n! √(±iπ)`` of the Fresnel pairing."""
    branch = Branch.parse(branch)
    s = branch.sign
    return (2j * s) ** n * math.factorial(n) * np.sqrt(1j * s * np.pi)
