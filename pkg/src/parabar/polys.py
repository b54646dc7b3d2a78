"""Complex Hermite-like polynomials H±_n and the real Hermite baseline.

``H±_n`` are the polynomial factors of the barrier eigenfunctions,
``u±_n(ξ) = exp(±iξ²/2) H±_n(ξ)``. They solve

    H'' ± 2iξ H' ∓ 2in H = 0

and are normalized so the coefficient of ξⁿ is exactly 2ⁿ. The first few::

    H±_0 = 1,  H±_1 = 2ξ,  H±_2 = 4ξ² ∓ 2i,
    H±_3 = 8ξ³ ∓ 12iξ,  H±_4 = 16ξ⁴ ∓ 48iξ² − 12

Coefficients are built exactly (rational arithmetic) from the power-series
recurrence of the reduced equation and only converted to floating point at
the end.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from functools import lru_cache

import numpy as np
from numpy.polynomial import Polynomial
from numpy.polynomial import hermite as _herm

from parabar.errors import CapacityError

DEGREE_CAP = 30

# Dense complex coefficient vector, index k holds the coefficient of ξᵏ.
ComplexPolynomial = Polynomial


class Branch(enum.Enum):
    """Outgoing (``PLUS``) or incoming (``MINUS``) solution family.

    ``PLUS`` takes the upper sign of every ± / ∓ pair.
    """

    PLUS = 1
    MINUS = -1

    @property
    def sign(self) -> int:
        return self.value

    @property
    def flipped(self) -> "Branch":
        return Branch.MINUS if self is Branch.PLUS else Branch.PLUS

    @classmethod
    def parse(cls, text) -> "Branch":
        if isinstance(text, Branch):
            return text
        key = str(text).strip().lower()
        if key in ("plus", "+", "+1", "1", "outgoing"):
            return cls.PLUS
        if key in ("minus", "-", "-1", "incoming"):
            return cls.MINUS
        raise ValueError(f"unknown branch {text!r}; expected 'plus' or 'minus'")

    def __str__(self) -> str:
        return self.name.lower()


def _check_degree(n: int, cap: int = DEGREE_CAP) -> None:
    if n < 0:
        raise ValueError(f"degree must be non-negative, got {n}")
    if n > cap:
        raise CapacityError(f"degree {n} exceeds cap {cap}")


@lru_cache(maxsize=None)
def _series_coeffs(sign: int, n: int) -> tuple:
    # Terminating series in ξ^k, k ≡ n (mod 2):
    #   (k+2)(k+1) c_{k+2} = ±2i(n-k) c_k
    # Each c_k is a real rational times a power of (±i); track both separately.
    k0 = n % 2
    mags = {k0: Fraction(1)}
    for k in range(k0, n - 1, 2):
        mags[k + 2] = mags[k] * Fraction(2 * (n - k), (k + 2) * (k + 1))
    # Rescale to leading coefficient 2^n. Then c_k = 2^n r_k / r_n · (±i)^{-(n-k)/2}.
    scale = Fraction(2**n) / mags[n]
    unit = complex(0, -sign)  # (±i)^{-1} = ∓i
    coeffs = [0j] * (n + 1)
    for k, r in mags.items():
        val = scale * r
        coeffs[k] = complex(float(val), 0.0) * (unit ** ((n - k) // 2))
    return tuple(coeffs)


def hermite_like_coeffs(branch: Branch, n: int) -> Polynomial:
    """Exact coefficients of H±_n with leading coefficient 2ⁿ.

    Raises
    ------
    CapacityError
        If ``n`` exceeds :data:`DEGREE_CAP`.
    """
    branch = Branch.parse(branch)
    _check_degree(n)
    return Polynomial(np.array(_series_coeffs(branch.sign, n), dtype=complex))


def hermite_like_rodrigues(branch: Branch, n: int) -> Polynomial:
    """H±_n from ``(∓i)ⁿ exp(∓iξ²) dⁿ/dξⁿ exp(±iξ²)``.

    Independent construction used as a cross-check of the series path. The
    n-th derivative is ``P_n(ξ) exp(±iξ²)`` with ``P_{k+1} = P_k' ± 2iξ P_k``.
    """
    branch = Branch.parse(branch)
    _check_degree(n)
    s = branch.sign
    p = Polynomial([1.0 + 0j])
    shift = Polynomial([0j, 2j * s])
    for _ in range(n):
        p = p.deriv() + shift * p
    return Polynomial(((-1j * s) ** n) * p.coef)


def hermite_like_eval(branch: Branch, n: int, z):
    """Evaluate H±_n(z) by the upward recurrence.

    ``H±_{k+1} = 2z H±_k ∓ 2ik H±_{k-1}``; ``z`` may be a scalar or array.
    """
    branch = Branch.parse(branch)
    _check_degree(n)
    z = np.asarray(z, dtype=complex)
    prev = np.ones_like(z)
    if n == 0:
        return prev[()] if prev.ndim == 0 else prev
    cur = 2.0 * z
    s = branch.sign
    for k in range(1, n):
        prev, cur = cur, 2.0 * z * cur - 2j * s * k * prev
    return cur[()] if cur.ndim == 0 else cur


def hermite_like_pair(branch: Branch, n: int, z):
    """Return ``(H±_n(z), H±_{n-1}(z))`` from one recurrence sweep.

    For ``n = 0`` the second element is zero.
    """
    branch = Branch.parse(branch)
    _check_degree(n)
    z = np.asarray(z, dtype=complex)
    if n == 0:
        return np.ones_like(z), np.zeros_like(z)
    prev, cur = np.ones_like(z), 2.0 * z
    s = branch.sign
    for k in range(1, n):
        prev, cur = cur, 2.0 * z * cur - 2j * s * k * prev
    return cur, prev


def hermite_like_derivative(branch: Branch, n: int, z):
    """dH±_n/dz = 2n H±_{n-1}(z); zero for n = 0."""
    if n == 0:
        z = np.asarray(z, dtype=complex)
        out = np.zeros_like(z)
        return out[()] if out.ndim == 0 else out
    return 2 * n * hermite_like_eval(branch, n - 1, z)


def generating_function_residual(branch: Branch, z: complex, s: complex, N: int) -> float:
    """|exp(∓i(2sz − s²)) − Σ_{n≤N} H±_n(z)(∓is)ⁿ/n!|."""
    branch = Branch.parse(branch)
    _check_degree(N)
    sg = branch.sign
    exact = np.exp(-1j * sg * (2 * s * z - s * s))
    step = -1j * sg * s
    terms = [hermite_like_eval(branch, k, z) * step**k / math.factorial(k) for k in range(N + 1)]
    total = complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))
    return float(abs(exact - total))


def ode_residual(branch: Branch, n: int) -> Polynomial:
    """Coefficients of ``H'' ± 2iξ H' ∓ 2in H`` for H = H±_n (ideally zero)."""
    branch = Branch.parse(branch)
    h = hermite_like_coeffs(branch, n)
    s = branch.sign
    xi = Polynomial([0j, 1.0])
    return h.deriv(2) + 2j * s * xi * h.deriv() - 2j * s * n * h


def rotated_hermite(branch: Branch, n: int, z):
    """H±_n(z) through ``(±i)^{n/2} H_n(e^{∓iπ/4} z)`` with principal powers."""
    branch = Branch.parse(branch)
    _check_degree(n)
    s = branch.sign
    z = np.asarray(z, dtype=complex)
    prefactor = np.exp(0.5 * n * np.log(1j * s))
    c = np.zeros(n + 1)
    c[n] = 1.0
    out = prefactor * _herm.hermval(np.exp(-1j * s * np.pi / 4) * z, c)
    return out[()] if np.ndim(out) == 0 else out


def hermite_eval(n: int, x):
    """Physicists' Hermite polynomial H_n(x) (leading coefficient 2ⁿ)."""
    _check_degree(n)
    c = np.zeros(n + 1)
    c[n] = 1.0
    out = _herm.hermval(np.asarray(x, dtype=float), c)
    return out[()] if np.ndim(out) == 0 else out


def hermite_coeffs(n: int) -> Polynomial:
    """Power-basis coefficients of the real H_n."""
    _check_degree(n)
    c = np.zeros(n + 1)
    c[n] = 1.0
    return Polynomial(_herm.herm2poly(c))


def coefficient_table(branch: Branch, n_max: int):
    """Yield ``(n, k, re, im)`` rows of H±_n for n = 0..n_max."""
    branch = Branch.parse(branch)
    for n in range(n_max + 1):
        for k, c in enumerate(hermite_like_coeffs(branch, n).coef):
            yield n, k, float(c.real), float(c.imag)
