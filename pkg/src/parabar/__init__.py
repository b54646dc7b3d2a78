"""Resonance states of the inverted oscillator ``V(x) = V0 − mγ²x²/2``.

Complex eigenvalues and generalized eigenfunctions, growth and decay time
factors, Breit-Wigner energy distributions, and numerical checks of the
identities relating them.
"""

from parabar.errors import (
    CapacityError,
    DivergentIntegralError,
    NumericalInstabilityError,
    PreconditionError,
)
from parabar.polys import Branch, DEGREE_CAP
from parabar.eigen import BarrierParams, OscillatorParams, EigenState, SampledField

__version__ = "0.1.0"

__all__ = [
    "Branch",
    "DEGREE_CAP",
    "BarrierParams",
    "OscillatorParams",
    "EigenState",
    "SampledField",
    "CapacityError",
    "DivergentIntegralError",
    "NumericalInstabilityError",
    "PreconditionError",
]
