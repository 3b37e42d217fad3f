"""Exact constructions and checks of independent events for geometric atoms.

The sample space is the nonnegative integers where atom k >= 1 carries mass
(1-r)*r^(k-1) for a ratio parameter 0 < r < 1 and atom 0 carries mass zero.
The package builds the families of mutually independent events that exist in
this space, verifies independence symbolically in r, at exact rational r, or
modulo a minimal polynomial, and checks the sharp thresholds below which no
other independent events exist.
"""

from .polynomials import Polynomial, Rational, RationalFunction
from .sets import EPSet, FiniteSet, SetSpec

__all__ = [
    "EPSet",
    "FiniteSet",
    "Polynomial",
    "Rational",
    "RationalFunction",
    "SetSpec",
]
