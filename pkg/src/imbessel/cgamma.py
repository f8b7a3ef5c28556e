"""Complex log-gamma on the right half-plane and the Stirling coefficients.

The series evaluator needs log Gamma(1 + i*nu) to split the prefactor
(x/2)^{i*nu} / Gamma(1 + i*nu) into a unit phase and a real log-magnitude.
log_gamma is computed by the Stirling asymptotic series after an argument
shift, which keeps the error budget explicit: with eight Bernoulli terms at
|z| >= 10 the truncation error is below 1e-17 absolute, and the recurrence
shift adds only a few ulps per step.

The gamma_k Stirling coefficients of the reciprocal-Gamma series are stored
as exact rationals; they feed the a_k coefficient pipeline, not log_gamma.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError

__all__ = ["StirlingCoefficients", "STIRLING_COEFFICIENTS", "log_gamma",
           "recip_gamma_prefactor"]


@dataclass(frozen=True)
class StirlingCoefficients:
    """The first six coefficients of the reciprocal-Gamma asymptotic series."""

    gamma_k: tuple[Fraction, ...] = (
        Fraction(1),
        Fraction(-1, 12),
        Fraction(1, 288),
        Fraction(139, 51840),
        Fraction(-571, 2488320),
        Fraction(-163879, 209018880),
    )

    def as_floats(self) -> tuple[float, ...]:
        return tuple(float(g) for g in self.gamma_k)


STIRLING_COEFFICIENTS = StirlingCoefficients()

# Bernoulli-number coefficients B_{2j} / (2j (2j-1)) of the log-gamma Stirling
# series, j = 1..8. Exact rationals, converted once.
_LOG_GAMMA_TERMS = tuple(
    float(c) for c in (
        Fraction(1, 12),
        Fraction(-1, 360),
        Fraction(1, 1260),
        Fraction(-1, 1680),
        Fraction(1, 1188),
        Fraction(-691, 360360),
        Fraction(1, 156),
        Fraction(-3617, 122400),
    )
)

_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)

# Below this modulus the asymptotic series is not accurate enough; shift up.
_SHIFT_RADIUS = 10.0


def log_gamma(z: complex) -> complex:
    """Principal-branch log Gamma(z) for Re z > 0.

    Relative error is at or below 1e-14 on the band |Im z| <= 100 that the
    evaluator uses (z = 1 + i*nu). Raises DomainError for Re z <= 0.
    """
    z = complex(z)
    if not (z.real > 0.0):
        raise DomainError(f"log_gamma requires Re z > 0, got z = {z!r}")

    # Recurrence shift: log Gamma(z) = log Gamma(z + k) - sum log(z + j).
    shift = 0.0 + 0.0j
    while abs(z) < _SHIFT_RADIUS:
        shift += cmath.log(z)
        z += 1.0

    # Stirling series at the shifted argument.
    total = (z - 0.5) * cmath.log(z) - z + _HALF_LOG_TWO_PI
    zinv2 = 1.0 / (z * z)
    power = 1.0 / z
    for coeff in _LOG_GAMMA_TERMS:
        total += coeff * power
        power *= zinv2
    return total - shift


def recip_gamma_prefactor(nu: float, x: float) -> tuple[complex, float]:
    """Split (x/2)^{i*nu} / Gamma(1 + i*nu) into (unit_phase, log_magnitude).

    Returns w = i*nu*log(x/2) - log Gamma(1 + i*nu) as (exp(i Im w), Re w),
    so the full prefactor equals unit_phase * exp(log_magnitude) without ever
    forming the exponentially large modulus.
    """
    if not (nu > 0.0):
        raise DomainError(f"recip_gamma_prefactor requires nu > 0, got {nu!r}")
    if not (x > 0.0):
        raise DomainError(f"recip_gamma_prefactor requires x > 0, got {x!r}")
    w = 1j * nu * math.log(0.5 * x) - log_gamma(complex(1.0, nu))
    unit_phase = cmath.exp(1j * w.imag)
    return unit_phase, w.real
