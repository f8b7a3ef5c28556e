"""Principal-branch Lambert W on the nonnegative reals.

Solves w * e^w = z for w >= 0, the leading-order zero equation
xi * log(lambda * xi) = m after the substitution xi = m / W(lambda * m).
Halley iteration from a piecewise initial guess converges cubically; the
solved residual is returned alongside w so callers can assert solver health.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError

__all__ = ["WResult", "lambert_w0", "w_asymptotic"]

_EPS = math.ulp(1.0)
_INV_E = 1.0 / math.e
_MAX_ITER = 50


@dataclass(frozen=True)
class WResult:
    """Solution w of w * e^w = z together with the defect |w e^w - z|."""

    w: float
    residual: float


def _initial_guess(z: float) -> float:
    # Series start below 1/e, log asymptote above e, and a linear blend of
    # the two endpoint guesses across the middle band where neither form is
    # valid on its own (log log z is undefined for z <= 1).
    if z < _INV_E:
        return z * (1.0 - z) + z
    if z >= math.e:
        log_z = math.log(z)
        return log_z - math.log(log_z)
    lo = _INV_E * (1.0 - _INV_E) + _INV_E
    hi = 1.0
    t = (z - _INV_E) / (math.e - _INV_E)
    return lo + t * (hi - lo)


def lambert_w0(z: float) -> WResult:
    """Principal branch W(z) for z >= 0 by Halley iteration.

    Terminates when the step falls below 4 * eps * (1 + |w|); raises
    DomainError for negative z and ConvergenceError if 50 iterations do
    not suffice (unreachable for valid input, kept as a guard).
    """
    z = float(z)
    if z < 0.0:
        raise DomainError(f"lambert_w0 requires z >= 0, got {z!r}")
    if z == 0.0:
        return WResult(0.0, 0.0)

    w = _initial_guess(z)
    for _ in range(_MAX_ITER):
        ew = math.exp(w)
        f = w * ew - z
        if f == 0.0:
            break
        # Halley step for f(w) = w e^w - z; w >= 0 keeps w + 1 away from 0.
        denom = ew * (w + 1.0) - f * (w + 2.0) / (2.0 * (w + 1.0))
        step = f / denom
        w -= step
        if abs(step) <= 4.0 * _EPS * (1.0 + abs(w)):
            break
    else:
        raise ConvergenceError(f"lambert_w0 did not converge for z = {z!r}")

    return WResult(w, abs(w * math.exp(w) - z))


def w_asymptotic(z: float, terms: int) -> float:
    """Two- or three-term large-z expansion of W(z).

    W(z) ~ log z - log log z + log log z / log z for z > e; `terms` selects
    the 2- or 3-term truncation. Raises DomainError for z <= e, where
    log log z is not positive.
    """
    if terms not in (2, 3):
        raise DomainError(f"w_asymptotic terms must be 2 or 3, got {terms!r}")
    z = float(z)
    if not (z > math.e):
        raise DomainError(f"w_asymptotic requires z > e, got {z!r}")
    log_z = math.log(z)
    log_log_z = math.log(log_z)
    value = log_z - log_log_z
    if terms == 3:
        value += log_log_z / log_z
    return value
