"""Power-series evaluation of the Bessel functions of imaginary order.

I_{i nu}(x) and J_{i nu}(x) are computed from their ascending series with the
prefactor (x/2)^{i nu} / Gamma(1 + i nu) kept in split (phase, log-magnitude)
form, and the four real combinations are assembled in scaled form:

    L = (pi / sinh(pi nu)) * Re I_{i nu}(x)
    K = -(pi / sinh(pi nu)) * Im I_{i nu}(x)
    F = Re J_{i nu}(x) / cosh(pi nu / 2)
    G = Im J_{i nu}(x) / sinh(pi nu / 2)

The G combination is the real variant of the usual difference definition,
which as commonly printed is purely imaginary; dividing by i gives this form
and leaves the nu-zeros unchanged.

Zeros in nu are located on the unit-normalized value unit_phase * series_sum:
the positive factors exp(log_scale) and the hyperbolic weights can neither
create nor destroy sign changes, and stripping them avoids underflow at
large nu.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cgamma import recip_gamma_prefactor
from .errors import ConvergenceError, DomainError

__all__ = ["ScaledReal", "ScaledComplex", "series_sum", "eval_I_scaled",
           "eval_J_scaled", "eval_function", "detection_value", "NU_MIN"]

# Below this order the sinh factors of L, K, G degenerate; the studied zeros
# all sit well above it.
NU_MIN = 1e-3

# Switch the hyperbolic weights to log-space evaluation at this order.
_LOG_SPACE_NU = 20.0

_DEFAULT_TOL = 1e-18
_MAX_TERMS = 500

_MANTISSA_LO = 1.0 / math.e
_MANTISSA_HI = math.e

_VALID_TAGS = ("L", "K", "F", "G")


@dataclass(frozen=True)
class ScaledReal:
    """A real value stored as mantissa * exp(log_scale).

    Normalization keeps the mantissa in [-e, -1/e], {0}, or [1/e, e], so the
    exponentially large or small weights of the function definitions never
    overflow a float. The sign of the value is the sign of the mantissa.
    """

    mantissa: float
    log_scale: float

    def normalized(self) -> "ScaledReal":
        """Return an equal value with the mantissa inside [1/e, e] or zero."""
        m = self.mantissa
        if m == 0.0:
            return ScaledReal(0.0, 0.0)
        if _MANTISSA_LO <= abs(m) <= _MANTISSA_HI:
            return self
        shift = math.log(abs(m))
        return ScaledReal(m / math.exp(shift), self.log_scale + shift)

    def plain(self) -> float | None:
        """The value as an ordinary float, or None if it would overflow."""
        norm = self.normalized()
        if norm.mantissa == 0.0:
            return 0.0
        if norm.log_scale > 700.0:
            return None
        return norm.mantissa * math.exp(norm.log_scale)


@dataclass(frozen=True)
class ScaledComplex:
    """A complex value stored as unit_phase * series_sum * exp(log_scale)."""

    unit_phase: complex
    series_sum: complex
    log_scale: float

    @property
    def unit_value(self) -> complex:
        """The value with the positive factor exp(log_scale) stripped."""
        return self.unit_phase * self.series_sum


def series_sum(nu: float, x: float, family: str,
               tol: float = _DEFAULT_TOL) -> complex:
    """Sum the ascending series of I (modified) or J (ordinary) at order i*nu.

    Returns sum_{k>=0} (+-1)^k (x/2)^{2k} / (k! (1+i nu)_k), built by the
    term-ratio recurrence and truncated when the current term's modulus falls
    to tol times the partial sum's. Raises ConvergenceError past 500 terms,
    which cannot happen for x <= 50 at the default tolerance.
    """
    if not (x > 0.0):
        raise DomainError(f"series_sum requires x > 0, got {x!r}")
    if not (tol > 0.0):
        raise DomainError(f"series_sum requires tol > 0, got {tol!r}")
    if family == "modified":
        z = (0.5 * x) ** 2
    elif family == "ordinary":
        z = -((0.5 * x) ** 2)
    else:
        raise DomainError(
            f"family must be 'modified' or 'ordinary', got {family!r}")

    term = 1.0 + 0.0j
    total = 1.0 + 0.0j
    for k in range(_MAX_TERMS):
        term *= z / ((k + 1) * complex(k + 1, nu))
        total += term
        if abs(term) <= tol * abs(total):
            return total
    raise ConvergenceError(
        f"series did not converge in {_MAX_TERMS} terms (nu={nu!r}, x={x!r})")


def eval_I_scaled(nu: float, x: float) -> ScaledComplex:
    """I_{i nu}(x) in scaled form; the conjugate gives I_{-i nu}(x)."""
    unit_phase, log_magnitude = recip_gamma_prefactor(nu, x)
    return ScaledComplex(unit_phase, series_sum(nu, x, "modified"),
                         log_magnitude)


def eval_J_scaled(nu: float, x: float) -> ScaledComplex:
    """J_{i nu}(x) in scaled form; the conjugate gives J_{-i nu}(x)."""
    unit_phase, log_magnitude = recip_gamma_prefactor(nu, x)
    return ScaledComplex(unit_phase, series_sum(nu, x, "ordinary"),
                         log_magnitude)


def _tag(kind: object) -> str:
    name = getattr(kind, "name", kind)
    if isinstance(name, str) and name.upper() in _VALID_TAGS:
        return name.upper()
    raise DomainError(f"kind must be one of {_VALID_TAGS}, got {kind!r}")


def _log_weight(tag: str, nu: float) -> float:
    """log of the positive hyperbolic weight multiplying the component."""
    if tag in ("L", "K"):
        # pi / sinh(pi nu)
        u = math.pi * nu
        if nu >= _LOG_SPACE_NU:
            return math.log(2.0 * math.pi) - u - math.log1p(-math.exp(-2.0 * u))
        return math.log(math.pi / math.sinh(u))
    u = 0.5 * math.pi * nu
    if tag == "F":
        # 1 / cosh(pi nu / 2)
        if nu >= _LOG_SPACE_NU:
            return math.log(2.0) - u - math.log1p(math.exp(-2.0 * u))
        return -math.log(math.cosh(u))
    # 1 / sinh(pi nu / 2)
    if nu >= _LOG_SPACE_NU:
        return math.log(2.0) - u - math.log1p(-math.exp(-2.0 * u))
    return -math.log(math.sinh(u))


def detection_value(kind: object, nu: float, x: float) -> float:
    """Sign-matched, unit-normalized value used to locate nu-zeros.

    Equals the function of `kind` divided by its positive scale factors, so
    it shares every sign change with the function itself and stays order one
    at any nu.
    """
    tag = _tag(kind)
    if tag in ("L", "K"):
        unit = eval_I_scaled(nu, x).unit_value
        return unit.real if tag == "L" else -unit.imag
    unit = eval_J_scaled(nu, x).unit_value
    return unit.real if tag == "F" else unit.imag


def eval_function(kind: object, nu: float, x: float) -> ScaledReal:
    """Evaluate L, K, F, or G at (nu, x) in scaled form.

    Requires nu >= NU_MIN; the sinh-weighted definitions degenerate at
    nu = 0 and the studied zeros all lie far above the guard.
    """
    tag = _tag(kind)
    if not (nu >= NU_MIN):
        raise DomainError(
            f"eval_function requires nu >= {NU_MIN!r}, got {nu!r}")
    if not (x > 0.0):
        raise DomainError(f"eval_function requires x > 0, got {x!r}")
    if tag in ("L", "K"):
        scaled = eval_I_scaled(nu, x)
    else:
        scaled = eval_J_scaled(nu, x)
    unit = scaled.unit_value
    if tag == "L" or tag == "F":
        component = unit.real
    elif tag == "K":
        component = -unit.imag
    else:
        component = unit.imag
    log_scale = scaled.log_scale + _log_weight(tag, nu)
    return ScaledReal(component, log_scale).normalized()
