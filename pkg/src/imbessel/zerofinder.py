"""Asymptotic nu-zero estimates and their refinement to machine accuracy.

For each function kind the zeros in nu at fixed x are quantized by the phase
Phi(nu) = nu * log(lambda * nu) + pi/4 with lambda = 2/(e x): L and F vanish
near Phi = (n + 1/2) pi, K and G near Phi = n pi. Writing m for (n + 1/4) pi
or (n - 1/4) pi accordingly, the leading zero solves xi * log(lambda xi) = m,
which the Lambert W function inverts as xi = m / W(lambda m); three further
corrections B_k / m^{2k+1} from the coefficient pipeline complete the
estimate. Refinement brackets the sign change of the unit-normalized function
value around the estimate and bisects, guarded so the bracket can never leak
to an adjacent zero.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .asymcoeff import coefficient_set, correction_coefficients
from .besseval import ScaledReal, detection_value, eval_function
from .errors import (BracketingError, ConvergenceError, DomainError,
                     EnumerationError, UnreliableAsymptoticsError)
from .lambertw import lambert_w0

__all__ = ["FunctionKind", "ZeroEstimate", "ZeroRecord", "phase",
           "leading_xi", "leading_zero", "asymptotic_zero", "refine_zero",
           "enumerate_zeros"]

# Maximum number of geometric bracket expansions before giving up.
_MAX_EXPANSIONS = 6

_DEFAULT_WIDTH = 1e-12


class FunctionKind(enum.Enum):
    """The four real functions; selects series family and phase offset."""

    L = "L"
    K = "K"
    F = "F"
    G = "G"

    @classmethod
    def coerce(cls, kind: object) -> "FunctionKind":
        if isinstance(kind, cls):
            return kind
        if isinstance(kind, str) and kind.upper() in cls.__members__:
            return cls[kind.upper()]
        raise DomainError(f"unknown function kind {kind!r}")

    @property
    def family(self) -> str:
        return "modified" if self in (FunctionKind.L, FunctionKind.K) \
            else "ordinary"

    @property
    def quarter(self) -> float:
        """Sign of the quarter-pi offset in m = (n +- 1/4) pi."""
        return 0.25 if self in (FunctionKind.L, FunctionKind.F) else -0.25

    def m_value(self, n: int) -> float:
        """The quantized phase target m for the nth zero."""
        return (n + self.quarter) * math.pi

    def phase_target(self, n: int) -> float:
        """Where Phi sits at the nth zero: (n + 1/2) pi for L, F; n pi else."""
        return self.m_value(n) + math.pi / 4.0


@dataclass(frozen=True)
class ZeroEstimate:
    """Asymptotic estimate data for one zero.

    partial holds the cumulative sums xi, xi + B0/m, xi + B0/m + B1/m^3,
    and the full three-correction value; nu is the sum selected by `order`.
    """

    kind: FunctionKind
    n: int
    x: float
    m: float
    lambda_: float
    xi: float
    partial: tuple[float, float, float, float]
    order: int = 3

    @property
    def nu(self) -> float:
        return self.partial[self.order]


@dataclass(frozen=True)
class ZeroRecord:
    """One refined zero: estimate, refined value, and refinement evidence.

    bracket is the sign-changing interval the bisection started from, so the
    function values at its ends measure the local scale the final residual is
    judged against.
    """

    kind: FunctionKind
    n: int
    x: float
    nu_asymptotic: float
    nu_refined: float
    discrepancy: float
    bracket: tuple[float, float]
    residual: ScaledReal


def phase(nu: float, lambda_: float) -> float:
    """The phase Phi(nu) = nu log(lambda nu) + pi/4."""
    return nu * math.log(lambda_ * nu) + math.pi / 4.0


def leading_xi(m: float, lambda_: float) -> float:
    """Solve xi * log(lambda * xi) = m as xi = m / W(lambda m)."""
    if not (m > 0.0):
        raise DomainError(f"leading_xi requires m > 0, got {m!r}")
    if not (lambda_ > 0.0):
        raise DomainError(f"leading_xi requires lambda > 0, got {lambda_!r}")
    return m / lambert_w0(lambda_ * m).w


def leading_zero(kind: object, n: int, x: float) -> float:
    """Leading-order zero m / log(lambda m); a crude documentation estimate."""
    kind = FunctionKind.coerce(kind)
    if not (x > 0.0):
        raise DomainError(f"leading_zero requires x > 0, got {x!r}")
    m = kind.m_value(n)
    lambda_ = 2.0 / (math.e * x)
    if lambda_ * m <= 1.0:
        raise DomainError(
            f"leading_zero requires lambda*m > 1, got {lambda_ * m!r}")
    return m / math.log(lambda_ * m)


def asymptotic_zero(kind: object, n: int, x: float,
                    order: int = 3) -> ZeroEstimate:
    """The three-correction asymptotic estimate of the nth nu-zero.

    order in 0..3 selects how many B-corrections the `nu` property sums;
    all four partial sums are always computed. Raises
    UnreliableAsymptoticsError when the leading term xi fails the validity
    guard xi > max(2, x).
    """
    kind = FunctionKind.coerce(kind)
    if not (isinstance(n, int) and n >= 1):
        raise DomainError(f"n must be a positive integer, got {n!r}")
    if not (x > 0.0):
        raise DomainError(f"asymptotic_zero requires x > 0, got {x!r}")
    if order not in (0, 1, 2, 3):
        raise DomainError(f"order must be in 0..3, got {order!r}")

    m = kind.m_value(n)
    lambda_ = 2.0 / (math.e * x)
    xi = leading_xi(m, lambda_)
    threshold = max(2.0, x)
    if not (xi > threshold):
        raise UnreliableAsymptoticsError(xi, threshold)

    coeffs = coefficient_set(x, kind.family)
    correction = correction_coefficients(list(coeffs.A), xi, m)
    B0, B1, B2 = correction.B
    p0 = xi
    p1 = p0 + B0 / m
    p2 = p1 + B1 / m ** 3
    p3 = p2 + B2 / m ** 5
    return ZeroEstimate(kind, n, float(x), m, lambda_, xi,
                        (p0, p1, p2, p3), order)


def _phase_window(estimate: ZeroEstimate) -> tuple[float, float]:
    # The nu-interval on which Phi stays within pi/2 of the zero's target.
    # Phi(leading_xi(c, lambda)) = c + pi/4, so the window ends are the
    # leading solutions at m -+ pi/2; the adjacent zeros sit a full pi away.
    half = math.pi / 2.0
    return (leading_xi(estimate.m - half, estimate.lambda_),
            leading_xi(estimate.m + half, estimate.lambda_))


def refine_zero(kind: object, n: int, x: float, estimate: ZeroEstimate,
                tol: float = _DEFAULT_WIDTH) -> ZeroRecord:
    """Refine an asymptotic estimate to a machine-accurate zero.

    Brackets the unit-normalized detection value on [nu - h, nu + h] with
    h seeded by the last correction term, expanding geometrically inside the
    phase window when needed, then bisects to width `tol` and applies one
    secant polish. Raises BracketingError when no sign change exists inside
    the window, which signals an invalid estimate.
    """
    kind = FunctionKind.coerce(kind)
    if (estimate.kind is not kind or estimate.n != n
            or estimate.x != float(x)):
        raise DomainError(
            f"estimate {estimate.kind.value}/n={estimate.n}/x={estimate.x!r} "
            f"does not match request {kind.value}/n={n}/x={x!r}")
    if not (tol > 0.0):
        raise DomainError(f"refine_zero requires tol > 0, got {tol!r}")

    def g(nu: float) -> float:
        return detection_value(kind, nu, x)

    nu_hat = estimate.partial[3]
    h = max(0.05, 2.0 * abs(estimate.partial[3] - estimate.partial[2]))
    window_lo, window_hi = _phase_window(estimate)

    lo = max(window_lo, nu_hat - h)
    hi = min(window_hi, nu_hat + h)
    # A center outside the phase window clamps to an empty interval; the
    # estimate cannot belong to this zero, so fail rather than search.
    if lo >= hi:
        raise BracketingError(
            f"estimate nu = {nu_hat!r} lies outside the phase window "
            f"({window_lo!r}, {window_hi!r}) for {kind.value} n={n} "
            f"x={x!r}", (lo, hi))
    g_lo = g(lo)
    g_hi = g(hi)
    for _ in range(_MAX_EXPANSIONS):
        if g_lo == 0.0 or g_hi == 0.0 or (g_lo < 0.0) != (g_hi < 0.0):
            break
        h *= 2.0
        lo = max(window_lo, nu_hat - h)
        hi = min(window_hi, nu_hat + h)
        g_lo = g(lo)
        g_hi = g(hi)
    else:
        if g_lo != 0.0 and g_hi != 0.0 and (g_lo < 0.0) == (g_hi < 0.0):
            raise BracketingError(
                f"no sign change of the detection value for "
                f"{kind.value} n={n} x={x!r}", (lo, hi))

    bracket = (lo, hi)

    # An exact zero at an endpoint cannot be bisected; accept it directly.
    if g_lo == 0.0 or g_hi == 0.0:
        nu_refined = lo if g_lo == 0.0 else hi
        bracket = (nu_refined - tol, nu_refined + tol)
    else:
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            if mid <= lo or mid >= hi:
                break
            g_mid = g(mid)
            if g_mid == 0.0:
                lo, g_lo = mid - 0.5 * tol, g(mid - 0.5 * tol)
                hi, g_hi = mid + 0.5 * tol, g(mid + 0.5 * tol)
                break
            if (g_mid < 0.0) == (g_lo < 0.0):
                lo, g_lo = mid, g_mid
            else:
                hi, g_hi = mid, g_mid
        # One secant step recovers locally quadratic accuracy from the
        # final bracket; fall back to the midpoint if it degenerates.
        nu_refined = 0.5 * (lo + hi)
        if g_hi != g_lo:
            secant = hi - g_hi * (hi - lo) / (g_hi - g_lo)
            if lo < secant < hi:
                nu_refined = secant

    nu_asymptotic = estimate.nu
    return ZeroRecord(
        kind=kind,
        n=n,
        x=float(x),
        nu_asymptotic=nu_asymptotic,
        nu_refined=nu_refined,
        discrepancy=abs(nu_asymptotic - nu_refined),
        bracket=bracket,
        residual=eval_function(kind, nu_refined, x),
    )


def enumerate_zeros(kind: object, x: float, n_max: int,
                    order: int = 3, tol: float = _DEFAULT_WIDTH) -> list[ZeroRecord]:
    """Refined zeros for n = 1..n_max, strictly increasing in nu.

    The first failing index aborts the enumeration with the completed
    records attached to the raised EnumerationError.
    """
    kind = FunctionKind.coerce(kind)
    if not (isinstance(n_max, int) and n_max >= 1):
        raise DomainError(f"n_max must be a positive integer, got {n_max!r}")
    records: list[ZeroRecord] = []
    for n in range(1, n_max + 1):
        try:
            estimate = asymptotic_zero(kind, n, x, order)
            record = refine_zero(kind, n, x, estimate, tol)
            if records and record.nu_refined <= records[-1].nu_refined:
                raise ConvergenceError(
                    f"refined zeros not strictly increasing at n = {n}")
        except (DomainError, ConvergenceError) as exc:
            raise EnumerationError(
                f"enumeration of {kind.value} zeros aborted at n = {n}: "
                f"{exc}", n, tuple(records)) from exc
        records.append(record)
    return records
