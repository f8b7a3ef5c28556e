"""Coefficient pipeline for the large-nu zero expansions.

For fixed argument x the chain is chi = x^2/4 -> C_k -> a_k -> A_k -> (b_k,
B_k). The C_k are fixed polynomials in chi; the a_k fold in the Stirling
coefficients; the A_k invert the tangent of the phase correction; and the
correction coefficients b_k (xi-normalized) and B_k (m-normalized) solve the
order-by-order balance of nu * log(lambda * nu) = m - A0/nu - A1/nu^3 -
A2/nu^5 around the leading solution xi.

The ordinary family (J-based functions F, G) uses the same machinery with the
C_k evaluated at -chi. All coefficients are n-independent, so a CoefficientSet
is built once per (x, family) and reused for every zero index.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cgamma import STIRLING_COEFFICIENTS
from .errors import DomainError

__all__ = ["CoefficientSet", "CorrectionCoefficients", "c_polynomials",
           "a_coefficients", "A_coefficients", "correction_coefficients",
           "coefficient_set"]

_FAMILIES = ("modified", "ordinary")


@dataclass(frozen=True)
class CoefficientSet:
    """The n-independent coefficients for one (x, family) pair.

    C holds C_k evaluated at chi for the modified family and at -chi for the
    ordinary family; a holds a_k (or the ordinary-family variant); A holds
    A0..A2. chi is always x^2/4.
    """

    x: float
    chi: float
    family: str
    C: tuple[float, ...]
    a: tuple[float, ...]
    A: tuple[float, ...]


@dataclass(frozen=True)
class CorrectionCoefficients:
    """Correction coefficients of the zero expansion around xi.

    b_k multiply inverse powers of xi, B_k the matching inverse powers of m;
    the two normalizations agree through b_k / xi^{2k+1} = B_k / m^{2k+1}.
    """

    xi: float
    chi_ratio: float
    b: tuple[float, float, float]
    B: tuple[float, float, float]


def c_polynomials(chi: float) -> list[float]:
    """Evaluate the six polynomials C_0..C_5 at chi."""
    chi = float(chi)
    return [
        1.0,
        chi,
        (chi / 2.0) * (-2.0 + chi),
        (chi / 6.0) * (6.0 - 9.0 * chi + chi * chi),
        (chi / 24.0) * (-24.0 + 84.0 * chi - 24.0 * chi ** 2 + chi ** 3),
        (chi / 120.0) * (120.0 - 900.0 * chi + 500.0 * chi ** 2
                         - 50.0 * chi ** 3 + chi ** 4),
    ]


def a_coefficients(chi: float, family: str) -> list[float]:
    """The a_k series coefficients for the given family.

    a_k is the Cauchy-product coefficient of the Stirling series with the
    C-series: a_k = sum_{r=0..k} gamma_r * C_{k-r}, with the C_k evaluated
    at chi for the modified family and at -chi for the ordinary one.
    """
    if family not in _FAMILIES:
        raise DomainError(f"family must be one of {_FAMILIES}, got {family!r}")
    arg = float(chi) if family == "modified" else -float(chi)
    C = c_polynomials(arg)
    gamma = STIRLING_COEFFICIENTS.as_floats()
    return [sum(gamma[r] * C[k - r] for r in range(k + 1)) for k in range(6)]


def A_coefficients(a: list[float]) -> list[float]:
    """Invert the tangent series of the phase correction to A0..A2."""
    if a[0] != 1.0:
        raise DomainError(f"A_coefficients requires a[0] = 1, got {a[0]!r}")
    a1, a2, a3, a4, a5 = a[1], a[2], a[3], a[4], a[5]
    A0 = a1
    A1 = a1 * a2 - a3 - a1 ** 3 / 3.0
    A2 = (a1 * a2 ** 2 + a1 ** 2 * a3 - a1 ** 3 * a2 - a2 * a3 - a1 * a4
          + a5 + a1 ** 5 / 5.0)
    return [A0, A1, A2]


def correction_coefficients(A: list[float], xi: float,
                            m: float) -> CorrectionCoefficients:
    """Solve the order-by-order balance for b0..b2 and form B0..B2.

    The caller guarantees xi * log(lambda * xi) = m, so 1 + log(lambda * xi)
    equals (1 + chi_ratio) / chi_ratio with chi_ratio = xi / m; that form
    avoids re-deriving lambda here. Raises DomainError when that pivot is
    not positive (xi at or below x/2, where the expansion is meaningless).
    """
    xi = float(xi)
    m = float(m)
    if not (xi > 0.0 and m > 0.0):
        raise DomainError(
            f"correction_coefficients requires xi > 0 and m > 0, "
            f"got xi = {xi!r}, m = {m!r}")
    chi_ratio = xi / m
    one_plus_log = (1.0 + chi_ratio) / chi_ratio
    if one_plus_log <= 0.0:
        raise DomainError(
            f"degenerate correction: 1 + log(lambda*xi) = {one_plus_log!r} "
            f"is not positive (xi = {xi!r})")

    A0, A1, A2 = float(A[0]), float(A[1]), float(A[2])
    b0 = -A0 / one_plus_log
    b1_numer = A0 * b0 - A1 - 0.5 * b0 ** 2
    b1 = b1_numer / one_plus_log
    b2_numer = (3.0 * A1 * b0 - A0 * (b0 ** 2 - b1) - A2 - b0 * b1
                + b0 ** 3 / 6.0)
    b2 = b2_numer / one_plus_log

    one_plus = 1.0 + chi_ratio
    B0 = -A0 / one_plus
    B1 = b1_numer / (chi_ratio ** 2 * one_plus)
    B2 = b2_numer / (chi_ratio ** 4 * one_plus)
    return CorrectionCoefficients(xi, chi_ratio, (b0, b1, b2), (B0, B1, B2))


def coefficient_set(x: float, family: str) -> CoefficientSet:
    """Build the full n-independent coefficient set for (x, family)."""
    x = float(x)
    if not (x > 0.0):
        raise DomainError(f"coefficient_set requires x > 0, got {x!r}")
    chi = x * x / 4.0
    a = a_coefficients(chi, family)
    arg = chi if family == "modified" else -chi
    return CoefficientSet(
        x=x,
        chi=chi,
        family=family,
        C=tuple(c_polynomials(arg)),
        a=tuple(a),
        A=tuple(A_coefficients(a)),
    )
