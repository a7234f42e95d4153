"""Weighted Bergman-Dirichlet space of order m on the disk of radius R.

The norm is diagonal on monomials, so inner products and norms are
computed from the coefficient characterization; the independent integral
cross-check lives in the quadrature module.  All monomial norm magnitudes
are carried in log scale internally (the (n!)^2 Gamma ratios overflow
doubles around degree 100-170).
"""

from __future__ import annotations

import cmath
import math
import sys
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, OverflowRangeError
from .series import CoefficientSeries, weighted_inner_product
from .special import (DEFAULT_MAX_TERMS, DEFAULT_TOLERANCE,
                      HypergeometricSpec, hypergeometric_sum, pochhammer)

_LOG_FLOAT_MAX = math.log(sys.float_info.max)

# evaluation is refused when |z conj(w)| exceeds (1 - margin) R^2
DEFAULT_BOUNDARY_MARGIN = 1e-6


@dataclass(frozen=True)
class DiskSpaceParams:
    """Disk radius R > 0, weight exponent alpha > -1, Dirichlet order m >= 0.

    The weight is (1 - |z/R|^2)^alpha times area measure; for alpha <= -1
    the space contains only 0, so such parameters are rejected outright.
    """

    radius: float
    alpha: float
    order: int

    def __post_init__(self):
        object.__setattr__(self, "radius", float(self.radius))
        object.__setattr__(self, "alpha", float(self.alpha))
        if not self.radius > 0:
            raise DomainError("radius must be positive")
        if not self.alpha > -1:
            raise DomainError("alpha must exceed -1 (the space is trivial otherwise)")
        if not (isinstance(self.order, (int, np.integer)) and self.order >= 0):
            raise DomainError("order must be a nonnegative integer")
        object.__setattr__(self, "order", int(self.order))


def log_monomial_norm_sq(params: DiskSpaceParams, n: int) -> float:
    """log ||z^n||^2; never overflows."""
    if n < 0:
        raise DomainError("n must be a nonnegative integer")
    R, a, m = params.radius, params.alpha, params.order
    if n < m:
        return (math.log(math.pi) + (2 * n + 2) * math.log(R)
                + math.lgamma(n + 1) + math.lgamma(a + 1)
                - math.lgamma(n + a + 2))
    return (math.log(math.pi) + (2 * (n - m) + 2) * math.log(R)
            + 2 * math.lgamma(n + 1) + math.lgamma(a + 1)
            - math.lgamma(n - m + 1) - math.lgamma(n - m + a + 2))


def monomial_norm_sq(params: DiskSpaceParams, n: int) -> float:
    """||z^n||^2 in the order-m norm.

    Equals pi R^(2n+2) n! Gamma(a+1)/Gamma(n+a+2) for n < m and
    pi R^(2(n-m)+2) (n!)^2 Gamma(a+1) / ((n-m)! Gamma(n-m+a+2)) for n >= m.
    """
    logv = log_monomial_norm_sq(params, n)
    if logv > _LOG_FLOAT_MAX:
        raise OverflowRangeError(
            "monomial norm exceeds double range; use log_monomial_norm_sq")
    return math.exp(logv)


def inner_product(params: DiskSpaceParams, f: CoefficientSeries,
                  g: CoefficientSeries) -> complex:
    """<f, g> = sum a_n conj(b_n) ||z^n||^2 over the common degree range."""
    return weighted_inner_product(f, g, lambda n: log_monomial_norm_sq(params, n))


def norm_sq(params: DiskSpaceParams, f: CoefficientSeries) -> float:
    """||f||^2 = <f, f>; real and nonnegative."""
    return max(inner_product(params, f, f).real, 0.0)


def kernel(params: DiskSpaceParams, z: complex, w: complex,
           tolerance: float = DEFAULT_TOLERANCE,
           max_terms: int = DEFAULT_MAX_TERMS,
           force_series: bool = False,
           boundary_margin: float = DEFAULT_BOUNDARY_MARGIN) -> complex:
    """Reproducing kernel K(z, w) for |z|, |w| < R.

    K = (a+1)/(pi R^2) { sum_{n<m} (a+2)_n (z conj(w))^n / (n! R^(2n))
        + (z conj(w))^m/(m!)^2 * 3F2(1,1,a+2; m+1,m+1; z conj(w)/R^2) }.

    Closed forms are used when available: the weighted Bergman kernel for
    m = 0 and the classical Dirichlet kernel for (R, a, m) = (1, 0, 1);
    `force_series` bypasses both (testing hook).
    """
    R, a, m = params.radius, params.alpha, params.order
    z = complex(z)
    w = complex(w)
    if abs(z) >= R or abs(w) >= R:
        raise DomainError("points must lie strictly inside the disk of radius %g" % R)
    x = z * w.conjugate()
    R2 = R * R
    if abs(x) > (1.0 - boundary_margin) * R2:
        raise DomainError(
            "|z conj(w)| within %g of R^2; near-boundary evaluation refused"
            % boundary_margin)
    if not force_series:
        if m == 0:
            return (a + 1) / (math.pi * R2) * (R2 / (R2 - x)) ** (a + 2)
        if m == 1 and a == 0 and R == 1:
            return (1.0 / math.pi) * (1.0 + cmath.log(1.0 / (1.0 - x)))
    head = 0.0 + 0.0j
    u = x / R2
    for n in range(m):
        head += pochhammer(a + 2, n) / math.factorial(n) * u ** n
    spec = HypergeometricSpec((1.0, 1.0, a + 2.0), (m + 1.0, m + 1.0), u)
    hyp = hypergeometric_sum(spec, tolerance, max_terms)
    tail = x ** m / (math.factorial(m) ** 2) * hyp.value
    return (a + 1) / (math.pi * R2) * (head + tail)


def evaluation_bound(params: DiskSpaceParams, z: complex,
                     tolerance: float = DEFAULT_TOLERANCE) -> float:
    """Point-evaluation constant C_z: |f(z)| <= C_z ||f||.

    The squared constant is exactly the diagonal kernel value K(z, z).
    """
    val = kernel(params, z, z, tolerance)
    return math.sqrt(val.real)


def embedding_constant(params: DiskSpaceParams) -> float:
    """Constant C of the order-(m+1) -> order-m embedding
    ||f||_m^2 <= (1/C) ||f||_(m+1)^2.

    Returns min(1, R^(2m) Gamma(a+2)/(m! Gamma(m+a+2)), a/R^2).  Note the
    last term makes the constant <= 0 for alpha <= 0, where the printed
    bound is vacuous.
    """
    R, a, m = params.radius, params.alpha, params.order
    mid = math.exp(2 * m * math.log(R) + math.lgamma(a + 2)
                   - math.lgamma(m + 1) - math.lgamma(m + a + 2))
    return min(1.0, mid, a / (R * R))


def kernel_section(params: DiskSpaceParams, w: complex,
                   degree: int) -> CoefficientSeries:
    """Degree-truncated kernel section K_w: coefficients conj(w)^n / ||z^n||^2.

    Satisfies <f, K_w> = f(w) for polynomials f of degree <= `degree`.
    """
    w = complex(w)
    if abs(w) >= params.radius:
        raise DomainError("w must lie strictly inside the disk")
    coeffs = np.zeros(degree + 1, dtype=complex)
    if w == 0:
        coeffs[0] = 1.0 / monomial_norm_sq(params, 0)
    else:
        logw = math.log(abs(w))
        argw = cmath.phase(w)
        for n in range(degree + 1):
            logc = n * logw - log_monomial_norm_sq(params, n)
            coeffs[n] = math.exp(logc) * cmath.exp(-1j * argw * n)
    return CoefficientSeries(coeffs, params.radius)
