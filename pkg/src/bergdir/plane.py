"""Weighted Bargmann-Dirichlet space of order m on the complex plane.

Mirrors the disk module with the Gaussian weight exp(-nu |z|^2): diagonal
monomial norms, coefficient inner products, and the kernel expressed
through a 2F2 series (entire, so no domain guard is needed).
"""

from __future__ import annotations

import cmath
import math
import sys
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, OverflowRangeError
from .series import DEGREE_CAP, CoefficientSeries, weighted_inner_product
from .special import (DEFAULT_MAX_TERMS, DEFAULT_TOLERANCE,
                      HypergeometricSpec, hypergeometric_sum)

_LOG_FLOAT_MAX = math.log(sys.float_info.max)


@dataclass(frozen=True)
class PlaneSpaceParams:
    """Gaussian weight parameter nu > 0 and Dirichlet order m >= 0."""

    nu: float
    order: int

    def __post_init__(self):
        object.__setattr__(self, "nu", float(self.nu))
        if not self.nu > 0:
            raise DomainError("nu must be positive")
        if not (isinstance(self.order, (int, np.integer)) and self.order >= 0):
            raise DomainError("order must be a nonnegative integer")
        object.__setattr__(self, "order", int(self.order))


def log_monomial_norm_sq_plane(params: PlaneSpaceParams, n: int) -> float:
    """log ||z^n||^2; never overflows."""
    if n < 0:
        raise DomainError("n must be a nonnegative integer")
    nu, m = params.nu, params.order
    if n < m:
        return math.log(math.pi) + math.lgamma(n + 1) - (n + 1) * math.log(nu)
    return (math.log(math.pi) + 2 * math.lgamma(n + 1)
            - math.lgamma(n - m + 1) - (n - m + 1) * math.log(nu))


def monomial_norm_sq_plane(params: PlaneSpaceParams, n: int) -> float:
    """||z^n||^2: pi n!/nu^(n+1) for n < m, pi (n!)^2/(nu^(n-m+1) (n-m)!)
    for n >= m."""
    logv = log_monomial_norm_sq_plane(params, n)
    if logv > _LOG_FLOAT_MAX:
        raise OverflowRangeError(
            "monomial norm exceeds double range; use log_monomial_norm_sq_plane")
    return math.exp(logv)


def inner_product_plane(params: PlaneSpaceParams, f: CoefficientSeries,
                        g: CoefficientSeries) -> complex:
    """<f, g> = sum a_n conj(b_n) ||z^n||^2 over the common degree range."""
    return weighted_inner_product(
        f, g, lambda n: log_monomial_norm_sq_plane(params, n))


def norm_sq_plane(params: PlaneSpaceParams, f: CoefficientSeries) -> float:
    """||f||^2 = <f, f>; real and nonnegative."""
    return max(inner_product_plane(params, f, f).real, 0.0)


def kernel_plane(params: PlaneSpaceParams, z: complex, w: complex,
                 tolerance: float = DEFAULT_TOLERANCE,
                 max_terms: int = DEFAULT_MAX_TERMS,
                 force_series: bool = False) -> complex:
    """Reproducing kernel K(z, w), entire in z conj(w).

    K = (nu/pi) { sum_{n<m} nu^n (z conj(w))^n / n!
        + (z conj(w))^m/(m!)^2 * 2F2(1,1; m+1,m+1; nu z conj(w)) }.

    For m = 0 the closed Fock form (nu/pi) exp(nu z conj(w)) is used
    unless `force_series` is set.
    """
    nu, m = params.nu, params.order
    x = complex(z) * complex(w).conjugate()
    if not force_series and m == 0:
        return nu / math.pi * cmath.exp(nu * x)
    head = 0.0 + 0.0j
    for n in range(m):
        head += nu ** n * x ** n / math.factorial(n)
    spec = HypergeometricSpec((1.0, 1.0), (m + 1.0, m + 1.0), nu * x)
    hyp = hypergeometric_sum(spec, tolerance, max_terms)
    tail = x ** m / (math.factorial(m) ** 2) * hyp.value
    return nu / math.pi * (head + tail)


def evaluation_bound_plane(params: PlaneSpaceParams, z: complex,
                           tolerance: float = DEFAULT_TOLERANCE) -> float:
    """Point-evaluation constant: sqrt of the diagonal kernel value."""
    val = kernel_plane(params, z, z, tolerance)
    return math.sqrt(val.real)


def embedding_ratio(params: PlaneSpaceParams, n: int) -> float:
    """Per-degree ratio ||z^n||^2_m / ||z^n||^2_(m+1)."""
    higher = PlaneSpaceParams(params.nu, params.order + 1)
    return math.exp(log_monomial_norm_sq_plane(params, n)
                    - log_monomial_norm_sq_plane(higher, n))


def embedding_constant_empirical(params: PlaneSpaceParams,
                                 degree_cap: int = DEGREE_CAP) -> float:
    """Supremum over n <= degree_cap of the per-degree norm ratio, so that
    ||f||^2_m <= C ||f||^2_(m+1) for polynomials up to the cap.

    The order-(m+1) -> order-m embedding constant has no closed form
    here; this exact per-degree supremum is the implemented substitute.
    """
    return max(embedding_ratio(params, n) for n in range(degree_cap + 1))


def kernel_section_plane(params: PlaneSpaceParams, w: complex,
                         degree: int) -> CoefficientSeries:
    """Degree-truncated kernel section: coefficients conj(w)^n / ||z^n||^2."""
    w = complex(w)
    coeffs = np.zeros(degree + 1, dtype=complex)
    if w == 0:
        coeffs[0] = 1.0 / monomial_norm_sq_plane(params, 0)
    else:
        logw = math.log(abs(w))
        argw = cmath.phase(w)
        for n in range(degree + 1):
            logc = n * logw - log_monomial_norm_sq_plane(params, n)
            coeffs[n] = math.exp(logc) * cmath.exp(-1j * argw * n)
    return CoefficientSeries(coeffs, "entire")
