"""Finite Taylor coefficient vectors and the degree-m split.

Functions are represented by polynomial truncations: every statement the
library verifies reduces to finitely many coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import poch

from .errors import DomainError, OverflowRangeError

DEGREE_CAP = 512

_LOG_FLOAT_MAX = math.log(np.finfo(float).max)


@dataclass(frozen=True, eq=False)
class CoefficientSeries:
    """Taylor coefficients a_0 .. a_N of a (truncated) analytic function.

    `declared_domain` is the disk radius of validity or "entire".
    An empty coefficient vector represents the zero function.
    """

    coefficients: np.ndarray
    declared_domain: float | str = "entire"

    def __post_init__(self):
        coeffs = np.atleast_1d(np.asarray(self.coefficients, dtype=complex))
        if coeffs.ndim != 1:
            raise DomainError("coefficients must be one-dimensional")
        if coeffs.size > DEGREE_CAP + 1:
            raise DomainError("degree cap is %d" % DEGREE_CAP)
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return self.coefficients.size - 1

    def __call__(self, z):
        if self.coefficients.size == 0:
            return np.asarray(z, dtype=complex) * 0.0
        return np.polynomial.polynomial.polyval(z, self.coefficients)


@dataclass(frozen=True, eq=False)
class SplitSeries:
    """Degree-< m head and degree->= m tail of a series; head + tail
    reconstructs the original."""

    head: CoefficientSeries
    tail: CoefficientSeries


def split(f: CoefficientSeries, m: int) -> SplitSeries:
    """Split f into its degree-< m and degree->= m parts.

    For m = 0 the head is the (empty) zero series.
    """
    if m < 0:
        raise DomainError("m must be a nonnegative integer")
    a = f.coefficients
    head = a[: min(m, a.size)].copy()
    if a.size <= m:
        tail = np.empty(0, dtype=complex)
    else:
        tail = a.copy()
        tail[:m] = 0.0
    return SplitSeries(CoefficientSeries(head, f.declared_domain),
                       CoefficientSeries(tail, f.declared_domain))


def derivative(f: CoefficientSeries, k: int) -> CoefficientSeries:
    """k-th derivative: coefficient of z^(n-k) becomes a_n * n!/(n-k)!."""
    if k < 0:
        raise DomainError("k must be a nonnegative integer")
    a = f.coefficients
    if k == 0:
        return CoefficientSeries(a.copy(), f.declared_domain)
    if a.size <= k:
        return CoefficientSeries(np.empty(0, dtype=complex), f.declared_domain)
    j = np.arange(a.size - k)
    factors = poch(j + 1.0, k)  # (j+k)!/j!
    return CoefficientSeries(a[k:] * factors, f.declared_domain)


def weighted_inner_product(f: CoefficientSeries, g: CoefficientSeries,
                           log_weight) -> complex:
    """Sum a_n conj(b_n) w_n with w_n = exp(log_weight(n)).

    The accumulation factors out the largest term magnitude so that
    intermediate exponentials never overflow; OverflowRangeError is raised
    only when the final value itself is out of range.
    """
    a = f.coefficients
    b = g.coefficients
    n = min(a.size, b.size)
    if n == 0:
        return 0.0 + 0.0j
    prod = a[:n] * np.conj(b[:n])
    idx = np.nonzero(prod)[0]
    if idx.size == 0:
        return 0.0 + 0.0j
    mags = np.abs(prod[idx])
    logterms = np.log(mags) + np.array([log_weight(int(k)) for k in idx])
    phases = prod[idx] / mags
    peak = float(logterms.max())
    acc = complex(np.sum(phases * np.exp(logterms - peak)))
    if acc == 0:
        return 0.0 + 0.0j
    logres = peak + math.log(abs(acc))
    if logres > _LOG_FLOAT_MAX:
        raise OverflowRangeError("inner product exceeds double range")
    return acc / abs(acc) * math.exp(logres)
