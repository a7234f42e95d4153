"""Scalar special-function kernel.

Pochhammer symbols and the Euler Beta function are computed through
log-gamma differences so that large arguments never overflow before the
final exponentiation.  Generalized hypergeometric series pFq are summed
with the multiplicative term recurrence, which keeps every step O(1) and
avoids forming factorial products explicitly.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass

from .errors import DivergenceError, DomainError, NotConvergedError, OverflowRangeError

_LOG_FLOAT_MAX = math.log(sys.float_info.max)

# below this length the direct product is both exact enough and fastest
_PRODUCT_THRESHOLD = 32

# absolute floor used when the partial sum itself is (near) zero
_ABS_FLOOR = 1e-300

DEFAULT_TOLERANCE = 1e-14
DEFAULT_MAX_TERMS = 100_000


def pochhammer(a: float, k: int) -> float:
    """Rising factorial (a)_k = a(a+1)...(a+k-1), with (a)_0 = 1.

    Small k goes through the direct product; larger k with a > 0 goes
    through log-gamma.  Raises OverflowRangeError when the value exceeds
    double range (use log_pochhammer then).
    """
    if k < 0:
        raise DomainError("k must be a nonnegative integer")
    if k <= _PRODUCT_THRESHOLD or a <= 0:
        out = 1.0
        for j in range(k):
            out *= a + j
        if math.isinf(out):
            raise OverflowRangeError(
                "(%g)_%d exceeds double range; use log_pochhammer" % (a, k))
        return out
    logval = math.lgamma(a + k) - math.lgamma(a)
    if logval > _LOG_FLOAT_MAX:
        raise OverflowRangeError(
            "(%g)_%d exceeds double range; use log_pochhammer" % (a, k))
    return math.exp(logval)


def log_pochhammer(a: float, k: int) -> float:
    """log (a)_k for a > 0, computed as lgamma(a+k) - lgamma(a)."""
    if k < 0:
        raise DomainError("k must be a nonnegative integer")
    if a <= 0:
        raise DomainError("log_pochhammer requires a > 0")
    return math.lgamma(a + k) - math.lgamma(a)


def euler_beta(x: float, y: float) -> float:
    """Euler Beta function B(x, y) = Gamma(x)Gamma(y)/Gamma(x+y), x, y > 0."""
    if x <= 0 or y <= 0:
        raise DomainError("euler_beta requires x > 0 and y > 0")
    return math.exp(math.lgamma(x) + math.lgamma(y) - math.lgamma(x + y))


@dataclass(frozen=True)
class HypergeometricSpec:
    """Parameters and argument of a pFq series.

    Lengths must be (p, p) or (p+1, p).  Denominator parameters must not
    be zero or negative integers (a term denominator would vanish).
    """

    numerator_params: tuple
    denominator_params: tuple
    argument: complex

    def __post_init__(self):
        num = tuple(float(a) for a in self.numerator_params)
        den = tuple(float(b) for b in self.denominator_params)
        object.__setattr__(self, "numerator_params", num)
        object.__setattr__(self, "denominator_params", den)
        object.__setattr__(self, "argument", complex(self.argument))
        p, q = len(num), len(den)
        if p not in (q, q + 1):
            raise DomainError(
                "parameter list lengths must be (p, p) or (p+1, p); got (%d, %d)" % (p, q))
        for b in den:
            if b <= 0 and float(b).is_integer():
                raise DomainError(
                    "denominator parameter %g is zero or a negative integer" % b)

    @property
    def is_balanced(self) -> bool:
        """True for the (p, p) entire case, False for (p+1, p)."""
        return len(self.numerator_params) == len(self.denominator_params)


@dataclass(frozen=True)
class SeriesSumResult:
    """Value of a truncated hypergeometric sum plus diagnostics."""

    value: complex
    terms_used: int
    estimated_tail: float
    converged: bool


def _term_ratio(num, den, x, k):
    """t_{k+1} / t_k of the hypergeometric series."""
    ratio = x / (k + 1)
    for a in num:
        ratio *= a + k
    for b in den:
        ratio /= b + k
    return ratio


def hypergeometric_sum(spec: HypergeometricSpec,
                       tolerance: float = DEFAULT_TOLERANCE,
                       max_terms: int = DEFAULT_MAX_TERMS) -> SeriesSumResult:
    """Sum the series defined by `spec` term by term.

    Stops once three consecutive terms are below tolerance relative to the
    partial sum (the series is not alternating, so a single small term
    proves nothing).  The reported tail estimate is the geometric bound
    |t_k| r / (1 - r) from the next term ratio r when r < 1.

    Raises DivergenceError for the (p+1, p) case with |argument| >= 1 and
    NotConvergedError when max_terms is exhausted.
    """
    if tolerance <= 0:
        raise DomainError("tolerance must be positive")
    if max_terms < 1:
        raise DomainError("max_terms must be a positive integer")
    num = spec.numerator_params
    den = spec.denominator_params
    x = spec.argument
    if not spec.is_balanced and abs(x) >= 1.0:
        raise DivergenceError(
            "|argument| = %g >= 1 in the (p+1, p) case" % abs(x))

    term = 1.0 + 0.0j
    total = 1.0 + 0.0j
    consecutive_small = 0
    for k in range(max_terms):
        term *= _term_ratio(num, den, x, k)
        total += term
        if abs(term) <= tolerance * max(abs(total), _ABS_FLOOR):
            consecutive_small += 1
            if consecutive_small >= 3:
                r = abs(_term_ratio(num, den, x, k + 1))
                tail = abs(term) * r / (1.0 - r) if r < 1.0 else math.inf
                converged = tail <= tolerance * max(abs(total), _ABS_FLOOR)
                return SeriesSumResult(total, k + 2, tail, converged)
        else:
            consecutive_small = 0
    raise NotConvergedError(
        "stopping rule did not fire within %d terms" % max_terms)
