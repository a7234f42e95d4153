"""Independent quadrature oracles for the disk and plane weights.

The radial rules are Gauss rules for the exact weight functions
((1-t)^alpha on (0,1) after t = (r/R)^2; e^-t on (0,inf) after
t = nu r^2), so polynomial integrands are integrated exactly up to the
rule order.  The angular part is the equispaced trapezoidal rule, exact
for e^(i k theta) whenever |k| < angular_count.  Disagreements with the
coefficient path are therefore attributable to the code under test.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import roots_jacobi, roots_laguerre

from .errors import DomainError
from .series import CoefficientSeries, derivative, split


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """Radial nodes/weights on the substituted variable t, an angular
    count, and the domain scale (R for disk rules, nu for plane rules)."""

    radial_nodes: np.ndarray
    radial_weights: np.ndarray
    angular_count: int
    domain_tag: str  # "disk" or "plane"
    scale: float

    def complex_nodes(self):
        """Flattened complex nodes and total weights of the 2-D rule."""
        theta = 2.0 * np.pi * np.arange(self.angular_count) / self.angular_count
        if self.domain_tag == "disk":
            r = self.scale * np.sqrt(self.radial_nodes)
            base = self.radial_weights * (self.scale ** 2 / 2.0)
        else:
            r = np.sqrt(self.radial_nodes / self.scale)
            base = self.radial_weights / (2.0 * self.scale)
        z = r[:, None] * np.exp(1j * theta)[None, :]
        wt = np.repeat(base * (2.0 * np.pi / self.angular_count),
                       self.angular_count)
        return z.ravel(), wt


def build_disk_rule(R: float, alpha: float, radial_points: int,
                    angular_count: int) -> QuadratureRule:
    """Rule for integrals over the disk of radius R against
    (1 - |z/R|^2)^alpha d(area).

    Radial part is Gauss-Jacobi on (0,1) with weight (1-t)^alpha, exact
    for t^k up to k = 2 radial_points - 1.
    """
    if not alpha > -1:
        raise DomainError("alpha must exceed -1; weight moments diverge")
    if R <= 0:
        raise DomainError("R must be positive")
    _validate_counts(radial_points, angular_count)
    x, wj = roots_jacobi(radial_points, alpha, 0.0)
    t = (x + 1.0) / 2.0
    w = wj * 0.5 ** (alpha + 1.0)
    return QuadratureRule(t, w, angular_count, "disk", float(R))


def build_plane_rule(nu: float, radial_points: int,
                     angular_count: int) -> QuadratureRule:
    """Rule for integrals over the plane against e^(-nu |z|^2) d(area).

    Radial part is Gauss-Laguerre, exact for t^k up to 2 radial_points - 1;
    the infinite radial domain needs no cutoff.
    """
    if nu <= 0:
        raise DomainError("nu must be positive")
    _validate_counts(radial_points, angular_count)
    t, w = roots_laguerre(radial_points)
    return QuadratureRule(t, w, angular_count, "plane", float(nu))


def _validate_counts(radial_points, angular_count):
    if radial_points < 1:
        raise DomainError("radial_points must be >= 1")
    if angular_count < 2:
        raise DomainError("angular_count must be >= 2")


def disk_rule_for_degree(R, alpha, degree):
    """Rule exact for products of polynomials up to the given degree."""
    return build_disk_rule(R, alpha, degree + 2, 4 * degree + 1)


def plane_rule_for_degree(nu, degree):
    """Plane analogue of disk_rule_for_degree."""
    return build_plane_rule(nu, degree + 2, 4 * degree + 1)


def oracle_inner_product(rule: QuadratureRule, f: CoefficientSeries,
                         g: CoefficientSeries) -> complex:
    """Weighted node sum of f(z) conj(g(z)): the integral <f, g> against
    the rule's measure."""
    z, wt = rule.complex_nodes()
    return complex(np.sum(f(z) * np.conj(g(z)) * wt))


def oracle_modified_inner_product(rule: QuadratureRule, m: int,
                                  f: CoefficientSeries,
                                  g: CoefficientSeries) -> complex:
    """Order-m inner product by quadrature: <head_f, head_g> plus
    <tail_f^(m), tail_g^(m)> against the base weight."""
    sf = split(f, m)
    sg = split(g, m)
    head = oracle_inner_product(rule, sf.head, sg.head)
    tail = oracle_inner_product(rule, derivative(sf.tail, m),
                                derivative(sg.tail, m))
    return head + tail
