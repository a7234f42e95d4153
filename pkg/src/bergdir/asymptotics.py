"""Large-radius limit machinery.

With the coupling alpha = nu R^2, the disk kernel converges to the plane
kernel as R grows; the driver here tabulates that convergence, checks the
underlying hypergeometric parameter limit, and checks the weight-density
convergence (1 - |z/R|^2)^(nu R^2) -> e^(-nu |z|^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .disk import DiskSpaceParams, kernel
from .errors import DomainError
from .plane import PlaneSpaceParams, kernel_plane
from .special import (DEFAULT_MAX_TERMS, DEFAULT_TOLERANCE,
                      HypergeometricSpec, hypergeometric_sum)


@dataclass(frozen=True)
class ConvergenceRecord:
    """One row of a kernel-convergence table."""

    radius: float
    z: complex
    w: complex
    disk_kernel_value: complex
    plane_kernel_value: complex
    abs_error: float


def kernel_convergence_table(nu: float, m: int, z: complex, w: complex,
                             radii, tolerance: float = DEFAULT_TOLERANCE):
    """Disk kernel at (R, alpha = nu R^2, m) against the plane kernel at
    (nu, m), for each radius; rows sorted by R ascending."""
    z = complex(z)
    w = complex(w)
    plane_params = PlaneSpaceParams(nu, m)
    kp = kernel_plane(plane_params, z, w, tolerance)
    records = []
    for R in sorted(float(r) for r in radii):
        if abs(z) >= R or abs(w) >= R:
            raise DomainError("radius %g too small for the evaluation points" % R)
        disk_params = DiskSpaceParams(R, nu * R * R, m)
        kd = kernel(disk_params, z, w, tolerance)
        records.append(ConvergenceRecord(R, z, w, kd, kp, abs(kd - kp)))
    return records


def hypergeometric_limit_check(m: int, xi: complex, rhos,
                               c: float = 2.0,
                               tolerance: float = DEFAULT_TOLERANCE,
                               max_terms: int = DEFAULT_MAX_TERMS):
    """|3F2(1,1,c+rho; m+1,m+1; xi/rho) - 2F2(1,1; m+1,m+1; xi)| per rho.

    c defaults to 2 because the kernel instance carries the numerator
    parameter alpha + 2 = nu R^2 + 2, i.e. rho = nu R^2.  Results are
    returned ascending in rho.
    """
    xi = complex(xi)
    target = hypergeometric_sum(
        HypergeometricSpec((1.0, 1.0), (m + 1.0, m + 1.0), xi),
        tolerance, max_terms).value
    out = []
    for rho in sorted(float(r) for r in rhos):
        spec = HypergeometricSpec((1.0, 1.0, c + rho),
                                  (m + 1.0, m + 1.0), xi / rho)
        val = hypergeometric_sum(spec, tolerance, max_terms).value
        out.append((rho, abs(val - target)))
    return out


def measure_density_convergence(nu: float, z: complex, radii):
    """|(1 - |z/R|^2)^(nu R^2) - e^(-nu |z|^2)| per radius, ascending."""
    z = complex(z)
    target = math.exp(-nu * abs(z) ** 2)
    out = []
    for R in sorted(float(r) for r in radii):
        if abs(z) >= R:
            raise DomainError("radius %g too small for |z| = %g" % (R, abs(z)))
        density = (1.0 - (abs(z) / R) ** 2) ** (nu * R * R)
        out.append((R, abs(density - target)))
    return out
