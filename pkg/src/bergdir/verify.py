"""Self-verification suite behind the `verify` CLI command.

Each check pits one computational path against an independent one
(closed form, quadrature, or direct series) and reports the measured
error next to its threshold.  Thresholds match the library's documented
tolerances; a passing run takes a few seconds on one core.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import asymptotics, disk, plane, quadrature
from .series import CoefficientSeries


@dataclass(frozen=True)
class CheckResult:
    name: str
    error: float
    threshold: float
    passed: bool


def _result(name, error, threshold):
    return CheckResult(name, float(error), float(threshold), bool(error <= threshold))


def _rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


def _sample_points(rng, count, radius):
    r = radius * np.sqrt(rng.uniform(0, 1, count))
    th = rng.uniform(0, 2 * np.pi, count)
    return r * np.exp(1j * th)


def check_bergman_closed_form():
    err = 0.0
    for alpha in (0.0, 0.5, 2.5):
        for R in (1.0, 2.0):
            p = disk.DiskSpaceParams(R, alpha, 0)
            for t in np.linspace(0.0, 0.85, 6):
                z = 0.9 * R * t * np.exp(0.3j)
                w = 0.9 * R * np.exp(-0.2j)
                err = max(err, _rel(disk.kernel(p, z, w, force_series=True),
                                    disk.kernel(p, z, w)))
    return _result("bergman-closed-form", err, 1e-12)


def check_dirichlet_closed_form():
    p = disk.DiskSpaceParams(1.0, 0.0, 1)
    err = 0.0
    for x in (0.5, -0.7, 0.6 + 0.5j, -0.3 - 0.8j, 0.9):
        z = x / 0.95
        w = 0.95
        expected = (1.0 / math.pi) * (1.0 + np.log(1.0 / (1.0 - z * np.conj(w))))
        err = max(err, _rel(disk.kernel(p, z, w, force_series=True), expected))
    return _result("dirichlet-closed-form", err, 1e-10)


def check_fock_closed_form():
    p = plane.PlaneSpaceParams(1.0, 0)
    err = 0.0
    for x in (0.5, 2.0, -1.0, 1.5 + 2.0j, 5.0):
        expected = (1.0 / math.pi) * np.exp(x)
        got = plane.kernel_plane(p, x, 1.0, force_series=True)
        err = max(err, _rel(got, expected))
    return _result("fock-closed-form", err, 1e-12)


def check_quadrature_orthogonality():
    worst = 0.0
    p = disk.DiskSpaceParams(1.0, 0.0, 1)
    rule = quadrature.disk_rule_for_degree(1.0, 0.0, 8)
    for n in range(9):
        for k in range(9):
            if n == k:
                continue
            en = CoefficientSeries([0.0] * n + [1.0])
            ek = CoefficientSeries([0.0] * k + [1.0])
            val = quadrature.oracle_modified_inner_product(rule, 1, en, ek)
            scale = math.sqrt(disk.monomial_norm_sq(p, n)
                              * disk.monomial_norm_sq(p, k))
            worst = max(worst, abs(val) / scale)
    return _result("quadrature-orthogonality", worst, 1e-10)


def check_quadrature_diagonals():
    worst = 0.0
    pd = disk.DiskSpaceParams(1.0, 0.5, 2)
    rd = quadrature.disk_rule_for_degree(1.0, 0.5, 8)
    pp = plane.PlaneSpaceParams(1.5, 1)
    rp = quadrature.plane_rule_for_degree(1.5, 8)
    for n in range(9):
        en = CoefficientSeries([0.0] * n + [1.0])
        got = quadrature.oracle_modified_inner_product(rd, 2, en, en)
        worst = max(worst, _rel(got.real, disk.monomial_norm_sq(pd, n)))
        got = quadrature.oracle_modified_inner_product(rp, 1, en, en)
        worst = max(worst, _rel(got.real, plane.monomial_norm_sq_plane(pp, n)))
    return _result("quadrature-diagonals", worst, 1e-10)


def check_reproducing_identity_disk():
    rng = np.random.default_rng(7)
    p = disk.DiskSpaceParams(1.0, 0.5, 1)
    err = 0.0
    for _ in range(5):
        coeffs = rng.standard_normal(9) + 1j * rng.standard_normal(9)
        f = CoefficientSeries(coeffs)
        for w in _sample_points(rng, 4, 0.9):
            section = disk.kernel_section(p, w, f.degree)
            err = max(err, _rel(disk.inner_product(p, f, section), f(w)))
    return _result("reproducing-identity-disk", err, 1e-10)


def check_reproducing_identity_plane():
    rng = np.random.default_rng(11)
    p = plane.PlaneSpaceParams(1.0, 2)
    err = 0.0
    for _ in range(5):
        coeffs = rng.standard_normal(9) + 1j * rng.standard_normal(9)
        f = CoefficientSeries(coeffs)
        for w in _sample_points(rng, 4, 2.0):
            section = plane.kernel_section_plane(p, w, f.degree)
            err = max(err, _rel(plane.inner_product_plane(p, f, section), f(w)))
    return _result("reproducing-identity-plane", err, 1e-10)


def check_inner_product_oracle():
    rng = np.random.default_rng(13)
    err = 0.0
    for m in (0, 1, 2, 3):
        p = disk.DiskSpaceParams(1.0, 0.5, m)
        rule = quadrature.disk_rule_for_degree(1.0, 0.5, 8)
        for _ in range(3):
            f = CoefficientSeries(rng.standard_normal(9) + 1j * rng.standard_normal(9))
            g = CoefficientSeries(rng.standard_normal(9) + 1j * rng.standard_normal(9))
            got = quadrature.oracle_modified_inner_product(rule, m, f, g)
            err = max(err, _rel(got, disk.inner_product(p, f, g)))
    return _result("inner-product-oracle", err, 1e-8)


def _gram_defect(kernel_fn, points):
    n = len(points)
    gram = np.empty((n, n), dtype=complex)
    for i in range(n):
        for j in range(n):
            gram[i, j] = kernel_fn(points[i], points[j])
    eigs = np.linalg.eigvalsh(gram)
    trace = gram.trace().real
    return max(0.0, -eigs.min() / trace)


def check_gram_psd_disk():
    rng = np.random.default_rng(17)
    p = disk.DiskSpaceParams(1.0, 0.5, 2)
    pts = _sample_points(rng, 8, 0.9)
    defect = _gram_defect(lambda a, b: disk.kernel(p, a, b), pts)
    return _result("gram-psd-disk", defect, 1e-10)


def check_gram_psd_plane():
    rng = np.random.default_rng(19)
    p = plane.PlaneSpaceParams(1.0, 2)
    pts = _sample_points(rng, 8, 2.0)
    defect = _gram_defect(lambda a, b: plane.kernel_plane(p, a, b), pts)
    return _result("gram-psd-plane", defect, 1e-10)


def check_kernel_convergence():
    worst = 0.0
    for m in (0, 1, 2):
        recs = asymptotics.kernel_convergence_table(
            1.0, m, 1.0, 1.0, [5.0, 10.0, 20.0, 40.0])
        errs = [r.abs_error for r in recs]
        for lo, hi in zip(errs[1:], errs[:-1]):
            worst = max(worst, lo / hi)
        worst = max(worst, 10.0 * errs[-1] / errs[0])
    return _result("kernel-convergence", worst, 1.0)


def check_limit_lemma():
    worst = 0.0
    for m in (0, 1, 2):
        rows = asymptotics.hypergeometric_limit_check(m, 1.0, [1e2, 1e3, 1e4])
        scaled = [rho * err for rho, err in rows]
        worst = max(worst, max(scaled) / min(scaled))
    return _result("limit-lemma", worst, 3.0)


def check_measure_density():
    rows = asymptotics.measure_density_convergence(1.0, 1.0, [4.0, 8.0, 16.0, 32.0])
    errs = [e for _, e in rows]
    worst = max(b / a for a, b in zip(errs[:-1], errs[1:]))
    return _result("measure-density-convergence", worst, 1.0)


ALL_CHECKS = (
    check_bergman_closed_form,
    check_dirichlet_closed_form,
    check_fock_closed_form,
    check_quadrature_orthogonality,
    check_quadrature_diagonals,
    check_reproducing_identity_disk,
    check_reproducing_identity_plane,
    check_inner_product_oracle,
    check_gram_psd_disk,
    check_gram_psd_plane,
    check_kernel_convergence,
    check_limit_lemma,
    check_measure_density,
)


def run_all_checks():
    """Run every check; returns the list of CheckResult."""
    return [check() for check in ALL_CHECKS]
