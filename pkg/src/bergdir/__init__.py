"""Weighted Bergman-Dirichlet spaces on the disk and Bargmann-Dirichlet
spaces on the plane: exact norms, reproducing kernels via generalized
hypergeometric series, independent quadrature oracles, and large-radius
asymptotics."""

from .asymptotics import (ConvergenceRecord, hypergeometric_limit_check,
                          kernel_convergence_table,
                          measure_density_convergence)
from .disk import (DiskSpaceParams, embedding_constant, evaluation_bound,
                   inner_product, kernel, kernel_section,
                   log_monomial_norm_sq, monomial_norm_sq, norm_sq)
from .errors import (DivergenceError, DomainError, NotConvergedError,
                     OverflowRangeError)
from .plane import (PlaneSpaceParams, embedding_constant_empirical,
                    embedding_ratio, evaluation_bound_plane,
                    inner_product_plane, kernel_plane, kernel_section_plane,
                    log_monomial_norm_sq_plane, monomial_norm_sq_plane,
                    norm_sq_plane)
from .quadrature import (QuadratureRule, build_disk_rule, build_plane_rule,
                         disk_rule_for_degree, oracle_inner_product,
                         oracle_modified_inner_product, plane_rule_for_degree)
from .series import (DEGREE_CAP, CoefficientSeries, SplitSeries, derivative,
                     split)
from .special import (HypergeometricSpec, SeriesSumResult, euler_beta,
                      hypergeometric_sum, log_pochhammer, pochhammer)

__version__ = "0.1.0"

__all__ = [
    "ConvergenceRecord", "hypergeometric_limit_check",
    "kernel_convergence_table", "measure_density_convergence",
    "DiskSpaceParams", "embedding_constant", "evaluation_bound",
    "inner_product", "kernel", "kernel_section", "log_monomial_norm_sq",
    "monomial_norm_sq", "norm_sq",
    "DivergenceError", "DomainError", "NotConvergedError",
    "OverflowRangeError",
    "PlaneSpaceParams", "embedding_constant_empirical", "embedding_ratio",
    "evaluation_bound_plane", "inner_product_plane", "kernel_plane",
    "kernel_section_plane", "log_monomial_norm_sq_plane",
    "monomial_norm_sq_plane", "norm_sq_plane",
    "QuadratureRule", "build_disk_rule", "build_plane_rule",
    "disk_rule_for_degree", "oracle_inner_product",
    "oracle_modified_inner_product", "plane_rule_for_degree",
    "DEGREE_CAP", "CoefficientSeries", "SplitSeries", "derivative", "split",
    "HypergeometricSpec", "SeriesSumResult", "euler_beta",
    "hypergeometric_sum", "log_pochhammer", "pochhammer",
]
