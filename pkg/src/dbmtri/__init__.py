"""Simulation and verification toolkit for tridiagonalized matrix diffusions.

The package samples stationary Gaussian matrix Ornstein-Uhlenbeck
processes in the three classical symmetry classes, tridiagonalizes them
frame by frame with Householder reflections, and checks the resulting
entry processes against their limiting Ornstein-Uhlenbeck description,
series approximations, and exact pair-partition moment formulas.
"""

from ._backend import backend_name
from .approx import approx_entries_frame, approx_error_study, tilde_m
from .chebyshev import (
    matrix_poly_apply,
    matrix_poly_iter,
    poly_p,
    poly_p_explicit,
    poly_product_expand,
    semicircle_quadrature,
)
from .gbe import gbe_sample_path, gbe_sample_stationary, is_self_adjoint, iter_gbe_frames
from .grids import TimeGrid
from .limit import bhat_transform, entry_vector_from_tridiagonal, limit_entries_sample, norm_model_offdiag
from .moments import limiting_joint_moment, semicircular_cov_p, semicircular_mixed_moment, MomentQuery
from .ou import OuParams, ou_sample_path, ou_sample_vector
from .partitions import enumerate_nc2, enumerate_p2, perm_from_pairing, perm_multiplicity
from .rng import derive_rng, derive_seedseq
from .spectral import corner_size_rule, eigen_cov_experiment, eigs_extreme, sturm_count
from .stats import MomentAccumulator, covariance_curve, kurtosis_sum_experiment
from .tridiag import SymTridiagonal, tridiagonalize, tridiagonalize_path

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "backend_name",
    "TimeGrid",
    "derive_rng",
    "derive_seedseq",
    "OuParams",
    "ou_sample_path",
    "ou_sample_vector",
    "gbe_sample_stationary",
    "gbe_sample_path",
    "iter_gbe_frames",
    "is_self_adjoint",
    "SymTridiagonal",
    "tridiagonalize",
    "tridiagonalize_path",
    "limit_entries_sample",
    "entry_vector_from_tridiagonal",
    "bhat_transform",
    "norm_model_offdiag",
    "poly_p",
    "poly_p_explicit",
    "poly_product_expand",
    "matrix_poly_apply",
    "matrix_poly_iter",
    "semicircle_quadrature",
    "approx_entries_frame",
    "approx_error_study",
    "tilde_m",
    "enumerate_nc2",
    "enumerate_p2",
    "perm_from_pairing",
    "perm_multiplicity",
    "MomentQuery",
    "semicircular_mixed_moment",
    "semicircular_cov_p",
    "limiting_joint_moment",
    "sturm_count",
    "eigs_extreme",
    "corner_size_rule",
    "eigen_cov_experiment",
    "MomentAccumulator",
    "covariance_curve",
    "kurtosis_sum_experiment",
]
