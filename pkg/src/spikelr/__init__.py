"""Likelihood-ratio tests of sphericity against a single covariance spike.

The sample covariance of p-dimensional Gaussian data with p comparable to n
concentrates on the Marchenko-Pastur law, and testing Sigma = sigma^2 I
against a rank-one spike h v v' becomes a question about the eigenvalue
vector alone. This package computes the exact log likelihood ratios of the
eigenvalues (known sigma^2) and of their normalized counterparts (unknown
sigma^2) by contour integration, their Gaussian process limits inside the
contiguity region h < sqrt(c), power envelopes and classical-test power
curves, and Monte Carlo critical values, with a CLI for batch experiments.
"""

__version__ = "0.1.0"

from .asymptotics import (DecayProbe, GaussianProcessLaw, gp_law, h_of_theta,
                          lecam_shift, log_lr_asym, lr_decay_probe,
                          theta_of_h)
from .classical import (TestReport, clr_statistic, clr_test, john_test,
                        john_u, ledoit_wolf_test, ledoit_wolf_w,
                        tracy_widom_test, tw_statistic)
from .contour import (ContourSpec, LogLrExact, default_contour,
                      lauricella_series, log_lr_exact,
                      spherical_integral_contour, spherical_integral_mc)
from .eigio import read_eig_file, read_eigs_csv, read_spk1, write_spk1
from .errors import (ConfigError, ContourGeometryError, DataFormatError,
                     DomainError, EigensolverError, FactorizationError,
                     InapplicableTestError, QuadratureError, RegimeError,
                     SaddleCollisionError, SpikelrError)
from .mp_law import (GUARD_EPS, guard_theta_cap, mp_cdf, mp_density,
                     mp_log_potential, mp_mass_at_zero, mp_stieltjes,
                     mp_support, saddle_point)
from .power import (McExactCritical, PowerCurve, SupDistribution,
                    asymptotic_critical, capped_theta_grid, classical_power,
                    empirical_power, envelope, lr_power_curve,
                    mc_exact_critical, simulate_sup, wap_power_curve)
from .sampler import (EigenSample, SpikedModel, delta_p,
                      eigen_sample_from_values, sample_eigs)
from .tw1 import tw1_cdf, tw1_quantile
from .util import deterministic_map, rng_stream

__all__ = [
    "__version__",
    "ConfigError", "ContourGeometryError", "ContourSpec", "DataFormatError",
    "DecayProbe", "DomainError", "EigenSample", "EigensolverError",
    "FactorizationError", "GUARD_EPS", "GaussianProcessLaw",
    "InapplicableTestError", "LogLrExact", "McExactCritical", "PowerCurve",
    "QuadratureError", "RegimeError", "SaddleCollisionError", "SpikedModel",
    "SpikelrError", "SupDistribution", "TestReport",
    "asymptotic_critical", "capped_theta_grid", "classical_power",
    "clr_statistic", "clr_test", "default_contour", "delta_p",
    "deterministic_map", "eigen_sample_from_values", "empirical_power",
    "envelope", "gp_law", "guard_theta_cap", "h_of_theta", "john_test",
    "john_u", "lauricella_series", "lecam_shift", "ledoit_wolf_test",
    "ledoit_wolf_w", "log_lr_asym", "log_lr_exact", "lr_decay_probe",
    "lr_power_curve", "mc_exact_critical", "mp_cdf", "mp_density",
    "mp_log_potential", "mp_mass_at_zero", "mp_stieltjes", "mp_support",
    "read_eig_file", "read_eigs_csv", "read_spk1", "rng_stream",
    "saddle_point", "sample_eigs", "simulate_sup", "spherical_integral_contour",
    "spherical_integral_mc", "theta_of_h", "tracy_widom_test", "tw1_cdf",
    "tw1_quantile", "tw_statistic", "wap_power_curve", "write_spk1",
]
